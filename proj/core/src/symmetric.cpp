#include "noisecube/symmetric.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "noisecube/entropy.hpp"

namespace noisecube {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 60) {
        // every prefix product res * (n-k+i) / i is itself a binomial, so
        // 128-bit intermediates keep this exact through n = 60
        unsigned __int128 res = 1;
        for (int i = 1; i <= k; ++i) {
            res = res * static_cast<unsigned>(n - k + i) /
                  static_cast<unsigned>(i);
        }
        return static_cast<double>(static_cast<std::uint64_t>(res));
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(n - k + 1.0));
}

SymmetricData::SymmetricData(int k_, double lambda_, std::vector<double> y_)
    : k(k_), lambda(lambda_), y(std::move(y_)) {
    if (k < 1) throw std::invalid_argument("SymmetricData: k must be >= 1");
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw std::invalid_argument("SymmetricData: lambda must lie in [0,1]");
    }
    if (static_cast<int>(y.size()) != k) {
        throw std::invalid_argument("SymmetricData: profile must have k entries");
    }
}

XTable::XTable(int k, std::vector<double> entries)
    : k_(k), entries_(std::move(entries)) {}

double XTable::at(int r, int s) const {
    // stored row-major: row r holds s = r+1..k
    assert(r >= 0 && r < s && s <= k_ && "x^r_s requires 0 <= r < s <= k");
    std::size_t offset = 0;
    for (int rr = 0; rr < r; ++rr) offset += static_cast<std::size_t>(k_ - rr);
    return entries_[offset + static_cast<std::size_t>(s - r - 1)];
}

XTable x_table(const SymmetricData& data) {
    const int k = data.k;
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(k) * (k + 1) / 2);
    // row 0: x^0_s = y_s
    for (int s = 1; s <= k; ++s) entries.push_back(data.y[s - 1]);
    std::size_t prev_off = 0;
    for (int r = 1; r < k; ++r) {
        std::size_t off = entries.size();
        for (int s = r + 1; s <= k; ++s) {
            double up = entries[prev_off + static_cast<std::size_t>(s - r)];
            double diag = entries[prev_off + static_cast<std::size_t>(s - r - 1)];
            entries.push_back(data.lambda * up + (1.0 - data.lambda) * diag);
        }
        prev_off = off;
    }
    return XTable(k, std::move(entries));
}

double x_closed_form_unit(int k, double lambda, int s, int r, int t) {
    if (s < 1 || s > k || r < 0 || t <= r || t > k) {
        throw std::invalid_argument("x_closed_form_unit: index violation");
    }
    if (t < s || t > s + r) return 0.0;
    const int d = t - s;
    return binomial(r, d) * std::pow(lambda, r - d) * std::pow(1.0 - lambda, d);
}

double lambda_coeff(int k, int s, double lambda) {
    if (s < 1 || s > k) {
        throw std::invalid_argument("lambda_coeff: requires 1 <= s <= k");
    }
    double head = 0.0;
    for (int j = 0; j < s; ++j) {
        head += binomial(k, j) * std::pow(lambda, j) *
                std::pow(1.0 - lambda, k - j);
    }
    return 1.0 - head;
}

namespace {
void require_close(double a, double b, double tol, const char* what) {
    double scale = 1.0 + std::max(std::fabs(a), std::fabs(b));
    if (std::fabs(a - b) > tol * scale) {
        throw std::runtime_error(std::string(what) + ": routes disagree (" +
                                 std::to_string(a) + " vs " +
                                 std::to_string(b) + ")");
    }
}
}  // namespace

double unit_value(int k, int s, double lambda) {
    if (s < 1 || s > k) {
        throw std::invalid_argument("unit_value: requires 1 <= s <= k");
    }
    double series = 0.0;
    for (int m = 0; m <= k - s; ++m) {
        series += binomial(s + m - 1, m) * std::pow(1.0 - lambda, m);
    }
    series *= std::pow(lambda, s);
    const double tail = lambda_coeff(k, s, lambda);
    require_close(series, tail, 1e-12, "unit_value");
    return series;
}

double symmetric_value(const SymmetricData& data) {
    const XTable x = x_table(data);
    double via_table = 0.0;
    for (int t = 0; t < data.k; ++t) via_table += x.at(t, t + 1);
    via_table *= data.lambda;

    double via_units = 0.0;
    for (int s = 1; s <= data.k; ++s) {
        via_units += data.y[s - 1] * unit_value(data.k, s, data.lambda);
    }
    require_close(via_table, via_units, 1e-10, "symmetric_value");
    return via_table;
}

double sym_assignment(const SymmetricData& data, mask_t r_set, mask_t s_set,
                      int i) {
    if (i < 0 || i >= data.k || !((s_set >> i) & 1u)) {
        throw std::invalid_argument("sym_assignment: i must lie in S");
    }
    const XTable x = x_table(data);
    const mask_t folded = r_set & s_set;
    const int r = popcount(folded);
    const int s = popcount(s_set);
    if ((folded >> i) & 1u) {
        return r == 1 ? data.lambda * data.y[s - 1]
                      : data.lambda * x.at(r - 1, s);
    }
    return r == 0 ? data.y[s - 1] : x.at(r, s);
}

double sym_path_value(const SymmetricData& data, mask_t r_set,
                      std::span<const int> tau) {
    const int k = data.k;
    if (static_cast<int>(tau.size()) != k) {
        throw std::invalid_argument("sym_path_value: tau must order [k]");
    }
    const XTable x = x_table(data);
    auto x_or_y = [&](int r, int s) {
        return r == 0 ? data.y[s - 1] : x.at(r, s);
    };
    double path = 0.0;
    mask_t prefix = 0;
    for (int step = 0; step < k; ++step) {
        const int i = tau[step];
        prefix |= mask_t{1} << i;
        const mask_t folded = r_set & prefix;
        const int r = popcount(folded);
        const int s = popcount(prefix);
        path += ((folded >> i) & 1u) ? data.lambda * x_or_y(r - 1, s)
                                     : x_or_y(r, s);
    }
    const int r = popcount(r_set & full_mask(k));
    double closed = 0.0;
    for (int j = 1; j <= k - r; ++j) closed += data.y[j - 1];
    for (int t = 0; t < r; ++t) {
        closed += data.lambda * x_or_y(t, k - r + t + 1);
    }
    require_close(path, closed, 1e-12, "sym_path_value");
    return path;
}

double sym_mu(const SymmetricData& data, int m, int r) {
    if (r < 0 || r > m || m > data.k) {
        throw std::invalid_argument("sym_mu: requires 0 <= r <= m <= k");
    }
    const XTable x = x_table(data);
    double out = 0.0;
    for (int j = 1; j <= m - r; ++j) out += data.y[j - 1];
    for (int t = 0; t < r; ++t) {
        const int s = m - r + t + 1;
        out += data.lambda * (t == 0 ? data.y[s - 1] : x.at(t, s));
    }
    return out;
}

std::vector<double> w_weights(int n, double lambda) {
    if (n < 2) throw std::invalid_argument("w_weights: needs n >= 2");
    std::vector<double> p(n + 1);
    for (int k = 0; k <= n; ++k) {
        p[k] = binomial(n, k) * std::pow(lambda, k) *
               std::pow(1.0 - lambda, n - k);
    }
    std::vector<double> w(n - 1);
    for (int s = 1; s <= n - 1; ++s) {
        // Route 1: (lambda n - s) + double binomial CDF sum
        double cdf_sum = 0.0;
        for (int j = 0; j < s; ++j) {
            for (int t = 0; t <= j; ++t) cdf_sum += p[t];
        }
        const double direct = (lambda * n - s) + cdf_sum;
        // Route 2: lambda * sum of binomial tails
        double tails = 0.0;
        for (int k = s; k <= n - 1; ++k) tails += lambda_coeff(k, s, lambda);
        tails *= lambda;
        // Route 3: expected excess over s
        double excess = 0.0;
        for (int k = s + 1; k <= n; ++k) excess += (k - s) * p[k];
        require_close(direct, tails, 1e-10, "w_weights");
        require_close(direct, excess, 1e-10, "w_weights");
        w[s - 1] = direct;
    }
    return w;
}

double noisy_mi_upper_bound(const CubeFunction& f, mask_t a, int m,
                            const NoiseParam& noise) {
    if (m < 0 || m >= f.n() || ((a >> m) & 1u)) {
        throw std::invalid_argument("noisy_mi_upper_bound: m must lie outside A");
    }
    a &= full_mask(f.n());
    const int k = popcount(a);
    if (k < 1) {
        throw std::invalid_argument("noisy_mi_upper_bound: A must be nonempty");
    }
    int coords[kMaxDimension];
    int idx = 0;
    for (int c = 0; c < f.n(); ++c) {
        if ((a >> c) & 1u) coords[idx++] = c;
    }
    std::vector<double> memo(std::size_t{1} << f.n(),
                             std::numeric_limits<double>::quiet_NaN());
    auto ent = [&](mask_t set) {
        double& slot = memo[set];
        if (std::isnan(slot)) slot = conditional_entropy(f, set);
        return slot;
    };
    const mask_t mm = mask_t{1} << m;
    double bound = 0.0;
    for (int s = 1; s <= k; ++s) {
        double total = 0.0;
        long long count = 0;
        // S over (s-1)-subsets of A, i in A \ S
        for (mask_t sub = 0; sub < (mask_t{1} << k); ++sub) {
            if (popcount(sub) != s - 1) continue;
            mask_t s_coords = 0;
            for (int j = 0; j < k; ++j) {
                if ((sub >> j) & 1u) s_coords |= mask_t{1} << coords[j];
            }
            for (int j = 0; j < k; ++j) {
                if ((sub >> j) & 1u) continue;
                const mask_t mi = mask_t{1} << coords[j];
                total += ent(s_coords | mi | mm) - ent(s_coords | mi) -
                         ent(s_coords | mm) + ent(s_coords);
                ++count;
            }
        }
        bound += lambda_coeff(k, s, noise.lambda) *
                 (total / static_cast<double>(count));
    }
    return bound;
}

}  // namespace noisecube

#include "noisecube/info.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "noisecube/entropy.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/rng.hpp"

namespace noisecube {

BoundaryData::BoundaryData(int k_) : k(k_) {
    if (k_ < 1 || k_ > kMaxDimension) {
        throw std::invalid_argument("BoundaryData: bad k");
    }
    values.assign((std::size_t{1} << k_) * k_, 0.0);
}

double BoundaryData::y(mask_t s, int i) const {
    return values[static_cast<std::size_t>(s) * k + i];
}

double& BoundaryData::y(mask_t s, int i) {
    return values[static_cast<std::size_t>(s) * k + i];
}

double shannon_entropy(const CubeFunction& f) {
    if (std::fabs(f.mean() - 1.0) > 1e-12) {
        throw std::domain_error(
            "shannon_entropy: requires E f = 1; normalize first");
    }
    return f.n() - entropy_functional(f);
}

double mutual_info_sets(const CubeFunction& f, mask_t a, int m) {
    if (m < 0 || m >= f.n() || ((a >> m) & 1u)) {
        throw std::invalid_argument("mutual_info_sets: m must lie outside A");
    }
    const mask_t mm = mask_t{1} << m;
    return conditional_entropy(f, a | mm) - conditional_entropy(f, a) -
           conditional_entropy(f, mm);
}

double z_quantity(const CubeFunction& f, mask_t s, int i, int j) {
    if (i == j || i < 0 || j < 0 || i >= f.n() || j >= f.n() ||
        ((s >> i) & 1u) || ((s >> j) & 1u)) {
        throw std::invalid_argument(
            "z_quantity: i, j must be distinct coordinates outside S");
    }
    if (i > j) std::swap(i, j);  // keep Z exactly symmetric in (i, j)
    const mask_t mi = mask_t{1} << i, mj = mask_t{1} << j;
    return conditional_entropy(f, s | mi | mj) - conditional_entropy(f, s | mi) -
           conditional_entropy(f, s | mj) + conditional_entropy(f, s);
}

namespace {
// next mask of the same popcount (Gosper); call with m != 0
mask_t next_combination(mask_t m) {
    mask_t c = m & static_cast<mask_t>(-static_cast<std::int64_t>(m));
    mask_t r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

// random mask of given popcount over n coordinates (partial Fisher-Yates)
mask_t random_subset(Rng& rng, int n, int size) {
    int coords[kMaxDimension];
    for (int i = 0; i < n; ++i) coords[i] = i;
    mask_t m = 0;
    for (int i = 0; i < size; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - i)));
        std::swap(coords[i], coords[j]);
        m |= mask_t{1} << coords[i];
    }
    return m;
}
}  // namespace

TProfile t_profile(const CubeFunction& f, const SubsetAvgOptions& opts) {
    const int n = f.n();
    if (n < 2) {
        throw std::invalid_argument("t_profile: needs n >= 2");
    }
    TProfile out;
    out.t.assign(n - 1, 0.0);
    if (n <= opts.exact_max_n) {
        const std::vector<double> ent = all_conditional_entropies(f);
        auto z_of = [&](mask_t s, int i, int j) {
            const mask_t mi = mask_t{1} << i, mj = mask_t{1} << j;
            return ent[s | mi | mj] - ent[s | mi] - ent[s | mj] + ent[s];
        };
        for (int sz = 1; sz <= n - 1; ++sz) {
            double total = 0.0;
            long long count = 0;
            mask_t s = (sz == 1) ? 0u : full_mask(sz - 1);
            while (true) {
                for (int i = 0; i < n; ++i) {
                    if ((s >> i) & 1u) continue;
                    for (int j = i + 1; j < n; ++j) {
                        if ((s >> j) & 1u) continue;
                        total += z_of(s, i, j);
                        ++count;
                    }
                }
                if (sz == 1) break;  // only S = {} has size 0
                mask_t nxt = next_combination(s);
                if (nxt > full_mask(n)) break;
                s = nxt;
            }
            out.t[sz - 1] = total / static_cast<double>(count);
        }
        return out;
    }
    out.sampled = true;
    for (int sz = 1; sz <= n - 1; ++sz) {
        Rng rng(mix_seed(opts.seed, static_cast<std::uint64_t>(sz)));
        double total = 0.0;
        for (int it = 0; it < opts.samples; ++it) {
            mask_t s = random_subset(rng, n, sz - 1);
            int i, j;
            do {
                i = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
            } while ((s >> i) & 1u);
            do {
                j = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
            } while (((s >> j) & 1u) || j == i);
            total += z_quantity(f, s, i, j);
        }
        out.t[sz - 1] = total / opts.samples;
    }
    return out;
}

BoundaryData y_boundary(const CubeFunction& f, mask_t a, int m) {
    if (m < 0 || m >= f.n() || ((a >> m) & 1u)) {
        throw std::invalid_argument("y_boundary: m must lie outside A");
    }
    a &= full_mask(f.n());
    const int k = popcount(a);
    if (k < 1) throw std::invalid_argument("y_boundary: A must be nonempty");

    int coords[kMaxDimension];
    int idx = 0;
    for (int c = 0; c < f.n(); ++c) {
        if ((a >> c) & 1u) coords[idx++] = c;
    }
    const mask_t mm = mask_t{1} << m;

    // conditional entropies on demand, memoized per coordinate mask
    std::vector<double> memo(std::size_t{1} << f.n(),
                             std::numeric_limits<double>::quiet_NaN());
    auto ent = [&](mask_t set) {
        double& slot = memo[set];
        if (std::isnan(slot)) slot = conditional_entropy(f, set);
        return slot;
    };

    BoundaryData b(k);
    for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
        mask_t s_coords = 0;
        for (int j = 0; j < k; ++j) {
            if ((s >> j) & 1u) s_coords |= mask_t{1} << coords[j];
        }
        for (int j = 0; j < k; ++j) {
            if (!((s >> j) & 1u)) continue;
            const mask_t wo = s_coords & ~(mask_t{1} << coords[j]);
            b.y(s, j) = ent(s_coords | mm) - ent(wo | mm) - ent(s_coords) +
                        ent(wo);
        }
    }
    return b;
}

std::vector<double> y_avg_profile(const BoundaryData& b) {
    std::vector<double> profile(b.k, 0.0);
    std::vector<long long> counts(b.k, 0);
    for (mask_t s = 1; s < (mask_t{1} << b.k); ++s) {
        const int sz = popcount(s);
        for (int i = 0; i < b.k; ++i) {
            if ((s >> i) & 1u) {
                profile[sz - 1] += b.y(s, i);
                ++counts[sz - 1];
            }
        }
    }
    for (int sz = 1; sz <= b.k; ++sz) {
        profile[sz - 1] /= static_cast<double>(counts[sz - 1]);
    }
    return profile;
}

namespace {
double entropy_term(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }
}  // namespace

double bool_mutual_information(const CubeFunction& f,
                               const NoiseParam& noise) {
    if (!f.is_boolean()) {
        throw std::domain_error(
            "bool_mutual_information: function must be 0/1 valued");
    }
    const double ef = f.mean();
    if (ef == 0.0 || ef == 1.0) return 0.0;

    const CubeFunction tf = noise_apply(f, noise);
    const CubeFunction tg = noise_apply(f.complement_indicator(), noise);
    const double via_entropy = entropy_functional(tf) + entropy_functional(tg);

    double mean_h2 = 0.0;
    for (double v : tf.values()) mean_h2 += binary_entropy(v);
    mean_h2 /= static_cast<double>(tf.size());
    const double via_channel = binary_entropy(ef) - mean_h2;

    if (std::fabs(via_entropy - via_channel) > 1e-10) {
        throw std::runtime_error(
            "bool_mutual_information: entropy and channel routes disagree (" +
            std::to_string(via_entropy) + " vs " + std::to_string(via_channel) +
            ")");
    }
    return via_entropy;
}

double ck_bound(const NoiseParam& noise) {
    return 1.0 - binary_entropy(noise.eps);
}

std::vector<double> avg_conditional_entropy_by_size(const CubeFunction& f) {
    const std::vector<double> ent = all_conditional_entropies(f);
    std::vector<double> sums(f.n() + 1, 0.0);
    std::vector<long long> counts(f.n() + 1, 0);
    for (mask_t a = 0; a < ent.size(); ++a) {
        sums[popcount(a)] += ent[a];
        ++counts[popcount(a)];
    }
    for (int u = 0; u <= f.n(); ++u) sums[u] /= static_cast<double>(counts[u]);
    return sums;
}

std::vector<double> han_profile(const CubeFunction& f) {
    if (std::fabs(f.mean() - 1.0) > 1e-12) {
        throw std::domain_error("han_profile: requires E f = 1");
    }
    // H(X_T) = |T| - Ent(f | T) for E f = 1
    const std::vector<double> by_size = avg_conditional_entropy_by_size(f);
    std::vector<double> a(f.n());
    for (int t = 1; t <= f.n(); ++t) {
        a[t - 1] = (t - by_size[t]) / t;
    }
    return a;
}

}  // namespace noisecube

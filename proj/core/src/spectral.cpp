#include "noisecube/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "noisecube/entropy.hpp"

namespace noisecube {

namespace {
void butterfly(std::vector<double>& v) {
    const std::size_t n = v.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t base = 0; base < n; base += len << 1) {
            for (std::size_t j = base; j < base + len; ++j) {
                double a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}
}  // namespace

Spectrum wht_forward(const CubeFunction& f) {
    Spectrum s{f.n(), {f.values().begin(), f.values().end()}};
    butterfly(s.coeffs);
    const double inv = 1.0 / static_cast<double>(s.coeffs.size());
    for (auto& c : s.coeffs) c *= inv;
    return s;
}

CubeFunction wht_inverse(const Spectrum& s) {
    std::vector<double> v = s.coeffs;
    butterfly(v);  // H^2 = 2^n I and forward already divided by 2^n
    return CubeFunction(s.n, std::move(v));
}

Spectrum noise_multiplier(Spectrum s, const NoiseParam& noise) {
    std::vector<double> rho_pow(s.n + 1);
    rho_pow[0] = 1.0;
    for (int i = 1; i <= s.n; ++i) rho_pow[i] = rho_pow[i - 1] * noise.rho;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        s.coeffs[m] *= rho_pow[popcount(static_cast<mask_t>(m))];
    }
    return s;
}

double dirichlet_form(const CubeFunction& g) {
    double pointwise = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (int i = 0; i < g.n(); ++i) {
            double d = g[x ^ (std::size_t{1} << i)] - g[x];
            pointwise += d * d;
        }
    }
    pointwise /= static_cast<double>(g.size());

    Spectrum s = wht_forward(g);
    double fourier = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        fourier += popcount(static_cast<mask_t>(m)) * s.coeffs[m] * s.coeffs[m];
    }
    fourier *= 4.0;

    double scale = 1.0 + std::max(std::fabs(pointwise), std::fabs(fourier));
    if (std::fabs(pointwise - fourier) > 1e-10 * scale) {
        throw std::runtime_error(
            "dirichlet_form: pointwise and Fourier evaluations disagree (" +
            std::to_string(pointwise) + " vs " + std::to_string(fourier) +
            ")");
    }
    return pointwise;
}

double log_sobolev_gap(const CubeFunction& g) {
    for (double v : g.values()) {
        if (v < 0.0) {
            throw std::domain_error("log_sobolev_gap: negative value");
        }
    }
    const double two_ln2 = 2.0 * std::log(2.0);
    return dirichlet_form(g) - two_ln2 * g.mean() * entropy_functional(g);
}

std::pair<CubeFunction, CubeFunction> even_odd_split(const CubeFunction& g) {
    const std::size_t comp = (std::size_t{1} << g.n()) - 1;
    CubeFunction even(g.n()), odd(g.n());
    for (std::size_t x = 0; x < g.size(); ++x) {
        even[x] = 0.5 * (g[x] + g[x ^ comp]);
        odd[x] = g[x] - even[x];
    }
    return {std::move(even), std::move(odd)};
}

double spectral_tail(const CubeFunction& f, int d) {
    if (d < 0 || d > f.n()) {
        throw std::invalid_argument("spectral_tail: d must lie in [0, n]");
    }
    Spectrum s = wht_forward(f);
    double tail = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        if (popcount(static_cast<mask_t>(m)) >= d) {
            tail += s.coeffs[m] * s.coeffs[m];
        }
    }
    return tail;
}

}  // namespace noisecube

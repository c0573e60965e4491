#include "noisecube/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace noisecube {

namespace {
// Roundoff slack for probabilities produced by the spectral noise route.
constexpr double kProbSlack = 1e-9;
}  // namespace

double binary_entropy(double p) {
    if (std::isnan(p) || p < -kProbSlack || p > 1.0 + kProbSlack) {
        throw std::domain_error("binary_entropy: p must lie in [0, 1], got " +
                                std::to_string(p));
    }
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double binary_entropy_inv(double y) {
    if (std::isnan(y) || y < -kProbSlack || y > 1.0 + kProbSlack) {
        throw std::domain_error(
            "binary_entropy_inv: y must lie in [0, 1], got " +
            std::to_string(y));
    }
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int iter = 0; iter < 100 && hi - lo >= 1e-15; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double gerber_phi(double x, const NoiseParam& noise) {
    if (std::isnan(x) || x < -kProbSlack || x > 1.0 + kProbSlack) {
        throw std::domain_error("gerber_phi: x must lie in [0, 1], got " +
                                std::to_string(x));
    }
    double p = noise.rho * binary_entropy_inv(1.0 - x) + noise.eps;
    return 1.0 - binary_entropy(p);
}

namespace {
// E g log2 g for the fiber averages of f given A, plus the total, in one
// pass over the table. avgs enter with weight 2^-|A|.
struct CondAccum {
    double avg_log_sum = 0.0;
    double total = 0.0;
};

double entropy_from_terms(double e_flogf, double mean) {
    if (mean <= 0.0) {
        throw std::domain_error("entropy: function is identically zero");
    }
    return e_flogf - mean * std::log2(mean);
}

double checked_value(double v, double neg_tol) {
    if (v < 0.0) {
        if (v < -neg_tol) {
            throw std::domain_error(
                "entropy: negative value " + std::to_string(v));
        }
        return 0.0;
    }
    return v;
}
}  // namespace

double entropy_functional(const CubeFunction& f) {
    double max_abs = 0.0;
    for (double v : f.values()) max_abs = std::max(max_abs, std::fabs(v));
    const double neg_tol = 1e-12 * (1.0 + max_abs);
    double e_flogf = 0.0, total = 0.0;
    for (double raw : f.values()) {
        double v = checked_value(raw, neg_tol);
        if (v > 0.0) e_flogf += v * std::log2(v);
        total += v;
    }
    const double inv = 1.0 / static_cast<double>(f.size());
    return entropy_from_terms(e_flogf * inv, total * inv);
}

CubeFunction conditional_expectation(const CubeFunction& f, mask_t a) {
    const mask_t full = full_mask(f.n());
    a &= full;
    CubeFunction out(f.n());
    const double inv_fiber =
        1.0 / static_cast<double>(std::size_t{1} << (f.n() - popcount(a)));
    // accumulate fiber sums at the representative index x & a
    for (std::size_t x = 0; x < f.size(); ++x) {
        out[x & a] += f[x];
    }
    for (std::size_t x = 0; x < f.size(); ++x) {
        if ((x & ~static_cast<std::size_t>(a)) != 0) {
            out[x] = out[x & a];
        }
    }
    for (std::size_t x = 0; x < f.size(); ++x) out[x] *= inv_fiber;
    return out;
}

double conditional_entropy(const CubeFunction& f, mask_t a) {
    const mask_t full = full_mask(f.n());
    a &= full;
    const mask_t comp = full & ~a;
    const int fiber_bits = popcount(comp);
    const double inv_fiber = 1.0 / static_cast<double>(1u << fiber_bits);
    const double inv_reps =
        1.0 / static_cast<double>(std::size_t{1} << popcount(a));

    double max_abs = 0.0;
    for (double v : f.values()) max_abs = std::max(max_abs, std::fabs(v));
    const double neg_tol = 1e-12 * (1.0 + max_abs);

    double e_glogg = 0.0, total = 0.0;
    mask_t sub = a;
    while (true) {  // representatives: submasks of a, including 0
        double fiber_sum = 0.0;
        mask_t b = comp;
        while (true) {
            fiber_sum += f[sub | b];
            if (b == 0) break;
            b = (b - 1) & comp;
        }
        double avg = checked_value(fiber_sum * inv_fiber, neg_tol);
        if (avg > 0.0) e_glogg += avg * std::log2(avg);
        total += avg;
        if (sub == 0) break;
        sub = (sub - 1) & a;
    }
    return entropy_from_terms(e_glogg * inv_reps, total * inv_reps);
}

std::vector<double> all_conditional_entropies(const CubeFunction& f) {
    const std::size_t count = std::size_t{1} << f.n();
    std::vector<double> out(count);
    for (mask_t a = 0; a < count; ++a) {
        out[a] = conditional_entropy(f, a);
    }
    return out;
}

}  // namespace noisecube

#pragma once

// Brute-force reference computations used only by tests. Everything here is
// deliberately dumb and kept independent of the library's own evaluation
// paths (direct sums instead of transforms, probability tables instead of
// entropy functionals).

#include <cmath>
#include <vector>

#include "noisecube/cube.hpp"

namespace oracles {

using noisecube::CubeFunction;
using noisecube::mask_t;
using noisecube::popcount;

// (T_eps f)(x) by the defining O(4^n) double sum.
inline CubeFunction noise_direct(const CubeFunction& f, double eps) {
    const int n = f.n();
    std::vector<double> pw(n + 1);
    for (int d = 0; d <= n; ++d) {
        pw[d] = std::pow(eps, d) * std::pow(1.0 - eps, n - d);
    }
    CubeFunction out(n);
    for (std::size_t x = 0; x < f.size(); ++x) {
        double acc = 0.0;
        for (std::size_t y = 0; y < f.size(); ++y) {
            acc += pw[popcount(static_cast<mask_t>(x ^ y))] * f[y];
        }
        out[x] = acc;
    }
    return out;
}

// Shannon entropy of the distribution p(x) = f(x) 2^-n (requires E f = 1).
inline double shannon_direct(const CubeFunction& f) {
    const double inv = 1.0 / static_cast<double>(f.size());
    double h = 0.0;
    for (double v : f.values()) {
        const double p = v * inv;
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

// I({X_i}_{i in A}; X_m) from the joint distribution of (X_A, X_m), where
// X ~ f / sum f.
inline double mutual_info_direct(const CubeFunction& f, mask_t a, int m) {
    const mask_t mm = mask_t{1} << m;
    const double norm = 1.0 / (f.mean() * static_cast<double>(f.size()));
    std::vector<double> pa(f.size(), 0.0), pm(2, 0.0), pj(2 * f.size(), 0.0);
    for (std::size_t x = 0; x < f.size(); ++x) {
        const double p = f[x] * norm;
        const std::size_t ka = x & a;
        const std::size_t km = (x & mm) ? 1 : 0;
        pa[ka] += p;
        pm[km] += p;
        pj[2 * ka + km] += p;
    }
    double info = 0.0;
    for (std::size_t ka = 0; ka < f.size(); ++ka) {
        for (std::size_t km = 0; km < 2; ++km) {
            const double p = pj[2 * ka + km];
            if (p > 0.0) info += p * std::log2(p / (pa[ka] * pm[km]));
        }
    }
    return info;
}

// I(f(X); Y) for boolean f over BSC(eps), from the joint law of (f(X), Y)
// enumerated over all 4^n pairs.
inline double bool_mi_direct(const CubeFunction& f, double eps) {
    const int n = f.n();
    std::vector<double> pw(n + 1);
    for (int d = 0; d <= n; ++d) {
        pw[d] = std::pow(eps, d) * std::pow(1.0 - eps, n - d);
    }
    const double inv = 1.0 / static_cast<double>(f.size());
    std::vector<double> joint(2 * f.size(), 0.0);
    for (std::size_t x = 0; x < f.size(); ++x) {
        const std::size_t b = f[x] != 0.0 ? 1 : 0;
        for (std::size_t y = 0; y < f.size(); ++y) {
            joint[2 * y + b] +=
                inv * pw[popcount(static_cast<mask_t>(x ^ y))];
        }
    }
    double pb[2] = {0.0, 0.0};
    for (std::size_t y = 0; y < f.size(); ++y) {
        pb[0] += joint[2 * y];
        pb[1] += joint[2 * y + 1];
    }
    double info = 0.0;
    for (std::size_t y = 0; y < f.size(); ++y) {
        for (int b = 0; b < 2; ++b) {
            const double p = joint[2 * y + b];
            if (p > 0.0) info += p * std::log2(p / (pb[b] * inv));
        }
    }
    return info;
}

// H2^{-1} by plain bisection, independent of the library routine.
inline double h2_inv_direct(double y) {
    auto h2 = [](double p) {
        if (p <= 0.0 || p >= 1.0) return 0.0;
        return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    };
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h2(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracles

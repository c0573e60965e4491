#pragma once

#include <utility>
#include <vector>

#include "noisecube/cube.hpp"

namespace noisecube {

/// Walsh-Fourier coefficients of a cube function; coeffs[S] = f_hat(S) =
/// E_x f(x) W_S(x). In particular coeffs[0] = E f, and Parseval holds:
/// sum_S f_hat(S)^2 = E f^2.
struct Spectrum {
    int n;
    std::vector<double> coeffs;
};

/// In-place butterfly transform, O(n 2^n); forward divides by 2^n so the
/// coefficients are expectations.
Spectrum wht_forward(const CubeFunction& f);
CubeFunction wht_inverse(const Spectrum& s);

/// Fourier side of the noise operator: scales coeffs[S] by (1-2eps)^|S|.
Spectrum noise_multiplier(Spectrum s, const NoiseParam& noise);

/// Dirichlet form E(g,g) = E_x sum_{y ~ x} (g(y) - g(x))^2, the sum running
/// over the n neighbors of x. Evaluated both pointwise and through the
/// Fourier identity 4 sum_S |S| g_hat(S)^2; the two routes must agree to
/// 1e-10 relative or the call reports an internal consistency error.
double dirichlet_form(const CubeFunction& g);

/// E(g,g) - 2 ln2 * E g * Ent(g), nonnegative by the log-Sobolev inequality
/// for the cube. Requires g >= 0, not identically zero.
double log_sobolev_gap(const CubeFunction& g);

/// Even/odd split around the antipodal map: g0(x) = (g(x) + g(x^c)) / 2 and
/// g1 = g - g0. The spectrum of g0 is supported on even |S|, g1 on odd |S|.
std::pair<CubeFunction, CubeFunction> even_odd_split(const CubeFunction& g);

/// Tail weight sum_{|S| >= d} f_hat(S)^2.
double spectral_tail(const CubeFunction& f, int d);

}  // namespace noisecube

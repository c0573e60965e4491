#pragma once

#include <vector>

#include "noisecube/cube.hpp"

namespace noisecube {

/// Binary entropy H2(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
/// Inputs within 1e-9 outside [0,1] are clamped (the spectral noise route
/// leaves roundoff of that size on boolean data); anything further out is a
/// domain error.
double binary_entropy(double p);

/// Unique p in [0, 1/2] with H2(p) = y, by bisection (H2 is monotone there).
/// Terminates at interval width < 1e-15 or 100 iterations.
double binary_entropy_inv(double y);

/// Mrs. Gerber's function phi(x, eps) = 1 - H2((1-2eps) * H2^{-1}(1-x) + eps).
/// Increasing and concave in x, phi(0) = 0, phi(1) = 1 - H2(eps).
double gerber_phi(double x, const NoiseParam& noise);

/// Ent(f) = E f log2 f - E f * log2 E f for nonnegative f, not identically 0.
/// Nonnegative and homogeneous. Values within a tiny negative tolerance of
/// zero (roundoff from the spectral noise route) are treated as zero.
double entropy_functional(const CubeFunction& f);

/// E(f | A): the function constant on each fiber of the coordinates outside
/// A, equal to the average of f over that fiber. A projection.
CubeFunction conditional_expectation(const CubeFunction& f, mask_t a);

/// Ent(f | A) = Ent(E(f | A)). Zero-mass fibers contribute 0.
double conditional_entropy(const CubeFunction& f, mask_t a);

/// Ent(f | A) for every A in one pass; entry at mask A. O(4^n) total.
std::vector<double> all_conditional_entropies(const CubeFunction& f);

}  // namespace noisecube

#pragma once

#include "noisecube/cube.hpp"

namespace noisecube {

/// The noise operator T_eps: (T_eps f)(x) is the expectation of f at a point
/// eps-correlated with x. Computed through the Walsh transform (multiplier
/// (1-2eps)^|S|) in O(n 2^n). Preserves the mean.
CubeFunction noise_apply(const CubeFunction& f, const NoiseParam& noise);

/// Directional noise: applies (T_{eps_i} f)(x) = eps f(x + e_i) +
/// (1-eps) f(x) for each i in R. The directional operators commute, and
/// R = [n] recovers T_eps.
CubeFunction noise_apply_directions(const CubeFunction& f,
                                    const NoiseParam& noise, mask_t r);

}  // namespace noisecube

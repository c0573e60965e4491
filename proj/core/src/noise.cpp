#include "noisecube/noise.hpp"

#include "noisecube/spectral.hpp"

namespace noisecube {

CubeFunction noise_apply(const CubeFunction& f, const NoiseParam& noise) {
    if (noise.eps == 0.0) return f;  // identity operator, keep it exact
    return wht_inverse(noise_multiplier(wht_forward(f), noise));
}

CubeFunction noise_apply_directions(const CubeFunction& f,
                                    const NoiseParam& noise, mask_t r) {
    r &= full_mask(f.n());
    CubeFunction g = f;
    for (int i = 0; i < f.n(); ++i) {
        if (!((r >> i) & 1u)) continue;
        const std::size_t bit = std::size_t{1} << i;
        for (std::size_t x = 0; x < g.size(); ++x) {
            if (x & bit) continue;
            double lo = g[x], hi = g[x | bit];
            g[x] = (1.0 - noise.eps) * lo + noise.eps * hi;
            g[x | bit] = noise.eps * lo + (1.0 - noise.eps) * hi;
        }
    }
    return g;
}

}  // namespace noisecube

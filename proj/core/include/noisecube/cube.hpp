#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace noisecube {

/// Subsets of coordinates as bitmasks: bit i set <=> coordinate i is in the
/// subset. The same convention indexes points of the cube: bit i of a value
/// index encodes coordinate i (little-endian). Coordinates are 0-based.
using mask_t = std::uint32_t;

/// Dense storage of 2^n doubles caps the dimension (128 MiB at n = 24).
inline constexpr int kMaxDimension = 24;

inline int popcount(mask_t m) { return std::popcount(m); }

/// Full-coordinate mask [n] = {0, ..., n-1}.
inline mask_t full_mask(int n) { return static_cast<mask_t>((1ull << n) - 1); }

/// Noise level of a binary symmetric channel, eps in [0, 1/2], together with
/// the derived correlation rho = 1 - 2*eps and contraction lambda = rho^2.
struct NoiseParam {
    double eps;
    double lambda;
    double rho;

    explicit NoiseParam(double eps_);
};

/// A real-valued function on {0,1}^n stored as a dense table of 2^n values.
/// Expectations are always uniform averages (weight 2^-n); distributions are
/// represented as densities with mean 1.
class CubeFunction {
   public:
    explicit CubeFunction(int n);
    CubeFunction(int n, std::vector<double> values);

    static CubeFunction constant(int n, double c);
    /// Indicator of the half-cube {x_coord = 0}.
    static CubeFunction dictator(int n, int coord);
    /// Walsh character W_S(x) = (-1)^{sum_{i in S} x_i}.
    static CubeFunction walsh(int n, mask_t s);

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t x) const { return values_[x]; }
    double& operator[](std::size_t x) { return values_[x]; }
    std::span<const double> values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }

    double mean() const;
    double mean_square() const;
    /// True iff every value is exactly 0.0 or 1.0.
    bool is_boolean() const;
    /// Pointwise 1 - f (complement of a boolean indicator).
    CubeFunction complement_indicator() const;

    CubeFunction& operator*=(double c);

   private:
    int n_;
    std::vector<double> values_;
};

}  // namespace noisecube

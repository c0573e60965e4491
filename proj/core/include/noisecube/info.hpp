#pragma once

#include <cstdint>
#include <vector>

#include "noisecube/cube.hpp"

namespace noisecube {

/// Second differences of conditional entropies over subsets of a k-element
/// ground set: entry(S, i) = y_{S,i} for i in S, S a mask over {0..k-1}.
struct BoundaryData {
    int k = 0;
    std::vector<double> values;  // dense, index S * k + i; valid when i in S

    BoundaryData() = default;
    explicit BoundaryData(int k_);

    double y(mask_t s, int i) const;
    double& y(mask_t s, int i);
};

/// t_s = E Z_{S;i,j} over |S| = s-1 and distinct i, j outside S, for
/// s = 1..n-1. `sampled` records whether subset averages were enumerated
/// exactly or estimated from seeded uniform samples.
struct TProfile {
    std::vector<double> t;
    bool sampled = false;
};

/// Subset-averaged quantities are enumerated exactly up to this dimension
/// and sampled (seeded, `samples` draws per entry) above it.
struct SubsetAvgOptions {
    int exact_max_n = 12;
    int samples = 20000;
    std::uint64_t seed = 0x5eedULL;
};

/// H(X) for X distributed according to f / sum f, via the identity
/// Ent(f) = E f * (n - H(X)). Requires E f = 1 within 1e-12.
double shannon_entropy(const CubeFunction& f);

/// I_f(A, m) = Ent(f | A u {m}) - Ent(f | A) - Ent(f | {m}), m not in A.
/// Nonnegative for nonnegative f; equals I({X_i}_{i in A}; X_m) when E f = 1.
double mutual_info_sets(const CubeFunction& f, mask_t a, int m);

/// Z_{S;i,j} = Ent(f|S u {i,j}) - Ent(f|S u {i}) - Ent(f|S u {j}) + Ent(f|S),
/// for distinct i, j outside S. Symmetric in (i, j).
double z_quantity(const CubeFunction& f, mask_t s, int i, int j);

TProfile t_profile(const CubeFunction& f, const SubsetAvgOptions& opts = {});

/// Boundary data of the noisy-information program for ground set A (|A| = k)
/// and target coordinate m not in A:
///   y_{S,i} = Ent(f|S u {m}) - Ent(f|S\{i} u {m}) - Ent(f|S) + Ent(f|S\{i})
/// indexed by the positions of A in ascending order. For every ordering of
/// A the y-values telescope to I_f(A, m).
BoundaryData y_boundary(const CubeFunction& f, mask_t a, int m);

/// Symmetrized profile y_s = E_{|S| = s, i in S} y_{S,i}, s = 1..k.
std::vector<double> y_avg_profile(const BoundaryData& b);

/// I(f(X); Y) for boolean f over BSC(eps), via Ent(T_eps f) +
/// Ent(T_eps (1-f)); cross-checked internally against
/// H2(E f) - E_y H2((T_eps f)(y)) to 1e-10.
double bool_mutual_information(const CubeFunction& f, const NoiseParam& noise);

/// The conjectured bound 1 - H2(eps).
double ck_bound(const NoiseParam& noise);

/// E_{|B| = u} Ent(f | B) for every u = 0..n (exact enumeration).
std::vector<double> avg_conditional_entropy_by_size(const CubeFunction& f);

/// Per-coordinate averages a_t = E_{|T| = t} H({X_i}_{i in T}) / t for
/// t = 1..n, computed for E f = 1. Nonincreasing in t by Han's inequality.
std::vector<double> han_profile(const CubeFunction& f);

}  // namespace noisecube

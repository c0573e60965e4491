#pragma once

#include <string>
#include <vector>

#include "noisecube/cube.hpp"
#include "noisecube/info.hpp"

namespace noisecube {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// One variable x^R_{S,i} of the program. The identity x^R_{S,i} =
/// x^{R n S}_{S,i} is applied at construction, so R ranges over subsets of S
/// only; the variable count is sum_s C(k,s) * s * 2^s.
struct LpVariable {
    mask_t s_set;
    int i;
    mask_t r_set;
};

struct LpRow {
    std::vector<std::pair<int, double>> coeffs;  // (variable index, coeff)
    double rhs;
};

/// The noisy-information maximization program: fix the boundary values
/// x^0_{S,i} = y_{S,i}, equate every permutation's path sum to the identity
/// permutation's for each R (deduplicated), bound x^R_{S,i} <=
/// lambda * x^{R\i}_{S,i} for i in R, and maximize the identity-path sum at
/// R = [k]. Variables are free in sign.
struct LpProblem {
    int k;
    double lambda;
    BoundaryData boundary;
    std::vector<LpVariable> vars;
    std::vector<LpRow> equalities;
    std::vector<LpRow> inequalities;  // lhs <= rhs
    std::vector<double> objective;    // maximize

    int var_index(mask_t s_set, int i, mask_t r_set) const;
};

struct LpSolution {
    LpStatus status;
    double objective = 0.0;
    std::vector<double> assignment;
    double max_violation = 0.0;  // residual over all rows at the solution
};

/// k is capped at 5 for construction (k = 5 already needs ~1000 variables
/// with every-permutation path constraints).
LpProblem build_lp(const BoundaryData& boundary, double lambda);

/// Dense two-phase simplex with Bland's anti-cycling rule, pivot tolerance
/// 1e-11. Deterministic; never throws on unbounded/infeasible problems.
/// Solving is capped at k = 4 unless allow_k5 overrides.
LpSolution solve_lp(const LpProblem& p, bool allow_k5 = false);

/// Plain-text standard-form dump (objective, equality rows, inequality
/// rows, variable name map) for cross-checking with external solvers.
std::string export_lp_text(const LpProblem& p);

/// The paper's feasible point built from a concrete function: x^R_{S,i}
/// assembled from conditional entropies of T_{eps_R} f. Checks every
/// constraint of the program and compares the objective against the
/// directly computed noisy mutual information.
struct FeasibleSolutionReport {
    std::vector<double> assignment;    // indexed like LpProblem::vars
    double objective = 0.0;            // path sum at R = [k]
    double direct_mi = 0.0;            // I_{T_{eps_A} f}(A, m)
    double max_constraint_residual = 0.0;
    double max_fold_residual = 0.0;    // constraint 2, checked unfolded
    bool ok = false;                   // all residuals within 1e-9
};

FeasibleSolutionReport feasible_from_function(const CubeFunction& f, mask_t a,
                                              int m, const NoiseParam& noise);

/// Theorem-level certificate: LP optimum vs the symmetric closed-form value
/// of the averaged profile. margin = symmetric - optimum; PASS iff margin
/// >= -1e-7 (vacuous for infeasible data, which the status records).
struct DominanceReport {
    LpStatus status;
    double lp_optimum = 0.0;
    double symmetric_value = 0.0;
    double margin = 0.0;
    bool pass = false;
};

DominanceReport check_symmetric_dominance(const BoundaryData& boundary,
                                          double lambda);

/// Symmetric boundary data built from a profile vector y_1..y_k.
BoundaryData symmetric_boundary(const std::vector<double>& profile);

}  // namespace noisecube

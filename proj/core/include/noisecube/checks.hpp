#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noisecube/cube.hpp"
#include "noisecube/info.hpp"
#include "noisecube/lp.hpp"
#include "noisecube/rng.hpp"
#include "noisecube/symmetric.hpp"

namespace noisecube {

/// Outcome of one verified claim. For <=-claims margin = rhs - lhs and the
/// check passes iff margin >= -tol; for identities margin = |lhs - rhs| and
/// it passes iff margin <= tol.
struct CheckReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    std::string mode = "exact-enumeration";  // or "sampled"
    bool pass = false;
    long long runtime_ms = 0;
    std::optional<std::uint64_t> seed;
    double tol = 0.0;
    bool identity = false;  // identity (|lhs-rhs| <= tol) vs inequality
    int n = 0;
    double eps = 0.0;
};

CheckReport make_inequality_report(std::string name, double lhs, double rhs,
                                   double tol);
CheckReport make_identity_report(std::string name, double lhs, double rhs,
                                 double tol);

/// i.i.d. uniform(0,1) values, normalized to E f = 1.
CubeFunction random_nonneg_function(int n, std::uint64_t seed);
/// i.i.d. fair bits.
CubeFunction random_boolean_function(int n, std::uint64_t seed);
/// Product-form function with independent coordinates (zero mutual
/// information everywhere); E f = 1.
CubeFunction random_product_function(int n, std::uint64_t seed);

// ----- theorem checkers ------------------------------------------------

/// Mrs. Gerber's lemma: Ent(T_eps f) <= n E f phi(Ent(f) / (n E f), eps).
CheckReport check_mgl(const CubeFunction& f, const NoiseParam& noise);

/// Ent(T_eps f) <= E_T [Ent(f|T) - sum_{i in T} Ent(f|{i})]
///                + sum_i phi(Ent(f|{i})), T ~ product-Bernoulli(lambda).
CheckReport check_theorem_main(const CubeFunction& f, const NoiseParam& noise,
                               const SubsetAvgOptions& opts = {});

/// Streamlined form Ent(T_eps f) <= E_T Ent(f|T).
CheckReport check_corollary_streamline(const CubeFunction& f,
                                       const NoiseParam& noise,
                                       const SubsetAvgOptions& opts = {});

/// Boolean form I(f(X);Y) <= E_T I(f(X); {X_i}_{i in T}); also verifies the
/// weaker subsampling bound with per-coordinate probability 1-2eps.
std::vector<CheckReport> check_corollary_info_app(
    const CubeFunction& f, const NoiseParam& noise,
    const SubsetAvgOptions& opts = {});

/// Strengthened Mrs. Gerber bound Ent(T_eps f) <= n phi(E_T Ent(f|T)/t, eps)
/// with t = lambda n, plus a second record for the information form
/// H(X+Z) >= n H2(eps + (1-2eps) H2^{-1}(E_T H(X_T)/t)); the two margins
/// must agree to 1e-10.
std::vector<CheckReport> check_smgl(const CubeFunction& f,
                                    const NoiseParam& noise,
                                    const SubsetAvgOptions& opts = {});

/// Ent(T_eps f) <= sum_i phi(Ent(f|{i})) + sum_s w_s t_s.
CheckReport check_lemma_noisy_ts(const CubeFunction& f,
                                 const NoiseParam& noise,
                                 const SubsetAvgOptions& opts = {});

/// Identity I(f(X);Y) = Ent(T_eps f) + Ent(T_eps (1-f)) against a direct
/// joint-distribution enumeration over all (x, y) pairs.
CheckReport check_lemma_h_entr(const CubeFunction& f, const NoiseParam& noise);

// ----- identity battery (tamper shifts one transcribed route; used by the
// negative-control tests) ----------------------------------------------

CheckReport check_lemma34_vs_recursion(int k, double lambda,
                                       double tamper = 0.0);
CheckReport check_cor35_dual_forms(int k, double lambda, double tamper = 0.0);
CheckReport check_value_routes(const SymmetricData& data, double tamper = 0.0);
CheckReport check_eq11_path_invariance(const SymmetricData& data,
                                       double tamper = 0.0);
CheckReport check_lemma37(const BoundaryData& boundary, double lambda,
                          double tamper = 0.0);
CheckReport check_lemma38(const SymmetricData& data, double tamper = 0.0);
CheckReport check_w_identity(int n, double lambda, double tamper = 0.0);
CheckReport check_lemma43(const CubeFunction& f, double tamper = 0.0);
CheckReport check_eq4_bridge(const CubeFunction& f, mask_t a,
                             double tamper = 0.0);
CheckReport check_lemma63(const CubeFunction& g, double tamper = 0.0);
CheckReport check_dirichlet_dual(const CubeFunction& g, double tamper = 0.0);
CheckReport check_lambda_tail(int k, double lambda, double tamper = 0.0);

// ----- analytic sweeps ---------------------------------------------------

/// phi concavity (second differences on a grid) and the sandwich
/// (1 - H2(eps)) x <= phi(x, eps) <= lambda x.
std::vector<CheckReport> check_phi_analytics(const NoiseParam& noise,
                                             double grid_step = 0.01,
                                             double tamper = 0.0);

/// 1 - H2((1-x)/2) <= x^2/(2 ln2) + (1 - 1/(2 ln2)) x^4 on a 1e-3 grid.
CheckReport check_quartic_bound(double tamper = 0.0);

/// Han monotonicity of a_t = E_{|T|=t} H(X_T) / t (nonincreasing in t).
CheckReport check_han_monotonicity(const CubeFunction& f);

// ----- exhaustive search -------------------------------------------------

struct CkSearchResult {
    int n;
    double eps;
    double max_info;
    double bound;    // 1 - H2(eps)
    double margin;   // bound - max_info
    std::vector<std::uint32_t> maximizer_tables;  // truth tables
    std::vector<std::uint32_t> maximizer_classes; // canonical, up to
                                                  // coordinate/complement
                                                  // symmetry
    bool dictators_only;  // maximizers == { g_k, 1-g_k : k }
    long long runtime_ms;
};

/// Enumerates every boolean function on n <= 4 variables (complement
/// symmetry halves the work) and maximizes I(f(X);Y).
CkSearchResult ck_exhaustive_search(int n, const NoiseParam& noise);

// ----- suite -------------------------------------------------------------

struct SuiteConfig {
    std::uint64_t seed = 20240;
    int n_min = 3;
    int n_max = 8;
    std::vector<double> eps_grid = {0.1, 0.25, 0.4, 0.45, 0.49};
    int trials_inequality = 500;  // per (theorem, n, eps) family budget
    int trials_identity = 50;
    int trials_lp = 40;
    int ck_max_n = 3;
    double tol_identity = 1e-9;
    double tol_inequality = 1e-9;
    double tol_lp = 1e-7;
    int threads = 0;              // 0: VERIFY_THREADS or hardware
    std::string tamper_target;    // empty: none
    double tamper_delta = 0.0;
    SubsetAvgOptions avg;
};

/// Parses the JSON config (all fields optional); throws std::runtime_error
/// with line/column context on malformed input.
SuiteConfig parse_suite_config(const std::string& json_text);

/// Runs every checker family; deterministic for a fixed config. Reports are
/// sorted by name. A nonzero number of failures is the caller's cue for a
/// nonzero exit code.
std::vector<CheckReport> run_suite(const SuiteConfig& config);

/// Header line documenting what the empirical search substitutes for the
/// unquantified-constant theorems.
std::string suite_header();

/// Effective parallelism: explicit > 0 wins, else VERIFY_THREADS, else
/// hardware concurrency.
int effective_threads(int requested);

}  // namespace noisecube

// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "noisecube/checks.hpp"
#include "noisecube/entropy.hpp"
#include "noisecube/info.hpp"
#include "noisecube/lp.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/spectral.hpp"
#include "noisecube/symmetric.hpp"

using namespace noisecube;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, double seconds,
            double limit_seconds, const std::string& detail) {
    const bool in_time = seconds <= limit_seconds;
    const bool ok = pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] criterion-%02d %-34s %6.2fs (limit %4.0fs)  %s\n",
                ok ? "PASS" : "FAIL", index, name.c_str(), seconds,
                limit_seconds, detail.c_str());
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

constexpr std::uint64_t kSeed = 0xACCE97ULL;

// ---- 1: equality case on subcube indicators -------------------------------
void criterion_equality_case() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 0; k < n; ++k) {
            const CubeFunction g = CubeFunction::dictator(n, k);
            for (double eps : {0.1, 0.25, 0.4, 0.49}) {
                const NoiseParam noise(eps);
                const double bound = ck_bound(noise);
                worst = std::max(
                    worst, std::fabs(bool_mutual_information(g, noise) - bound));
                worst = std::max(
                    worst, std::fabs(entropy_functional(noise_apply(g, noise)) -
                                     0.5 * bound));
            }
        }
    }
    std::ostringstream d;
    d << "worst residual " << worst << " (tol 1e-12)";
    report(1, "equality-case", worst <= 1e-12, seconds_since(t0), 1.0, d.str());
}

// ---- 2: exhaustive search at n = 4 ----------------------------------------
void criterion_ck_search() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst = 0.0;
    for (double eps : {0.3, 0.4, 0.45, 0.49}) {
        const CkSearchResult res = ck_exhaustive_search(4, NoiseParam(eps));
        worst = std::max(worst, std::fabs(res.max_info - res.bound));
        pass = pass && res.dictators_only &&
               std::fabs(res.max_info - res.bound) <= 1e-10;
    }
    std::ostringstream d;
    d << "65536 functions x 4 noise levels, worst |max-bound| " << worst
      << ", maximizers are the 8 dictator-type tables";
    report(2, "ck-exhaustive-n4", pass, seconds_since(t0), 120.0, d.str());
}

// ---- 3: Mrs. Gerber's lemma sweep ------------------------------------------
void criterion_mgl() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 1.0;
    long long count = 0;
    for (int n = 3; n <= 8; ++n) {
        for (double eps : {0.1, 0.25, 0.4, 0.45}) {
            const NoiseParam noise(eps);
            for (int trial = 0; trial < 1000; ++trial) {
                const CubeFunction f = random_nonneg_function(
                    n, mix_seed(kSeed, (std::uint64_t{3} << 48) ^
                                           (std::uint64_t(n) << 32) ^
                                           (std::uint64_t(eps * 1e6) << 12) ^
                                           std::uint64_t(trial)));
                const CheckReport r = check_mgl(f, noise);
                worst = std::min(worst, r.margin);
                ++count;
            }
        }
    }
    std::ostringstream d;
    d << count << " instances, worst margin " << worst;
    report(3, "mrs-gerber-lemma", worst >= -1e-9, seconds_since(t0), 60.0,
           d.str());
}

// ---- 4: main theorem + streamlined corollary --------------------------------
void criterion_main_theorem() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 1.0, worst_order = 1.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + trial % 6;
        const CubeFunction f = random_nonneg_function(
            n, mix_seed(kSeed, (std::uint64_t{4} << 48) ^ std::uint64_t(trial)));
        for (double eps : {0.1, 0.25, 0.4, 0.45, 0.49}) {
            const NoiseParam noise(eps);
            const CheckReport main = check_theorem_main(f, noise);
            const CheckReport cor = check_corollary_streamline(f, noise);
            worst = std::min(worst, main.margin);
            worst = std::min(worst, cor.margin);
            worst_order = std::min(worst_order, cor.rhs - main.rhs);
        }
    }
    std::ostringstream d;
    d << "500 functions x 5 noise levels, worst margin " << worst
      << ", worst rhs ordering " << worst_order;
    report(4, "main-theorem-and-streamline",
           worst >= -1e-9 && worst_order >= -1e-9, seconds_since(t0), 300.0,
           d.str());
}

// ---- 5: strengthened Mrs. Gerber + information form -------------------------
void criterion_smgl() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 1.0, worst_agree = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 3 + trial % 6;
        const CubeFunction f = random_nonneg_function(
            n, mix_seed(kSeed, (std::uint64_t{5} << 48) ^ std::uint64_t(trial)));
        for (double eps : {0.1, 0.25, 0.4, 0.45, 0.49}) {
            const auto rr = check_smgl(f, NoiseParam(eps));
            worst = std::min(worst, rr[0].margin);
            if (rr.size() > 1) {
                worst = std::min(worst, rr[1].margin);
                worst_agree = std::max(worst_agree, rr[2].margin);
            }
        }
    }
    std::ostringstream d;
    d << "worst margin " << worst << ", worst form disagreement "
      << worst_agree;
    report(5, "strengthened-mgl-eq7", worst >= -1e-9 && worst_agree <= 1e-10,
           seconds_since(t0), 300.0, d.str());
}

// ---- 6 and 7: LP chain and the paper's feasible point ------------------------
void criterion_lp_chain() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_chain = 1.0;
    double worst_feas = 0.0, worst_obj = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t seed =
            mix_seed(kSeed, (std::uint64_t{6} << 48) ^ std::uint64_t(trial));
        const CubeFunction f = random_nonneg_function(5, seed);
        Rng rng(mix_seed(seed, 1));
        const int k = 2 + trial % 2;
        const NoiseParam noise(0.05 + 0.4 * rng.uniform01());
        int coords[5] = {0, 1, 2, 3, 4};
        for (int i = 0; i < k + 1; ++i) {
            const int j = i + static_cast<int>(rng.below(5 - i));
            std::swap(coords[i], coords[j]);
        }
        mask_t a = 0;
        for (int i = 0; i < k; ++i) a |= mask_t{1} << coords[i];
        const int m = coords[k];

        const BoundaryData b = y_boundary(f, a, m);
        const LpSolution sol = solve_lp(build_lp(b, noise.lambda));
        const double sym = symmetric_value(
            SymmetricData(k, noise.lambda, y_avg_profile(b)));
        const double actual =
            mutual_info_sets(noise_apply_directions(f, noise, a), a, m);
        worst_chain = std::min(worst_chain, sol.objective - actual);
        worst_chain = std::min(worst_chain, sym - sol.objective);

        const FeasibleSolutionReport fs = feasible_from_function(f, a, m, noise);
        worst_feas = std::max(worst_feas, fs.max_constraint_residual);
        worst_feas = std::max(worst_feas, fs.max_fold_residual);
        worst_obj = std::max(worst_obj, std::fabs(fs.objective - fs.direct_mi));
    }
    double worst_vec = 1.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t seed =
            mix_seed(kSeed, (std::uint64_t{7} << 48) ^ std::uint64_t(trial));
        Rng rng(seed);
        const int k = 2 + trial % 3;
        const double lambda = 0.05 + 0.9 * rng.uniform01();
        std::vector<double> prof(k);
        for (auto& v : prof) v = rng.uniform01();
        const DominanceReport rep =
            check_symmetric_dominance(symmetric_boundary(prof), lambda);
        worst_vec = std::min(worst_vec,
                             rep.status == LpStatus::kOptimal ? rep.margin
                                                              : -1.0);
    }
    {
        std::ostringstream d;
        d << "200 function instances + 200 boundary vectors; worst chain "
             "margin "
          << std::min(worst_chain, worst_vec);
        report(6, "lp-chain", worst_chain >= -1e-7 && worst_vec >= -1e-7,
               seconds_since(t0), 300.0, d.str());
    }
    {
        std::ostringstream d;
        d << "worst constraint residual " << worst_feas
          << ", worst |objective - MI| " << worst_obj;
        report(7, "feasible-solution", worst_feas <= 1e-9 && worst_obj <= 1e-9,
               0.0, 300.0, d.str());
    }
}

// ---- 8: closed-form identity battery ----------------------------------------
void criterion_identity_battery() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    Rng rng(mix_seed(kSeed, 8));
    for (double lambda : {0.05, 0.3, 0.5, 0.8, 0.97}) {
        for (int k = 1; k <= 8; ++k) {
            worst = std::max(worst, check_lemma34_vs_recursion(k, lambda).margin);
            worst = std::max(worst, check_cor35_dual_forms(k, lambda).margin);
            worst = std::max(worst, check_lambda_tail(k, lambda).margin);
            std::vector<double> y(k);
            for (auto& v : y) v = rng.uniform01();
            const SymmetricData data(k, lambda, y);
            worst = std::max(worst, check_value_routes(data).margin);
            if (k <= 5) {
                worst = std::max(worst,
                                 check_eq11_path_invariance(data).margin);
            }
            if (k >= 2 && k <= 6) {
                worst = std::max(worst, check_lemma38(data).margin);
                BoundaryData b(k);
                for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
                    for (int i = 0; i < k; ++i) {
                        if ((s >> i) & 1u) b.y(s, i) = rng.uniform01();
                    }
                }
                worst = std::max(worst, check_lemma37(b, lambda).margin);
            }
        }
        for (int n = 2; n <= 12; ++n) {
            worst = std::max(worst, check_w_identity(n, lambda).margin);
        }
    }
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3 + trial % 4;
        const std::uint64_t seed = mix_seed(kSeed, 0x800 + trial);
        const CubeFunction f = random_nonneg_function(n, seed);
        worst = std::max(worst, check_lemma43(f).margin);
        worst = std::max(worst,
                         check_eq4_bridge(f, static_cast<mask_t>(seed) &
                                                 full_mask(n)).margin);
        worst = std::max(worst, check_lemma63(f).margin);
        CubeFunction g(n);
        Rng grng(seed);
        for (std::size_t x = 0; x < g.size(); ++x) {
            g[x] = 2.0 * grng.uniform01() - 1.0;
        }
        worst = std::max(worst, check_dirichlet_dual(g).margin);
        const CubeFunction fb = random_boolean_function(4, seed);
        worst = std::max(worst,
                         check_lemma_h_entr(fb, NoiseParam(0.3)).margin);
    }
    std::ostringstream d;
    d << "worst residual " << worst;
    report(8, "identity-battery", worst <= 1e-9, seconds_since(t0), 60.0,
           d.str());
}

// ---- 9: log-Sobolev and SDPI sweeps -----------------------------------------
void criterion_sobolev_sdpi() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst_gap = 1.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 7;
        CubeFunction g(n);
        Rng rng(mix_seed(kSeed, (std::uint64_t{9} << 40) ^ trial));
        for (std::size_t x = 0; x < g.size(); ++x) g[x] = rng.uniform01();
        worst_gap = std::min(worst_gap, log_sobolev_gap(g));
    }
    double worst_sdpi = 1.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t seed =
            mix_seed(kSeed, (std::uint64_t{10} << 40) ^ trial);
        const int n = 4 + trial % 3;
        const CubeFunction f = random_nonneg_function(n, seed);
        Rng rng(mix_seed(seed, 5));
        const NoiseParam noise(0.02 + 0.46 * rng.uniform01());
        const int m = static_cast<int>(rng.below(n));
        mask_t s = static_cast<mask_t>(rng.next()) & full_mask(n) &
                   ~(mask_t{1} << m);
        int i = -1;
        for (int c = 0; c < n; ++c) {
            if (c != m && ((s >> c) & 1u)) {
                i = c;
                break;
            }
        }
        if (i < 0) {
            i = (m == 0) ? 1 : 0;
            s |= mask_t{1} << i;
        }
        const mask_t r_wo =
            static_cast<mask_t>(rng.next()) & s & ~(mask_t{1} << i);
        const mask_t mm = mask_t{1} << m;
        const mask_t wo = s & ~(mask_t{1} << i);
        auto second_diff = [&](const CubeFunction& h) {
            return conditional_entropy(h, s | mm) -
                   conditional_entropy(h, wo | mm) - conditional_entropy(h, s) +
                   conditional_entropy(h, wo);
        };
        const double with_i =
            second_diff(noise_apply_directions(f, noise, r_wo | (mask_t{1} << i)));
        const double without_i =
            second_diff(noise_apply_directions(f, noise, r_wo));
        worst_sdpi = std::min(worst_sdpi,
                              noise.lambda * without_i - with_i);
    }
    std::ostringstream d;
    d << "1000+1000 instances, worst log-Sobolev gap " << worst_gap
      << ", worst SDPI margin " << worst_sdpi;
    report(9, "log-sobolev-and-sdpi", worst_gap >= -1e-10 && worst_sdpi >= -1e-9,
           seconds_since(t0), 60.0, d.str());
}

// ---- 10: phi analytics -------------------------------------------------------
void criterion_phi() {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    for (double eps = 0.05; eps <= 0.451; eps += 0.05) {
        const auto rr = check_phi_analytics(NoiseParam(eps), 0.01);
        pass = pass && rr[0].pass && rr[1].pass;
    }
    const CheckReport quartic = check_quartic_bound();
    pass = pass && quartic.pass;
    report(10, "phi-analytics", pass, seconds_since(t0), 1.0,
           "concavity + sandwich on the 1e-2 grid, quartic bound on 1e-3");
}

}  // namespace

int main() {
    std::printf("%s\n\n", suite_header().c_str());
    criterion_equality_case();
    criterion_ck_search();
    criterion_mgl();
    criterion_main_theorem();
    criterion_smgl();
    criterion_lp_chain();
    criterion_identity_battery();
    criterion_sobolev_sdpi();
    criterion_phi();
    std::printf("\n%s\n", failures == 0 ? "acceptance: ALL PASS"
                                        : "acceptance: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}

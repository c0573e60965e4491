#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "noisecube/checks.hpp"
#include "noisecube/lp.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/symmetric.hpp"

using namespace noisecube;

TEST_CASE("variable counts") {
    // sum_s C(k,s) * s * 2^s
    BoundaryData b1(1);
    b1.y(1, 0) = 1.0;
    CHECK(build_lp(b1, 0.4).vars.size() == 2);

    BoundaryData b2(2);
    for (mask_t s = 1; s < 4u; ++s) {
        for (int i = 0; i < 2; ++i) {
            if ((s >> i) & 1u) b2.y(s, i) = 0.5;
        }
    }
    CHECK(build_lp(b2, 0.4).vars.size() == 12);

    BoundaryData b3(3);
    CHECK(build_lp(b3, 0.4).vars.size() == 54);
    CHECK_THROWS_AS(build_lp(BoundaryData(6), 0.4), std::invalid_argument);
}

TEST_CASE("one-dimensional program solved by hand") {
    // single ground element: optimum is lambda * y_1
    BoundaryData b(1);
    b.y(1, 0) = 1.0;
    const LpSolution sol = solve_lp(build_lp(b, 0.25));
    CHECK(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(sol.max_violation <= 1e-9);

    b.y(1, 0) = 0.6;
    const LpSolution sol2 = solve_lp(build_lp(b, 0.8));
    CHECK(sol2.objective == doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("zero boundary gives zero optimum") {
    for (int k = 1; k <= 3; ++k) {
        const LpSolution sol = solve_lp(build_lp(BoundaryData(k), 0.5));
        CHECK(sol.status == LpStatus::kOptimal);
        CHECK(std::fabs(sol.objective) <= 1e-12);
    }
}

TEST_CASE("inconsistent path sums are infeasible") {
    BoundaryData b(2);
    b.y(0b01, 0) = 0.3;
    b.y(0b10, 1) = 0.3;
    b.y(0b11, 0) = 0.5;
    b.y(0b11, 1) = 0.9;  // 0.3 + 0.9 != 0.3 + 0.5
    const LpSolution sol = solve_lp(build_lp(b, 0.5));
    CHECK(sol.status == LpStatus::kInfeasible);
}

TEST_CASE("solver determinism") {
    Rng rng(7);
    std::vector<double> prof = {rng.uniform01(), rng.uniform01(),
                                rng.uniform01()};
    const LpProblem p = build_lp(symmetric_boundary(prof), 0.37);
    const LpSolution a = solve_lp(p);
    const LpSolution b = solve_lp(p);
    CHECK(a.objective == b.objective);
    CHECK(a.assignment == b.assignment);
}

TEST_CASE("symmetric boundary data solves to the closed-form value") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 2 + trial % 3;
        const double lambda = 0.05 + 0.9 * rng.uniform01();
        std::vector<double> prof(k);
        for (auto& v : prof) v = rng.uniform01();
        const DominanceReport rep =
            check_symmetric_dominance(symmetric_boundary(prof), lambda);
        CHECK(rep.status == LpStatus::kOptimal);
        CHECK(rep.pass);
        CHECK(rep.margin >= -1e-7);
        // the symmetric solution is itself feasible, so here the bound is tight
        CHECK(std::fabs(rep.lp_optimum - rep.symmetric_value) <= 1e-7);
    }
}

TEST_CASE("function-derived boundary: chain of dominances") {
    for (int trial = 0; trial < 12; ++trial) {
        const CubeFunction f = random_nonneg_function(5, 500 + trial);
        Rng rng(trial);
        const int k = 2 + trial % 2;
        const NoiseParam noise(0.05 + 0.4 * rng.uniform01());
        const mask_t a = k == 2 ? 0b00101u : 0b01101u;
        const int m = 1;
        const BoundaryData b = y_boundary(f, a, m);
        const DominanceReport rep = check_symmetric_dominance(b, noise.lambda);
        CHECK(rep.status == LpStatus::kOptimal);
        CHECK(rep.pass);
        const double actual =
            mutual_info_sets(noise_apply_directions(f, noise, a), a, m);
        CHECK(actual <= rep.lp_optimum + 1e-7);
        // closed-form bound coincides with the symmetric value on this data
        CHECK(std::fabs(noisy_mi_upper_bound(f, a, m, noise) -
                        rep.symmetric_value) <= 1e-10);
    }
}

TEST_CASE("paper's feasible point from a function") {
    const NoiseParam noise(0.3);

    const CubeFunction prod = random_product_function(5, 71);
    const FeasibleSolutionReport zero =
        feasible_from_function(prod, 0b00011, 4, noise);
    CHECK(zero.ok);
    for (double v : zero.assignment) CHECK(std::fabs(v) <= 1e-9);

    // k = 1: the only nontrivial variable is the contracted information
    const CubeFunction f = random_nonneg_function(5, 73);
    const FeasibleSolutionReport one =
        feasible_from_function(f, 0b00100, 0, noise);
    CHECK(one.ok);
    CHECK(one.objective ==
          doctest::Approx(mutual_info_sets(
                              noise_apply_directions(f, noise, 0b00100),
                              0b00100, 0))
              .epsilon(1e-10));

    // k = 3: feasibility, objective identity, and LP dominance
    const FeasibleSolutionReport three =
        feasible_from_function(f, 0b11001, 1, noise);
    CHECK(three.ok);
    CHECK(three.max_constraint_residual <= 1e-9);
    CHECK(three.max_fold_residual <= 1e-9);
    CHECK(std::fabs(three.objective - three.direct_mi) <= 1e-9);
    const LpSolution sol =
        solve_lp(build_lp(y_boundary(f, 0b11001, 1), noise.lambda));
    CHECK(three.objective <= sol.objective + 1e-7);
}

TEST_CASE("text export") {
    BoundaryData b(2);
    for (mask_t s = 1; s < 4u; ++s) {
        for (int i = 0; i < 2; ++i) {
            if ((s >> i) & 1u) b.y(s, i) = 0.25;
        }
    }
    const LpProblem p = build_lp(b, 0.5);
    const std::string text = export_lp_text(p);
    CHECK(text.find("maximize:") != std::string::npos);
    CHECK(text.find("x[S={1},i=1,R={}]") != std::string::npos);
    CHECK(text.find("<=") != std::string::npos);
    // one name line per variable
    std::size_t names = 0, pos = 0;
    while ((pos = text.find("\nvar v", pos)) != std::string::npos) {
        ++names;
        ++pos;
    }
    CHECK(names == p.vars.size());
}

TEST_CASE("k = 5 solving needs the override") {
    BoundaryData b(5);
    const LpProblem p = build_lp(b, 0.4);
    CHECK_THROWS_AS(solve_lp(p), std::invalid_argument);
    const LpSolution sol = solve_lp(p, true);
    CHECK(sol.status == LpStatus::kOptimal);
    CHECK(std::fabs(sol.objective) <= 1e-10);
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <numeric>

#include "noisecube/checks.hpp"
#include "noisecube/entropy.hpp"
#include "noisecube/info.hpp"
#include "oracles.hpp"

using namespace noisecube;

TEST_CASE("shannon entropy") {
    CHECK(shannon_entropy(CubeFunction::constant(4, 1.0)) ==
          doctest::Approx(4.0).epsilon(1e-14));
    // density 2 * g_k is uniform on a half-cube
    CubeFunction f = CubeFunction::dictator(5, 2);
    f *= 2.0;
    CHECK(shannon_entropy(f) == doctest::Approx(4.0).epsilon(1e-13));

    const CubeFunction g = random_nonneg_function(5, 11);
    CHECK(shannon_entropy(g) ==
          doctest::Approx(oracles::shannon_direct(g)).epsilon(1e-12));

    CHECK_THROWS_AS(shannon_entropy(CubeFunction::constant(3, 0.7)),
                    std::domain_error);
}

TEST_CASE("mutual information of sets") {
    // independent coordinates carry no information
    const CubeFunction prod = random_product_function(5, 21);
    CHECK(std::fabs(mutual_info_sets(prod, 0b00110, 0)) <= 1e-10);

    // perfectly correlated bits: f = 2 * 1{x_0 = x_1}
    CubeFunction corr(2, {2.0, 0.0, 0.0, 2.0});
    CHECK(mutual_info_sets(corr, 0b01, 1) ==
          doctest::Approx(1.0).epsilon(1e-13));

    // random function against the joint-distribution oracle
    const CubeFunction f = random_nonneg_function(5, 23);
    for (mask_t a : {0b00011u, 0b10100u, 0b01110u}) {
        const int m = 0b01000 & ~a ? 3 : 0;
        if ((a >> m) & 1u) continue;
        CHECK(mutual_info_sets(f, a, m) ==
              doctest::Approx(oracles::mutual_info_direct(f, a, m))
                  .epsilon(1e-10));
    }
    CHECK_THROWS_AS(mutual_info_sets(f, 0b00011, 1), std::invalid_argument);
}

TEST_CASE("z quantity") {
    const CubeFunction prod = random_product_function(5, 29);
    CHECK(std::fabs(z_quantity(prod, 0b10000, 0, 2)) <= 1e-10);

    const CubeFunction f = random_nonneg_function(5, 31);
    // S = {} collapses to plain mutual information
    CHECK(z_quantity(f, 0, 1, 3) ==
          doctest::Approx(mutual_info_sets(f, 0b0010, 3)).epsilon(1e-13));
    // exact symmetry
    CHECK(z_quantity(f, 0b10000, 0, 2) == z_quantity(f, 0b10000, 2, 0));
    CHECK_THROWS_AS(z_quantity(f, 0b00001, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(z_quantity(f, 0, 2, 2), std::invalid_argument);
}

TEST_CASE("t profile") {
    const CubeFunction prod = random_product_function(4, 37);
    const TProfile tp = t_profile(prod);
    CHECK_FALSE(tp.sampled);
    for (double t : tp.t) CHECK(std::fabs(t) <= 1e-9);

    const CubeFunction f2 = random_nonneg_function(2, 41);
    const TProfile tp2 = t_profile(f2);
    CHECK(tp2.t.size() == 1);
    CHECK(tp2.t[0] == doctest::Approx(z_quantity(f2, 0, 0, 1)).epsilon(1e-13));

    CHECK_THROWS_AS(t_profile(CubeFunction::constant(1, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("t profile satisfies the cumulative identity at every order") {
    const CubeFunction f = random_nonneg_function(6, 43);
    const CheckReport r = check_lemma43(f);
    CHECK(r.pass);
    CHECK(r.margin <= 1e-9);
}

TEST_CASE("boundary data") {
    const CubeFunction prod = random_product_function(5, 47);
    const BoundaryData bp = y_boundary(prod, 0b01101, 1);
    for (mask_t s = 1; s < (mask_t{1} << bp.k); ++s) {
        for (int i = 0; i < bp.k; ++i) {
            if ((s >> i) & 1u) CHECK(std::fabs(bp.y(s, i)) <= 1e-9);
        }
    }

    const CubeFunction f = random_nonneg_function(5, 53);
    // singleton ground set collapses to plain mutual information
    const BoundaryData b1 = y_boundary(f, 0b00100, 0);
    CHECK(b1.y(1, 0) ==
          doctest::Approx(mutual_info_sets(f, 0b00100, 0)).epsilon(1e-12));

    // all orderings telescope to I_f(A, m)
    const mask_t a = 0b01011;
    const int m = 4;
    const BoundaryData b = y_boundary(f, a, m);
    const double want = mutual_info_sets(f, a, m);
    int order[3] = {0, 1, 2};
    do {
        double total = 0.0;
        mask_t prefix = 0;
        for (int step = 0; step < 3; ++step) {
            prefix |= mask_t{1} << order[step];
            total += b.y(prefix, order[step]);
        }
        CHECK(total == doctest::Approx(want).epsilon(1e-10));
    } while (std::next_permutation(order, order + 3));

    // nonnegativity
    for (mask_t s = 1; s < (mask_t{1} << b.k); ++s) {
        for (int i = 0; i < b.k; ++i) {
            if ((s >> i) & 1u) CHECK(b.y(s, i) >= -1e-10);
        }
    }
    CHECK_THROWS_AS(y_boundary(f, 0b00110, 1), std::invalid_argument);
}

TEST_CASE("averaged boundary profile") {
    BoundaryData zeros(3);
    for (double v : y_avg_profile(zeros)) CHECK(v == 0.0);

    BoundaryData one(1);
    one.y(1, 0) = 0.37;
    CHECK(y_avg_profile(one)[0] == 0.37);

    // symmetric data reproduces its per-size constants exactly
    BoundaryData sym(4);
    const double level[4] = {0.1, 0.5, 0.25, 0.8};
    for (mask_t s = 1; s < 16u; ++s) {
        for (int i = 0; i < 4; ++i) {
            if ((s >> i) & 1u) sym.y(s, i) = level[popcount(s) - 1];
        }
    }
    const auto prof = y_avg_profile(sym);
    for (int sz = 1; sz <= 4; ++sz) {
        CHECK(prof[sz - 1] == doctest::Approx(level[sz - 1]).epsilon(1e-15));
    }
}

TEST_CASE("boolean mutual information") {
    for (double eps : {0.1, 0.25, 0.4}) {
        const NoiseParam noise(eps);
        CHECK(bool_mutual_information(CubeFunction::dictator(4, 1), noise) ==
              doctest::Approx(1.0 - binary_entropy(eps)).epsilon(1e-12));
        CHECK(bool_mutual_information(CubeFunction::constant(3, 1.0), noise) ==
              0.0);
        CHECK(bool_mutual_information(CubeFunction::constant(3, 0.0), noise) ==
              0.0);
    }
    const CubeFunction f = random_boolean_function(4, 13);
    for (double eps : {0.1, 0.3, 0.45}) {
        CHECK(bool_mutual_information(f, NoiseParam(eps)) ==
              doctest::Approx(oracles::bool_mi_direct(f, eps)).epsilon(1e-10));
    }
    CHECK_THROWS_AS(
        bool_mutual_information(CubeFunction::constant(2, 0.5), NoiseParam(0.1)),
        std::domain_error);
}

TEST_CASE("conjectured bound values") {
    CHECK(ck_bound(NoiseParam(0.5)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ck_bound(NoiseParam(0.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ck_bound(NoiseParam(0.25)) ==
          doctest::Approx(1.0 - binary_entropy(0.25)).epsilon(1e-15));
}

TEST_CASE("distribution bridge") {
    const CubeFunction f = random_nonneg_function(5, 57);
    Rng rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const mask_t a = static_cast<mask_t>(rng.next()) & full_mask(5);
        const CheckReport r = check_eq4_bridge(f, a);
        CHECK(r.pass);
        CHECK(r.margin <= 1e-10);
    }
}

TEST_CASE("subset-average entropies are monotone per Han") {
    for (int trial = 0; trial < 10; ++trial) {
        const CubeFunction f = random_nonneg_function(4 + trial % 3, 61 + trial);
        const auto a = han_profile(f);
        for (std::size_t t = 0; t + 1 < a.size(); ++t) {
            CHECK(a[t + 1] <= a[t] + 1e-10);
        }
    }
}

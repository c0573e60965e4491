#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "noisecube/checks.hpp"
#include "noisecube/entropy.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/spectral.hpp"
#include "oracles.hpp"

using namespace noisecube;

TEST_CASE("dictator spectrum") {
    const Spectrum s = wht_forward(CubeFunction::dictator(4, 1));
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        const double want = (m == 0 || m == 0b0010) ? 0.5 : 0.0;
        CHECK(s.coeffs[m] == doctest::Approx(want).epsilon(1e-15));
    }
}

TEST_CASE("constant spectrum") {
    const Spectrum s = wht_forward(CubeFunction::constant(3, 1.7));
    CHECK(s.coeffs[0] == doctest::Approx(1.7).epsilon(1e-15));
    for (std::size_t m = 1; m < s.coeffs.size(); ++m) {
        CHECK(std::fabs(s.coeffs[m]) <= 1e-15);
    }
}

TEST_CASE("transform round trips") {
    const CubeFunction f = random_nonneg_function(6, 42);
    const CubeFunction back = wht_inverse(wht_forward(f));
    for (std::size_t x = 0; x < f.size(); ++x) {
        CHECK(std::fabs(back[x] - f[x]) <= 1e-12);
    }

    Rng rng(7);
    Spectrum s{5, {}};
    s.coeffs.resize(32);
    for (auto& c : s.coeffs) c = 2.0 * rng.uniform01() - 1.0;
    const Spectrum round = wht_forward(wht_inverse(s));
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        CHECK(std::fabs(round.coeffs[m] - s.coeffs[m]) <= 1e-12);
    }
}

TEST_CASE("inverse of a dictator spectrum") {
    Spectrum s{3, std::vector<double>(8, 0.0)};
    s.coeffs[0] = 0.5;
    s.coeffs[0b100] = 0.5;
    const CubeFunction f = wht_inverse(s);
    const CubeFunction want = CubeFunction::dictator(3, 2);
    for (std::size_t x = 0; x < f.size(); ++x) {
        CHECK(f[x] == doctest::Approx(want[x]).epsilon(1e-14));
    }

    const CubeFunction zero = wht_inverse(Spectrum{3, std::vector<double>(8)});
    for (std::size_t x = 0; x < zero.size(); ++x) CHECK(zero[x] == 0.0);
}

TEST_CASE("noise multiplier") {
    const CubeFunction f = random_nonneg_function(5, 45);
    Spectrum s = wht_forward(f);

    Spectrum mixed = noise_multiplier(s, NoiseParam(0.5));
    CHECK(mixed.coeffs[0] == doctest::Approx(f.mean()).epsilon(1e-13));
    for (std::size_t m = 1; m < mixed.coeffs.size(); ++m) {
        CHECK(mixed.coeffs[m] == 0.0);
    }

    Spectrum same = noise_multiplier(s, NoiseParam(0.0));
    for (std::size_t m = 0; m < same.coeffs.size(); ++m) {
        CHECK(same.coeffs[m] == s.coeffs[m]);
    }

    // dictator: the singleton coefficient becomes (1-2eps)/2; oracle route
    // applies pointwise noise first and transforms afterwards
    for (double eps : {0.1, 0.35}) {
        const CubeFunction g = CubeFunction::dictator(4, 3);
        const Spectrum via_mult =
            noise_multiplier(wht_forward(g), NoiseParam(eps));
        const Spectrum via_direct =
            wht_forward(oracles::noise_direct(g, eps));
        for (std::size_t m = 0; m < via_mult.coeffs.size(); ++m) {
            CHECK(via_mult.coeffs[m] ==
                  doctest::Approx(via_direct.coeffs[m]).epsilon(1e-12));
        }
        CHECK(via_mult.coeffs[0b1000] ==
              doctest::Approx(0.5 * (1.0 - 2.0 * eps)).epsilon(1e-13));
    }
}

TEST_CASE("parseval") {
    for (int trial = 0; trial < 20; ++trial) {
        const CubeFunction f = random_nonneg_function(3 + trial % 5, trial);
        const Spectrum s = wht_forward(f);
        double sum = 0.0;
        for (double c : s.coeffs) sum += c * c;
        CHECK(std::fabs(sum - f.mean_square()) <=
              1e-10 * (1.0 + f.mean_square()));
        CHECK(s.coeffs[0] == doctest::Approx(f.mean()).epsilon(1e-13));
    }
}

TEST_CASE("dirichlet form") {
    CHECK(dirichlet_form(CubeFunction::constant(4, 3.0)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    // W_{{1}} on two variables: 4 sum |S| ghat^2 = 4
    CHECK(dirichlet_form(CubeFunction::walsh(2, 0b01)) ==
          doctest::Approx(4.0).epsilon(1e-13));
    // random function: compare against the Fourier identity directly
    CubeFunction g(6);
    Rng rng(3);
    for (std::size_t x = 0; x < g.size(); ++x) {
        g[x] = 2.0 * rng.uniform01() - 1.0;
    }
    const Spectrum s = wht_forward(g);
    double fourier = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        fourier += popcount(static_cast<mask_t>(m)) * s.coeffs[m] * s.coeffs[m];
    }
    fourier *= 4.0;
    CHECK(std::fabs(dirichlet_form(g) - fourier) <= 1e-10 * (1.0 + fourier));
}

TEST_CASE("log-Sobolev gap") {
    CHECK(log_sobolev_gap(CubeFunction::constant(3, 2.0)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    // dictator: E(g,g) = 1 through the Fourier identity, Ent = E g = 1/2
    const double gap = log_sobolev_gap(CubeFunction::dictator(4, 0));
    CHECK(gap == doctest::Approx(1.0 - 0.5 * std::log(2.0)).epsilon(1e-12));
    CHECK(gap >= 0.0);
    for (int trial = 0; trial < 200; ++trial) {
        CubeFunction g(2 + trial % 7);
        Rng rng(900 + trial);
        for (std::size_t x = 0; x < g.size(); ++x) g[x] = rng.uniform01();
        CHECK(log_sobolev_gap(g) >= -1e-10);
    }
    CubeFunction bad(2, {1.0, -1.0, 0.0, 0.0});
    CHECK_THROWS_AS(log_sobolev_gap(bad), std::domain_error);
}

TEST_CASE("even odd split") {
    // even input comes back unchanged with zero odd part
    CubeFunction even_in(3);
    Rng rng(8);
    for (std::size_t x = 0; x < 4; ++x) {
        const double v = rng.uniform01();
        even_in[x] = v;
        even_in[x ^ 7u] = v;
    }
    auto [e0, o0] = even_odd_split(even_in);
    for (std::size_t x = 0; x < even_in.size(); ++x) {
        CHECK(e0[x] == doctest::Approx(even_in[x]).epsilon(1e-15));
        CHECK(std::fabs(o0[x]) <= 1e-15);
    }

    auto [e1, o1] = even_odd_split(CubeFunction::walsh(3, 0b001));
    for (std::size_t x = 0; x < e1.size(); ++x) {
        CHECK(std::fabs(e1[x]) <= 1e-15);
    }

    // spectral support: even part on even-|S| masks only
    CubeFunction g(5);
    Rng rng2(9);
    for (std::size_t x = 0; x < g.size(); ++x) g[x] = rng2.uniform01();
    auto [ge, go] = even_odd_split(g);
    const Spectrum se = wht_forward(ge), so = wht_forward(go);
    for (std::size_t m = 0; m < se.coeffs.size(); ++m) {
        if (popcount(static_cast<mask_t>(m)) % 2 == 1) {
            CHECK(std::fabs(se.coeffs[m]) <= 1e-12);
        } else {
            CHECK(std::fabs(so.coeffs[m]) <= 1e-12);
        }
    }
    // |g1| <= g0 pointwise for nonnegative g
    for (std::size_t x = 0; x < g.size(); ++x) {
        CHECK(std::fabs(go[x]) <= ge[x] + 1e-15);
    }
}

TEST_CASE("spectral tail") {
    const CubeFunction f = random_nonneg_function(5, 77);
    CHECK(spectral_tail(f, 0) ==
          doctest::Approx(f.mean_square()).epsilon(1e-12));
    CHECK(spectral_tail(CubeFunction::dictator(4, 1), 2) ==
          doctest::Approx(0.0).epsilon(1e-14));
    const double variance = f.mean_square() - f.mean() * f.mean();
    CHECK(std::fabs(spectral_tail(f, 1) - variance) <= 1e-10);
    CHECK_THROWS_AS(spectral_tail(f, 6), std::invalid_argument);
}

TEST_CASE("quartic upper bound on 1 - H2((1-x)/2)") {
    const double c2 = 1.0 / (2.0 * std::log(2.0));
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        const double lhs = 1.0 - binary_entropy(0.5 * (1.0 - x));
        const double rhs = c2 * x * x + (1.0 - c2) * x * x * x * x;
        CHECK(lhs <= rhs + 1e-12);
    }
}

TEST_CASE("even-odd entropy identity") {
    for (int trial = 0; trial < 10; ++trial) {
        const CubeFunction g = random_nonneg_function(3 + trial % 3, 300 + trial);
        const CheckReport r = check_lemma63(g);
        CHECK(r.pass);
        CHECK(r.margin <= 1e-10);
    }
}

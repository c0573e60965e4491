#include "noisecube/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "noisecube/entropy.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/spectral.hpp"

namespace noisecube {

namespace {
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 start)
        .count();
}

void require_normalized(const CubeFunction& f, const char* who) {
    if (std::fabs(f.mean() - 1.0) > 1e-12) {
        throw std::domain_error(std::string(who) + ": requires E f = 1");
    }
}
}  // namespace

CheckReport make_inequality_report(std::string name, double lhs, double rhs,
                                   double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.tol = tol;
    r.identity = false;
    r.pass = r.margin >= -tol;
    return r;
}

CheckReport make_identity_report(std::string name, double lhs, double rhs,
                                 double tol) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = std::fabs(lhs - rhs);
    r.tol = tol;
    r.identity = true;
    r.pass = r.margin <= tol;
    return r;
}

CubeFunction random_nonneg_function(int n, std::uint64_t seed) {
    Rng rng(seed);
    CubeFunction f(n);
    double total = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) {
        f[x] = rng.uniform01();
        total += f[x];
    }
    const double scale = static_cast<double>(f.size()) / total;
    f *= scale;
    return f;
}

CubeFunction random_boolean_function(int n, std::uint64_t seed) {
    Rng rng(seed);
    CubeFunction f(n);
    for (std::size_t x = 0; x < f.size(); ++x) {
        f[x] = static_cast<double>(rng.fair_bit());
    }
    return f;
}

CubeFunction random_product_function(int n, std::uint64_t seed) {
    Rng rng(seed);
    double p[kMaxDimension];
    for (int i = 0; i < n; ++i) p[i] = rng.uniform01();
    CubeFunction f(n);
    for (std::size_t x = 0; x < f.size(); ++x) {
        double v = 1.0;
        for (int i = 0; i < n; ++i) {
            v *= ((x >> i) & 1u) ? 2.0 * p[i] : 2.0 * (1.0 - p[i]);
        }
        f[x] = v;
    }
    return f;
}

// ----- subset expectations ------------------------------------------------

namespace {
// Conditional entropies of a fixed function, precomputed when the dimension
// admits exact enumeration and memoized lazily otherwise.
class CondEntCache {
   public:
    CondEntCache(const CubeFunction& f, bool exact)
        : f_(f), exact_(exact) {
        if (exact_) {
            table_ = all_conditional_entropies(f);
        } else {
            table_.assign(std::size_t{1} << f.n(),
                          std::numeric_limits<double>::quiet_NaN());
        }
    }
    double operator()(mask_t t) {
        if (exact_) return table_[t];
        double& slot = table_[t];
        if (std::isnan(slot)) slot = conditional_entropy(f_, t);
        return slot;
    }
    bool exact() const { return exact_; }

   private:
    const CubeFunction& f_;
    bool exact_;
    std::vector<double> table_;
};

// E over T ~ product-Bernoulli(lambda) of g(T); exact when n is small.
double subset_expectation(int n, double lambda,
                          const std::function<double(mask_t)>& g,
                          const SubsetAvgOptions& opts, bool& sampled,
                          std::uint64_t seed_tag) {
    if (n <= opts.exact_max_n) {
        sampled = false;
        std::vector<double> pw(n + 1);
        for (int j = 0; j <= n; ++j) {
            pw[j] = std::pow(lambda, j) * std::pow(1.0 - lambda, n - j);
        }
        double total = 0.0;
        for (mask_t t = 0; t < (mask_t{1} << n); ++t) {
            total += pw[popcount(t)] * g(t);
        }
        return total;
    }
    sampled = true;
    Rng rng(mix_seed(opts.seed, seed_tag));
    double total = 0.0;
    for (int it = 0; it < opts.samples; ++it) {
        mask_t t = 0;
        for (int j = 0; j < n; ++j) {
            if (rng.uniform01() < lambda) t |= mask_t{1} << j;
        }
        total += g(t);
    }
    return total / opts.samples;
}
}  // namespace

// ----- theorem checkers ----------------------------------------------------

CheckReport check_mgl(const CubeFunction& f, const NoiseParam& noise) {
    const auto start = Clock::now();
    const double ef = f.mean();
    const double lhs = entropy_functional(noise_apply(f, noise));
    const double n_ef = f.n() * ef;
    const double rhs = n_ef * gerber_phi(entropy_functional(f) / n_ef, noise);
    CheckReport r = make_inequality_report("mgl", lhs, rhs, 1e-9);
    r.n = f.n();
    r.eps = noise.eps;
    r.runtime_ms = ms_since(start);
    return r;
}

CheckReport check_theorem_main(const CubeFunction& f, const NoiseParam& noise,
                               const SubsetAvgOptions& opts) {
    const auto start = Clock::now();
    require_normalized(f, "check_theorem_main");
    const double lhs = entropy_functional(noise_apply(f, noise));

    CondEntCache ents(f, f.n() <= opts.exact_max_n);
    double singles[kMaxDimension];
    double phi_sum = 0.0;
    for (int i = 0; i < f.n(); ++i) {
        singles[i] = ents(mask_t{1} << i);
        phi_sum += gerber_phi(singles[i], noise);
    }
    bool sampled = false;
    const double avg = subset_expectation(
        f.n(), noise.lambda,
        [&](mask_t t) {
            double b = ents(t);
            for (int i = 0; i < f.n(); ++i) {
                if ((t >> i) & 1u) b -= singles[i];
            }
            return b;
        },
        opts, sampled, 0x7a11);
    CheckReport r =
        make_inequality_report("thm-main", lhs, avg + phi_sum, 1e-9);
    r.mode = sampled ? "sampled" : "exact-enumeration";
    r.n = f.n();
    r.eps = noise.eps;
    r.runtime_ms = ms_since(start);
    return r;
}

CheckReport check_corollary_streamline(const CubeFunction& f,
                                       const NoiseParam& noise,
                                       const SubsetAvgOptions& opts) {
    const auto start = Clock::now();
    require_normalized(f, "check_corollary_streamline");
    const double lhs = entropy_functional(noise_apply(f, noise));
    CondEntCache ents(f, f.n() <= opts.exact_max_n);
    bool sampled = false;
    const double rhs = subset_expectation(
        f.n(), noise.lambda, [&](mask_t t) { return ents(t); }, opts, sampled,
        0x57e4);
    CheckReport r = make_inequality_report("cor-streamline", lhs, rhs, 1e-9);
    r.mode = sampled ? "sampled" : "exact-enumeration";
    r.n = f.n();
    r.eps = noise.eps;
    r.runtime_ms = ms_since(start);
    return r;
}

std::vector<CheckReport> check_corollary_info_app(const CubeFunction& f,
                                                  const NoiseParam& noise,
                                                  const SubsetAvgOptions& opts) {
    const auto start = Clock::now();
    if (!f.is_boolean()) {
        throw std::domain_error("check_corollary_info_app: boolean f required");
    }
    const double lhs = bool_mutual_information(f, noise);
    const double ef = f.mean();
    std::vector<CheckReport> out;
    if (ef == 0.0 || ef == 1.0) {
        out.push_back(make_inequality_report("cor-info-app", 0.0, 0.0, 1e-9));
        out.push_back(
            make_inequality_report("cor-info-app-weak", 0.0, 0.0, 1e-9));
    } else {
        const CubeFunction g = f.complement_indicator();
        CondEntCache ef_ents(f, f.n() <= opts.exact_max_n);
        CondEntCache eg_ents(g, f.n() <= opts.exact_max_n);
        auto info_given = [&](mask_t t) { return ef_ents(t) + eg_ents(t); };
        bool sampled = false;
        const double rhs = subset_expectation(f.n(), noise.lambda, info_given,
                                              opts, sampled, 0x1f0a);
        // the weaker route subsamples coordinates with probability 1-2eps
        bool sampled2 = false;
        const double rhs_weak = subset_expectation(
            f.n(), noise.rho, info_given, opts, sampled2, 0x1f0b);
        out.push_back(make_inequality_report("cor-info-app", lhs, rhs, 1e-9));
        out.back().mode = sampled ? "sampled" : "exact-enumeration";
        out.push_back(
            make_inequality_report("cor-info-app-weak", lhs, rhs_weak, 1e-9));
        out.back().mode = sampled2 ? "sampled" : "exact-enumeration";
    }
    for (auto& r : out) {
        r.n = f.n();
        r.eps = noise.eps;
        r.runtime_ms = ms_since(start);
    }
    return out;
}

std::vector<CheckReport> check_smgl(const CubeFunction& f,
                                    const NoiseParam& noise,
                                    const SubsetAvgOptions& opts) {
    const auto start = Clock::now();
    require_normalized(f, "check_smgl");
    std::vector<CheckReport> out;
    if (noise.lambda == 0.0) {
        CheckReport r = make_inequality_report("smgl", 0.0, 0.0, 1e-9);
        r.mode = "skipped(lambda=0)";
        r.n = f.n();
        r.eps = noise.eps;
        out.push_back(r);
        return out;
    }
    const int n = f.n();
    const double t = noise.lambda * n;
    const CubeFunction noisy = noise_apply(f, noise);
    const double lhs = entropy_functional(noisy);
    CondEntCache ents(f, n <= opts.exact_max_n);
    bool sampled = false;
    const double avg = subset_expectation(
        n, noise.lambda, [&](mask_t tt) { return ents(tt); }, opts, sampled,
        0x3417);
    const double rhs = n * gerber_phi(avg / t, noise);
    CheckReport entropy_form = make_inequality_report("smgl", lhs, rhs, 1e-9);
    entropy_form.mode = sampled ? "sampled" : "exact-enumeration";
    entropy_form.n = n;
    entropy_form.eps = noise.eps;

    // Information form through the distribution bridge: H(X+Z) >= n H2(eps +
    // (1-2eps) H2^{-1}(E_T H(X_T)/t)), with H(X_T) = |T| - Ent(f|T).
    const double h_noisy = shannon_entropy(noisy);
    const double avg_h = t - avg;  // E_T |T| = lambda n = t
    const double rhs_info =
        n * binary_entropy(noise.eps +
                           noise.rho * binary_entropy_inv(avg_h / t));
    CheckReport info_form =
        make_inequality_report("smgl-eq7", rhs_info, h_noisy, 1e-9);
    info_form.mode = entropy_form.mode;
    info_form.n = n;
    info_form.eps = noise.eps;
    // the two restatements carry identical slack
    CheckReport agreement = make_identity_report(
        "smgl-eq7-agreement", rhs - lhs, h_noisy - rhs_info, 1e-10);
    agreement.mode = entropy_form.mode;
    agreement.n = n;
    agreement.eps = noise.eps;
    entropy_form.runtime_ms = info_form.runtime_ms = agreement.runtime_ms =
        ms_since(start);
    out.push_back(entropy_form);
    out.push_back(info_form);
    out.push_back(agreement);
    return out;
}

CheckReport check_lemma_noisy_ts(const CubeFunction& f,
                                 const NoiseParam& noise,
                                 const SubsetAvgOptions& opts) {
    const auto start = Clock::now();
    require_normalized(f, "check_lemma_noisy_ts");
    const double lhs = entropy_functional(noise_apply(f, noise));
    double phi_sum = 0.0;
    for (int i = 0; i < f.n(); ++i) {
        phi_sum += gerber_phi(conditional_entropy(f, mask_t{1} << i), noise);
    }
    const std::vector<double> w = w_weights(f.n(), noise.lambda);
    const TProfile tp = t_profile(f, opts);
    double rhs = phi_sum;
    for (int s = 1; s <= f.n() - 1; ++s) rhs += w[s - 1] * tp.t[s - 1];
    CheckReport r = make_inequality_report("lemma-noisy-ts", lhs, rhs, 1e-9);
    r.mode = tp.sampled ? "sampled" : "exact-enumeration";
    r.n = f.n();
    r.eps = noise.eps;
    r.runtime_ms = ms_since(start);
    return r;
}

CheckReport check_lemma_h_entr(const CubeFunction& f,
                               const NoiseParam& noise) {
    const auto start = Clock::now();
    if (!f.is_boolean()) {
        throw std::domain_error("check_lemma_h_entr: boolean f required");
    }
    const double lhs = bool_mutual_information(f, noise);

    // direct joint enumeration of (f(X), Y) over all 4^n pairs
    const int n = f.n();
    std::vector<double> pd(n + 1), qd(n + 1);
    for (int d = 0; d <= n; ++d) {
        pd[d] = std::pow(noise.eps, d) * std::pow(1.0 - noise.eps, n - d);
    }
    const double inv = 1.0 / static_cast<double>(f.size());
    std::vector<double> joint1(f.size(), 0.0), joint0(f.size(), 0.0);
    for (std::size_t x = 0; x < f.size(); ++x) {
        const bool b = f[x] != 0.0;
        for (std::size_t y = 0; y < f.size(); ++y) {
            const int d = popcount(static_cast<mask_t>(x ^ y));
            (b ? joint1 : joint0)[y] += inv * pd[d];
        }
    }
    double p1 = 0.0;
    for (double v : joint1) p1 += v;
    const double p0 = 1.0 - p1;
    double direct = 0.0;
    for (std::size_t y = 0; y < f.size(); ++y) {
        const double qy = inv;  // marginal of Y is uniform
        if (joint1[y] > 0.0 && p1 > 0.0) {
            direct += joint1[y] * std::log2(joint1[y] / (p1 * qy));
        }
        if (joint0[y] > 0.0 && p0 > 0.0) {
            direct += joint0[y] * std::log2(joint0[y] / (p0 * qy));
        }
    }
    CheckReport r = make_identity_report("lemma-h-entr", lhs, direct, 1e-10);
    r.n = n;
    r.eps = noise.eps;
    r.runtime_ms = ms_since(start);
    return r;
}

// ----- identity battery -----------------------------------------------------

CheckReport check_lemma34_vs_recursion(int k, double lambda, double tamper) {
    double worst = 0.0;
    for (int s = 1; s <= k; ++s) {
        std::vector<double> unit(k, 0.0);
        unit[s - 1] = 1.0;
        const XTable x = x_table(SymmetricData(k, lambda, unit));
        for (int t = 1; t <= k; ++t) {
            for (int r = 0; r < t; ++r) {
                const double closed =
                    x_closed_form_unit(k, lambda, s, r, t) + tamper;
                const double table = r == 0 ? unit[t - 1] : x.at(r, t);
                worst = std::max(worst, std::fabs(closed - table));
            }
        }
    }
    return make_identity_report("battery/lemma-3.4", worst, 0.0, 1e-12);
}

CheckReport check_cor35_dual_forms(int k, double lambda, double tamper) {
    double worst = 0.0;
    for (int s = 1; s <= k; ++s) {
        double series = 0.0;
        for (int m = 0; m <= k - s; ++m) {
            series += binomial(s + m - 1, m) * std::pow(1.0 - lambda, m);
        }
        series = series * std::pow(lambda, s) + tamper;
        worst = std::max(worst, std::fabs(series - lambda_coeff(k, s, lambda)));
    }
    return make_identity_report("battery/cor-3.5", worst, 0.0, 1e-12);
}

CheckReport check_value_routes(const SymmetricData& data, double tamper) {
    const XTable x = x_table(data);
    double via_table = 0.0;
    for (int t = 0; t < data.k; ++t) {
        via_table += (t == 0 ? data.y[0] : x.at(t, t + 1));
    }
    via_table = via_table * data.lambda + tamper;
    double via_units = 0.0;
    for (int s = 1; s <= data.k; ++s) {
        via_units += data.y[s - 1] * unit_value(data.k, s, data.lambda);
    }
    return make_identity_report("battery/cor-3.3-vs-3.6", via_table, via_units,
                                1e-10);
}

CheckReport check_eq11_path_invariance(const SymmetricData& data,
                                       double tamper) {
    const int k = data.k;
    const XTable x = x_table(data);
    auto x_or_y = [&](int r, int s) {
        return r == 0 ? data.y[s - 1] : x.at(r, s);
    };
    double worst = 0.0;
    std::vector<int> tau(k);
    for (mask_t r_set = 0; r_set < (mask_t{1} << k); ++r_set) {
        const int r = popcount(r_set);
        double closed = tamper;
        for (int j = 1; j <= k - r; ++j) closed += data.y[j - 1];
        for (int t = 0; t < r; ++t) {
            closed += data.lambda * x_or_y(t, k - r + t + 1);
        }
        std::iota(tau.begin(), tau.end(), 0);
        do {
            double path = 0.0;
            mask_t prefix = 0;
            for (int step = 0; step < k; ++step) {
                prefix |= mask_t{1} << tau[step];
                const mask_t folded = r_set & prefix;
                const int rr = popcount(folded);
                const int ss = popcount(prefix);
                path += ((folded >> tau[step]) & 1u)
                            ? data.lambda * x_or_y(rr - 1, ss)
                            : x_or_y(rr, ss);
            }
            worst = std::max(worst, std::fabs(path - closed));
        } while (std::next_permutation(tau.begin(), tau.end()));
    }
    return make_identity_report("battery/eq-11-path", worst, 0.0, 1e-12);
}

CheckReport check_lemma37(const BoundaryData& boundary, double lambda,
                          double tamper) {
    const int k = boundary.k;
    const SymmetricData full(k, lambda, y_avg_profile(boundary));
    double worst = 0.0;
    for (int r = 1; r <= k; ++r) {
        // restricted problems on [k] \ {i}, averaged over i
        double avg = 0.0;
        for (int i = 0; i < k; ++i) {
            std::vector<double> prof(k - 1, 0.0);
            std::vector<long long> counts(k - 1, 0);
            for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
                if ((s >> i) & 1u) continue;
                const int sz = popcount(s);
                for (int j = 0; j < k; ++j) {
                    if ((s >> j) & 1u) {
                        prof[sz - 1] += boundary.y(s, j);
                        ++counts[sz - 1];
                    }
                }
            }
            for (int sz = 1; sz <= k - 1; ++sz) {
                prof[sz - 1] /= static_cast<double>(counts[sz - 1]);
            }
            avg += sym_mu(SymmetricData(k - 1, lambda, prof), k - 1, r - 1);
        }
        avg /= k;
        const double rhs = sym_mu(full, k - 1, r - 1) + tamper;
        worst = std::max(worst, std::fabs(avg - rhs));
    }
    return make_identity_report("battery/lemma-3.7", worst, 0.0, 1e-10);
}

CheckReport check_lemma38(const SymmetricData& data, double tamper) {
    double worst = 0.0;
    for (int r = 1; r <= data.k; ++r) {
        const double lhs = sym_mu(data, data.k, r);
        const double rhs = data.lambda * sym_mu(data, data.k, r - 1) +
                           (1.0 - data.lambda) *
                               sym_mu(data, data.k - 1, r - 1) +
                           tamper;
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return make_identity_report("battery/lemma-3.8", worst, 0.0, 1e-12);
}

CheckReport check_w_identity(int n, double lambda, double tamper) {
    std::vector<double> p(n + 1);
    for (int k = 0; k <= n; ++k) {
        p[k] = binomial(n, k) * std::pow(lambda, k) *
               std::pow(1.0 - lambda, n - k);
    }
    double worst = 0.0;
    for (int s = 1; s <= n - 1; ++s) {
        double cdf_sum = 0.0;
        for (int j = 0; j < s; ++j) {
            for (int t = 0; t <= j; ++t) cdf_sum += p[t];
        }
        const double direct = (lambda * n - s) + cdf_sum + tamper;
        double tails = 0.0;
        for (int k = s; k <= n - 1; ++k) tails += lambda_coeff(k, s, lambda);
        tails *= lambda;
        double excess = 0.0;
        for (int k = s + 1; k <= n; ++k) excess += (k - s) * p[k];
        worst = std::max(worst, std::fabs(direct - tails));
        worst = std::max(worst, std::fabs(direct - excess));
    }
    return make_identity_report("battery/w-triple", worst, 0.0, 1e-10);
}

CheckReport check_lemma43(const CubeFunction& f, double tamper) {
    const int n = f.n();
    const std::vector<double> by_size = avg_conditional_entropy_by_size(f);
    double avg_single = 0.0;
    for (int i = 0; i < n; ++i) {
        avg_single += conditional_entropy(f, mask_t{1} << i);
    }
    avg_single /= n;
    const TProfile tp = t_profile(f);
    double worst = 0.0;
    for (int u = 1; u <= n - 1; ++u) {
        const double lhs = by_size[u + 1] - (u + 1) * avg_single;
        double rhs = tamper;
        for (int s = 1; s <= u; ++s) rhs += (u - s + 1) * tp.t[s - 1];
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    CheckReport r = make_identity_report("battery/lemma-4.3", worst, 0.0, 1e-9);
    r.n = n;
    return r;
}

CheckReport check_eq4_bridge(const CubeFunction& f, mask_t a, double tamper) {
    const double ef = f.mean();
    const double lhs = conditional_entropy(f, a);
    // H({X_i}_{i in A}) from the induced marginal of X ~ f / sum f
    const mask_t af = a & full_mask(f.n());
    std::vector<double> marginal(std::size_t{1} << f.n(), 0.0);
    const double inv = 1.0 / (static_cast<double>(f.size()) * ef);
    for (std::size_t x = 0; x < f.size(); ++x) {
        marginal[x & af] += f[x] * inv;
    }
    double h = 0.0;
    for (double q : marginal) {
        if (q > 0.0) h -= q * std::log2(q);
    }
    const double rhs = ef * (popcount(af) - h) + tamper;
    CheckReport r = make_identity_report("battery/eq-4-bridge", lhs, rhs, 1e-10);
    r.n = f.n();
    return r;
}

CheckReport check_lemma63(const CubeFunction& g, double tamper) {
    require_normalized(g, "check_lemma63");
    const auto [even, odd] = even_odd_split(g);
    const double lhs = entropy_functional(g);
    double correction = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) {
        const double a = even[x];
        const double b = std::fabs(odd[x]);
        if (a <= 0.0) continue;  // zero atom contributes nothing
        correction += a * (1.0 - binary_entropy(0.5 * (1.0 - b / a)));
    }
    correction /= static_cast<double>(g.size());
    const double rhs = entropy_functional(even) + correction + tamper;
    CheckReport r =
        make_identity_report("battery/lemma-6.3", lhs, rhs, 1e-10);
    r.n = g.n();
    return r;
}

CheckReport check_dirichlet_dual(const CubeFunction& g, double tamper) {
    double pointwise = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) {
        for (int i = 0; i < g.n(); ++i) {
            const double d = g[x ^ (std::size_t{1} << i)] - g[x];
            pointwise += d * d;
        }
    }
    pointwise = pointwise / static_cast<double>(g.size()) + tamper;
    const Spectrum s = wht_forward(g);
    double fourier = 0.0;
    for (std::size_t m = 0; m < s.coeffs.size(); ++m) {
        fourier +=
            popcount(static_cast<mask_t>(m)) * s.coeffs[m] * s.coeffs[m];
    }
    fourier *= 4.0;
    CheckReport r = make_identity_report("battery/dirichlet-dual", pointwise,
                                         fourier, 1e-9);
    r.n = g.n();
    return r;
}

CheckReport check_lambda_tail(int k, double lambda, double tamper) {
    double worst = 0.0;
    for (int s = 1; s <= k; ++s) {
        double tail = tamper;
        for (int j = s; j <= k; ++j) {
            tail += binomial(k, j) * std::pow(lambda, j) *
                    std::pow(1.0 - lambda, k - j);
        }
        worst = std::max(worst, std::fabs(tail - lambda_coeff(k, s, lambda)));
    }
    return make_identity_report("battery/lambda-tail", worst, 0.0, 1e-12);
}

// ----- analytic sweeps -------------------------------------------------------

std::vector<CheckReport> check_phi_analytics(const NoiseParam& noise,
                                             double grid_step, double tamper) {
    std::vector<double> grid;
    for (double x = 0.0; x <= 1.0 + 1e-12; x += grid_step) {
        grid.push_back(std::min(x, 1.0));
    }
    std::vector<double> phi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        phi[i] = gerber_phi(grid[i], noise) + tamper;
    }
    double worst_second_diff = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        worst_second_diff =
            std::max(worst_second_diff, phi[i + 1] - 2.0 * phi[i] + phi[i - 1]);
    }
    CheckReport concavity = make_inequality_report(
        "phi/concavity", worst_second_diff, 0.0, 1e-10);
    concavity.eps = noise.eps;

    const double low_slope = ck_bound(noise);
    double worst_sandwich = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        worst_sandwich = std::max(worst_sandwich, low_slope * x - phi[i]);
        worst_sandwich = std::max(worst_sandwich, phi[i] - noise.lambda * x);
    }
    CheckReport sandwich =
        make_inequality_report("phi/sandwich", worst_sandwich, 0.0, 1e-10);
    sandwich.eps = noise.eps;
    return {concavity, sandwich};
}

CheckReport check_quartic_bound(double tamper) {
    const double c2 = 1.0 / (2.0 * std::log(2.0));
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        const double lhs = 1.0 - binary_entropy(0.5 * (1.0 - x)) + tamper;
        const double rhs = c2 * x * x + (1.0 - c2) * x * x * x * x;
        worst = std::max(worst, lhs - rhs);
    }
    return make_inequality_report("phi/quartic-bound", worst, 0.0, 1e-12);
}

CheckReport check_han_monotonicity(const CubeFunction& f) {
    const std::vector<double> a = han_profile(f);
    double worst_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t + 1 < a.size(); ++t) {
        worst_increase = std::max(worst_increase, a[t + 1] - a[t]);
    }
    CheckReport r = make_inequality_report("invariant/han-monotonicity",
                                           worst_increase, 0.0, 1e-10);
    r.n = f.n();
    return r;
}

// ----- exhaustive search -------------------------------------------------------

CkSearchResult ck_exhaustive_search(int n, const NoiseParam& noise) {
    const auto start = Clock::now();
    if (n < 1 || n > 4) {
        throw std::invalid_argument("ck_exhaustive_search: n must lie in [1,4]");
    }
    const std::uint32_t points = 1u << n;
    const std::uint64_t tables = std::uint64_t{1} << points;
    const std::uint32_t table_mask =
        points == 32 ? 0xffffffffu : ((1u << points) - 1u);

    CkSearchResult res;
    res.n = n;
    res.eps = noise.eps;
    res.bound = ck_bound(noise);
    res.max_info = -1.0;

    std::vector<std::uint32_t> best;
    for (std::uint64_t t = 0; t < tables; ++t) {
        const std::uint32_t tt = static_cast<std::uint32_t>(t);
        const std::uint32_t comp = (~tt) & table_mask;
        if (tt > comp) continue;  // complement symmetry halves the search
        CubeFunction f(n);
        for (std::uint32_t x = 0; x < points; ++x) {
            f[x] = (tt >> x) & 1u ? 1.0 : 0.0;
        }
        const double info = bool_mutual_information(f, noise);
        if (info > res.max_info + 1e-12) {
            res.max_info = info;
            best.clear();
        }
        if (info >= res.max_info - 1e-12) {
            best.push_back(tt);
            if (comp != tt) best.push_back(comp);
        }
    }
    // drop stragglers that matched an older, lower maximum
    std::vector<std::uint32_t> maximizers;
    for (std::uint32_t tt : best) {
        CubeFunction f(n);
        for (std::uint32_t x = 0; x < points; ++x) {
            f[x] = (tt >> x) & 1u ? 1.0 : 0.0;
        }
        if (bool_mutual_information(f, noise) >= res.max_info - 1e-12) {
            maximizers.push_back(tt);
        }
    }
    std::sort(maximizers.begin(), maximizers.end());
    maximizers.erase(std::unique(maximizers.begin(), maximizers.end()),
                     maximizers.end());
    res.maximizer_tables = maximizers;
    res.margin = res.bound - res.max_info;

    // expected maximizers: dictators and their complements
    std::set<std::uint32_t> expected;
    for (int k = 0; k < n; ++k) {
        std::uint32_t dict = 0;
        for (std::uint32_t x = 0; x < points; ++x) {
            if (((x >> k) & 1u) == 0) dict |= 1u << x;
        }
        expected.insert(dict);
        expected.insert((~dict) & table_mask);
    }
    res.dictators_only =
        std::set<std::uint32_t>(maximizers.begin(), maximizers.end()) ==
        expected;

    // canonical classes up to coordinate permutation and complement
    std::set<std::uint32_t> classes;
    std::vector<int> perm(n);
    for (std::uint32_t tt : maximizers) {
        std::uint32_t canon = table_mask;
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::uint32_t moved = 0;
            for (std::uint32_t x = 0; x < points; ++x) {
                std::uint32_t y = 0;
                for (int j = 0; j < n; ++j) {
                    if ((x >> j) & 1u) y |= 1u << perm[j];
                }
                if ((tt >> y) & 1u) moved |= 1u << x;
            }
            canon = std::min({canon, moved,
                              static_cast<std::uint32_t>((~moved) & table_mask)});
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(canon);
    }
    res.maximizer_classes.assign(classes.begin(), classes.end());
    res.runtime_ms = ms_since(start);
    return res;
}

// ----- suite ----------------------------------------------------------------

int effective_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("VERIFY_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string suite_header() {
    return "Theorems with unspecified absolute constants (the small-noise "
           "subcube-stability and high-noise conjecture statements, and the "
           "related level-1 bound) are not checkable as stated; this suite "
           "substitutes the exhaustive desk-scale search over all boolean "
           "functions on n <= 4 variables together with randomized sweeps of "
           "every quantitative claim.";
}

SuiteConfig parse_suite_config(const std::string& json_text) {
    using nlohmann::json;
    SuiteConfig cfg;
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw std::runtime_error("config parse error at line " +
                                 std::to_string(line) + ", column " +
                                 std::to_string(col) + ": " + e.what());
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("n_min")) cfg.n_min = j["n_min"].get<int>();
    if (j.contains("n_max")) cfg.n_max = j["n_max"].get<int>();
    if (j.contains("eps_grid")) {
        cfg.eps_grid = j["eps_grid"].get<std::vector<double>>();
    }
    if (j.contains("trials_inequality")) {
        cfg.trials_inequality = j["trials_inequality"].get<int>();
    }
    if (j.contains("trials_identity")) {
        cfg.trials_identity = j["trials_identity"].get<int>();
    }
    if (j.contains("trials_lp")) cfg.trials_lp = j["trials_lp"].get<int>();
    if (j.contains("ck_max_n")) cfg.ck_max_n = j["ck_max_n"].get<int>();
    if (j.contains("tol_identity")) {
        cfg.tol_identity = j["tol_identity"].get<double>();
    }
    if (j.contains("tol_inequality")) {
        cfg.tol_inequality = j["tol_inequality"].get<double>();
    }
    if (j.contains("tol_lp")) cfg.tol_lp = j["tol_lp"].get<double>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("tamper")) {
        cfg.tamper_target = j["tamper"].value("target", "");
        cfg.tamper_delta = j["tamper"].value("delta", 0.0);
    }
    if (j.contains("avg")) {
        cfg.avg.exact_max_n = j["avg"].value("exact_max_n", cfg.avg.exact_max_n);
        cfg.avg.samples = j["avg"].value("samples", cfg.avg.samples);
        cfg.avg.seed = j["avg"].value("seed", cfg.avg.seed);
    }
    if (cfg.n_min < 2 || cfg.n_max > 16 || cfg.n_min > cfg.n_max) {
        throw std::runtime_error("config: need 2 <= n_min <= n_max <= 16");
    }
    for (double e : cfg.eps_grid) {
        if (!(e >= 0.0 && e <= 0.5)) {
            throw std::runtime_error("config: eps grid entries must lie in [0, 1/2]");
        }
    }
    return cfg;
}

namespace {

void run_tasks(std::vector<std::function<void()>>& tasks, int threads) {
    if (threads <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(threads, static_cast<int>(tasks.size()));
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Folds a fresh report into the worst-case aggregate for its name.
void fold_worst(CheckReport& agg, const CheckReport& r) {
    if (agg.name.empty()) {
        agg = r;
        return;
    }
    const bool r_worse = agg.identity ? r.margin > agg.margin
                                      : r.margin < agg.margin;
    const bool keep_pass = agg.pass && r.pass;
    const long long runtime = agg.runtime_ms + r.runtime_ms;
    if (r_worse) agg = r;
    agg.pass = keep_pass;
    agg.runtime_ms = runtime;
}

double tamper_for(const SuiteConfig& cfg, const char* target) {
    return cfg.tamper_target == target ? cfg.tamper_delta : 0.0;
}

}  // namespace

std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
    const int threads = effective_threads(cfg.threads);
    const int n_count = cfg.n_max - cfg.n_min + 1;
    const int trials_per_n =
        std::max(1, (cfg.trials_inequality + n_count - 1) / n_count);

    std::vector<std::vector<CheckReport>> buckets;
    std::vector<std::function<void()>> tasks;
    auto add_task = [&](std::function<std::vector<CheckReport>()> fn) {
        const std::size_t slot = buckets.size();
        buckets.emplace_back();
        tasks.emplace_back([&buckets, slot, fn = std::move(fn)] {
            buckets[slot] = fn();
        });
    };

    // --- theorem sweeps, one task per (n); each aggregates per eps ---
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        add_task([&cfg, n, trials_per_n] {
            std::vector<CheckReport> out;
            const std::size_t eps_count = cfg.eps_grid.size();
            // aggregate slots: [family][eps]
            const char* families[] = {"mgl",
                                      "thm-main",
                                      "cor-streamline",
                                      "smgl",
                                      "smgl-eq7",
                                      "lemma-noisy-ts",
                                      "ordering/main-le-streamline",
                                      "smgl-eq7-agreement"};
            std::vector<std::vector<CheckReport>> agg(
                8, std::vector<CheckReport>(eps_count));
            // the strengthened bound vs plain Mrs. Gerber: counted, not
            // asserted (the error term relating them is unquantified)
            std::vector<long long> smgl_tighter(eps_count, 0),
                smgl_total(eps_count, 0);
            for (int trial = 0; trial < trials_per_n; ++trial) {
                const std::uint64_t seed =
                    mix_seed(cfg.seed, (std::uint64_t{0xA} << 32) |
                                           (static_cast<std::uint64_t>(n) << 16) |
                                           static_cast<std::uint64_t>(trial));
                const CubeFunction f = random_nonneg_function(n, seed);
                for (std::size_t ei = 0; ei < eps_count; ++ei) {
                    const NoiseParam noise(cfg.eps_grid[ei]);
                    CheckReport r0 = check_mgl(f, noise);
                    r0.seed = seed;
                    fold_worst(agg[0][ei], r0);
                    CheckReport r1 = check_theorem_main(f, noise, cfg.avg);
                    r1.seed = seed;
                    fold_worst(agg[1][ei], r1);
                    CheckReport r2 =
                        check_corollary_streamline(f, noise, cfg.avg);
                    r2.seed = seed;
                    fold_worst(agg[2][ei], r2);
                    auto smgl = check_smgl(f, noise, cfg.avg);
                    smgl[0].seed = seed;
                    fold_worst(agg[3][ei], smgl[0]);
                    if (smgl.size() > 1) {
                        smgl[1].seed = smgl[2].seed = seed;
                        fold_worst(agg[4][ei], smgl[1]);
                        fold_worst(agg[7][ei], smgl[2]);
                        if (smgl[0].rhs <= r0.rhs) ++smgl_tighter[ei];
                        ++smgl_total[ei];
                    }
                    CheckReport r5 = check_lemma_noisy_ts(f, noise, cfg.avg);
                    r5.seed = seed;
                    fold_worst(agg[5][ei], r5);
                    // Theorem rhs is never above the streamlined rhs
                    CheckReport ord = make_inequality_report(
                        families[6], r1.rhs, r2.rhs, cfg.tol_inequality);
                    ord.n = n;
                    ord.eps = noise.eps;
                    ord.seed = seed;
                    fold_worst(agg[6][ei], ord);
                }
            }
            for (std::size_t fam = 0; fam < agg.size(); ++fam) {
                for (std::size_t ei = 0; ei < eps_count; ++ei) {
                    CheckReport& r = agg[fam][ei];
                    if (r.name.empty()) continue;
                    std::ostringstream nm;
                    nm << families[fam] << "/n=" << n << "/eps="
                       << cfg.eps_grid[ei];
                    r.name = nm.str();
                    out.push_back(r);
                }
            }
            for (std::size_t ei = 0; ei < eps_count; ++ei) {
                if (smgl_total[ei] == 0) continue;
                const double fraction =
                    static_cast<double>(smgl_tighter[ei]) / smgl_total[ei];
                std::ostringstream nm;
                nm << "info/smgl-tighter-than-mgl-fraction/n=" << n
                   << "/eps=" << cfg.eps_grid[ei];
                CheckReport r;
                r.name = nm.str();
                r.lhs = fraction;
                r.rhs = 1.0;
                r.margin = 0.0;
                r.pass = true;  // informational only
                r.n = n;
                r.eps = cfg.eps_grid[ei];
                out.push_back(r);
            }
            return out;
        });
    }

    // --- boolean families ---
    for (int n = cfg.n_min; n <= std::min(cfg.n_max, 10); ++n) {
        add_task([&cfg, n, trials_per_n] {
            std::vector<CheckReport> out;
            const std::size_t eps_count = cfg.eps_grid.size();
            std::vector<std::vector<CheckReport>> agg(
                3, std::vector<CheckReport>(eps_count));
            const char* families[] = {"cor-info-app", "cor-info-app-weak",
                                      "lemma-h-entr"};
            for (int trial = 0; trial < trials_per_n; ++trial) {
                const std::uint64_t seed =
                    mix_seed(cfg.seed, (std::uint64_t{0xB} << 32) |
                                           (static_cast<std::uint64_t>(n) << 16) |
                                           static_cast<std::uint64_t>(trial));
                const CubeFunction f = random_boolean_function(n, seed);
                for (std::size_t ei = 0; ei < eps_count; ++ei) {
                    const NoiseParam noise(cfg.eps_grid[ei]);
                    auto rr = check_corollary_info_app(f, noise, cfg.avg);
                    rr[0].seed = rr[1].seed = seed;
                    fold_worst(agg[0][ei], rr[0]);
                    fold_worst(agg[1][ei], rr[1]);
                    if (n <= 6) {  // O(4^n) joint enumeration
                        CheckReport rh = check_lemma_h_entr(f, noise);
                        rh.seed = seed;
                        fold_worst(agg[2][ei], rh);
                    }
                }
            }
            for (std::size_t fam = 0; fam < agg.size(); ++fam) {
                for (std::size_t ei = 0; ei < eps_count; ++ei) {
                    CheckReport& r = agg[fam][ei];
                    if (r.name.empty()) continue;
                    std::ostringstream nm;
                    nm << families[fam] << "/n=" << n << "/eps="
                       << cfg.eps_grid[ei];
                    r.name = nm.str();
                    out.push_back(r);
                }
            }
            return out;
        });
    }

    // --- module invariants ---
    add_task([&cfg] {
        std::vector<CheckReport> out;
        CheckReport mean_pres, homog, decrease, semigroup, commute, parseval,
            roundtrip, multiplier, monotone, nonneg, han;
        for (int trial = 0; trial < cfg.trials_identity; ++trial) {
            const int n = cfg.n_min + trial % (cfg.n_max - cfg.n_min + 1);
            const std::uint64_t seed =
                mix_seed(cfg.seed, (std::uint64_t{0xC} << 32) |
                                       static_cast<std::uint64_t>(trial));
            const CubeFunction f = random_nonneg_function(n, seed);
            Rng rng(mix_seed(seed, 1));
            const NoiseParam noise(0.5 * rng.uniform01());
            const CubeFunction tf = noise_apply(f, noise);

            CheckReport r = make_identity_report("invariant/mean-preservation",
                                                 tf.mean(), f.mean(), 1e-12);
            r.n = n;
            r.eps = noise.eps;
            r.seed = seed;
            fold_worst(mean_pres, r);

            const double ent = entropy_functional(f);
            double worst_h = 0.0;
            for (double c : {0.1, 2.0, 10.0}) {
                CubeFunction cf = f;
                cf *= c;
                worst_h = std::max(
                    worst_h, std::fabs(entropy_functional(cf) - c * ent) /
                                 (1.0 + ent));
            }
            CheckReport rh = make_identity_report("invariant/ent-homogeneity",
                                                  worst_h, 0.0, 1e-10);
            rh.n = n;
            rh.seed = seed;
            fold_worst(homog, rh);

            CheckReport rd = make_inequality_report(
                "invariant/noise-decreases-entropy", entropy_functional(tf),
                ent, 1e-10);
            rd.n = n;
            rd.eps = noise.eps;
            rd.seed = seed;
            fold_worst(decrease, rd);

            // semigroup: T_a T_b = T_c with rho_c = rho_a rho_b
            const NoiseParam nb(0.5 * rng.uniform01());
            const double rho_c = noise.rho * nb.rho;
            const NoiseParam nc(0.5 * (1.0 - rho_c));
            const CubeFunction two_step = noise_apply(tf, nb);
            const CubeFunction one_step = noise_apply(f, nc);
            double worst_s = 0.0;
            for (std::size_t x = 0; x < f.size(); ++x) {
                worst_s = std::max(worst_s,
                                   std::fabs(two_step[x] - one_step[x]));
            }
            CheckReport rs = make_identity_report("invariant/semigroup",
                                                  worst_s, 0.0, 1e-12);
            rs.n = n;
            rs.seed = seed;
            fold_worst(semigroup, rs);

            // commutation with conditional expectation
            const mask_t a = static_cast<mask_t>(rng.next()) & full_mask(n);
            const mask_t rset = static_cast<mask_t>(rng.next()) & full_mask(n);
            const CubeFunction left = conditional_expectation(
                noise_apply_directions(f, noise, rset), a);
            const CubeFunction right = noise_apply_directions(
                conditional_expectation(f, a), noise, rset & a);
            double worst_c = 0.0;
            for (std::size_t x = 0; x < f.size(); ++x) {
                worst_c = std::max(worst_c, std::fabs(left[x] - right[x]));
            }
            CheckReport rc = make_identity_report("invariant/commutation",
                                                  worst_c, 0.0, 1e-12);
            rc.n = n;
            rc.seed = seed;
            fold_worst(commute, rc);

            // Parseval and transform round trip
            const Spectrum sp = wht_forward(f);
            double ss = 0.0;
            for (double c : sp.coeffs) ss += c * c;
            CheckReport rp = make_identity_report(
                "invariant/parseval", ss / (1.0 + f.mean_square()),
                f.mean_square() / (1.0 + f.mean_square()), 1e-10);
            rp.n = n;
            rp.seed = seed;
            fold_worst(parseval, rp);

            const CubeFunction back = wht_inverse(sp);
            double worst_rt = 0.0;
            for (std::size_t x = 0; x < f.size(); ++x) {
                worst_rt = std::max(worst_rt, std::fabs(back[x] - f[x]));
            }
            CheckReport rr = make_identity_report("invariant/wht-round-trip",
                                                  worst_rt, 0.0, 1e-12);
            rr.n = n;
            rr.seed = seed;
            fold_worst(roundtrip, rr);

            // spectral noise equals the direct O(4^n) sum
            if (n <= 8) {
                std::vector<double> pw(n + 1);
                for (int d = 0; d <= n; ++d) {
                    pw[d] = std::pow(noise.eps, d) *
                            std::pow(1.0 - noise.eps, n - d);
                }
                double worst_m = 0.0;
                for (std::size_t x = 0; x < f.size(); ++x) {
                    double direct = 0.0;
                    for (std::size_t y = 0; y < f.size(); ++y) {
                        direct +=
                            pw[popcount(static_cast<mask_t>(x ^ y))] * f[y];
                    }
                    worst_m = std::max(worst_m, std::fabs(direct - tf[x]));
                }
                CheckReport rm = make_identity_report(
                    "invariant/noise-multiplier-vs-direct", worst_m, 0.0,
                    1e-12);
                rm.n = n;
                rm.eps = noise.eps;
                rm.seed = seed;
                fold_worst(multiplier, rm);
            }

            // conditional entropy is monotone in the conditioning set
            const mask_t sub = a & static_cast<mask_t>(rng.next());
            CheckReport rmn = make_inequality_report(
                "invariant/cond-ent-monotone", conditional_entropy(f, sub),
                conditional_entropy(f, a), 1e-10);
            rmn.n = n;
            rmn.seed = seed;
            fold_worst(monotone, rmn);

            // nonnegativity of boundary data and mutual information
            if (n >= 3) {
                const int m = static_cast<int>(rng.below(n));
                mask_t aa = static_cast<mask_t>(rng.next()) & full_mask(n) &
                            ~(mask_t{1} << m);
                if (aa == 0) aa = full_mask(n) & ~(mask_t{1} << m);
                double worst_y = 0.0;
                const BoundaryData b = y_boundary(f, aa, m);
                for (mask_t s = 1; s < (mask_t{1} << b.k); ++s) {
                    for (int i = 0; i < b.k; ++i) {
                        if ((s >> i) & 1u) {
                            worst_y = std::min(worst_y, b.y(s, i));
                        }
                    }
                }
                worst_y = std::min(worst_y, mutual_info_sets(f, aa, m));
                CheckReport rn = make_inequality_report(
                    "invariant/boundary-nonneg", -worst_y, 0.0, 1e-10);
                rn.n = n;
                rn.seed = seed;
                fold_worst(nonneg, rn);
            }

            CheckReport rha = check_han_monotonicity(f);
            rha.seed = seed;
            fold_worst(han, rha);
        }
        for (CheckReport* r :
             {&mean_pres, &homog, &decrease, &semigroup, &commute, &parseval,
              &roundtrip, &multiplier, &monotone, &nonneg, &han}) {
            if (!r->name.empty()) out.push_back(*r);
        }
        return out;
    });

    // --- identity battery ---
    add_task([&cfg] {
        std::vector<CheckReport> out;
        Rng rng(mix_seed(cfg.seed, 0xBA77E47));
        CheckReport agg34, agg35, aggval, agg11, agg37, agg38, aggw, aggtail;
        for (double lambda : {0.05, 0.3, 0.5, 0.8, 0.97}) {
            for (int k = 1; k <= 8; ++k) {
                fold_worst(agg34, check_lemma34_vs_recursion(
                                      k, lambda, tamper_for(cfg, "lemma34")));
                fold_worst(agg35, check_cor35_dual_forms(
                                      k, lambda, tamper_for(cfg, "cor35")));
                fold_worst(aggtail, check_lambda_tail(
                                        k, lambda,
                                        tamper_for(cfg, "lambda-tail")));
                std::vector<double> y(k);
                for (auto& v : y) v = rng.uniform01();
                const SymmetricData data(k, lambda, y);
                fold_worst(aggval, check_value_routes(
                                       data, tamper_for(cfg, "value-routes")));
                if (k <= 5) {
                    fold_worst(agg11,
                               check_eq11_path_invariance(
                                   data, tamper_for(cfg, "eq11")));
                }
                if (k >= 2 && k <= 6) {
                    fold_worst(agg38, check_lemma38(
                                          data, tamper_for(cfg, "lemma38")));
                    BoundaryData b(k);
                    for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
                        for (int i = 0; i < k; ++i) {
                            if ((s >> i) & 1u) b.y(s, i) = rng.uniform01();
                        }
                    }
                    fold_worst(agg37,
                               check_lemma37(b, lambda,
                                             tamper_for(cfg, "lemma37")));
                }
            }
            for (int n = 2; n <= 12; n += 2) {
                fold_worst(aggw,
                           check_w_identity(n, lambda, tamper_for(cfg, "w")));
            }
        }
        for (CheckReport* r : {&agg34, &agg35, &aggval, &agg11, &agg37, &agg38,
                               &aggw, &aggtail}) {
            out.push_back(*r);
        }
        // entropy-based identities on random functions
        CheckReport agg43, agg4, agg63, aggd;
        for (int trial = 0; trial < std::max(4, cfg.trials_identity / 8);
             ++trial) {
            const int n = 3 + trial % 4;
            const std::uint64_t seed =
                mix_seed(cfg.seed, (std::uint64_t{0xD} << 32) |
                                       static_cast<std::uint64_t>(trial));
            const CubeFunction f = random_nonneg_function(n, seed);
            CheckReport r43 = check_lemma43(f, tamper_for(cfg, "lemma43"));
            r43.seed = seed;
            fold_worst(agg43, r43);
            Rng prng(mix_seed(seed, 2));
            const mask_t a = static_cast<mask_t>(prng.next()) & full_mask(n);
            CheckReport r4 = check_eq4_bridge(f, a, tamper_for(cfg, "eq4"));
            r4.seed = seed;
            fold_worst(agg4, r4);
            CheckReport r63 = check_lemma63(f, tamper_for(cfg, "lemma63"));
            r63.seed = seed;
            fold_worst(agg63, r63);
            CubeFunction g(n);
            for (std::size_t x = 0; x < g.size(); ++x) {
                g[x] = 2.0 * prng.uniform01() - 1.0;
            }
            CheckReport rd =
                check_dirichlet_dual(g, tamper_for(cfg, "dirichlet"));
            rd.seed = seed;
            fold_worst(aggd, rd);
        }
        for (CheckReport* r : {&agg43, &agg4, &agg63, &aggd}) {
            out.push_back(*r);
        }
        return out;
    });

    // --- phi analytics + quartic ---
    add_task([&cfg] {
        std::vector<CheckReport> out;
        CheckReport conc, sand;
        for (double eps = 0.05; eps <= 0.451; eps += 0.05) {
            auto rr =
                check_phi_analytics(NoiseParam(eps), 0.01,
                                    tamper_for(cfg, "phi"));
            fold_worst(conc, rr[0]);
            fold_worst(sand, rr[1]);
        }
        out.push_back(conc);
        out.push_back(sand);
        out.push_back(check_quartic_bound(tamper_for(cfg, "quartic")));
        return out;
    });

    // --- log-Sobolev and SDPI sweeps ---
    add_task([&cfg] {
        std::vector<CheckReport> out;
        CheckReport sob;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + trial % 7;
            const std::uint64_t seed =
                mix_seed(cfg.seed, (std::uint64_t{0xE} << 32) |
                                       static_cast<std::uint64_t>(trial));
            CubeFunction g(n);
            Rng rng(seed);
            for (std::size_t x = 0; x < g.size(); ++x) {
                g[x] = rng.uniform01();
            }
            CheckReport r = make_inequality_report("sweep/log-sobolev", 0.0,
                                                   log_sobolev_gap(g), 1e-10);
            r.n = n;
            r.seed = seed;
            fold_worst(sob, r);
        }
        out.push_back(sob);

        CheckReport sdpi;
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 4 + trial % 3;
            const std::uint64_t seed =
                mix_seed(cfg.seed, (std::uint64_t{0xF} << 32) |
                                       static_cast<std::uint64_t>(trial));
            const CubeFunction f = random_nonneg_function(n, seed);
            Rng rng(mix_seed(seed, 3));
            const NoiseParam noise(0.02 + 0.46 * rng.uniform01());
            const int m = static_cast<int>(rng.below(n));
            // S with i in S, plus R = S-subset containing i
            mask_t s = static_cast<mask_t>(rng.next()) & full_mask(n) &
                       ~(mask_t{1} << m);
            const int i = [&] {
                for (int c = 0; c < n; ++c) {
                    if (c != m && ((s >> c) & 1u)) return c;
                }
                return m == 0 ? 1 : 0;
            }();
            s |= mask_t{1} << i;
            mask_t r_wo = static_cast<mask_t>(rng.next()) & s &
                          ~(mask_t{1} << i);
            const mask_t r_with = r_wo | (mask_t{1} << i);
            const CubeFunction fr = noise_apply_directions(f, noise, r_with);
            const CubeFunction fr_wo = noise_apply_directions(f, noise, r_wo);
            const mask_t mm = mask_t{1} << m;
            const mask_t wo = s & ~(mask_t{1} << i);
            auto second_diff = [&](const CubeFunction& h) {
                return conditional_entropy(h, s | mm) -
                       conditional_entropy(h, wo | mm) -
                       conditional_entropy(h, s) + conditional_entropy(h, wo);
            };
            CheckReport r = make_inequality_report(
                "sweep/sdpi", second_diff(fr),
                noise.lambda * second_diff(fr_wo), 1e-9);
            r.n = n;
            r.eps = noise.eps;
            r.seed = seed;
            fold_worst(sdpi, r);
        }
        out.push_back(sdpi);
        return out;
    });

    // --- LP chain ---
    add_task([&cfg] {
        std::vector<CheckReport> out;
        CheckReport chain_lp, chain_sym, chain_prop, feas_res, feas_obj;
        for (int trial = 0; trial < cfg.trials_lp; ++trial) {
            const std::uint64_t seed =
                mix_seed(cfg.seed, (std::uint64_t{0x17} << 32) |
                                       static_cast<std::uint64_t>(trial));
            const int n = 5;
            const CubeFunction f = random_nonneg_function(n, seed);
            Rng rng(mix_seed(seed, 4));
            const int k = 2 + trial % 2;
            const NoiseParam noise(0.05 + 0.4 * rng.uniform01());
            // random A of size k and m outside
            int coords[kMaxDimension];
            std::iota(coords, coords + n, 0);
            for (int i = 0; i < k + 1; ++i) {
                const int j =
                    i + static_cast<int>(rng.below(
                            static_cast<std::uint32_t>(n - i)));
                std::swap(coords[i], coords[j]);
            }
            mask_t a = 0;
            for (int i = 0; i < k; ++i) a |= mask_t{1} << coords[i];
            const int m = coords[k];

            const BoundaryData b = y_boundary(f, a, m);
            const DominanceReport dom = check_symmetric_dominance(b, noise.lambda);
            const double actual = mutual_info_sets(
                noise_apply_directions(f, noise, a), a, m);
            const double prop41 = noisy_mi_upper_bound(f, a, m, noise);

            CheckReport r1 = make_inequality_report(
                "lp/chain-actual-le-optimum", actual, dom.lp_optimum,
                cfg.tol_lp);
            r1.n = n;
            r1.eps = noise.eps;
            r1.seed = seed;
            fold_worst(chain_lp, r1);
            CheckReport r2 = make_inequality_report(
                "lp/chain-optimum-le-symmetric", dom.lp_optimum,
                dom.symmetric_value, cfg.tol_lp);
            r2.n = n;
            r2.eps = noise.eps;
            r2.seed = seed;
            fold_worst(chain_sym, r2);
            CheckReport r3 = make_identity_report(
                "lp/chain-symmetric-eq-prop41", dom.symmetric_value, prop41,
                1e-10);
            r3.n = n;
            r3.eps = noise.eps;
            r3.seed = seed;
            fold_worst(chain_prop, r3);

            const FeasibleSolutionReport fs =
                feasible_from_function(f, a, m, noise);
            CheckReport r4 = make_identity_report(
                "lp/feasible-residual",
                std::max(fs.max_constraint_residual, fs.max_fold_residual), 0.0,
                1e-9);
            r4.n = n;
            r4.eps = noise.eps;
            r4.seed = seed;
            fold_worst(feas_res, r4);
            CheckReport r5 = make_identity_report(
                "lp/feasible-objective-eq-mi", fs.objective, fs.direct_mi,
                1e-9);
            r5.n = n;
            r5.eps = noise.eps;
            r5.seed = seed;
            fold_worst(feas_obj, r5);
        }
        out.push_back(chain_lp);
        out.push_back(chain_sym);
        out.push_back(chain_prop);
        out.push_back(feas_res);
        out.push_back(feas_obj);

        // random boundary data: symmetric vectors and monotone-gradient maps
        CheckReport dom_sym, dom_grad;
        for (int trial = 0; trial < cfg.trials_lp; ++trial) {
            const std::uint64_t seed =
                mix_seed(cfg.seed, (std::uint64_t{0x18} << 32) |
                                       static_cast<std::uint64_t>(trial));
            Rng rng(seed);
            const int k = 2 + trial % 3;
            const double lambda = 0.05 + 0.9 * rng.uniform01();
            std::vector<double> prof(k);
            for (auto& v : prof) v = rng.uniform01();
            const DominanceReport ds =
                check_symmetric_dominance(symmetric_boundary(prof), lambda);
            CheckReport r1 = make_inequality_report("lp/dominance-symmetric",
                                                    ds.lp_optimum,
                                                    ds.symmetric_value,
                                                    cfg.tol_lp);
            if (ds.status != LpStatus::kOptimal) r1.pass = false;
            r1.seed = seed;
            fold_worst(dom_sym, r1);

            // gradient class: y from the discrete derivative of a random
            // monotone set function
            const int kg = 2 + trial % 2;
            std::vector<double> setfun(std::size_t{1} << kg, 0.0);
            for (mask_t s = 1; s < (mask_t{1} << kg); ++s) {
                double lo = 0.0;
                for (int i = 0; i < kg; ++i) {
                    if ((s >> i) & 1u) {
                        lo = std::max(lo, setfun[s & ~(mask_t{1} << i)]);
                    }
                }
                setfun[s] = lo + rng.uniform01();
            }
            BoundaryData bg(kg);
            for (mask_t s = 1; s < (mask_t{1} << kg); ++s) {
                for (int i = 0; i < kg; ++i) {
                    if ((s >> i) & 1u) {
                        bg.y(s, i) = setfun[s] - setfun[s & ~(mask_t{1} << i)];
                    }
                }
            }
            const DominanceReport dg =
                check_symmetric_dominance(bg, lambda);
            CheckReport r2 = make_inequality_report("lp/dominance-gradient",
                                                    dg.lp_optimum,
                                                    dg.symmetric_value,
                                                    cfg.tol_lp);
            if (dg.status != LpStatus::kOptimal) r2.pass = false;
            r2.seed = seed;
            fold_worst(dom_grad, r2);
        }
        out.push_back(dom_sym);
        out.push_back(dom_grad);
        return out;
    });

    // --- exhaustive search at desk scale ---
    for (int n = 1; n <= cfg.ck_max_n; ++n) {
        add_task([&cfg, n] {
            std::vector<CheckReport> out;
            for (double eps : cfg.eps_grid) {
                if (eps <= 0.0 || eps >= 0.5) continue;
                const CkSearchResult res =
                    ck_exhaustive_search(n, NoiseParam(eps));
                std::ostringstream nm;
                nm << "ck-search/n=" << n << "/eps=" << eps;
                CheckReport r = make_identity_report(nm.str(), res.max_info,
                                                     res.bound, 1e-10);
                r.pass = r.pass && res.dictators_only;
                r.n = n;
                r.eps = eps;
                r.runtime_ms = res.runtime_ms;
                out.push_back(r);
            }
            return out;
        });
    }

    run_tasks(tasks, threads);

    std::vector<CheckReport> all;
    for (auto& b : buckets) {
        all.insert(all.end(), b.begin(), b.end());
    }
    // the suite-level gate applies the configured tolerances uniformly;
    // informational rows and the exhaustive search (whose pass also demands
    // dictator-only maximizers) keep their own verdicts
    for (CheckReport& r : all) {
        if (r.name.rfind("info/", 0) == 0 || r.name.rfind("ck-search", 0) == 0) {
            continue;
        }
        const double tol = r.identity ? cfg.tol_identity
                           : r.name.rfind("lp/", 0) == 0 ? cfg.tol_lp
                                                         : cfg.tol_inequality;
        r.tol = tol;
        r.pass = r.identity ? r.margin <= tol : r.margin >= -tol;
    }
    std::sort(all.begin(), all.end(),
              [](const CheckReport& x, const CheckReport& y) {
                  return x.name < y.name;
              });
    return all;
}

}  // namespace noisecube

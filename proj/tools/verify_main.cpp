// verify: theorem-level checks for the noisy-entropy toolkit.
//
// Subcommands:
//   verify suite     --config cfg.json --out report.json
//   verify theorem   <name> --n N --eps E --trials T --seed S
//   verify ck-search --n 1..4 --eps E [--eps-grid a,b,c]
//   verify lp        --k 1..4 --lambda L [--from-function f.json]
//                    [--random --seed S] [--export lp.txt]
//   verify sweep     --bound mgl|smgl|main --n-range 3..8
//                    --eps-grid a,b,c --format csv|json
//
// VERIFY_THREADS caps suite parallelism.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "noisecube/checks.hpp"
#include "noisecube/io.hpp"
#include "noisecube/lp.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/symmetric.hpp"

using namespace noisecube;

namespace {

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

void emit(const std::vector<CheckReport>& reports, const std::string& format,
          const std::string& out_path, const std::string& header = "") {
    const std::string text = format == "csv" ? reports_to_csv(reports)
                                             : reports_to_json(reports, header);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        write_file(out_path, text);
    }
}

int exit_code(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        if (!r.pass) return 1;
    }
    return 0;
}

using TheoremFn = std::vector<CheckReport> (*)(const CubeFunction&,
                                               const NoiseParam&);

std::vector<CheckReport> run_theorem(const std::string& name,
                                     const CubeFunction& f,
                                     const NoiseParam& noise) {
    if (name == "mgl") return {check_mgl(f, noise)};
    if (name == "main") return {check_theorem_main(f, noise)};
    if (name == "streamline") return {check_corollary_streamline(f, noise)};
    if (name == "info-app") return check_corollary_info_app(f, noise);
    if (name == "smgl") return check_smgl(f, noise);
    if (name == "noisy-ts") return {check_lemma_noisy_ts(f, noise)};
    if (name == "h-entr") return {check_lemma_h_entr(f, noise)};
    throw std::runtime_error("unknown theorem name: " + name);
}

bool theorem_wants_boolean(const std::string& name) {
    return name == "info-app" || name == "h-entr";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noisy-entropy verification toolkit"};
    app.require_subcommand(1);

    // --- suite ---
    auto* suite = app.add_subcommand("suite", "run the full verification suite");
    std::string suite_config_path, suite_out;
    suite->add_option("--config", suite_config_path, "JSON config file");
    suite->add_option("--out", suite_out, "output report path (JSON)");

    // --- theorem ---
    auto* theorem =
        app.add_subcommand("theorem", "sweep one theorem checker");
    std::string theorem_name;
    int th_n = 5, th_trials = 100;
    double th_eps = 0.4;
    std::uint64_t th_seed = 1;
    std::string th_out;
    theorem
        ->add_option("name", theorem_name,
                     "mgl|main|streamline|info-app|smgl|noisy-ts|h-entr")
        ->required();
    theorem->add_option("--n", th_n, "cube dimension")->check(CLI::Range(1, 16));
    theorem->add_option("--eps", th_eps, "noise level in [0, 1/2]");
    theorem->add_option("--trials", th_trials, "number of random functions");
    theorem->add_option("--seed", th_seed, "base seed");
    theorem->add_option("--out", th_out, "output report path");

    // --- ck-search ---
    auto* ck = app.add_subcommand("ck-search",
                                  "exhaustive most-informative-function search");
    int ck_n = 3;
    double ck_eps = 0.4;
    std::string ck_grid, ck_out;
    ck->add_option("--n", ck_n, "dimension (1..4)")->check(CLI::Range(1, 4));
    ck->add_option("--eps", ck_eps, "noise level");
    ck->add_option("--eps-grid", ck_grid, "comma-separated noise levels");
    ck->add_option("--out", ck_out, "output report path");

    // --- lp ---
    auto* lp = app.add_subcommand("lp", "symmetric-dominance certificate");
    int lp_k = 2;
    double lp_lambda = 0.4;
    std::string lp_function, lp_export, lp_out;
    bool lp_random = false;
    std::uint64_t lp_seed = 1;
    lp->add_option("--k", lp_k, "ground-set size (1..4)")
        ->check(CLI::Range(1, 4));
    lp->add_option("--lambda", lp_lambda, "contraction parameter in [0,1]");
    lp->add_option("--from-function", lp_function,
                   "cube-function file (JSON or CUBF); uses A = first k "
                   "coordinates, m = the next one");
    lp->add_flag("--random", lp_random, "random symmetric boundary vector");
    lp->add_option("--seed", lp_seed, "seed for --random");
    lp->add_option("--export", lp_export, "write the LP in text form");
    lp->add_option("--out", lp_out, "output report path");

    // --- sweep ---
    auto* sweep = app.add_subcommand("sweep", "margin sweep over (n, eps)");
    std::string sw_bound = "mgl", sw_range = "3..8",
                sw_grid = "0.1,0.25,0.4,0.45", sw_format = "csv", sw_out;
    int sw_trials = 200;
    std::uint64_t sw_seed = 1;
    sweep->add_option("--bound", sw_bound, "mgl|smgl|main")
        ->check(CLI::IsMember({"mgl", "smgl", "main"}));
    sweep->add_option("--n-range", sw_range, "e.g. 3..8");
    sweep->add_option("--eps-grid", sw_grid, "comma-separated noise levels");
    sweep->add_option("--format", sw_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--trials", sw_trials, "functions per (n, eps)");
    sweep->add_option("--seed", sw_seed, "base seed");
    sweep->add_option("--out", sw_out, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*suite) {
            SuiteConfig cfg;
            if (!suite_config_path.empty()) {
                cfg = parse_suite_config(read_file(suite_config_path));
            }
            const auto reports = run_suite(cfg);
            emit(reports, "json", suite_out, suite_header());
            int fails = 0;
            for (const auto& r : reports) fails += r.pass ? 0 : 1;
            std::fprintf(stderr, "suite: %zu checks, %d failed\n",
                         reports.size(), fails);
            return fails == 0 ? 0 : 1;
        }

        if (*theorem) {
            const NoiseParam noise(th_eps);
            std::vector<CheckReport> agg;
            for (int trial = 0; trial < th_trials; ++trial) {
                const std::uint64_t seed = mix_seed(th_seed, trial);
                const CubeFunction f =
                    theorem_wants_boolean(theorem_name)
                        ? random_boolean_function(th_n, seed)
                        : random_nonneg_function(th_n, seed);
                auto rr = run_theorem(theorem_name, f, noise);
                for (auto& r : rr) r.seed = seed;
                if (agg.empty()) {
                    agg = rr;
                } else {
                    for (std::size_t i = 0; i < rr.size(); ++i) {
                        const bool worse = agg[i].identity
                                               ? rr[i].margin > agg[i].margin
                                               : rr[i].margin < agg[i].margin;
                        const bool pass = agg[i].pass && rr[i].pass;
                        if (worse) agg[i] = rr[i];
                        agg[i].pass = pass;
                    }
                }
            }
            emit(agg, "json", th_out);
            return exit_code(agg);
        }

        if (*ck) {
            std::vector<double> grid =
                ck_grid.empty() ? std::vector<double>{ck_eps}
                                : parse_grid(ck_grid);
            std::vector<CheckReport> reports;
            for (double eps : grid) {
                const CkSearchResult res =
                    ck_exhaustive_search(ck_n, NoiseParam(eps));
                std::ostringstream nm;
                nm << "ck-search/n=" << ck_n << "/eps=" << eps;
                CheckReport r = make_identity_report(nm.str(), res.max_info,
                                                     res.bound, 1e-10);
                r.pass = r.pass && res.dictators_only;
                r.n = ck_n;
                r.eps = eps;
                r.runtime_ms = res.runtime_ms;
                reports.push_back(r);
                std::fprintf(stderr,
                             "n=%d eps=%.4f max=%.12f bound=%.12f "
                             "maximizers=%zu classes=%zu dictators=%s\n",
                             ck_n, eps, res.max_info, res.bound,
                             res.maximizer_tables.size(),
                             res.maximizer_classes.size(),
                             res.dictators_only ? "yes" : "no");
            }
            emit(reports, "json", ck_out);
            return exit_code(reports);
        }

        if (*lp) {
            BoundaryData boundary;
            if (!lp_function.empty()) {
                const CubeFunction f = load_cube(lp_function);
                if (f.n() < lp_k + 1) {
                    throw std::runtime_error(
                        "function dimension too small for k");
                }
                boundary = y_boundary(f, full_mask(lp_k), lp_k);
            } else {
                Rng rng(lp_seed);
                std::vector<double> prof(lp_k);
                for (auto& v : prof) v = rng.uniform01();
                boundary = symmetric_boundary(prof);
            }
            const LpProblem problem = build_lp(boundary, lp_lambda);
            if (!lp_export.empty()) {
                write_file(lp_export, export_lp_text(problem));
            }
            const DominanceReport rep =
                check_symmetric_dominance(boundary, lp_lambda);
            CheckReport r = make_inequality_report(
                "lp/dominance", rep.lp_optimum, rep.symmetric_value, 1e-7);
            r.pass = rep.pass;
            r.n = lp_k;
            std::fprintf(stderr,
                         "k=%d lambda=%.4f status=%s optimum=%.12f "
                         "symmetric=%.12f margin=%.3e\n",
                         lp_k, lp_lambda,
                         rep.status == LpStatus::kOptimal ? "optimal"
                         : rep.status == LpStatus::kInfeasible ? "infeasible"
                                                               : "unbounded",
                         rep.lp_optimum, rep.symmetric_value, rep.margin);
            emit({r}, "json", lp_out);
            return rep.pass ? 0 : 1;
        }

        if (*sweep) {
            const auto [n_lo, n_hi] = parse_range(sw_range);
            if (n_lo < 2 || n_hi > 12 || n_lo > n_hi) {
                throw std::runtime_error(
                    "sweep: --n-range must lie within 2..12");
            }
            const std::vector<double> grid = parse_grid(sw_grid);
            std::vector<CheckReport> reports;
            for (int n = n_lo; n <= n_hi; ++n) {
                for (double eps : grid) {
                    const NoiseParam noise(eps);
                    CheckReport agg;
                    for (int trial = 0; trial < sw_trials; ++trial) {
                        const std::uint64_t seed =
                            mix_seed(sw_seed, (std::uint64_t(n) << 32) ^
                                                  (std::uint64_t(eps * 1e9)) ^
                                                  trial);
                        const CubeFunction f = random_nonneg_function(n, seed);
                        CheckReport r;
                        if (sw_bound == "mgl") {
                            r = check_mgl(f, noise);
                        } else if (sw_bound == "main") {
                            r = check_theorem_main(f, noise);
                        } else {
                            r = check_smgl(f, noise)[0];
                        }
                        r.seed = seed;
                        if (agg.name.empty() || r.margin < agg.margin) {
                            const bool pass =
                                (agg.name.empty() || agg.pass) && r.pass;
                            agg = r;
                            agg.pass = pass;
                        } else {
                            agg.pass = agg.pass && r.pass;
                        }
                    }
                    std::ostringstream nm;
                    nm << sw_bound << "/n=" << n << "/eps=" << eps;
                    agg.name = nm.str();
                    reports.push_back(agg);
                }
            }
            emit(reports, sw_format, sw_out);
            return exit_code(reports);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

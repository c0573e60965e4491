#include "noisecube/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "noisecube/entropy.hpp"
#include "noisecube/noise.hpp"
#include "noisecube/symmetric.hpp"

namespace noisecube {

namespace {
constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr double kDegenerateTol = 1e-11;

std::uint64_t var_key(mask_t s_set, int i, mask_t r_set) {
    return (static_cast<std::uint64_t>(s_set) << 40) |
           (static_cast<std::uint64_t>(r_set) << 8) |
           static_cast<std::uint64_t>(i);
}
}  // namespace

int LpProblem::var_index(mask_t s_set, int i, mask_t r_set) const {
    // variables are enumerated in a fixed order; recompute by scan-free
    // arithmetic is not worth it at k <= 5, so use the side map built once
    for (std::size_t j = 0; j < vars.size(); ++j) {
        const LpVariable& v = vars[j];
        if (v.s_set == s_set && v.i == i && v.r_set == (r_set & s_set)) {
            return static_cast<int>(j);
        }
    }
    throw std::logic_error("LpProblem::var_index: unknown variable");
}

LpProblem build_lp(const BoundaryData& boundary, double lambda) {
    const int k = boundary.k;
    if (k < 1 || k > 5) {
        throw std::invalid_argument(
            "build_lp: k must lie in [1, 5]; got " + std::to_string(k));
    }
    LpProblem p;
    p.k = k;
    p.lambda = lambda;
    p.boundary = boundary;

    std::unordered_map<std::uint64_t, int> index;
    for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
        for (int i = 0; i < k; ++i) {
            if (!((s >> i) & 1u)) continue;
            mask_t sub = s;
            while (true) {
                index.emplace(var_key(s, i, sub),
                              static_cast<int>(p.vars.size()));
                p.vars.push_back({s, i, sub});
                if (sub == 0) break;
                sub = (sub - 1) & s;
            }
        }
    }
    auto at = [&](mask_t s, int i, mask_t r) {
        return index.at(var_key(s, i, r & s));
    };

    // constraint 1: x^0_{S,i} = y_{S,i}
    for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
        for (int i = 0; i < k; ++i) {
            if (!((s >> i) & 1u)) continue;
            p.equalities.push_back({{{at(s, i, 0), 1.0}}, boundary.y(s, i)});
        }
    }

    // constraint 3: per R, every permutation's path sum equals the identity
    // permutation's; rows deduplicated after folding
    std::vector<int> perm(k);
    std::set<std::vector<std::pair<int, double>>> seen;
    for (mask_t r = 0; r < (mask_t{1} << k); ++r) {
        std::vector<int> id_path(k);
        mask_t prefix = 0;
        for (int i = 0; i < k; ++i) {
            prefix |= mask_t{1} << i;
            id_path[i] = at(prefix, i, r);
        }
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::map<int, double> row;
            prefix = 0;
            for (int step = 0; step < k; ++step) {
                prefix |= mask_t{1} << perm[step];
                row[at(prefix, perm[step], r)] += 1.0;
            }
            for (int v : id_path) row[v] -= 1.0;
            std::vector<std::pair<int, double>> coeffs;
            for (auto& [v, c] : row) {
                if (std::fabs(c) > 0.5) coeffs.emplace_back(v, c);
            }
            if (coeffs.empty()) continue;
            if (coeffs.front().second < 0) {
                for (auto& [v, c] : coeffs) c = -c;
            }
            if (seen.insert(coeffs).second) {
                p.equalities.push_back({coeffs, 0.0});
            }
        }
    }

    // constraint 4: x^R_{S,i} <= lambda x^{R\i}_{S,i} for i in R
    for (std::size_t j = 0; j < p.vars.size(); ++j) {
        const LpVariable& v = p.vars[j];
        if (!((v.r_set >> v.i) & 1u)) continue;
        const int other = at(v.s_set, v.i, v.r_set & ~(mask_t{1} << v.i));
        p.inequalities.push_back(
            {{{static_cast<int>(j), 1.0}, {other, -lambda}}, 0.0});
    }

    // objective: max sum_i x^{[k]}_{{1..i}, i}
    p.objective.assign(p.vars.size(), 0.0);
    mask_t prefix = 0;
    for (int i = 0; i < k; ++i) {
        prefix |= mask_t{1} << i;
        p.objective[at(prefix, i, full_mask(k))] = 1.0;
    }
    return p;
}

namespace {

// Dense two-phase simplex tableau over nonnegative columns; rows were
// normalized to rhs >= 0 by the caller.
class SimplexTableau {
   public:
    SimplexTableau(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<double>(cols + 1, 0.0)),
          basis_(rows, -1) {}

    double& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    double& rhs(std::size_t r) { return a_[r][cols_]; }
    void set_basis(std::size_t r, int col) { basis_[r] = col; }

    // Dantzig pricing (most positive reduced cost, stable pivots) with
    // Bland's lowest-index rule as the anti-cycling fallback: a run of
    // degenerate pivots switches to Bland until the objective moves again.
    // Near-zero right-hand sides are treated as exact zeros so degenerate
    // ties resolve by index. Maximizes obj (dense, size cols). Returns
    // false iff unbounded.
    bool run(std::vector<double>& obj, double& value,
             const std::vector<bool>& allowed) {
        std::vector<double> cost = obj;  // reduced-cost row maintained in place
        double shift = 0.0;
        // price out the initial basis
        for (std::size_t r = 0; r < rows_; ++r) {
            int b = basis_[r];
            if (b >= 0 && std::fabs(cost[b]) > 0.0) {
                double c = cost[b];
                for (std::size_t j = 0; j < cols_; ++j) {
                    cost[j] -= c * a_[r][j];
                }
                shift += c * a_[r][cols_];
            }
        }
        const long long max_iter =
            10000 + 50 * static_cast<long long>(rows_ + cols_);
        int stall = 0;
        for (long long iter = 0; iter < max_iter; ++iter) {
            const bool bland = stall > 64;
            int enter = -1;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed[j] || cost[j] <= kReducedCostTol) continue;
                if (bland) {
                    enter = static_cast<int>(j);
                    break;
                }
                if (enter < 0 || cost[j] > cost[enter]) {
                    enter = static_cast<int>(j);
                }
            }
            if (enter < 0) {
                value = 0.0;
                for (std::size_t r = 0; r < rows_; ++r) {
                    if (basis_[r] >= 0) value += obj[basis_[r]] * a_[r][cols_];
                }
                return true;
            }
            // pass 1: minimum ratio, degenerate rows clamped to zero
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < rows_; ++r) {
                if (a_[r][enter] <= kPivotTol) continue;
                const double b = std::fabs(a_[r][cols_]) <= kDegenerateTol
                                     ? 0.0
                                     : a_[r][cols_];
                best_ratio = std::min(best_ratio, b / a_[r][enter]);
            }
            if (!std::isfinite(best_ratio)) return false;  // unbounded
            // pass 2 over rows within tolerance of the minimum: Bland picks
            // the lowest basic index, Dantzig the largest pivot element
            const double cutoff =
                best_ratio + 1e-9 * (1.0 + std::fabs(best_ratio));
            int leave = -1;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (a_[r][enter] <= kPivotTol) continue;
                const double b = std::fabs(a_[r][cols_]) <= kDegenerateTol
                                     ? 0.0
                                     : a_[r][cols_];
                if (b / a_[r][enter] > cutoff) continue;
                if (leave < 0) {
                    leave = static_cast<int>(r);
                } else if (bland) {
                    if (basis_[r] < basis_[leave]) leave = static_cast<int>(r);
                } else if (a_[r][enter] > a_[leave][enter]) {
                    leave = static_cast<int>(r);
                }
            }
            stall = best_ratio > kDegenerateTol ? 0 : stall + 1;
            pivot(static_cast<std::size_t>(leave),
                  static_cast<std::size_t>(enter), cost, shift);
        }
        throw std::logic_error("simplex: iteration limit exceeded");
    }

    void pivot(std::size_t pr, std::size_t pc, std::vector<double>& cost,
               double& shift) {
        const double inv = 1.0 / a_[pr][pc];
        for (std::size_t j = 0; j <= cols_; ++j) a_[pr][j] *= inv;
        a_[pr][pc] = 1.0;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const double factor = a_[r][pc];
            if (std::fabs(factor) <= 1e-300) continue;
            for (std::size_t j = 0; j <= cols_; ++j) {
                a_[r][j] -= factor * a_[pr][j];
            }
            a_[r][pc] = 0.0;
        }
        const double cfac = cost[pc];
        if (std::fabs(cfac) > 0.0) {
            for (std::size_t j = 0; j < cols_; ++j) {
                cost[j] -= cfac * a_[pr][j];
            }
            shift += cfac * a_[pr][cols_];
            cost[pc] = 0.0;
        }
        basis_[pr] = static_cast<int>(pc);
    }

    int basis(std::size_t r) const { return basis_[r]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double cell(std::size_t r, std::size_t c) const { return a_[r][c]; }

   private:
    std::size_t rows_, cols_;
    std::vector<std::vector<double>> a_;
    std::vector<int> basis_;
};

struct Presolved {
    std::vector<double> fixed;       // value where is_fixed
    std::vector<bool> is_fixed;
    std::vector<LpRow> equalities;   // over remaining vars (original indices)
    std::vector<LpRow> inequalities;
    std::vector<double> objective;
    double objective_offset = 0.0;
    bool inconsistent = false;
};

// Substitutes singleton equality rows (boundary fixing) until closure.
Presolved presolve(const LpProblem& p) {
    Presolved out;
    const std::size_t nv = p.vars.size();
    out.fixed.assign(nv, 0.0);
    out.is_fixed.assign(nv, false);
    out.equalities = p.equalities;
    out.inequalities = p.inequalities;
    out.objective = p.objective;

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& row : out.equalities) {
            int live = 0;
            double adj_rhs = row.rhs;
            for (auto& [v, c] : row.coeffs) {
                if (out.is_fixed[v]) {
                    adj_rhs -= c * out.fixed[v];
                } else {
                    ++live;
                }
            }
            if (live != 1) continue;
            for (auto& [v, c] : row.coeffs) {
                if (!out.is_fixed[v]) {
                    out.is_fixed[v] = true;
                    out.fixed[v] = adj_rhs / c;
                    changed = true;
                    break;
                }
            }
        }
    }

    auto reduce_rows = [&](std::vector<LpRow>& rows, bool equality) {
        std::vector<LpRow> kept;
        for (auto& row : rows) {
            LpRow nr;
            nr.rhs = row.rhs;
            for (auto& [v, c] : row.coeffs) {
                if (out.is_fixed[v]) {
                    nr.rhs -= c * out.fixed[v];
                } else {
                    nr.coeffs.emplace_back(v, c);
                }
            }
            if (nr.coeffs.empty()) {
                const bool bad =
                    equality ? std::fabs(nr.rhs) > kFeasTol : nr.rhs < -kFeasTol;
                if (bad) out.inconsistent = true;
                continue;
            }
            kept.push_back(std::move(nr));
        }
        rows = std::move(kept);
    };
    reduce_rows(out.equalities, true);
    reduce_rows(out.inequalities, false);

    for (std::size_t v = 0; v < nv; ++v) {
        if (out.is_fixed[v] && out.objective[v] != 0.0) {
            out.objective_offset += out.objective[v] * out.fixed[v];
            out.objective[v] = 0.0;
        }
    }
    return out;
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, bool allow_k5) {
    LpSolution sol;
    sol.status = LpStatus::kOptimal;
    if (p.k == 5 && !allow_k5) {
        throw std::invalid_argument(
            "solve_lp: k = 5 requires the explicit override flag");
    }

    const Presolved pre = presolve(p);
    if (pre.inconsistent) {
        sol.status = LpStatus::kInfeasible;
        return sol;
    }

    // remaining (free) variables, split x = u - v with u, v >= 0
    std::vector<int> live;  // original index per live slot
    std::vector<int> slot_of(p.vars.size(), -1);
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
        if (!pre.is_fixed[v]) {
            slot_of[v] = static_cast<int>(live.size());
            live.push_back(static_cast<int>(v));
        }
    }
    const std::size_t nl = live.size();
    const std::size_t n_ineq = pre.inequalities.size();
    const std::size_t n_eq = pre.equalities.size();
    const std::size_t rows = n_ineq + n_eq;

    if (rows == 0 || nl == 0) {
        // everything fixed by the boundary
        sol.objective = pre.objective_offset;
        sol.assignment.assign(p.vars.size(), 0.0);
        for (std::size_t v = 0; v < p.vars.size(); ++v) {
            if (pre.is_fixed[v]) sol.assignment[v] = pre.fixed[v];
        }
        return sol;
    }

    // column layout: [u_0..u_{nl-1}] [v_0..v_{nl-1}] [slacks] [artificials]
    std::size_t n_art = 0;
    std::vector<int> art_rows;
    // normalize rhs >= 0 row by row while filling the tableau
    const std::size_t cols_base = 2 * nl + n_ineq;
    // count artificials: every equality gets one; inequalities with rhs < 0
    // get one too (after negation they become >=)
    std::vector<int> row_art(rows, -1);
    for (std::size_t r = 0; r < n_ineq; ++r) {
        if (pre.inequalities[r].rhs < 0) row_art[r] = static_cast<int>(n_art++);
    }
    for (std::size_t r = 0; r < n_eq; ++r) {
        row_art[n_ineq + r] = static_cast<int>(n_art++);
    }
    const std::size_t cols = cols_base + n_art;

    SimplexTableau tab(rows, cols);
    std::vector<bool> allowed(cols, true);

    auto fill_row = [&](std::size_t r, const LpRow& row, bool flip,
                        int slack_col) {
        const double sgn = flip ? -1.0 : 1.0;
        for (auto& [v, c] : row.coeffs) {
            const int s = slot_of[v];
            tab.at(r, s) += sgn * c;
            tab.at(r, nl + s) -= sgn * c;
        }
        tab.rhs(r) = sgn * row.rhs;
        if (slack_col >= 0) {
            tab.at(r, static_cast<std::size_t>(slack_col)) = flip ? -1.0 : 1.0;
        }
    };

    for (std::size_t r = 0; r < n_ineq; ++r) {
        const bool flip = pre.inequalities[r].rhs < 0;
        fill_row(r, pre.inequalities[r], flip,
                 static_cast<int>(2 * nl + r));
        if (row_art[r] >= 0) {
            const std::size_t ac = cols_base + row_art[r];
            tab.at(r, ac) = 1.0;
            tab.set_basis(r, static_cast<int>(ac));
        } else {
            tab.set_basis(r, static_cast<int>(2 * nl + r));
        }
    }
    for (std::size_t r = 0; r < n_eq; ++r) {
        const std::size_t rr = n_ineq + r;
        const bool flip = pre.equalities[r].rhs < 0;
        fill_row(rr, pre.equalities[r], flip, -1);
        const std::size_t ac = cols_base + row_art[rr];
        tab.at(rr, ac) = 1.0;
        tab.set_basis(rr, static_cast<int>(ac));
    }

    // phase 1: maximize -(sum of artificials)
    if (n_art > 0) {
        std::vector<double> phase1(cols, 0.0);
        for (std::size_t a = 0; a < n_art; ++a) phase1[cols_base + a] = -1.0;
        double value = 0.0;
        tab.run(phase1, value, allowed);
        if (value < -kFeasTol) {
            sol.status = LpStatus::kInfeasible;
            return sol;
        }
        // pivot remaining basic artificials out where possible; forbid them
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab.basis(r) < static_cast<int>(cols_base)) continue;
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols_base; ++j) {
                if (std::fabs(tab.cell(r, j)) > kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < cols) {
                std::vector<double> dummy(cols, 0.0);
                double sh = 0.0;
                tab.pivot(r, enter, dummy, sh);
            }
        }
        for (std::size_t a = 0; a < n_art; ++a) allowed[cols_base + a] = false;
    }

    // phase 2
    std::vector<double> obj(cols, 0.0);
    for (std::size_t s = 0; s < nl; ++s) {
        obj[s] = pre.objective[live[s]];
        obj[nl + s] = -pre.objective[live[s]];
    }
    double value = 0.0;
    if (!tab.run(obj, value, allowed)) {
        sol.status = LpStatus::kUnbounded;
        return sol;
    }

    sol.assignment.assign(p.vars.size(), 0.0);
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
        if (pre.is_fixed[v]) sol.assignment[v] = pre.fixed[v];
    }
    for (std::size_t r = 0; r < rows; ++r) {
        const int b = tab.basis(r);
        if (b < 0 || b >= static_cast<int>(2 * nl)) continue;
        const std::size_t s = static_cast<std::size_t>(b) % nl;
        const double sign = static_cast<std::size_t>(b) < nl ? 1.0 : -1.0;
        sol.assignment[live[s]] += sign * tab.cell(r, cols);
    }
    sol.objective = 0.0;
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
        sol.objective += p.objective[v] * sol.assignment[v];
    }

    // feasibility residuals against the original rows
    double worst = 0.0;
    for (const auto& row : p.equalities) {
        double lhs = 0.0;
        for (auto& [v, c] : row.coeffs) lhs += c * sol.assignment[v];
        worst = std::max(worst, std::fabs(lhs - row.rhs));
    }
    for (const auto& row : p.inequalities) {
        double lhs = 0.0;
        for (auto& [v, c] : row.coeffs) lhs += c * sol.assignment[v];
        worst = std::max(worst, lhs - row.rhs);
    }
    sol.max_violation = worst;
    return sol;
}

namespace {
std::string coord_list(mask_t m) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if ((m >> i) & 1u) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

std::string var_name(const LpVariable& v) {
    return "x[S=" + coord_list(v.s_set) + ",i=" + std::to_string(v.i + 1) +
           ",R=" + coord_list(v.r_set) + "]";
}

void print_row(std::ostringstream& os, const LpRow& row, const char* rel) {
    bool first = true;
    for (auto& [v, c] : row.coeffs) {
        if (!first) os << " ";
        os << (c >= 0 ? "+" : "-") << std::fabs(c) << "*v" << v;
        first = false;
    }
    os << " " << rel << " " << row.rhs << "\n";
}
}  // namespace

std::string export_lp_text(const LpProblem& p) {
    std::ostringstream os;
    os.precision(17);
    os << "# noisy mutual information program, k=" << p.k
       << ", lambda=" << p.lambda << "\n";
    os << "# variables: " << p.vars.size() << " (free)\n";
    os << "maximize:";
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
        if (p.objective[v] != 0.0) {
            os << " +" << p.objective[v] << "*v" << v;
        }
    }
    os << "\n";
    for (const auto& row : p.equalities) print_row(os, row, "=");
    for (const auto& row : p.inequalities) print_row(os, row, "<=");
    os << "# variable name map\n";
    for (std::size_t v = 0; v < p.vars.size(); ++v) {
        os << "var v" << v << " " << var_name(p.vars[v]) << "\n";
    }
    return os.str();
}

FeasibleSolutionReport feasible_from_function(const CubeFunction& f, mask_t a,
                                              int m, const NoiseParam& noise) {
    a &= full_mask(f.n());
    const int k = popcount(a);
    if (k < 1 || k > 5) {
        throw std::invalid_argument("feasible_from_function: need 1 <= |A| <= 5");
    }
    if (m < 0 || m >= f.n() || ((a >> m) & 1u)) {
        throw std::invalid_argument("feasible_from_function: m must lie outside A");
    }
    int coords[kMaxDimension];
    int idx = 0;
    for (int c = 0; c < f.n(); ++c) {
        if ((a >> c) & 1u) coords[idx++] = c;
    }
    auto expand = [&](mask_t local) {
        mask_t out = 0;
        for (int j = 0; j < k; ++j) {
            if ((local >> j) & 1u) out |= mask_t{1} << coords[j];
        }
        return out;
    };
    const mask_t mm = mask_t{1} << m;

    // noisy copies f^R and memoized conditional entropies per R
    const std::size_t table = std::size_t{1} << f.n();
    std::vector<CubeFunction> noisy;
    noisy.reserve(std::size_t{1} << k);
    std::vector<std::vector<double>> ent_memo(
        std::size_t{1} << k,
        std::vector<double>(table, std::numeric_limits<double>::quiet_NaN()));
    for (mask_t r = 0; r < (mask_t{1} << k); ++r) {
        noisy.push_back(noise_apply_directions(f, noise, expand(r)));
    }
    auto ent = [&](mask_t r_local, mask_t set) {
        double& slot = ent_memo[r_local][set];
        if (std::isnan(slot)) slot = conditional_entropy(noisy[r_local], set);
        return slot;
    };
    auto x_val = [&](mask_t r_local, mask_t s_local, int i_local) {
        const mask_t s_coords = expand(s_local);
        const mask_t wo = s_coords & ~(mask_t{1} << coords[i_local]);
        return ent(r_local, s_coords | mm) - ent(r_local, wo | mm) -
               ent(r_local, s_coords) + ent(r_local, wo);
    };

    const BoundaryData boundary = y_boundary(f, a, m);
    const LpProblem p = build_lp(boundary, noise.lambda);

    FeasibleSolutionReport rep;
    rep.assignment.resize(p.vars.size());
    for (std::size_t j = 0; j < p.vars.size(); ++j) {
        const LpVariable& v = p.vars[j];
        rep.assignment[j] = x_val(v.r_set, v.s_set, v.i);
    }

    double worst = 0.0;
    for (const auto& row : p.equalities) {
        double lhs = 0.0;
        for (auto& [v, c] : row.coeffs) lhs += c * rep.assignment[v];
        worst = std::max(worst, std::fabs(lhs - row.rhs));
    }
    for (const auto& row : p.inequalities) {
        double lhs = 0.0;
        for (auto& [v, c] : row.coeffs) lhs += c * rep.assignment[v];
        worst = std::max(worst, lhs - row.rhs);
    }
    rep.max_constraint_residual = worst;

    // constraint 2 checked without folding: general R against R n S
    double fold = 0.0;
    for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
        for (int i = 0; i < k; ++i) {
            if (!((s >> i) & 1u)) continue;
            for (mask_t r = 0; r < (mask_t{1} << k); ++r) {
                fold = std::max(fold, std::fabs(x_val(r, s, i) -
                                                x_val(r & s, s, i)));
            }
        }
    }
    rep.max_fold_residual = fold;

    double objective = 0.0;
    mask_t prefix = 0;
    for (int i = 0; i < k; ++i) {
        prefix |= mask_t{1} << i;
        objective += x_val(full_mask(k), prefix, i);
    }
    rep.objective = objective;
    rep.direct_mi = mutual_info_sets(noisy[full_mask(k)], a, m);
    rep.ok = rep.max_constraint_residual <= kFeasTol &&
             rep.max_fold_residual <= kFeasTol &&
             std::fabs(rep.objective - rep.direct_mi) <= kFeasTol;
    return rep;
}

DominanceReport check_symmetric_dominance(const BoundaryData& boundary,
                                          double lambda) {
    DominanceReport rep;
    const LpProblem p = build_lp(boundary, lambda);
    const LpSolution sol = solve_lp(p);
    rep.status = sol.status;
    rep.lp_optimum = sol.objective;
    rep.symmetric_value =
        symmetric_value(SymmetricData(boundary.k, lambda,
                                      y_avg_profile(boundary)));
    rep.margin = rep.symmetric_value - rep.lp_optimum;
    rep.pass = sol.status == LpStatus::kOptimal && rep.margin >= -1e-7;
    return rep;
}

BoundaryData symmetric_boundary(const std::vector<double>& profile) {
    const int k = static_cast<int>(profile.size());
    BoundaryData b(k);
    for (mask_t s = 1; s < (mask_t{1} << k); ++s) {
        for (int i = 0; i < k; ++i) {
            if ((s >> i) & 1u) b.y(s, i) = profile[popcount(s) - 1];
        }
    }
    return b;
}

}  // namespace noisecube

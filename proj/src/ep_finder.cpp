#include "epnlab/ep_finder.hpp"

#include "epnlab/charpoly.hpp"
#include "epnlab/model.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace epnlab {

namespace {

struct EliminationLevels {
    std::vector<int> order;                      // variables eliminated, in sequence
    std::vector<std::vector<MultiPoly>> levels;  // levels[k]: polynomials before
                                                 // eliminating order[k]
    int keep_var = 0;
    UniPoly eliminant;
};

std::string order_string(const std::vector<int>& order) {
    std::ostringstream os;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) os << ", ";
        os << "var" << order[i];
    }
    return os.str();
}

UniPoly to_univariate(const MultiPoly& p, int var) {
    std::vector<Rat> zeros(p.nvars, Rat(0));
    return p.specialize(var, zeros);
}

EliminationLevels build_elimination(const std::vector<MultiPoly>& conds, int keep_var) {
    if (conds.empty()) throw std::invalid_argument("empty condition system");
    const int nv = conds.front().nvars;
    for (const auto& p : conds)
        if (p.nvars != nv) throw std::invalid_argument("mixed variable counts");
    if (keep_var < 0 || keep_var >= nv)
        throw std::invalid_argument("kept variable out of range");

    EliminationLevels rec;
    rec.keep_var = keep_var;
    if (keep_var != 0) rec.order.push_back(0);
    for (int v = nv - 1; v >= 1; --v)
        if (v != keep_var) rec.order.push_back(v);

    rec.levels.push_back(conds);
    for (int v : rec.order) {
        const auto& cur = rec.levels.back();
        int pivot = -1;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (cur[i].degree_in(v) > 0) { pivot = static_cast<int>(i); break; }
        if (pivot < 0)
            throw std::runtime_error("elimination failed: variable var" +
                                     std::to_string(v) + " absent (order tried: " +
                                     order_string(rec.order) + ")");
        std::vector<MultiPoly> next;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (static_cast<int>(i) == pivot) continue;
            if (cur[i].degree_in(v) == 0) {
                next.push_back(cur[i]);
                continue;
            }
            MultiPoly r = resultant(cur[pivot], cur[i], v);
            if (r.is_zero())
                throw std::runtime_error(
                    "elimination failed: resultant vanished identically (order tried: " +
                    order_string(rec.order) + ")");
            next.push_back(std::move(r));
        }
        rec.levels.push_back(std::move(next));
    }

    if (rec.levels.back().size() != 1)
        throw std::runtime_error("elimination failed: system is not square");
    const MultiPoly& last = rec.levels.back().front();
    for (int v = 0; v < nv; ++v)
        if (v != keep_var && last.degree_in(v) > 0)
            throw std::runtime_error("elimination failed: stray variable survived");
    rec.eliminant = squarefree(to_univariate(last, keep_var));
    return rec;
}

// tolerance for the exact refinement inside back-substitution; tight enough
// that squared perturbations at singular solutions stay below the residual gate
const Rat& backsub_tol() {
    static const Rat tol = [] {
        Int d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, 60);
        return Rat(1, d);
    }();
    return tol;
}

// backward-error style residual of a univariate polynomial at an exact point
double scaled_poly_residual(const UniPoly& p, const Rat& x) {
    Rat val = p.eval(x);
    double ax = std::abs(x.get_d());
    double scale = 0;
    for (std::size_t i = p.c.size(); i-- > 0;)
        scale = scale * ax + std::abs(p.c[i].get_d());
    double v = std::abs(val.get_d());
    return v / std::max(scale, 1e-300);
}

std::vector<Rat> univariate_roots_exact(const UniPoly& p) {
    UniPoly sf = squarefree(p);
    std::vector<Rat> out;
    for (const auto& iv : isolate_real_roots(sf))
        out.push_back(refine_root_exact(sf, iv, backsub_tol()));
    return out;
}

double eval_cond(const MultiPoly& p, const std::vector<double>& x) {
    return p.eval_double(x);
}

// damped multivariate Newton on the square system; returns nullopt on
// breakdown instead of throwing so extraneous candidates can be discarded
std::optional<std::vector<double>> newton_polish(const std::vector<MultiPoly>& conds,
                                                 std::vector<double> x, int max_iter) {
    const int m = static_cast<int>(conds.size());
    std::vector<std::vector<MultiPoly>> jac(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) jac[i].push_back(conds[i].derivative(j));

    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd f(m);
        Eigen::MatrixXd j(m, m);
        for (int i = 0; i < m; ++i) {
            f(i) = eval_cond(conds[i], x);
            for (int k = 0; k < m; ++k) j(i, k) = jac[i][k].eval_double(x);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
        if (!lu.isInvertible()) return std::nullopt;
        Eigen::VectorXd step = lu.solve(f);
        if (!step.allFinite()) return std::nullopt;
        double xnorm = 1;
        for (double v : x) xnorm = std::max(xnorm, std::abs(v));
        for (int k = 0; k < m; ++k) x[k] -= step(k);
        if (step.lpNorm<Eigen::Infinity>() <= 1e-14 * xnorm) return x;
    }
    return x;
}

double max_residual(const std::vector<MultiPoly>& conds, const std::vector<double>& x) {
    double r = 0;
    for (const auto& p : conds) r = std::max(r, std::abs(eval_cond(p, x)));
    return r;
}

void descend(const EliminationLevels& rec, const std::vector<MultiPoly>& conds,
             int level_idx, std::vector<std::optional<Rat>>& vals,
             double filter_tol, double final_tol,
             std::vector<std::vector<double>>& out) {
    const int nv = conds.front().nvars;
    if (level_idx < 0) {
        std::vector<double> x(nv);
        for (int v = 0; v < nv; ++v) x[v] = vals[v]->get_d();
        // polish regular solutions; singular ones keep their exact refinement
        std::vector<double> cand = x;
        if (auto polished = newton_polish(conds, x, 50)) {
            double moved = 0;
            for (int v = 0; v < nv; ++v)
                moved = std::max(moved, std::abs((*polished)[v] - x[v]));
            if (moved <= 1e-4 && max_residual(conds, *polished) <= max_residual(conds, x))
                cand = *polished;
        }
        if (max_residual(conds, cand) > final_tol) return;
        out.push_back(cand);
        return;
    }

    const int v = rec.order[level_idx];
    const auto& polys = rec.levels[level_idx];
    std::vector<Rat> fixed(nv, Rat(0));
    for (int u = 0; u < nv; ++u)
        if (vals[u]) fixed[u] = *vals[u];

    std::vector<UniPoly> specialized;
    for (const auto& p : polys) specialized.push_back(p.specialize(v, fixed));
    int pivot = -1;
    for (std::size_t i = 0; i < specialized.size(); ++i)
        if (specialized[i].degree() > 0) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) return;

    for (const Rat& cand : univariate_roots_exact(specialized[pivot])) {
        bool consistent = true;
        for (const auto& q : specialized)
            if (!q.is_zero() && scaled_poly_residual(q, cand) > filter_tol) {
                consistent = false;
                break;
            }
        if (!consistent) continue;
        vals[v] = cand;
        descend(rec, conds, level_idx - 1, vals, filter_tol, final_tol, out);
        vals[v].reset();
    }
}

std::vector<std::vector<double>> back_substitute_record(
    const EliminationLevels& rec, const std::vector<MultiPoly>& conds, const Rat& root,
    double filter_tol, double final_tol) {
    std::vector<std::optional<Rat>> vals(conds.front().nvars);
    vals[rec.keep_var] = root;
    std::vector<std::vector<double>> out;
    descend(rec, conds, static_cast<int>(rec.order.size()) - 1, vals, filter_tol,
            final_tol, out);
    return out;
}

void sort_dedup(std::vector<std::vector<double>>& sols, double tol) {
    std::sort(sols.begin(), sols.end());
    std::vector<std::vector<double>> unique;
    for (const auto& s : sols) {
        bool dup = false;
        for (const auto& u : unique) {
            double d = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                d = std::max(d, std::abs(s[i] - u[i]));
            if (d < tol) { dup = true; break; }
        }
        if (!dup) unique.push_back(s);
    }
    sols = std::move(unique);
}

bool monotone_positive(const std::vector<double>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] <= v[i + 1]) return false;
    return v.back() > 0;
}

}  // namespace

UniPoly eliminate_system(const std::vector<MultiPoly>& conds, int keep_var) {
    return build_elimination(conds, keep_var).eliminant;
}

std::vector<std::vector<double>> back_substitute(const std::vector<MultiPoly>& conds,
                                                 int keep_var, double root,
                                                 double filter_tol, double final_tol) {
    EliminationLevels rec = build_elimination(conds, keep_var);
    return back_substitute_record(rec, conds, Rat(root), filter_tol, final_tol);
}

std::vector<EPSolution> find_ep(int n, SelectionPolicy policy, int keep_var) {
    const int m = coupling_count(n);
    std::vector<MultiPoly> conds = ep_conditions(n);
    if (keep_var < 0) keep_var = m >= 2 ? 1 : 0;

    EliminationLevels rec = build_elimination(conds, keep_var);
    std::vector<std::vector<double>> candidates;
    for (const auto& iv : isolate_real_roots(rec.eliminant)) {
        Rat root = refine_root_exact(rec.eliminant, iv, backsub_tol());
        auto found = back_substitute_record(rec, conds, root, 1e-6, 1e-9);
        candidates.insert(candidates.end(), found.begin(), found.end());
    }
    sort_dedup(candidates, 1e-8);

    std::vector<EPSolution> out;
    for (const auto& v : candidates) {
        if (policy == SelectionPolicy::monotone && !monotone_positive(v)) continue;
        EPSolution s;
        s.n = n;
        s.couplings = v;
        s.eliminant = rec.eliminant;
        for (const auto& p : conds) s.condition_residuals.push_back(std::abs(eval_cond(p, v)));
        s.selection_policy = policy;
        out.push_back(std::move(s));
    }
    if (out.empty())
        throw std::runtime_error("no real " +
                                 std::string(policy == SelectionPolicy::monotone
                                                 ? "positive ordered "
                                                 : "") +
                                 "coalescence point found for n = " + std::to_string(n));
    return out;
}

EPSolution solve_ep_newton(int n, const std::vector<double>& initial) {
    const int m = coupling_count(n);
    if (static_cast<int>(initial.size()) != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " couplings");
    std::vector<MultiPoly> conds = ep_conditions(n);
    auto polished = newton_polish(conds, initial, 100);
    if (!polished) throw std::runtime_error("singular Jacobian in Newton iteration");
    if (max_residual(conds, *polished) > 1e-9)
        throw std::runtime_error("Newton iteration failed to converge after 100 steps");
    EPSolution s;
    s.n = n;
    s.couplings = *polished;
    for (const auto& p : conds) s.condition_residuals.push_back(std::abs(eval_cond(p, *polished)));
    s.selection_policy = SelectionPolicy::all;
    return s;
}

}  // namespace epnlab

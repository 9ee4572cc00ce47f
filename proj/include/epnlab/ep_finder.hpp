#pragma once

#include "epnlab/polyalg.hpp"

#include <vector>

namespace epnlab {

enum class SelectionPolicy { monotone, all };

struct EPSolution {
    int n = 0;
    std::vector<double> couplings;
    UniPoly eliminant;  // squarefree eliminant in the kept variable; zero when
                        // the solution did not come from an elimination chain
    std::vector<double> condition_residuals;
    SelectionPolicy selection_policy = SelectionPolicy::monotone;
};

// cascade of pairwise resultants reducing the square system to a single
// univariate polynomial in keep_var; returns its squarefree part
UniPoly eliminate_system(const std::vector<MultiPoly>& conds, int keep_var);

// all coupling vectors consistent with a fixed root of the eliminant, polished
// by Newton iteration and checked against every condition
std::vector<std::vector<double>> back_substitute(const std::vector<MultiPoly>& conds,
                                                 int keep_var, double root,
                                                 double filter_tol = 1e-6,
                                                 double final_tol = 1e-9);

// full exceptional-point search for the n-site chain; keep_var < 0 selects the
// default elimination target (the second coupling when there is one)
std::vector<EPSolution> find_ep(int n, SelectionPolicy policy = SelectionPolicy::monotone,
                                int keep_var = -1);

// independent multivariate Newton route from a user-supplied starting point
EPSolution solve_ep_newton(int n, const std::vector<double>& initial);

}  // namespace epnlab

#pragma once

#include "epnlab/model.hpp"

#include <stdexcept>

namespace epnlab {

struct TransitionMatrix {
    Matrix q;
    double similarity_residual = 0;
    double condition_number = 0;
};

// thrown when the generalized eigenvector chain terminates early; the achieved
// length equals the order of the degeneracy actually present
struct ChainBreakError : std::runtime_error {
    int achieved_length;
    ChainBreakError(const std::string& what, int achieved)
        : std::runtime_error(what), achieved_length(achieved) {}
};

// canonical nilpotent block: ones on the first superdiagonal
Matrix jordan_block(int n);

// Jordan chain q_1..q_n at eigenvalue zero, assembled column-wise and gauge
// fixed so the last component of q_n equals one
TransitionMatrix jordan_chain(const Matrix& h, double ep_tol = 1e-2,
                              double chain_tol = 1e-6, double rank_tol = 1e-8);

// ||H Q - Q J||_F / ||H||_F
double verify_similarity(const Matrix& h, const Matrix& q);

// order of the degeneracy at the eigenvalue nearest zero, from rank decay of
// shifted powers
int ep_order(const Matrix& h, double shift_tol = 1e-2, double rank_tol = 1e-8);

}  // namespace epnlab

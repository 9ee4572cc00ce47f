#pragma once

#include "epnlab/model.hpp"
#include "epnlab/polyalg.hpp"

namespace epnlab {

// det(E*I - H), monic in E; coeffs[k] multiplies E^k and is a polynomial
// in the floor(n/2) couplings
struct SecularPolynomial {
    int n = 0;
    std::vector<MultiPoly> coeffs;

    std::string to_string() const;
};

SecularPolynomial secular_symbolic(int n);

// the nontrivial non-leading secular coefficients, ordered by descending
// power of E; vanishing of all of them puts the n-fold degeneracy at E = 0
std::vector<MultiPoly> ep_conditions(int n);

// same determinant recurrence evaluated in complex floating point;
// returns monic coefficients ascending in E
std::vector<Complex> secular_numeric(const Matrix& h);

std::vector<std::string> coupling_names(int n);

}  // namespace epnlab

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace epnlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline int coupling_count(int n) { return n / 2; }

// A, B, C, ... from the outermost site inward; length floor(n/2)
struct CouplingVector {
    int n = 0;
    std::vector<double> values;

    CouplingVector(int n_, std::vector<double> v);
};

Matrix build_laplacian(int n);
Matrix build_potential(const CouplingVector& c);
Matrix build_hamiltonian(const CouplingVector& c);

// anti-diagonal site-reversal permutation
Matrix parity_matrix(int n);

// P * conj(H) * P == H within absolute tolerance
bool check_pt_symmetry(const Matrix& h, double tol = 1e-12);

}  // namespace epnlab

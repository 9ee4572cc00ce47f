#include "epnlab/model.hpp"

#include <cmath>
#include <stdexcept>

namespace epnlab {

CouplingVector::CouplingVector(int n_, std::vector<double> v) : n(n_), values(std::move(v)) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    if (values.size() != static_cast<size_t>(coupling_count(n)))
        throw std::invalid_argument("coupling vector needs floor(n/2) entries");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("coupling values must be finite");
}

Matrix build_laplacian(int n) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = -1.0;
        m(i + 1, i) = -1.0;
    }
    return m;
}

Matrix build_potential(const CouplingVector& c) {
    Matrix m = Matrix::Zero(c.n, c.n);
    for (int k = 0; k < coupling_count(c.n); ++k) {
        m(k, k) = Complex(0, -c.values[static_cast<size_t>(k)]);
        m(c.n - 1 - k, c.n - 1 - k) = Complex(0, c.values[static_cast<size_t>(k)]);
    }
    return m;
}

Matrix build_hamiltonian(const CouplingVector& c) {
    return build_laplacian(c.n) + build_potential(c);
}

Matrix parity_matrix(int n) {
    Matrix p = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1.0;
    return p;
}

bool check_pt_symmetry(const Matrix& h, double tol) {
    if (h.rows() != h.cols()) throw std::invalid_argument("matrix must be square");
    Matrix p = parity_matrix(static_cast<int>(h.rows()));
    Matrix t = p * h.conjugate() * p;
    return (t - h).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace epnlab

#include "epnlab/metric.hpp"

#include "epnlab/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace epnlab {

namespace {

MetricMatrix finish_metric(const Matrix& h, Matrix theta) {
    theta = 0.5 * (theta + theta.adjoint()).eval();
    MetricMatrix m;
    m.theta = theta;
    Eigen::SelfAdjointEigenSolver<Matrix> es(theta);
    m.eigenvalues.assign(es.eigenvalues().data(),
                         es.eigenvalues().data() + theta.rows());
    m.positive_definite = m.eigenvalues.front() > 0;
    m.quasi_hermiticity_residual = quasi_hermiticity_residual(h, theta);
    return m;
}

}  // namespace

MetricMatrix metric_from_left_eigenvectors(const Matrix& h, double tol_imag,
                                           double tol_gap) {
    EigenSystem sys = eigensystem(h, tol_imag, tol_gap);
    if (sys.spectrum.classification != SpectrumClass::real_nondegenerate)
        throw std::domain_error("metric undefined in the broken phase");

    const int n = static_cast<int>(h.rows());
    Matrix theta = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        Vector w = sys.left_vectors.col(k);
        Complex tail = w(n - 1);
        if (std::abs(tail) < 1e-12 * w.norm())
            throw std::runtime_error(
                "normalization failure: left eigenvector has vanishing last component");
        w /= tail;
        theta += w * w.adjoint();
    }
    return finish_metric(h, theta);
}

double quasi_hermiticity_residual(const Matrix& h, const Matrix& theta) {
    if (h.rows() != theta.rows() || h.cols() != theta.cols())
        throw std::invalid_argument("dimension mismatch");
    return (h.adjoint() * theta - theta * h).norm() / theta.norm();
}

MetricMatrix metric_family_n2(double a, double xi) {
    Matrix theta(2, 2);
    theta << Complex(1, 0), Complex(xi, -a), Complex(xi, a), Complex(1, 0);
    CouplingVector c{2, {a}};
    return finish_metric(build_hamiltonian(c), theta);
}

MetricMatrix metric_family_n3(double a, double xi, double eta) {
    Matrix theta(3, 3);
    theta << Complex(1, 0), Complex(eta, -a), Complex(xi, -a * eta),
        Complex(eta, a), Complex(xi + 1 + a * a, 0), Complex(eta, -a),
        Complex(xi, a * eta), Complex(eta, a), Complex(1, 0);
    CouplingVector c{3, {a}};
    return finish_metric(build_hamiltonian(c), theta);
}

double n3_coupling_from_t(double t) {
    if (std::abs(t) > 1)
        throw std::domain_error("coupling is imaginary for |t| > 1");
    return std::sqrt(2 - 2 * t * t);
}

Matrix n3_time_hamiltonian(double t) {
    if (std::abs(t) <= 1) return build_hamiltonian(CouplingVector{3, {n3_coupling_from_t(t)}});
    // past |t| = 1 the coupling turns imaginary and the matrix becomes real
    double g = std::sqrt(2 * t * t - 2);
    Matrix h(3, 3);
    h << Complex(g, 0), Complex(-1, 0), Complex(0, 0),
        Complex(-1, 0), Complex(0, 0), Complex(-1, 0),
        Complex(0, 0), Complex(-1, 0), Complex(-g, 0);
    return h;
}

std::array<double, 3> metric_eigs_n3_closed_form(double t) {
    double t2 = t * t;
    double disc = t2 * t2 - 36 * t2 + 36;
    if (disc < 0)
        throw std::domain_error("eigenvalue branch turns complex beyond t_max");
    double s = std::sqrt(disc);
    return {-3 * t2 + 6 - s, 4 * t2, -3 * t2 + 6 + s};
}

double metric_n3_t_max() { return std::sqrt(18 - std::sqrt(288.0)); }

std::pair<bool, double> positivity_check(const Matrix& theta) {
    double scale = std::max(1.0, theta.cwiseAbs().maxCoeff());
    if ((theta - theta.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("Hermitian matrix required");
    Eigen::SelfAdjointEigenSolver<Matrix> es(theta);
    double lo = es.eigenvalues()(0);
    return {lo > 0, lo};
}

}  // namespace epnlab

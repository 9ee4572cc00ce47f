#include "epnlab/spectral.hpp"

#include "epnlab/charpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace epnlab {

std::string to_string(SpectrumClass c) {
    switch (c) {
        case SpectrumClass::real_nondegenerate: return "real_nondegenerate";
        case SpectrumClass::real_degenerate: return "real_degenerate";
        case SpectrumClass::complex_eigenvalues: return "complex";
    }
    return "unknown";
}

namespace {

void sort_eigenvalues(std::vector<Complex>& e) {
    std::sort(e.begin(), e.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

double pairwise_min_gap(const std::vector<Complex>& e) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            g = std::min(g, std::abs(e[i] - e[j]));
    return e.size() < 2 ? std::numeric_limits<double>::infinity() : g;
}

double max_abs_imag(const std::vector<Complex>& e) {
    double m = 0;
    for (const auto& z : e) m = std::max(m, std::abs(z.imag()));
    return m;
}

Spectrum finish_spectrum(std::vector<Complex> eigs, double tol_imag, double tol_gap) {
    sort_eigenvalues(eigs);
    Spectrum s;
    s.min_gap = pairwise_min_gap(eigs);
    s.max_imag = max_abs_imag(eigs);
    s.classification = classify(eigs, tol_imag, tol_gap);
    s.eigenvalues = std::move(eigs);
    return s;
}

}  // namespace

SpectrumClass classify(const std::vector<Complex>& eigenvalues, double tol_imag, double tol_gap) {
    if (max_abs_imag(eigenvalues) > tol_imag) return SpectrumClass::complex_eigenvalues;
    if (pairwise_min_gap(eigenvalues) <= tol_gap) return SpectrumClass::real_degenerate;
    return SpectrumClass::real_nondegenerate;
}

Spectrum compute_spectrum(const Matrix& h, double tol_imag, double tol_gap) {
    if (h.rows() != h.cols() || h.rows() < 1)
        throw std::invalid_argument("square matrix required");
    Eigen::ComplexEigenSolver<Matrix> solver(h, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("dense eigensolver failed to converge");
    std::vector<Complex> eigs(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + h.rows());
    return finish_spectrum(std::move(eigs), tol_imag, tol_gap);
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& monic_coeffs) {
    if (monic_coeffs.empty() || std::abs(monic_coeffs.back() - Complex(1, 0)) > 1e-12)
        throw std::invalid_argument("monic coefficient vector required");
    const int deg = static_cast<int>(monic_coeffs.size()) - 1;
    if (deg == 0) return {};
    if (deg == 1) return {-monic_coeffs[0]};

    double radius = 0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(monic_coeffs[i]));
    radius = 1 + radius;

    std::vector<Complex> z(deg);
    for (int k = 0; k < deg; ++k) {
        double ang = 2 * M_PI * k / deg + 0.4;
        z[k] = 0.5 * radius * Complex(std::cos(ang), std::sin(ang));
    }

    auto eval = [&](const Complex& x, Complex& p, Complex& dp, double& scale) {
        p = Complex(1, 0);
        dp = Complex(0, 0);
        scale = 1;  // sum |c_i| |x|^i, roundoff scale for the backward-error stop
        double ax = std::abs(x);
        for (int i = deg - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + monic_coeffs[i];
            scale = scale * ax + std::abs(monic_coeffs[i]);
        }
    };

    std::vector<bool> done(deg, false);
    const int max_iter = 600;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int k = 0; k < deg; ++k) {
            if (done[k]) continue;
            Complex p, dp;
            double scale;
            eval(z[k], p, dp, scale);
            if (std::abs(p) <= 4e-15 * scale) {
                done[k] = true;
                continue;
            }
            all_done = false;
            if (std::abs(dp) < 1e-300) {
                z[k] += Complex(1e-8, 1e-8);
                continue;
            }
            Complex newton = p / dp;
            Complex repel(0, 0);
            for (int j = 0; j < deg; ++j) {
                if (j == k) continue;
                Complex d = z[k] - z[j];
                if (std::abs(d) < 1e-300) d = Complex(1e-30, 0);
                repel += Complex(1, 0) / d;
            }
            Complex denom = Complex(1, 0) - newton * repel;
            Complex step = std::abs(denom) < 1e-300 ? newton : newton / denom;
            z[k] -= step;
        }
        if (all_done) break;
    }
    if (iter == max_iter) {
        std::ostringstream os;
        os << "root finder failed to converge; iterates:";
        for (const auto& x : z) os << " (" << x.real() << "," << x.imag() << ")";
        throw std::runtime_error(os.str());
    }
    return z;
}

Spectrum compute_spectrum_secular(const Matrix& h, double tol_imag, double tol_gap) {
    std::vector<Complex> coeffs = secular_numeric(h);
    std::vector<Complex> roots = polynomial_roots(coeffs);
    return finish_spectrum(std::move(roots), tol_imag, tol_gap);
}

EigenSystem eigensystem(const Matrix& h, double tol_imag, double tol_gap) {
    Spectrum spec = compute_spectrum(h, tol_imag, tol_gap);
    if (spec.classification == SpectrumClass::real_degenerate)
        throw std::domain_error(
            "degenerate spectrum: exceptional point suspected, eigensystem refused");

    const int n = static_cast<int>(h.rows());
    Eigen::ComplexEigenSolver<Matrix> right(h, true);
    Eigen::ComplexEigenSolver<Matrix> left(Matrix(h.adjoint()), true);
    if (right.info() != Eigen::Success || left.info() != Eigen::Success)
        throw std::runtime_error("dense eigensolver failed to converge");

    // reorder right pairs to the sorted spectrum
    std::vector<int> r_perm(n), l_perm(n);
    std::vector<bool> r_used(n, false), l_used(n, false);
    for (int i = 0; i < n; ++i) {
        int best_r = -1, best_l = -1;
        double dr = std::numeric_limits<double>::infinity();
        double dl = dr;
        for (int j = 0; j < n; ++j) {
            if (!r_used[j]) {
                double d = std::abs(right.eigenvalues()(j) - spec.eigenvalues[i]);
                if (d < dr) { dr = d; best_r = j; }
            }
            if (!l_used[j]) {
                // H^dag eigenvalue pairs with conj(E)
                double d = std::abs(std::conj(left.eigenvalues()(j)) - spec.eigenvalues[i]);
                if (d < dl) { dl = d; best_l = j; }
            }
        }
        r_used[best_r] = true;
        l_used[best_l] = true;
        r_perm[i] = best_r;
        l_perm[i] = best_l;
    }

    EigenSystem sys;
    sys.spectrum = spec;
    sys.right_vectors.resize(n, n);
    sys.left_vectors.resize(n, n);
    sys.residuals.resize(n);
    const double hnorm = h.norm();
    for (int i = 0; i < n; ++i) {
        Vector v = right.eigenvectors().col(r_perm[i]);
        Vector w = left.eigenvectors().col(l_perm[i]);
        sys.right_vectors.col(i) = v;
        sys.left_vectors.col(i) = w;
        double res_r = (h * v - spec.eigenvalues[i] * v).norm();
        double res_l = (h.adjoint() * w - std::conj(spec.eigenvalues[i]) * w).norm();
        sys.residuals[i] = std::max(res_r, res_l) / std::max(hnorm, 1e-300);
    }
    return sys;
}

}  // namespace epnlab

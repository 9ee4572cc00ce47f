#pragma once

#include "epnlab/model.hpp"

#include <string>
#include <vector>

namespace epnlab {

enum class SpectrumClass { real_nondegenerate, real_degenerate, complex_eigenvalues };

std::string to_string(SpectrumClass c);

struct Spectrum {
    std::vector<Complex> eigenvalues;  // sorted by real part, then imaginary part
    SpectrumClass classification = SpectrumClass::complex_eigenvalues;
    double min_gap = 0;
    double max_imag = 0;
};

SpectrumClass classify(const std::vector<Complex>& eigenvalues, double tol_imag, double tol_gap);

// dense eigensolver route
Spectrum compute_spectrum(const Matrix& h, double tol_imag = 1e-8, double tol_gap = 1e-8);

// characteristic-polynomial route: determinant recurrence plus a
// simultaneous-iteration (Aberth) root finder
Spectrum compute_spectrum_secular(const Matrix& h, double tol_imag = 1e-8, double tol_gap = 1e-8);

// all roots of a monic polynomial with coefficients ascending in degree
std::vector<Complex> polynomial_roots(const std::vector<Complex>& monic_coeffs);

struct EigenSystem {
    Spectrum spectrum;
    Matrix right_vectors;  // columns
    Matrix left_vectors;   // columns, eigenvectors of the adjoint
    std::vector<double> residuals;
};

// paired left/right eigenvectors; refuses degenerate spectra
EigenSystem eigensystem(const Matrix& h, double tol_imag = 1e-8, double tol_gap = 1e-8);

}  // namespace epnlab

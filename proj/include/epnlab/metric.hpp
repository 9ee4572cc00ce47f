#pragma once

#include "epnlab/model.hpp"

#include <array>
#include <vector>

namespace epnlab {

struct MetricMatrix {
    Matrix theta;
    std::vector<double> eigenvalues;  // ascending
    bool positive_definite = false;
    double quasi_hermiticity_residual = 0;
};

// sum of rank-one projectors onto left eigenvectors, each normalized so its
// last component equals one; the tolerances gate the unbroken-phase test and
// may need loosening very close to a coalescence
MetricMatrix metric_from_left_eigenvectors(const Matrix& h, double tol_imag = 1e-8,
                                           double tol_gap = 1e-8);

// ||H^dag Theta - Theta H||_F / ||Theta||_F
double quasi_hermiticity_residual(const Matrix& h, const Matrix& theta);

// closed-form two-parameter families
MetricMatrix metric_family_n2(double a, double xi);
MetricMatrix metric_family_n3(double a, double xi, double eta);

// one-parameter time curve through the three-site family: a(t) = sqrt(2-2t^2)
double n3_coupling_from_t(double t);

// Hamiltonian along the time curve; past |t| = 1 the coupling turns imaginary
// and the matrix becomes real symmetric
Matrix n3_time_hamiltonian(double t);

// metric eigenvalues along the time curve, in the order (theta1, theta2, theta3)
std::array<double, 3> metric_eigs_n3_closed_form(double t);

// largest |t| for which the closed-form eigenvalues stay real
double metric_n3_t_max();

// (positive_definite, smallest eigenvalue); requires a Hermitian input
std::pair<bool, double> positivity_check(const Matrix& theta);

}  // namespace epnlab

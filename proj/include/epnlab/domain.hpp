#pragma once

#include "epnlab/model.hpp"
#include "epnlab/spectral.hpp"

#include <array>
#include <optional>
#include <vector>

namespace epnlab {

struct DomainSample {
    std::vector<double> couplings;
    SpectrumClass classification = SpectrumClass::complex_eigenvalues;
    double min_gap = 0;
    double max_imag = 0;
};

DomainSample classify_point(const CouplingVector& c, double tol_imag = 1e-8,
                            double tol_gap = 1e-8);

// four-site reality conditions: the secular quartic in E^2 has two positive
// real roots iff b < 0, c > 0 and the discriminant is positive
struct N4Inequalities {
    double b = 0;
    double c = 0;
    double disc = 0;
    bool inside = false;
};

N4Inequalities n4_inequalities(double a, double b);

struct GridSpec {
    int n = 2;
    std::vector<std::pair<double, double>> ranges;  // one per scanned coupling
    int resolution = 100;
    std::optional<double> slice;  // fixed value of the last coupling for n = 6
    double tol_imag = 1e-8;
    double tol_gap = 1e-8;
};

// row-major scan, first scanned coupling slowest; parallel but deterministic
std::vector<DomainSample> scan_grid(const GridSpec& spec);

// boundary line segments (x1, y1, x2, y2) extracted from the sign changes of a
// margin function on the grid
std::vector<std::array<double, 4>> boundary_segments(const GridSpec& spec,
                                                     bool use_inequalities = false);

// bisect |a| at which the two-site spectrum leaves the real axis
double n2_boundary(double lo = 0.5, double hi = 1.5, int iterations = 60);

// unitary-access corridor constraint P(a, beta, gamma)
double corridor_constraint(double a, double beta, double gamma);

// largest real root of the corridor constraint, continued from the four-site
// coalescence point at beta = 0
double track_corridor_root(double beta, double gamma);

}  // namespace epnlab

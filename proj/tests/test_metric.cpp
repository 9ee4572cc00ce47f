#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "epnlab/metric.hpp"
#include "epnlab/spectral.hpp"

using namespace epnlab;

TEST_CASE("two-site family entries and eigenvalues") {
    MetricMatrix id = metric_family_n2(0, 0);
    CHECK((id.theta - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(id.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(id.positive_definite);

    MetricMatrix m = metric_family_n2(0.6, 0.0);
    CHECK(m.eigenvalues[0] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(m.eigenvalues[1] == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(m.positive_definite);

    CHECK_FALSE(metric_family_n2(0.6, 0.9).positive_definite);
}

TEST_CASE("two-site family spectrum formula") {
    std::mt19937 rng(401);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        double a = u(rng), xi = u(rng);
        MetricMatrix m = metric_family_n2(a, xi);
        double s = std::sqrt(a * a + xi * xi);
        CHECK(m.eigenvalues[0] == doctest::Approx(1 - s).epsilon(1e-12));
        CHECK(m.eigenvalues[1] == doctest::Approx(1 + s).epsilon(1e-12));
        CHECK(m.positive_definite == (xi * xi < 1 - a * a));
        CHECK(quasi_hermiticity_residual(build_hamiltonian(CouplingVector(2, {a})),
                                         m.theta) <= 1e-12);
    }
}

TEST_CASE("three-site family at the reference points") {
    MetricMatrix m = metric_family_n3(0.5, 0, 0);
    double disc = std::sqrt(8 * 0.25 + 0.0625);
    CHECK(m.eigenvalues[0] == doctest::Approx(1 + (0.25 - disc) / 2).epsilon(1e-12));
    CHECK(m.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.eigenvalues[2] == doctest::Approx(1 + (0.25 + disc) / 2).epsilon(1e-12));
    CHECK(m.positive_definite);

    MetricMatrix boundary = metric_family_n3(1.0, 0, 0);
    CHECK(std::abs(boundary.eigenvalues[0]) <= 1e-10);
    CHECK_FALSE(boundary.positive_definite);

    MetricMatrix sheared = metric_family_n3(0.0, 0.3, 0.0);
    CHECK((sheared.theta - sheared.theta.adjoint()).norm() <= 1e-12);
    CHECK(sheared.positive_definite);
}

TEST_CASE("three-site family solves the intertwining relation") {
    std::mt19937 rng(402);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 60; ++trial) {
        double a = 1.3 * u(rng), xi = u(rng), eta = u(rng);
        MetricMatrix m = metric_family_n3(a, xi, eta);
        CHECK(quasi_hermiticity_residual(build_hamiltonian(CouplingVector(3, {a})),
                                         m.theta) <= 1e-12);
    }
}

TEST_CASE("identity fails as a metric away from hermiticity") {
    Matrix h = build_hamiltonian(CouplingVector(2, {0.5}));
    CHECK(quasi_hermiticity_residual(h, Matrix::Identity(2, 2)) > 0.1);
}

TEST_CASE("eigenvector metric in the hermitian limit") {
    MetricMatrix m = metric_from_left_eigenvectors(
        build_hamiltonian(CouplingVector(2, {0.0})));
    CHECK((m.theta - 2 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("eigenvector metric refuses the broken phase") {
    CHECK_THROWS_AS(
        metric_from_left_eigenvectors(build_hamiltonian(CouplingVector(2, {2.0}))),
        std::domain_error);
    CHECK_THROWS_AS(
        metric_from_left_eigenvectors(build_hamiltonian(CouplingVector(2, {1.0}))),
        std::domain_error);
}

TEST_CASE("eigenvector metric at random in-domain couplings") {
    std::mt19937 rng(403);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> box = {0.85, 0.85, 0.5, 0.5, 0.4};
    for (int n = 2; n <= 6; ++n) {
        int accepted = 0, attempts = 0;
        while (accepted < 20 && attempts < 2000) {
            ++attempts;
            std::vector<double> c(coupling_count(n));
            for (auto& v : c) v = box[n - 2] * u(rng);
            Matrix h = build_hamiltonian(CouplingVector(n, c));
            if (compute_spectrum(h).classification != SpectrumClass::real_nondegenerate)
                continue;
            ++accepted;
            MetricMatrix m = metric_from_left_eigenvectors(h);
            CHECK(m.quasi_hermiticity_residual <= 1e-9);
            CHECK(m.positive_definite);
            CHECK((m.theta - m.theta.adjoint()).norm() <= 1e-12 * m.theta.norm());
        }
        CHECK(accepted == 20);
    }
}

TEST_CASE("time curve hamiltonians") {
    CHECK(n3_coupling_from_t(0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(n3_coupling_from_t(1.0) == 0.0);
    CHECK_THROWS_AS(n3_coupling_from_t(1.2), std::domain_error);

    Matrix inside = n3_time_hamiltonian(0.5);
    CHECK(check_pt_symmetry(inside));
    CHECK(inside(0, 0) == Complex(0, -std::sqrt(1.5)));

    // past t = 1 the potential turns real and the matrix stays symmetric
    Matrix outside = n3_time_hamiltonian(1.05);
    CHECK(outside.imag().cwiseAbs().maxCoeff() == 0.0);
    CHECK((outside - outside.transpose()).norm() == 0.0);
    // A = i*g for t > 1, so the first diagonal entry -iA becomes +g
    double g = std::sqrt(2 * 1.05 * 1.05 - 2);
    CHECK(outside(0, 0).real() == doctest::Approx(g).epsilon(1e-15));

    Matrix at_one = n3_time_hamiltonian(1.0);
    CHECK((at_one - build_hamiltonian(CouplingVector(3, {0.0}))).norm() == 0.0);
}

TEST_CASE("closed-form eigenvalues at the marked times") {
    auto at1 = metric_eigs_n3_closed_form(1.0);
    CHECK(at1[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(at1[1] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(at1[2] == doctest::Approx(4.0).epsilon(1e-12));

    auto at0 = metric_eigs_n3_closed_form(0.0);
    CHECK(at0[0] == 0.0);
    CHECK(at0[1] == 0.0);
    CHECK(at0[2] == doctest::Approx(12.0).epsilon(1e-14));

    auto small = metric_eigs_n3_closed_form(0.1);
    CHECK(small[1] == doctest::Approx(0.04).epsilon(1e-14));
    double series = (2.0 / 3) * 1e-4 + (1.0 / 3) * 1e-6;
    CHECK(std::abs(small[0] - series) <= 1e-7);
}

TEST_CASE("closed form matches the eigenvector construction") {
    for (int k = 1; k <= 10; ++k) {
        double t = 0.05 + (1.0 - 0.05) * k / 10;
        auto closed = metric_eigs_n3_closed_form(t);
        std::sort(closed.begin(), closed.end());
        MetricMatrix m = metric_from_left_eigenvectors(n3_time_hamiltonian(t));
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(closed[i] - m.eigenvalues[i]) <= 1e-8);
    }
}

TEST_CASE("small-time hierarchy of metric eigenvalues") {
    for (double t : {0.05, 0.1}) {
        auto e = metric_eigs_n3_closed_form(t);
        CHECK(e[0] > 0);
        CHECK(e[0] < e[1] / 10);
        CHECK(e[1] < e[2] / 10);
    }
}

TEST_CASE("branch endpoint of the closed form") {
    double tmax = metric_n3_t_max();
    CHECK(tmax == doctest::Approx(1.014611872).epsilon(1e-9));
    CHECK(tmax == doctest::Approx(std::sqrt(18 - std::sqrt(288.0))).epsilon(1e-15));
    double disc = std::pow(tmax, 4) - 36 * tmax * tmax + 36;
    CHECK(std::abs(disc) <= 1e-12);

    // between t = 1 and t_max the middle and top branches swap
    for (double t : {1.005, 1.01, 1.014}) {
        auto e = metric_eigs_n3_closed_form(t);
        CHECK(e[0] < e[2]);
        CHECK(e[2] < e[1]);
    }
    CHECK_THROWS_AS(metric_eigs_n3_closed_form(1.05), std::domain_error);
}

TEST_CASE("eigenvector metric continues past the closed-form branch") {
    // the real symmetric continuation keeps a positive-definite metric even
    // where the closed-form branch has turned complex
    MetricMatrix m = metric_from_left_eigenvectors(n3_time_hamiltonian(1.05));
    CHECK(m.positive_definite);
    CHECK(m.quasi_hermiticity_residual <= 1e-9);
}

TEST_CASE("positivity verdicts") {
    auto [pd, mineig] = positivity_check(Matrix::Identity(3, 3));
    CHECK(pd);
    CHECK(mineig == doctest::Approx(1.0).epsilon(1e-14));

    auto [pd2, mineig2] = positivity_check(metric_family_n3(1.0, 0, 0).theta);
    CHECK_FALSE(pd2);
    CHECK(std::abs(mineig2) <= 1e-10);

    Matrix bad(2, 2);
    bad << Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0);
    CHECK_THROWS_AS(positivity_check(bad), std::invalid_argument);
}

TEST_CASE("metric ambiguity is two-parametric beyond scale") {
    // real-linear intertwining map over the 9-dimensional Hermitian space
    Matrix h = build_hamiltonian(CouplingVector(3, {0.5}));
    std::vector<Matrix> basis;
    for (int i = 0; i < 3; ++i) {
        Matrix e = Matrix::Zero(3, 3);
        e(i, i) = 1;
        basis.push_back(e);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Matrix re = Matrix::Zero(3, 3), im = Matrix::Zero(3, 3);
            re(i, j) = re(j, i) = 1;
            im(i, j) = Complex(0, 1);
            im(j, i) = Complex(0, -1);
            basis.push_back(re);
            basis.push_back(im);
        }
    Eigen::MatrixXd sys(18, 9);
    for (int k = 0; k < 9; ++k) {
        Matrix image = h.adjoint() * basis[k] - basis[k] * h;
        for (int idx = 0; idx < 9; ++idx) {
            sys(2 * idx, k) = image(idx / 3, idx % 3).real();
            sys(2 * idx + 1, k) = image(idx / 3, idx % 3).imag();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
    int nullity = 0;
    for (int k = 0; k < 9; ++k)
        if (svd.singularValues()(k) <= 1e-10 * svd.singularValues()(0)) ++nullity;
    CHECK(nullity == 3);
}

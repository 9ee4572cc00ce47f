#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "epnlab/charpoly.hpp"
#include "epnlab/ep_finder.hpp"
#include "epnlab/spectral.hpp"

using namespace epnlab;

namespace {

UniPoly up(std::vector<long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return UniPoly(std::move(c));
}

bool contains_vector(const std::vector<EPSolution>& sols, const std::vector<double>& c,
                     double tol) {
    for (const auto& s : sols) {
        double worst = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            worst = std::max(worst, std::abs(s.couplings[k] - c[k]));
        if (worst <= tol) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("single condition passes through elimination") {
    auto conds = ep_conditions(2);
    UniPoly e = eliminate_system(conds, 0);
    CHECK(e == up({-1, 0, 1}));

    UniPoly e3 = eliminate_system(ep_conditions(3), 0);
    CHECK(e3 == up({-2, 0, 1}));
}

TEST_CASE("four-site eliminant contains the reference factor") {
    UniPoly e = eliminate_system(ep_conditions(4), 1);
    CHECK(e == up({4, 0, -28, 0, 24, 0, -8, 0, 1}));
    UniPoly q;
    CHECK(e.try_divide(up({-2, 6, -2, -2, 1}), q));
}

TEST_CASE("five-site eliminant splits into mirror quartics") {
    UniPoly e = eliminate_system(ep_conditions(5), 1);
    CHECK(e == up({25, 0, -76, 0, 50, 0, -12, 0, 1}));
    UniPoly q;
    CHECK(e.try_divide(up({5, -6, -4, 2, 1}), q));
}

TEST_CASE("six-site eliminant has the degree-23 reference factor") {
    UniPoly e = eliminate_system(ep_conditions(6), 1);
    CHECK(e.degree() == 94);
    UniPoly p6 = up({32,   160,  -96,  -1248, -1200, 2320, 5678, -703,
                     -7072, -6668, 4008, 11164, 16,   -8492, -1308, 3782,
                     768,  -1060, -216, 188,   32,   -20,   -2,    1});
    UniPoly q;
    CHECK(e.try_divide(p6, q));
}

TEST_CASE("elimination rejects a collapsed system") {
    auto conds = ep_conditions(4);
    CHECK_THROWS_AS(eliminate_system({conds[0], conds[0]}, 1), std::runtime_error);
}

TEST_CASE("back substitution recovers the companion couplings") {
    auto c4 = back_substitute(ep_conditions(4), 1, 0.4060952085);
    REQUIRE(!c4.empty());
    bool found4 = false;
    for (const auto& v : c4)
        found4 = found4 || std::abs(v[0] - 1.683771565) < 1e-8;
    CHECK(found4);

    auto c5 = back_substitute(ep_conditions(5), 1, 0.6683178062);
    bool found5 = false;
    for (const auto& v : c5)
        found5 = found5 || std::abs(v[0] - 1.885033504) < 1e-8;
    CHECK(found5);

    auto c6 = back_substitute(ep_conditions(6), 1, 0.8635733388);
    bool found6 = false;
    for (const auto& v : c6)
        found6 = found6 || (std::abs(v[0] - 2.0460610816) < 1e-8 &&
                            std::abs(v[2] - 0.2605285762) < 1e-8);
    CHECK(found6);
}

TEST_CASE("extraneous eliminant roots yield no completions") {
    // two of the real roots of the six-site eliminant have no real completion
    for (double root : {0.157121, 0.234105}) {
        UniPoly e = eliminate_system(ep_conditions(6), 1);
        auto ivs = isolate_real_roots(e);
        double refined = 0;
        for (const auto& iv : ivs) {
            double r = refine_root(e, iv, 1e-12);
            if (std::abs(r - root) < 1e-4) refined = r;
        }
        REQUIRE(refined != 0);
        auto completions = back_substitute(ep_conditions(6), 1, refined);
        for (const auto& v : completions) {
            // any completion here would break the monotone ordering
            CHECK(!(v[0] > v[1] && v[1] > v[2] && v[2] > 0));
        }
    }
}

TEST_CASE("monotone search reproduces the reference column") {
    struct Row {
        int n;
        std::vector<double> c;
    };
    std::vector<Row> rows = {{2, {1.0}},
                             {3, {1.4142135624}},
                             {4, {1.6837715646, 0.4060952085}},
                             {5, {1.8850335036, 0.6683178062}},
                             {6, {2.0460610816, 0.8635733388, 0.2605285762}}};
    for (const auto& row : rows) {
        auto sols = find_ep(row.n);
        REQUIRE(sols.size() == 1);
        const auto& s = sols[0];
        CHECK(s.n == row.n);
        for (std::size_t k = 0; k < row.c.size(); ++k)
            CHECK(s.couplings[k] == doctest::Approx(row.c[k]).epsilon(1e-9));
        for (double r : s.condition_residuals) CHECK(std::abs(r) <= 1e-9);
        for (std::size_t k = 1; k < s.couplings.size(); ++k)
            CHECK(s.couplings[k] < s.couplings[k - 1]);
        CHECK(s.couplings.back() > 0);
    }
}

TEST_CASE("policy all finds every sign orbit") {
    auto sols4 = find_ep(4, SelectionPolicy::all);
    CHECK(sols4.size() == 4);
    CHECK(contains_vector(sols4, {1.6837715646, 0.4060952085}, 1e-8));
    CHECK(contains_vector(sols4, {-1.6837715646, -0.4060952085}, 1e-8));
    CHECK(contains_vector(sols4, {0.3715069740, -1.6917395096}, 1e-8));
    CHECK(contains_vector(sols4, {-0.3715069740, 1.6917395096}, 1e-8));

    auto sols6 = find_ep(6, SelectionPolicy::all);
    CHECK(sols6.size() == 12);
    // both unit-interval candidates complete to real solutions
    CHECK(contains_vector(sols6, {2.0460610816, 0.8635733388, 0.2605285762}, 1e-8));
    bool unexpected = false;
    for (const auto& s : sols6)
        unexpected = unexpected || std::abs(s.couplings[1] - 0.4333101655) < 1e-8;
    CHECK(unexpected);
    // the axis solution with a vanishing first coupling survives exact refinement
    CHECK(contains_vector(sols6, {0.0, 2.0, -1.0}, 1e-8));
}

TEST_CASE("sign symmetry of the condition system") {
    for (int n = 4; n <= 6; ++n) {
        auto conds = ep_conditions(n);
        for (const auto& s : find_ep(n, SelectionPolicy::all)) {
            std::vector<double> negated;
            for (double v : s.couplings) negated.push_back(-v);
            for (const auto& cond : conds)
                CHECK(std::abs(cond.eval_double(negated)) <= 1e-8);
        }
    }
}

TEST_CASE("newton oracle agrees with the exact pipeline") {
    struct Seed {
        int n;
        std::vector<double> start;
    };
    std::vector<Seed> seeds = {{3, {1.4}}, {4, {1.7, 0.4}}, {5, {1.9, 0.65}},
                               {6, {2.0, 0.9, 0.3}}};
    for (const auto& seed : seeds) {
        EPSolution newton = solve_ep_newton(seed.n, seed.start);
        auto exact = find_ep(seed.n);
        REQUIRE(exact.size() == 1);
        for (std::size_t k = 0; k < newton.couplings.size(); ++k)
            CHECK(newton.couplings[k] ==
                  doctest::Approx(exact[0].couplings[k]).epsilon(1e-8));
        for (double r : newton.condition_residuals) CHECK(std::abs(r) <= 1e-12);
    }
}

TEST_CASE("newton route reports breakdowns") {
    CHECK_THROWS_AS(solve_ep_newton(4, {0.0, 0.0}), std::runtime_error);
}

TEST_CASE("solutions collapse the spectrum") {
    for (int n = 2; n <= 6; ++n) {
        auto sols = find_ep(n);
        Matrix h = build_hamiltonian(CouplingVector(n, sols[0].couplings));
        Spectrum s = compute_spectrum(h, 1.0, 1.0);
        double tol = std::max(1e-4, 10 * std::pow(1e-15, 1.0 / n));
        for (const auto& e : s.eigenvalues) CHECK(std::abs(e) <= tol);
    }
}

TEST_CASE("printed degree-23 factor nearly vanishes at both candidates") {
    UniPoly p6 = up({32,   160,  -96,  -1248, -1200, 2320, 5678, -703,
                     -7072, -6668, 4008, 11164, 16,   -8492, -1308, 3782,
                     768,  -1060, -216, 188,   32,   -20,   -2,    1});
    double spread = 0;
    for (double x = 0; x <= 1.0; x += 1.0 / 64)
        spread = std::max(spread, std::abs(p6.eval(x)));
    for (double root : {0.8635733388, 0.4333101655})
        CHECK(std::abs(p6.eval(root)) <= 1e-6 * spread);
}

TEST_CASE("solution lists are deterministic and sorted") {
    auto a = find_ep(6, SelectionPolicy::all);
    auto b = find_ep(6, SelectionPolicy::all);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < a[i].couplings.size(); ++k)
            CHECK(a[i].couplings[k] == b[i].couplings[k]);
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(a[i - 1].couplings < a[i].couplings);
}

#include "epnlab/domain.hpp"

#include "epnlab/polyalg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace epnlab {

DomainSample classify_point(const CouplingVector& c, double tol_imag, double tol_gap) {
    Spectrum s = compute_spectrum(build_hamiltonian(c), tol_imag, tol_gap);
    DomainSample d;
    d.couplings = c.values;
    d.classification = s.classification;
    d.min_gap = s.min_gap;
    d.max_imag = s.max_imag;
    return d;
}

N4Inequalities n4_inequalities(double a, double b) {
    N4Inequalities q;
    q.b = a * a + b * b - 3;
    q.c = (1 + a * b) * (1 + a * b) - a * a;
    q.disc = q.b * q.b - 4 * q.c;
    q.inside = q.b < 0 && q.c > 0 && q.disc > 0;
    return q;
}

namespace {

int thread_budget(int rows) {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("EPNLAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return std::min(n, rows);
}

std::vector<double> axis_points(const std::pair<double, double>& range, int res) {
    std::vector<double> pts(res);
    for (int i = 0; i < res; ++i)
        pts[i] = range.first + i * (range.second - range.first) / (res - 1);
    return pts;
}

void check_grid(const GridSpec& spec) {
    int m = coupling_count(spec.n);
    if (spec.resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    if (spec.ranges.empty() || spec.ranges.size() > 2)
        throw std::invalid_argument("one or two scan ranges required");
    std::size_t scanned = spec.ranges.size() + (spec.slice ? 1 : 0);
    if (scanned != static_cast<std::size_t>(m)) {
        std::ostringstream os;
        os << "grid dimension mismatch: " << m << " couplings for n = " << spec.n
           << " but " << scanned << " were specified";
        if (m > 2 && !spec.slice) os << " (a slice of the last coupling is required)";
        throw std::invalid_argument(os.str());
    }
}

CouplingVector grid_couplings(const GridSpec& spec,
                              const std::vector<std::vector<double>>& axes,
                              int i, int j) {
    std::vector<double> v;
    v.push_back(axes[0][i]);
    if (axes.size() > 1) v.push_back(axes[1][j]);
    if (spec.slice) v.push_back(*spec.slice);
    return CouplingVector{spec.n, v};
}

}  // namespace

std::vector<DomainSample> scan_grid(const GridSpec& spec) {
    check_grid(spec);
    std::vector<std::vector<double>> axes;
    for (const auto& r : spec.ranges) axes.push_back(axis_points(r, spec.resolution));

    const int rows = spec.resolution;
    const int cols = axes.size() > 1 ? spec.resolution : 1;
    std::vector<DomainSample> samples(static_cast<std::size_t>(rows) * cols);

    std::atomic<int> next_row{0};
    auto worker = [&]() {
        for (;;) {
            int i = next_row.fetch_add(1);
            if (i >= rows) return;
            for (int j = 0; j < cols; ++j)
                samples[static_cast<std::size_t>(i) * cols + j] = classify_point(
                    grid_couplings(spec, axes, i, j), spec.tol_imag, spec.tol_gap);
        }
    };
    int nthreads = thread_budget(rows);
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return samples;
}

namespace {

double sample_margin(const DomainSample& d, const GridSpec& spec) {
    return std::min(d.min_gap - spec.tol_gap, spec.tol_imag - d.max_imag);
}

double edge_cross(double xa, double xb, double va, double vb) {
    return xa + (0 - va) / (vb - va) * (xb - xa);
}

}  // namespace

std::vector<std::array<double, 4>> boundary_segments(const GridSpec& spec,
                                                     bool use_inequalities) {
    check_grid(spec);
    if (spec.ranges.size() != 2)
        throw std::invalid_argument("boundary extraction requires a two-axis grid");
    if (use_inequalities && spec.n != 4)
        throw std::invalid_argument("inequality margin only available for n = 4");

    auto ax = axis_points(spec.ranges[0], spec.resolution);
    auto ay = axis_points(spec.ranges[1], spec.resolution);
    const int res = spec.resolution;
    std::vector<double> margin(static_cast<std::size_t>(res) * res);
    if (use_inequalities) {
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j) {
                N4Inequalities q = n4_inequalities(ax[i], ay[j]);
                margin[static_cast<std::size_t>(i) * res + j] =
                    std::min({-q.b, q.c, q.disc});
            }
    } else {
        auto samples = scan_grid(spec);
        for (std::size_t k = 0; k < samples.size(); ++k)
            margin[k] = sample_margin(samples[k], spec);
    }

    auto at = [&](int i, int j) { return margin[static_cast<std::size_t>(i) * res + j]; };
    std::vector<std::array<double, 4>> segments;
    for (int i = 0; i + 1 < res; ++i) {
        for (int j = 0; j + 1 < res; ++j) {
            double v00 = at(i, j), v10 = at(i + 1, j);
            double v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            int idx = (v00 > 0 ? 1 : 0) | (v10 > 0 ? 2 : 0) | (v11 > 0 ? 4 : 0) |
                      (v01 > 0 ? 8 : 0);
            if (idx == 0 || idx == 15) continue;
            // edge midpoints by linear interpolation
            double bx = edge_cross(ax[i], ax[i + 1], v00, v10), by = ay[j];
            double tx = edge_cross(ax[i], ax[i + 1], v01, v11), ty = ay[j + 1];
            double lx = ax[i], ly = edge_cross(ay[j], ay[j + 1], v00, v01);
            double rx = ax[i + 1], ry = edge_cross(ay[j], ay[j + 1], v10, v11);
            auto add = [&](double x1, double y1, double x2, double y2) {
                segments.push_back({x1, y1, x2, y2});
            };
            switch (idx) {
                case 1: case 14: add(bx, by, lx, ly); break;
                case 2: case 13: add(bx, by, rx, ry); break;
                case 3: case 12: add(lx, ly, rx, ry); break;
                case 4: case 11: add(tx, ty, rx, ry); break;
                case 6: case 9: add(bx, by, tx, ty); break;
                case 7: case 8: add(lx, ly, tx, ty); break;
                case 5: case 10: {
                    double center = 0.25 * (v00 + v10 + v01 + v11);
                    bool flip = (center > 0) == (idx == 5);
                    if (flip) {
                        add(bx, by, rx, ry);
                        add(lx, ly, tx, ty);
                    } else {
                        add(bx, by, lx, ly);
                        add(tx, ty, rx, ry);
                    }
                    break;
                }
            }
        }
    }
    return segments;
}

double n2_boundary(double lo, double hi, int iterations) {
    auto inside = [](double a) {
        DomainSample d = classify_point(CouplingVector{2, {a}});
        return d.classification == SpectrumClass::real_nondegenerate;
    };
    if (!inside(lo) || inside(hi))
        throw std::invalid_argument("bracket does not straddle the boundary");
    for (int k = 0; k < iterations; ++k) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double corridor_constraint(double a, double beta, double gamma) {
    double t = a * std::cosh(beta) - 1;
    return a * a * a * a + t * t - 3 * a * a +
           2 * a * a * a * std::sinh(beta) * std::cos(gamma);
}

namespace {

double corridor_seed() {
    // largest root of the beta = 0 reduction a^4 - 2a^2 - 2a + 1
    static const double seed = [] {
        UniPoly p{{Int(1), Int(-2), Int(-2), Int(0), Int(1)}};
        auto roots = isolate_real_roots(p);
        for (const auto& iv : roots) {
            double r = refine_root(p, iv, 1e-14);
            if (r > 1) return r;
        }
        throw std::logic_error("seed root not found");
    }();
    return seed;
}

double newton_corridor(double a0, double beta, double gamma) {
    double a = a0;
    for (int k = 0; k < 100; ++k) {
        double f = corridor_constraint(a, beta, gamma);
        double t = a * std::cosh(beta) - 1;
        double df = 4 * a * a * a + 2 * t * std::cosh(beta) - 6 * a +
                    6 * a * a * std::sinh(beta) * std::cos(gamma);
        if (std::abs(df) < 1e-14) throw std::runtime_error("corridor root: flat derivative");
        double step = f / df;
        a -= step;
        if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(a))) break;
    }
    if (std::abs(corridor_constraint(a, beta, gamma)) > 1e-9)
        throw std::runtime_error("corridor root lost during continuation");
    return a;
}

}  // namespace

double track_corridor_root(double beta, double gamma) {
    double a = corridor_seed();
    int nsteps = std::max(1, static_cast<int>(std::ceil(std::abs(beta) / 0.02)));
    for (int k = 1; k <= nsteps; ++k)
        a = newton_corridor(a, beta * k / nsteps, gamma);
    return a;
}

}  // namespace epnlab

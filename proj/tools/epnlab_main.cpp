#include "epnlab/acceptance.hpp"
#include "epnlab/charpoly.hpp"
#include "epnlab/domain.hpp"
#include "epnlab/emit.hpp"
#include "epnlab/ep_finder.hpp"
#include "epnlab/jordan.hpp"
#include "epnlab/metric.hpp"
#include "epnlab/model.hpp"
#include "epnlab/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace epnlab;
using nlohmann::json;

std::vector<double> parse_couplings(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = std::stod(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::invalid_argument("malformed coupling list: '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty coupling list");
    return out;
}

std::vector<std::pair<double, double>> parse_ranges(const std::string& text) {
    std::vector<std::pair<double, double>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("range must look like lo:hi, got '" + item + "'");
        out.push_back({std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1))});
    }
    if (out.empty()) throw std::invalid_argument("empty range list");
    return out;
}

void deliver(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_text_file(out_path, content);
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

json ep_solution_json(const EPSolution& s, const std::string& var_name) {
    return {{"n", s.n},
            {"couplings", json_doubles(s.couplings)},
            {"eliminant_text", s.eliminant.is_zero() ? "" : s.eliminant.to_string(var_name)},
            {"residuals", json_doubles(s.condition_residuals)}};
}

struct EpFindConfig {
    int n = 0;
    std::string policy = "monotone";
    int keep_var = -1;
    std::string format = "json";
    std::string out;
};

int run_ep_find(const EpFindConfig& cfg) {
    SelectionPolicy policy =
        cfg.policy == "all" ? SelectionPolicy::all : SelectionPolicy::monotone;
    auto sols = find_ep(cfg.n, policy, cfg.keep_var);
    int keep = cfg.keep_var >= 0 ? cfg.keep_var : (coupling_count(cfg.n) >= 2 ? 1 : 0);
    std::string var = coupling_names(cfg.n).at(keep);

    std::string content;
    if (cfg.format == "json") {
        if (policy == SelectionPolicy::monotone && sols.size() == 1) {
            content = json_text(ep_solution_json(sols[0], var));
        } else {
            json arr = json::array();
            for (const auto& s : sols) arr.push_back(ep_solution_json(s, var));
            content = json_text(arr);
        }
    } else if (cfg.format == "csv") {
        auto names = coupling_names(cfg.n);
        std::vector<std::string> header{"n"};
        header.insert(header.end(), names.begin(), names.end());
        for (std::size_t i = 1; i <= names.size(); ++i)
            header.push_back("residual_" + std::to_string(i));
        content = csv_line(header);
        for (const auto& s : sols) {
            std::vector<std::string> row{std::to_string(s.n)};
            for (double v : s.couplings) row.push_back(format_g12(v));
            for (double v : s.condition_residuals) row.push_back(format_g12(v));
            content += csv_line(row);
        }
    } else {
        std::ostringstream os;
        auto names = coupling_names(cfg.n);
        for (const auto& s : sols) {
            os << "n = " << s.n << "\n";
            for (std::size_t i = 0; i < s.couplings.size(); ++i)
                os << "  " << names[i] << " = " << format_g12(s.couplings[i]) << "\n";
            os << "  residuals:";
            for (double v : s.condition_residuals) os << " " << format_g12(v);
            os << "\n";
        }
        os << "eliminant in " << var << ": " << sols.front().eliminant.to_string(var)
           << "\n";
        content = os.str();
    }
    deliver(content, cfg.out);
    return 0;
}

struct SpectrumConfig {
    int n = 0;
    std::string couplings;
    std::string route = "dense";
    double tol_imag = 1e-8, tol_gap = 1e-8;
    std::string format = "csv";
    std::string out;
};

int run_spectrum(const SpectrumConfig& cfg) {
    CouplingVector c{cfg.n, parse_couplings(cfg.couplings)};
    Matrix h = build_hamiltonian(c);
    Spectrum s = cfg.route == "secular"
                     ? compute_spectrum_secular(h, cfg.tol_imag, cfg.tol_gap)
                     : compute_spectrum(h, cfg.tol_imag, cfg.tol_gap);

    std::string content;
    if (cfg.format == "csv") {
        content = csv_line({"re", "im"});
        for (const auto& e : s.eigenvalues)
            content += csv_line({format_g12(e.real()), format_g12(e.imag())});
    } else if (cfg.format == "json") {
        json eigs = json::array();
        for (const auto& e : s.eigenvalues) eigs.push_back(json_complex(e));
        content = json_text({{"classification", to_string(s.classification)},
                             {"eigenvalues", eigs},
                             {"max_imag", s.max_imag},
                             {"min_gap", s.min_gap},
                             {"n", cfg.n}});
    } else {
        std::ostringstream os;
        for (const auto& e : s.eigenvalues)
            os << format_g12(e.real()) << (e.imag() < 0 ? " - " : " + ")
               << format_g12(std::abs(e.imag())) << "i\n";
        os << "classification: " << to_string(s.classification)
           << ", min gap " << format_g12(s.min_gap) << ", max |Im| "
           << format_g12(s.max_imag) << "\n";
        content = os.str();
    }
    deliver(content, cfg.out);
    return 0;
}

struct MetricConfig {
    int n = 0;
    std::string couplings;
    double t = 0;
    bool has_t = false;
    std::string family;
    double a = 0, xi = 0, eta = 0;
    double tol_imag = 1e-8, tol_gap = 1e-8;
    std::string format = "json";
    std::string out;
};

int run_metric(const MetricConfig& cfg) {
    int modes = (cfg.couplings.empty() ? 0 : 1) + (cfg.has_t ? 1 : 0) +
                (cfg.family.empty() ? 0 : 1);
    if (modes != 1)
        throw std::invalid_argument(
            "exactly one of --couplings, --t, --family must be given");

    MetricMatrix m;
    int n = cfg.n;
    if (cfg.has_t) {
        if (n != 0 && n != 3)
            throw std::invalid_argument("--t applies to the three-site chain only");
        n = 3;
        m = metric_from_left_eigenvectors(n3_time_hamiltonian(cfg.t), cfg.tol_imag,
                                          cfg.tol_gap);
    } else if (!cfg.family.empty()) {
        if (cfg.family == "n2") {
            n = 2;
            m = metric_family_n2(cfg.a, cfg.xi);
        } else {
            n = 3;
            m = metric_family_n3(cfg.a, cfg.xi, cfg.eta);
        }
    } else {
        CouplingVector c{cfg.n, parse_couplings(cfg.couplings)};
        m = metric_from_left_eigenvectors(build_hamiltonian(c), cfg.tol_imag,
                                          cfg.tol_gap);
    }

    std::string content;
    if (cfg.format == "json") {
        content = json_text({{"eigenvalues", json_doubles(m.eigenvalues)},
                             {"n", n},
                             {"positive_definite", m.positive_definite},
                             {"quasi_hermiticity_residual", m.quasi_hermiticity_residual},
                             {"theta", json_matrix(m.theta)}});
    } else if (cfg.format == "csv") {
        content = csv_line({"i", "j", "re", "im"});
        for (int i = 0; i < m.theta.rows(); ++i)
            for (int j = 0; j < m.theta.cols(); ++j)
                content += csv_line({std::to_string(i), std::to_string(j),
                                     format_g12(m.theta(i, j).real()),
                                     format_g12(m.theta(i, j).imag())});
    } else {
        std::ostringstream os;
        os << "eigenvalues:";
        for (double v : m.eigenvalues) os << " " << format_g12(v);
        os << "\npositive definite: " << (m.positive_definite ? "yes" : "no")
           << "\nquasi-Hermiticity residual: " << format_g12(m.quasi_hermiticity_residual)
           << "\n";
        content = os.str();
    }
    deliver(content, cfg.out);
    return 0;
}

struct JordanConfig {
    int n = 0;
    std::string couplings;
    double ep_tol = 1e-2, chain_tol = 1e-6, rank_tol = 1e-8;
    std::string format = "json";
    std::string out;
};

int run_jordan(const JordanConfig& cfg) {
    CouplingVector c{cfg.n, parse_couplings(cfg.couplings)};
    Matrix h = build_hamiltonian(c);
    TransitionMatrix tm = jordan_chain(h, cfg.ep_tol, cfg.chain_tol, cfg.rank_tol);
    int order = ep_order(h);

    std::string content;
    if (cfg.format == "json") {
        content = json_text({{"condition_number", tm.condition_number},
                             {"degeneracy_order", order},
                             {"n", cfg.n},
                             {"q", json_matrix(tm.q)},
                             {"similarity_residual", tm.similarity_residual}});
    } else if (cfg.format == "csv") {
        content = csv_line({"i", "j", "re", "im"});
        for (int i = 0; i < tm.q.rows(); ++i)
            for (int j = 0; j < tm.q.cols(); ++j)
                content += csv_line({std::to_string(i), std::to_string(j),
                                     format_g12(tm.q(i, j).real()),
                                     format_g12(tm.q(i, j).imag())});
    } else {
        std::ostringstream os;
        os << "degeneracy order: " << order << "\nsimilarity residual: "
           << format_g12(tm.similarity_residual) << "\ncondition number: "
           << format_g12(tm.condition_number) << "\n";
        content = os.str();
    }
    deliver(content, cfg.out);
    return 0;
}

struct ScanConfig {
    int n = 0;
    std::string ranges;
    int res = 100;
    double slice = std::numeric_limits<double>::quiet_NaN();
    bool has_slice = false;
    double tol_imag = 1e-8, tol_gap = 1e-8;
    std::string margin = "spectral";
    bool boundary = false;
    std::string boundary_out;
    std::string out;
};

int run_domain_scan(const ScanConfig& cfg) {
    GridSpec gs;
    gs.n = cfg.n;
    gs.ranges = parse_ranges(cfg.ranges);
    gs.resolution = cfg.res;
    if (cfg.has_slice) gs.slice = cfg.slice;
    gs.tol_imag = cfg.tol_imag;
    gs.tol_gap = cfg.tol_gap;

    auto samples = scan_grid(gs);
    auto names = coupling_names(cfg.n);
    std::vector<std::string> header(names.begin(), names.end());
    header.push_back("class");
    header.push_back("min_gap");
    header.push_back("max_imag");
    std::string content = csv_line(header);
    for (const auto& s : samples) {
        std::vector<std::string> row;
        for (double v : s.couplings) row.push_back(format_g12(v));
        row.push_back(to_string(s.classification));
        row.push_back(format_g12(s.min_gap));
        row.push_back(format_g12(s.max_imag));
        content += csv_line(row);
    }
    deliver(content, cfg.out);

    if (cfg.boundary) {
        std::string path = cfg.boundary_out;
        if (path.empty()) {
            if (cfg.out.empty())
                throw std::invalid_argument(
                    "--boundary needs --boundary-out when writing to stdout");
            path = cfg.out;
            auto dot = path.rfind('.');
            if (dot != std::string::npos) path.resize(dot);
            path += "_boundary.dat";
        }
        auto segments = boundary_segments(gs, cfg.margin == "inequality");
        std::string btext = "# boundary segments: x1 y1 / x2 y2 per block\n";
        for (const auto& seg : segments) {
            btext += format_g12(seg[0]) + " " + format_g12(seg[1]) + "\n";
            btext += format_g12(seg[2]) + " " + format_g12(seg[3]) + "\n\n";
        }
        write_text_file(path, btext);
    }
    return 0;
}

int run_verify(int criterion) {
    std::vector<CheckResult> results;
    if (criterion == 0)
        results = run_all_checks();
    else
        results.push_back(run_check(criterion));
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("criterion %d [%s]: %s (%.2f s) %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete PT-symmetric lattices: coalescence points, spectra, metrics"};
    app.require_subcommand(1);

    EpFindConfig ep_cfg;
    auto* ep = app.add_subcommand("ep-find", "locate maximal coalescence points");
    ep->add_option("--n", ep_cfg.n, "matrix dimension")->required();
    ep->add_option("--policy", ep_cfg.policy, "monotone | all")
        ->check(CLI::IsMember({"monotone", "all"}));
    ep->add_option("--keep-var", ep_cfg.keep_var, "index of the coupling kept by elimination");
    ep->add_option("--format", ep_cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    ep->add_option("--out", ep_cfg.out, "output path (default stdout)");

    SpectrumConfig sp_cfg;
    auto* sp = app.add_subcommand("spectrum", "eigenvalues at fixed couplings");
    sp->add_option("--n", sp_cfg.n, "matrix dimension")->required();
    sp->add_option("--couplings", sp_cfg.couplings, "comma-separated values")->required();
    sp->add_option("--route", sp_cfg.route, "dense | secular")
        ->check(CLI::IsMember({"dense", "secular"}));
    sp->add_option("--tol-imag", sp_cfg.tol_imag, "reality tolerance")
        ->check(CLI::PositiveNumber);
    sp->add_option("--tol-gap", sp_cfg.tol_gap, "degeneracy tolerance")
        ->check(CLI::PositiveNumber);
    sp->add_option("--format", sp_cfg.format, "csv | json | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sp->add_option("--out", sp_cfg.out, "output path (default stdout)");

    MetricConfig me_cfg;
    auto* me = app.add_subcommand("metric", "positive-definite metric from left eigenvectors");
    me->add_option("--n", me_cfg.n, "matrix dimension");
    me->add_option("--couplings", me_cfg.couplings, "comma-separated values");
    auto* t_opt = me->add_option("--t", me_cfg.t, "time parameter on the three-site curve");
    me->add_option("--family", me_cfg.family, "closed-form family: n2 | n3")
        ->check(CLI::IsMember({"n2", "n3"}));
    me->add_option("--a", me_cfg.a, "family coupling");
    me->add_option("--xi", me_cfg.xi, "family parameter");
    me->add_option("--eta", me_cfg.eta, "family parameter (n3 only)");
    me->add_option("--tol-imag", me_cfg.tol_imag, "reality tolerance")
        ->check(CLI::PositiveNumber);
    me->add_option("--tol-gap", me_cfg.tol_gap, "degeneracy tolerance")
        ->check(CLI::PositiveNumber);
    me->add_option("--format", me_cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    me->add_option("--out", me_cfg.out, "output path (default stdout)");

    JordanConfig jo_cfg;
    auto* jo = app.add_subcommand("jordan", "transition matrix at a coalescence point");
    jo->add_option("--n", jo_cfg.n, "matrix dimension")->required();
    jo->add_option("--couplings", jo_cfg.couplings, "comma-separated values")->required();
    jo->add_option("--ep-tol", jo_cfg.ep_tol, "spectrum collapse tolerance")
        ->check(CLI::PositiveNumber);
    jo->add_option("--chain-tol", jo_cfg.chain_tol, "chain residual tolerance")
        ->check(CLI::PositiveNumber);
    jo->add_option("--rank-tol", jo_cfg.rank_tol, "relative rank threshold")
        ->check(CLI::PositiveNumber);
    jo->add_option("--format", jo_cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    jo->add_option("--out", jo_cfg.out, "output path (default stdout)");

    ScanConfig sc_cfg;
    auto* sc = app.add_subcommand("domain-scan", "classify the coupling plane on a grid");
    sc->add_option("--n", sc_cfg.n, "matrix dimension")->required();
    sc->add_option("--range", sc_cfg.ranges, "lo:hi per scanned coupling, comma-separated")
        ->required();
    sc->add_option("--res", sc_cfg.res, "points per axis")->check(CLI::PositiveNumber);
    auto* slice_opt =
        sc->add_option("--slice", sc_cfg.slice, "fixed value of the last coupling");
    sc->add_option("--tol-imag", sc_cfg.tol_imag, "reality tolerance")
        ->check(CLI::PositiveNumber);
    sc->add_option("--tol-gap", sc_cfg.tol_gap, "degeneracy tolerance")
        ->check(CLI::PositiveNumber);
    sc->add_option("--margin", sc_cfg.margin, "spectral | inequality (boundary margin)")
        ->check(CLI::IsMember({"spectral", "inequality"}));
    sc->add_flag("--boundary", sc_cfg.boundary, "also write boundary segments");
    sc->add_option("--boundary-out", sc_cfg.boundary_out, "boundary output path");
    sc->add_option("--out", sc_cfg.out, "output path (default stdout)");

    int criterion = 0;
    auto* ve = app.add_subcommand("verify", "run the release checks");
    ve->add_option("--criterion", criterion, "single check id (default: all)")
        ->check(CLI::Range(1, 8));
    bool verify_all = false;
    ve->add_flag("--all", verify_all, "run every check (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ep) return run_ep_find(ep_cfg);
        if (*sp) return run_spectrum(sp_cfg);
        if (*me) {
            me_cfg.has_t = t_opt->count() > 0;
            return run_metric(me_cfg);
        }
        if (*jo) return run_jordan(jo_cfg);
        if (*sc) {
            sc_cfg.has_slice = slice_opt->count() > 0;
            return run_domain_scan(sc_cfg);
        }
        if (*ve) return run_verify(criterion);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

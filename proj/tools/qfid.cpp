#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfid/experiments.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/hyperbolic.hpp"
#include "qfid/metrics.hpp"
#include "qfid/sampling.hpp"
#include "qfid/states.hpp"

namespace {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qfid::ParseError("cannot open output file: " + path);
    out << content;
    if (!out) throw qfid::ParseError("failed writing output file: " + path);
}

struct FidelityValues {
    int dim = 0;
    double bures = 0.0;
    double affinity = 0.0;
    double alt_affinity = 0.0;
    double tracedist = 0.0;
    std::array<double, 6> metric = {};
    bool has_triangle = false;
    double phi_u = 0.0, phi_v = 0.0, phi_w = 0.0, cos2 = 0.0;
};

FidelityValues compute_fidelities(const qfid::DensityMatrix& a, const qfid::DensityMatrix& b) {
    FidelityValues v;
    v.dim = a.dim();
    v.bures = qfid::bures_fidelity(a, b);
    v.affinity = qfid::a_fidelity(a, b);
    v.alt_affinity = qfid::alt_a_fidelity(a, b);
    v.tracedist = qfid::trace_distance(a, b);
    for (std::size_t k = 0; k < qfid::kAllMetricKinds.size(); ++k) {
        const qfid::MetricKind kind = qfid::kAllMetricKinds[k];
        const double f = qfid::metric_uses_affinity(kind) ? v.affinity : v.bures;
        v.metric[k] = qfid::distance_from_fidelity(kind, f);
    }
    if (a.dim() == 2) {
        const qfid::BlochVector u = qfid::bloch_from_density(a);
        const qfid::BlochVector w = qfid::bloch_from_density(b);
        const double cap = 1.0 - qfid::tolerances::kPureStateWindow;
        if (u.norm() < cap && w.norm() < cap) {
            const qfid::HyperbolicTriangle t = qfid::triangle_of(u, w);
            v.has_triangle = true;
            v.phi_u = t.phi_u.value();
            v.phi_v = t.phi_v.value();
            v.phi_w = t.phi_w.value();
            v.cos2 = t.cos2_half_defect();
        }
    }
    return v;
}

std::string fidelity_table(const FidelityValues& v) {
    std::ostringstream out;
    const auto row = [&out](const std::string& key, const std::string& value) {
        out << key;
        for (std::size_t i = key.size(); i < 18; ++i) out << ' ';
        out << value << '\n';
    };
    row("dim", std::to_string(v.dim));
    row("bures_fidelity", fmt12(v.bures));
    row("a_fidelity", fmt12(v.affinity));
    row("alt_a_fidelity", fmt12(v.alt_affinity));
    row("trace_distance", fmt12(v.tracedist));
    for (std::size_t k = 0; k < qfid::kAllMetricKinds.size(); ++k)
        row(qfid::metric_name(qfid::kAllMetricKinds[k]), fmt12(v.metric[k]));
    if (v.has_triangle) {
        row("phi_u", fmt12(v.phi_u));
        row("phi_v", fmt12(v.phi_v));
        row("phi_w", fmt12(v.phi_w));
        row("cos2_half_defect", fmt12(v.cos2));
    }
    return out.str();
}

std::string fidelity_json(const FidelityValues& v) {
    nlohmann::ordered_json j;
    j["dim"] = v.dim;
    j["bures_fidelity"] = v.bures;
    j["a_fidelity"] = v.affinity;
    j["alt_a_fidelity"] = v.alt_affinity;
    j["trace_distance"] = v.tracedist;
    nlohmann::ordered_json metrics;
    for (std::size_t k = 0; k < qfid::kAllMetricKinds.size(); ++k)
        metrics[qfid::metric_name(qfid::kAllMetricKinds[k])] = v.metric[k];
    j["metrics"] = std::move(metrics);
    if (v.has_triangle) {
        nlohmann::ordered_json t;
        t["phi_u"] = v.phi_u;
        t["phi_v"] = v.phi_v;
        t["phi_w"] = v.phi_w;
        t["cos2_half_defect"] = v.cos2;
        j["triangle"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

std::string fidelity_csv(const FidelityValues& v) {
    std::ostringstream out;
    out << "dim,bures_fidelity,a_fidelity,alt_a_fidelity,trace_distance";
    for (std::size_t k = 0; k < qfid::kAllMetricKinds.size(); ++k)
        out << ',' << qfid::metric_name(qfid::kAllMetricKinds[k]);
    out << '\n' << v.dim;
    char buf[64];
    const auto cell = [&](double x) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        out << ',' << buf;
    };
    cell(v.bures);
    cell(v.affinity);
    cell(v.alt_affinity);
    cell(v.tracedist);
    for (double m : v.metric) cell(m);
    out << '\n';
    return out.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_fidelity(const std::string& path_a, const std::string& path_b,
                 const std::string& format, const std::string& out_path) {
    const qfid::DensityMatrix a = qfid::load_state_file(path_a);
    const qfid::DensityMatrix b = qfid::load_state_file(path_b);
    if (a.dim() != b.dim()) throw qfid::DimMismatchError(a.dim(), b.dim());
    const FidelityValues v = compute_fidelities(a, b);

    std::string content;
    if (format == "json")
        content = fidelity_json(v);
    else if (format == "csv")
        content = fidelity_csv(v);
    else
        content = fidelity_table(v);

    if (!out_path.empty())
        write_file(out_path, content);
    else
        std::cout << content;
    return 0;
}

int run_verify(const std::string& experiment, int dim, std::int64_t trials,
               std::uint64_t seed, const std::string& measure_str, double tol,
               const std::string& metric_str, std::vector<double> eps_ladder,
               const std::string& format, const std::string& out_path) {
    const qfid::Measure measure = qfid::measure_from_name(measure_str);
    const qfid::SamplerSpec spec{measure, dim, seed};

    qfid::ExperimentReport report;
    if (experiment == "bound") {
        report = qfid::run_bound_experiment(dim, trials, spec, tol);
    } else if (experiment == "triangle") {
        report = qfid::run_triangle_experiment(qfid::metric_from_name(metric_str), dim, trials,
                                               spec, tol);
    } else if (experiment == "theorem1") {
        report = qfid::run_theorem1_check(trials, spec, tol);
    } else if (experiment == "sandwich") {
        report = qfid::run_sandwich_check(dim, trials, spec, tol);
    } else if (experiment == "limits") {
        report = qfid::run_limit_scaling_check(eps_ladder, trials, seed, tol);
    } else {
        throw qfid::ParseError("unknown experiment \"" + experiment +
                               "\" (valid: bound, triangle, theorem1, sandwich, limits)");
    }

    if (format == "json")
        std::cout << qfid::report_to_json(report);
    else if (format == "csv")
        std::cout << qfid::report_csv_header() << qfid::report_csv_row(report);
    else
        std::cout << qfid::report_table(report);
    std::cout << qfid::report_summary_line(report) << '\n';

    if (!out_path.empty()) {
        if (ends_with(out_path, ".csv"))
            write_file(out_path, qfid::report_csv_header() + qfid::report_csv_row(report));
        else
            write_file(out_path, qfid::report_to_json(report));
    }
    return report.violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-state fidelities, hyperbolic-triangle forms, and their "
                 "verification experiments"};
    app.require_subcommand(1);

    std::string path_a, path_b;
    std::string experiment;
    int dim = 2;
    std::int64_t trials = 100000;
    std::uint64_t seed = 42;
    std::string measure = "hs";
    double tolerance = 1e-9;
    std::string metric = "a-angle";
    std::vector<double> eps_ladder = {0.1, 0.05, 0.025};
    std::string format = "table";
    std::string out_path;

    CLI::App* fid = app.add_subcommand(
        "fidelity", "Compute fidelities, metrics, and triangle data for two state files");
    fid->add_option("stateA", path_a, "first state file (JSON)")->required();
    fid->add_option("stateB", path_b, "second state file (JSON)")->required();
    fid->add_option("--format", format, "output format: table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    fid->add_option("--out", out_path, "write output to this path instead of stdout");

    CLI::App* ver = app.add_subcommand(
        "verify", "Run a named experiment: bound, triangle, theorem1, sandwich, limits");
    ver->add_option("experiment", experiment, "experiment name")->required();
    ver->add_option("--dim", dim, "system dimension (default 2)");
    ver->add_option("--trials", trials, "number of trials (default 100000)");
    ver->add_option("--seed", seed, "stream seed (default 42)");
    ver->add_option("--measure", measure, "sampling measure: hs|haar-pure|bloch-uniform");
    ver->add_option("--tolerance", tolerance, "violation tolerance (default 1e-9)");
    ver->add_option("--metric", metric,
                    "metric kind for the triangle experiment (default a-angle)");
    ver->add_option("--eps", eps_ladder,
                    "epsilon ladder for the limits experiment (default 0.1 0.05 0.025)");
    ver->add_option("--format", format, "stdout format: table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    ver->add_option("--out", out_path,
                    "report file path (.csv writes CSV, anything else JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fid->parsed()) return run_fidelity(path_a, path_b, format, out_path);
        return run_verify(experiment, dim, trials, seed, measure, tolerance, metric,
                          eps_ladder, format, out_path);
    } catch (const qfid::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qfid/metrics.hpp"
#include "qfid/sampling.hpp"
#include "qfid/states.hpp"

namespace qfid {

// Most adverse trial: the states involved and the margin they produced.
// trial < 0 means no worst case was recorded (e.g. zero trials).
struct WorstCase {
    std::int64_t trial = -1;
    double margin = 0.0;
    std::vector<DensityMatrix> states;
};

// One way of computing the quantity under test (the bound experiment
// evaluates the defect factor along two routes).
struct VariantReport {
    std::string name;
    std::int64_t evaluated = 0;
    std::int64_t skipped_pure = 0;  // draws the geometric route cannot take
    std::int64_t violations = 0;
    std::int64_t marginal = 0;  // margin in [-tol, 0)
    double min_margin = 0.0;
    WorstCase worst;
};

// Mean deviations at one scale of the epsilon ladder, per metric kind in
// kAllMetricKinds order.
struct LimitRung {
    double eps = 0.0;
    double mean_err_bures = 0.0;
    double mean_err_affinity = 0.0;
    std::array<double, 6> mean_metric_err = {};
};

struct ExperimentReport {
    std::string name;
    int dim = 0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::string measure;
    double tol = 0.0;
    std::string metric;  // triangle experiment only
    std::int64_t violations = 0;
    std::int64_t marginal = 0;
    double min_margin = 0.0;
    WorstCase worst;
    std::vector<VariantReport> variants;  // bound experiment only
    std::vector<LimitRung> rungs;         // limits experiment only
    std::vector<double> bures_orders;     // per ladder step, limits only
    std::vector<double> affinity_orders;
    double elapsed_s = 0.0;  // reported in CSV and summaries, never in JSON
};

// Margin = closed-form defect bound expression - matrix Bures fidelity;
// the geometric-route variant is evaluated alongside and reported. The
// top-level counters mirror the closed-form variant. spec.dim is
// overridden by dim.
ExperimentReport run_bound_experiment(int dim, std::int64_t trials, const SamplerSpec& spec,
                                      double tol);

// Margin = smallest triangle slack over the three labelings of each triple.
ExperimentReport run_triangle_experiment(MetricKind kind, int dim, std::int64_t trials,
                                         const SamplerSpec& spec, double tol);

// Margin = -|matrix affinity - geometric affinity| on qubit pairs whose
// Bloch norms are kept <= 1 - 1e-6 by redrawing. Requires spec.dim == 2.
ExperimentReport run_theorem1_check(std::int64_t trials, const SamplerSpec& spec, double tol);

// Margin = min(F_A - F_B^2, F_B - F_A).
ExperimentReport run_sandwich_check(int dim, std::int64_t trials, const SamplerSpec& spec,
                                    double tol);

// Deviations of both fidelities from 1 - eps^2 |u-v|^2 / 4 and of all six
// metrics from eps |u-v| / 2, averaged over ball-uniform qubit pairs at
// each rung. Margins: fitted convergence order - 3.5 for the fidelities,
// and successive mean-deviation decrease for each metric.
ExperimentReport run_limit_scaling_check(const std::vector<double>& eps_ladder,
                                         std::int64_t pairs, std::uint64_t seed,
                                         double tol = 1e-9);

struct LimitPairErrors {
    double err_bures = 0.0;
    double err_affinity = 0.0;
    std::array<double, 6> metric_err = {};
};

// Per-pair worker behind run_limit_scaling_check, exposed for direct checks.
LimitPairErrors limit_pair_errors(const BlochVector& u, const BlochVector& v, double eps);

// Norm cap below which the theorem check accepts a draw.
inline constexpr double kTheoremNormCap = 1.0 - 1e-6;

// Deterministic serializations. JSON contains no timing field, so reruns
// with identical inputs are byte-identical.
std::string report_to_json(const ExperimentReport& report);
std::string report_csv_header();
std::string report_csv_row(const ExperimentReport& report);
std::string report_summary_line(const ExperimentReport& report);
std::string report_table(const ExperimentReport& report);

}  // namespace qfid

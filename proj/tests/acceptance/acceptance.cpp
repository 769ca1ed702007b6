// Acceptance gate: nine numbered end-to-end checks, one pass/fail line
// each; the exit code is the number of failed checks.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qfid/experiments.hpp"
#include "qfid/fidelity.hpp"
#include "qfid/hyperbolic.hpp"
#include "qfid/metrics.hpp"
#include "qfid/sampling.hpp"
#include "qfid/states.hpp"

using namespace qfid;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", index, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double elapsed_s(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SamplerSpec hs(int dim) { return {Measure::HilbertSchmidtMixed, dim, 42}; }

// Mixed qubit Bloch vector redrawn until it clears the sub-pure cap.
BlochVector capped_qubit_bloch(std::uint64_t seed, std::uint64_t trial) {
    TrialStream stream(seed, trial);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BlochVector n =
            bloch_from_density(sample_state_stream(Measure::HilbertSchmidtMixed, 2, stream));
        if (n.norm() <= kTheoremNormCap) return n;
    }
    throw ConvergenceError("sub-pure redraw cap exhausted");
}

void check_affinity_factorization() {
    const auto t0 = Clock::now();
    ExperimentReport r = run_theorem1_check(10000, hs(2), 1e-9);
    const double secs = elapsed_s(t0);
    const double max_dev = -r.min_margin;
    std::ostringstream d;
    d << "max |F_A - F_B cos^2(delta/2)| = " << max_dev << " (< 1e-9) over " << r.trials
      << " pairs, " << secs << " s (< 10)";
    report(1, "affinity factorization exactness", max_dev < 1e-9 && secs < 10.0, d.str());
}

void check_defect_bound_high_dims() {
    bool pass = true;
    std::ostringstream d;
    for (int dim : {3, 4}) {
        const auto t0 = Clock::now();
        ExperimentReport r = run_bound_experiment(dim, 100000, hs(dim), 1e-9);
        const double secs = elapsed_s(t0);
        const VariantReport& geo = r.variants[0];
        const VariantReport& closed = r.variants[1];
        pass = pass && closed.violations == 0 && secs < 300.0;
        d << "dim " << dim << ": closed-form " << closed.violations
          << " violations (min margin " << closed.min_margin << "), geometric "
          << geo.violations << " violations over " << geo.evaluated << " evaluated ("
          << geo.skipped_pure << " skipped), " << secs << " s (< 300); ";
    }
    report(2, "defect bound, dims 3-4, 1e5 trials", pass, d.str());
}

void check_qubit_bound_with_equality() {
    ExperimentReport r = run_bound_experiment(2, 100000, hs(2), 1e-9);

    // equality cases: identical vectors, and a perpendicular pure pair
    const BlochVector u(2, {0.3, -0.2, 0.4});
    const double fb_same = closed_form_bures(u.norm(), u.norm(), u.dot(u));
    const double eq_same =
        std::abs(closed_form_cos2_half_defect(fb_same, u.norm(), u.norm()) - fb_same);
    const double fb_pure = closed_form_bures(1.0, 1.0, 0.0);
    const double eq_pure =
        std::abs(closed_form_cos2_half_defect(fb_pure, 1.0, 1.0) - fb_pure);

    std::ostringstream d;
    d << r.violations << " violations over " << r.trials << " trials; equality margins: u=v "
      << eq_same << ", pure pair " << eq_pure << " (each < 1e-9)";
    report(3, "qubit bound with equality cases",
           r.violations == 0 && eq_same < 1e-9 && eq_pure < 1e-9, d.str());
}

void check_triangle_inequality() {
    bool pass = true;
    std::ostringstream d;
    for (MetricKind kind : {MetricKind::AAngle, MetricKind::ACMetric, MetricKind::AMetric}) {
        for (int dim : {2, 3, 4}) {
            const auto t0 = Clock::now();
            ExperimentReport r = run_triangle_experiment(kind, dim, 100000, hs(dim), 1e-9);
            const double secs = elapsed_s(t0);
            pass = pass && r.violations == 0 && secs < 600.0;
            d << metric_name(kind) << "/dim" << dim << ": " << r.violations << " (min slack "
              << r.min_margin << ", " << secs << " s); ";
        }
    }
    report(4, "triangle inequality, 1e5 triples per metric and dim", pass, d.str());
}

void check_sandwich() {
    bool pass = true;
    std::ostringstream d;
    for (int dim : {2, 3, 4}) {
        std::vector<Measure> measures = {Measure::HilbertSchmidtMixed, Measure::HaarPure};
        if (dim == 2) measures.push_back(Measure::BlochBallUniform);
        for (Measure m : measures) {
            ExperimentReport r = run_sandwich_check(dim, 10000, {m, dim, 42}, 1e-9);
            pass = pass && r.violations == 0;
            d << measure_name(m) << "/dim" << dim << ": " << r.violations << "; ";
        }
    }
    report(5, "fidelity sandwich, 1e4 pairs per dim and measure", pass, d.str());
}

void check_route_agreement() {
    double worst_bures = 0.0, worst_defect = 0.0;
    for (int t = 0; t < 10000; ++t) {
        const BlochVector u = capped_qubit_bloch(42, 2 * t);
        const BlochVector v = capped_qubit_bloch(42, 2 * t + 1);
        const DensityMatrix r1 = qubit_from_bloch(u);
        const DensityMatrix r2 = qubit_from_bloch(v);

        const double fb_matrix = bures_fidelity(r1, r2);
        worst_bures = std::max(worst_bures, std::abs(geometric_bures(u, v) - fb_matrix));

        const double fb_closed = closed_form_bures(u.norm(), v.norm(), u.dot(v));
        const double via_closed = closed_form_cos2_half_defect(fb_closed, u.norm(), v.norm());
        const double via_triangle = triangle_of(u, v).cos2_half_defect();
        worst_defect = std::max(worst_defect, std::abs(via_closed - via_triangle));
    }
    std::ostringstream d;
    d << "max |geometric - matrix| F_B = " << worst_bures
      << ", max |closed-form - triangle| cos^2(delta/2) = " << worst_defect
      << " over 10000 qubit pairs (each < 1e-9)";
    report(6, "cross-route agreement", worst_bures < 1e-9 && worst_defect < 1e-9, d.str());
}

void check_limit_scaling() {
    ExperimentReport r = run_limit_scaling_check({0.1, 0.05, 0.025}, 10000, 42);
    bool orders_ok = true;
    for (double o : r.bures_orders) orders_ok = orders_ok && o >= 3.5;
    for (double o : r.affinity_orders) orders_ok = orders_ok && o >= 3.5;
    bool monotone = true;
    for (size_t i = 0; i + 1 < r.rungs.size(); ++i)
        for (int k = 0; k < 6; ++k)
            monotone =
                monotone && r.rungs[i + 1].mean_metric_err[k] < r.rungs[i].mean_metric_err[k];
    std::ostringstream d;
    d << "convergence orders bures {";
    for (double o : r.bures_orders) d << " " << o;
    d << " }, affinity {";
    for (double o : r.affinity_orders) d << " " << o;
    d << " } (each >= 3.5); metric deviations "
      << (monotone ? "decrease" : "DO NOT decrease") << " down the ladder";
    report(7, "trace-distance limit scaling", r.violations == 0 && orders_ok && monotone,
           d.str());
}

void check_worked_pair() {
    const BlochVector u = BlochVector::qubit(0.6, 0, 0);
    const BlochVector v = BlochVector::qubit(0, 0.6, 0);
    const DensityMatrix r1 = qubit_from_bloch(u);
    const DensityMatrix r2 = qubit_from_bloch(v);

    const double fb[3] = {closed_form_bures(0.6, 0.6, 0.0), geometric_bures(u, v),
                          bures_fidelity(r1, r2)};
    const double fa[3] = {closed_form_bures(0.6, 0.6, 0.0) *
                              closed_form_cos2_half_defect(fb[0], 0.6, 0.6),
                          geometric_a_fidelity(u, v), a_fidelity(r1, r2)};
    double worst_fb = 0.0, worst_fa = 0.0;
    for (double f : fb) worst_fb = std::max(worst_fb, std::abs(f - 0.82));
    for (double f : fa) worst_fa = std::max(worst_fa, std::abs(f - 0.81));
    const double alt_dev = std::abs(alt_a_fidelity(r1, r2) - 0.81);

    std::ostringstream d;
    d << "F_B deviation " << worst_fb << " (< 1e-12) across closed/geometric/matrix routes, "
      << "F_A deviation " << std::max(worst_fa, alt_dev) << " (< 1e-9) including overlap form";
    report(8, "worked pair u=0.6x v=0.6y", worst_fb < 1e-12 && worst_fa < 1e-9 && alt_dev < 1e-9,
           d.str());
}

void check_deterministic_reports() {
    bool pass = true;
    std::ostringstream d;
    const auto same = [&](const char* tag, const std::string& a, const std::string& b) {
        pass = pass && a == b;
        d << tag << (a == b ? " byte-identical; " : " DIFFERS; ");
    };
    same("bound",
         report_to_json(run_bound_experiment(3, 100000, hs(3), 1e-9)),
         report_to_json(run_bound_experiment(3, 100000, hs(3), 1e-9)));
    same("triangle",
         report_to_json(run_triangle_experiment(MetricKind::AAngle, 2, 100000, hs(2), 1e-9)),
         report_to_json(run_triangle_experiment(MetricKind::AAngle, 2, 100000, hs(2), 1e-9)));
    same("theorem1", report_to_json(run_theorem1_check(10000, hs(2), 1e-9)),
         report_to_json(run_theorem1_check(10000, hs(2), 1e-9)));
    same("sandwich", report_to_json(run_sandwich_check(3, 10000, hs(3), 1e-9)),
         report_to_json(run_sandwich_check(3, 10000, hs(3), 1e-9)));
    same("limits", report_to_json(run_limit_scaling_check({0.1, 0.05, 0.025}, 10000, 42)),
         report_to_json(run_limit_scaling_check({0.1, 0.05, 0.025}, 10000, 42)));
    report(9, "deterministic JSON reports", pass, d.str());
}

}  // namespace

int main() {
    check_affinity_factorization();
    check_defect_bound_high_dims();
    check_qubit_bound_with_equality();
    check_triangle_inequality();
    check_sandwich();
    check_route_agreement();
    check_limit_scaling();
    check_worked_pair();
    check_deterministic_reports();
    std::printf("%d/9 criteria passed\n", 9 - failures);
    return failures;
}

#include "qfid/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "qfid/fidelity.hpp"
#include "qfid/hyperbolic.hpp"
#include "qfid/linalg.hpp"

namespace qfid {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Margin bookkeeping shared by every experiment: classify against the
// tolerance and keep the single most adverse trial (lowest index on ties,
// which a strict < gives for free in an ascending scan).
struct MarginTracker {
    explicit MarginTracker(double tol) : tol_(tol) {}

    void add(std::int64_t trial, double margin, const std::vector<DensityMatrix>* states) {
        if (margin < -tol_)
            ++violations;
        else if (margin < 0.0)
            ++marginal;
        if (margin < min_margin) {
            min_margin = margin;
            worst.trial = trial;
            worst.margin = margin;
            if (states != nullptr)
                worst.states = *states;
            else
                worst.states.clear();
        }
        ++evaluated;
    }

    void fill(std::int64_t& out_violations, std::int64_t& out_marginal, double& out_min,
              WorstCase& out_worst) const {
        out_violations = violations;
        out_marginal = marginal;
        out_min = evaluated > 0 ? min_margin : 0.0;
        out_worst = worst;
    }

    double tol_;
    std::int64_t evaluated = 0;
    std::int64_t violations = 0;
    std::int64_t marginal = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    WorstCase worst;
};

[[noreturn]] void rethrow_with_trial(std::int64_t trial, const Error& e) {
    throw Error("trial " + std::to_string(trial) + ": " + e.what());
}

nlohmann::ordered_json worst_to_json(const WorstCase& w) {
    nlohmann::ordered_json j;
    j["trial"] = w.trial;
    j["margin"] = w.margin;
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (const DensityMatrix& s : w.states)
        states.push_back(nlohmann::ordered_json::parse(state_to_json(s)));
    j["states"] = std::move(states);
    return j;
}

}  // namespace

ExperimentReport run_bound_experiment(int dim, std::int64_t trials, const SamplerSpec& spec,
                                      double tol) {
    SamplerSpec eff = spec;
    eff.dim = dim;
    validate_spec(eff);
    const GeneratorBasis basis = GeneratorBasis::make(dim);

    const auto start = Clock::now();
    MarginTracker geometric(tol), closed(tol);
    std::int64_t skipped_pure = 0;

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        try {
            TrialStream stream(eff.seed, static_cast<std::uint64_t>(trial));
            const DensityMatrix r1 = sample_state_stream(eff.measure, dim, stream);
            const DensityMatrix r2 = sample_state_stream(eff.measure, dim, stream);
            const double fb = bures_fidelity(r1, r2);
            const BlochVector mu = bloch_from_density(r1, basis);
            const BlochVector mv = bloch_from_density(r2, basis);
            const std::vector<DensityMatrix> pair = {r1, r2};

            const double c2_closed = defect_bound_expression(fb, mu.norm(), mv.norm());
            closed.add(trial, c2_closed - fb, &pair);

            if (mu.norm() >= 1.0 - tolerances::kPureStateWindow ||
                mv.norm() >= 1.0 - tolerances::kPureStateWindow) {
                ++skipped_pure;
            } else {
                const double c2_geo = triangle_of(mu, mv).cos2_half_defect();
                geometric.add(trial, c2_geo - fb, &pair);
            }
        } catch (const Error& e) {
            rethrow_with_trial(trial, e);
        }
    }

    ExperimentReport report;
    report.name = "bound";
    report.dim = dim;
    report.trials = trials;
    report.seed = eff.seed;
    report.measure = measure_name(eff.measure);
    report.tol = tol;
    closed.fill(report.violations, report.marginal, report.min_margin, report.worst);

    VariantReport va;
    va.name = "geometric";
    va.evaluated = geometric.evaluated;
    va.skipped_pure = skipped_pure;
    geometric.fill(va.violations, va.marginal, va.min_margin, va.worst);

    VariantReport vb;
    vb.name = "closed-form";
    vb.evaluated = closed.evaluated;
    closed.fill(vb.violations, vb.marginal, vb.min_margin, vb.worst);

    report.variants = {std::move(va), std::move(vb)};
    report.elapsed_s = seconds_since(start);
    return report;
}

ExperimentReport run_triangle_experiment(MetricKind kind, int dim, std::int64_t trials,
                                         const SamplerSpec& spec, double tol) {
    SamplerSpec eff = spec;
    eff.dim = dim;
    validate_spec(eff);
    const bool affinity = metric_uses_affinity(kind);

    const auto start = Clock::now();
    MarginTracker tracker(tol);

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        try {
            TrialStream stream(eff.seed, static_cast<std::uint64_t>(trial));
            std::vector<DensityMatrix> triple;
            triple.reserve(3);
            for (int k = 0; k < 3; ++k)
                triple.push_back(sample_state_stream(eff.measure, dim, stream));
            const ComplexMatrix roots[3] = {psd_sqrt(triple[0].matrix()),
                                            psd_sqrt(triple[1].matrix()),
                                            psd_sqrt(triple[2].matrix())};

            double d[3];
            const int pa[3] = {0, 0, 1};
            const int pb[3] = {1, 2, 2};
            for (int p = 0; p < 3; ++p) {
                const double f = affinity ? a_fidelity_sqrt(roots[pa[p]], roots[pb[p]])
                                          : bures_fidelity_sqrt(roots[pa[p]], triple[pb[p]]);
                d[p] = distance_from_fidelity(kind, f);
            }
            tracker.add(trial, min_triangle_slack(d[0], d[1], d[2]), &triple);
        } catch (const Error& e) {
            rethrow_with_trial(trial, e);
        }
    }

    ExperimentReport report;
    report.name = "triangle";
    report.dim = dim;
    report.trials = trials;
    report.seed = eff.seed;
    report.measure = measure_name(eff.measure);
    report.tol = tol;
    report.metric = metric_name(kind);
    tracker.fill(report.violations, report.marginal, report.min_margin, report.worst);
    report.elapsed_s = seconds_since(start);
    return report;
}

ExperimentReport run_theorem1_check(std::int64_t trials, const SamplerSpec& spec, double tol) {
    if (spec.dim != 2)
        throw InvalidSpecError("theorem check runs on qubits (dim 2), got dim " +
                               std::to_string(spec.dim));
    validate_spec(spec);
    if (spec.measure == Measure::HaarPure)
        throw InvalidSpecError("haar-pure draws cannot satisfy the sub-pure norm cap");

    const auto draw_capped = [&](TrialStream& stream) {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            DensityMatrix r = sample_state_stream(spec.measure, 2, stream);
            BlochVector n = bloch_from_density(r);
            if (n.norm() <= kTheoremNormCap) return std::pair{std::move(r), std::move(n)};
        }
        throw ConvergenceError("no draw with Bloch norm <= " + std::to_string(kTheoremNormCap) +
                               " in 1000 attempts");
    };

    const auto start = Clock::now();
    MarginTracker tracker(tol);

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        try {
            TrialStream stream(spec.seed, static_cast<std::uint64_t>(trial));
            auto [r1, n1] = draw_capped(stream);
            auto [r2, n2] = draw_capped(stream);
            const double fa = a_fidelity(r1, r2);
            const double geo = geometric_a_fidelity(n1, n2);
            const std::vector<DensityMatrix> pair = {r1, r2};
            tracker.add(trial, -std::abs(fa - geo), &pair);
        } catch (const Error& e) {
            rethrow_with_trial(trial, e);
        }
    }

    ExperimentReport report;
    report.name = "theorem1";
    report.dim = 2;
    report.trials = trials;
    report.seed = spec.seed;
    report.measure = measure_name(spec.measure);
    report.tol = tol;
    tracker.fill(report.violations, report.marginal, report.min_margin, report.worst);
    report.elapsed_s = seconds_since(start);
    return report;
}

ExperimentReport run_sandwich_check(int dim, std::int64_t trials, const SamplerSpec& spec,
                                    double tol) {
    SamplerSpec eff = spec;
    eff.dim = dim;
    validate_spec(eff);

    const auto start = Clock::now();
    MarginTracker tracker(tol);

    for (std::int64_t trial = 0; trial < trials; ++trial) {
        try {
            TrialStream stream(eff.seed, static_cast<std::uint64_t>(trial));
            const DensityMatrix r1 = sample_state_stream(eff.measure, dim, stream);
            const DensityMatrix r2 = sample_state_stream(eff.measure, dim, stream);
            const ComplexMatrix s1 = psd_sqrt(r1.matrix());
            const ComplexMatrix s2 = psd_sqrt(r2.matrix());
            const double fb = bures_fidelity_sqrt(s1, r2);
            const double fa = a_fidelity_sqrt(s1, s2);
            const std::vector<DensityMatrix> pair = {r1, r2};
            tracker.add(trial, std::min(fa - fb * fb, fb - fa), &pair);
        } catch (const Error& e) {
            rethrow_with_trial(trial, e);
        }
    }

    ExperimentReport report;
    report.name = "sandwich";
    report.dim = dim;
    report.trials = trials;
    report.seed = eff.seed;
    report.measure = measure_name(eff.measure);
    report.tol = tol;
    tracker.fill(report.violations, report.marginal, report.min_margin, report.worst);
    report.elapsed_s = seconds_since(start);
    return report;
}

LimitPairErrors limit_pair_errors(const BlochVector& u, const BlochVector& v, double eps) {
    if (u.dim() != 2 || v.dim() != 2) throw DimMismatchError(u.dim(), v.dim());
    if (!(eps >= 0.0 && eps <= 1.0))
        throw DomainError("eps must lie in [0, 1], got " + std::to_string(eps));

    const DensityMatrix s1 = qubit_from_bloch(u.scaled(eps));
    const DensityMatrix s2 = qubit_from_bloch(v.scaled(eps));
    const double fb = bures_fidelity(s1, s2);
    const double fa = a_fidelity(s1, s2);

    const double sep2 = std::max(0.0, u.norm() * u.norm() + v.norm() * v.norm() - 2.0 * u.dot(v));
    const double sep = std::sqrt(sep2);
    const double fid_target = 1.0 - 0.25 * eps * eps * sep2;
    const double dist_target = 0.5 * eps * sep;

    LimitPairErrors out;
    out.err_bures = std::abs(fb - fid_target);
    out.err_affinity = std::abs(fa - fid_target);
    for (std::size_t k = 0; k < kAllMetricKinds.size(); ++k) {
        const MetricKind kind = kAllMetricKinds[k];
        const double f = metric_uses_affinity(kind) ? fa : fb;
        out.metric_err[k] = std::abs(distance_from_fidelity(kind, f) - dist_target);
    }
    return out;
}

ExperimentReport run_limit_scaling_check(const std::vector<double>& eps_ladder,
                                         std::int64_t pairs, std::uint64_t seed, double tol) {
    if (eps_ladder.empty()) throw InvalidSpecError("epsilon ladder must not be empty");
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        if (!(eps_ladder[i] > 0.0 && eps_ladder[i] <= 0.5))
            throw InvalidSpecError("ladder values must lie in (0, 0.5], got " +
                                   std::to_string(eps_ladder[i]));
        if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
            throw InvalidSpecError("ladder values must be strictly descending");
    }
    if (pairs < 1) throw InvalidSpecError("need at least one sampled pair");

    const auto start = Clock::now();
    const std::size_t rungs_n = eps_ladder.size();
    std::vector<LimitRung> rungs(rungs_n);
    for (std::size_t i = 0; i < rungs_n; ++i) rungs[i].eps = eps_ladder[i];

    for (std::int64_t pair = 0; pair < pairs; ++pair) {
        try {
            TrialStream stream(seed, static_cast<std::uint64_t>(pair));
            const BlochVector u = sample_bloch_ball(stream);
            const BlochVector v = sample_bloch_ball(stream);
            for (std::size_t i = 0; i < rungs_n; ++i) {
                const LimitPairErrors e = limit_pair_errors(u, v, eps_ladder[i]);
                rungs[i].mean_err_bures += e.err_bures;
                rungs[i].mean_err_affinity += e.err_affinity;
                for (std::size_t k = 0; k < e.metric_err.size(); ++k)
                    rungs[i].mean_metric_err[k] += e.metric_err[k];
            }
        } catch (const Error& e) {
            rethrow_with_trial(pair, e);
        }
    }
    for (LimitRung& r : rungs) {
        r.mean_err_bures /= static_cast<double>(pairs);
        r.mean_err_affinity /= static_cast<double>(pairs);
        for (double& m : r.mean_metric_err) m /= static_cast<double>(pairs);
    }

    // Convergence order between consecutive rungs; the expansion is exact
    // to fourth order, so the measured order should clear 3.5 cleanly.
    const auto order_between = [](double err_hi, double err_lo, double eps_hi, double eps_lo) {
        if (err_hi <= 0.0 || err_lo <= 0.0) return std::numeric_limits<double>::infinity();
        return std::log(err_hi / err_lo) / std::log(eps_hi / eps_lo);
    };

    MarginTracker tracker(tol);
    std::vector<double> bures_orders, affinity_orders;
    for (std::size_t i = 0; i + 1 < rungs_n; ++i) {
        const double ob = order_between(rungs[i].mean_err_bures, rungs[i + 1].mean_err_bures,
                                        eps_ladder[i], eps_ladder[i + 1]);
        const double oa =
            order_between(rungs[i].mean_err_affinity, rungs[i + 1].mean_err_affinity,
                          eps_ladder[i], eps_ladder[i + 1]);
        bures_orders.push_back(ob);
        affinity_orders.push_back(oa);
        tracker.add(-1, ob - 3.5, nullptr);
        tracker.add(-1, oa - 3.5, nullptr);
        for (std::size_t k = 0; k < kAllMetricKinds.size(); ++k)
            tracker.add(-1, rungs[i].mean_metric_err[k] - rungs[i + 1].mean_metric_err[k],
                        nullptr);
    }

    ExperimentReport report;
    report.name = "limits";
    report.dim = 2;
    report.trials = pairs;
    report.seed = seed;
    report.measure = measure_name(Measure::BlochBallUniform);
    report.tol = tol;
    tracker.fill(report.violations, report.marginal, report.min_margin, report.worst);
    report.worst = WorstCase{};  // margins here are aggregates, not trials
    report.rungs = std::move(rungs);
    report.bures_orders = std::move(bures_orders);
    report.affinity_orders = std::move(affinity_orders);
    report.elapsed_s = seconds_since(start);
    return report;
}

std::string report_to_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    j["name"] = report.name;
    j["dim"] = report.dim;
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["measure"] = report.measure;
    j["tol"] = report.tol;
    if (!report.metric.empty()) j["metric"] = report.metric;
    j["violations"] = report.violations;
    j["marginal"] = report.marginal;
    j["min_margin"] = report.min_margin;
    if (report.worst.trial >= 0) j["worst_case"] = worst_to_json(report.worst);
    if (!report.variants.empty()) {
        nlohmann::ordered_json variants = nlohmann::ordered_json::array();
        for (const VariantReport& v : report.variants) {
            nlohmann::ordered_json vj;
            vj["name"] = v.name;
            vj["evaluated"] = v.evaluated;
            vj["skipped_pure"] = v.skipped_pure;
            vj["violations"] = v.violations;
            vj["marginal"] = v.marginal;
            vj["min_margin"] = v.min_margin;
            if (v.worst.trial >= 0) vj["worst_case"] = worst_to_json(v.worst);
            variants.push_back(std::move(vj));
        }
        j["variants"] = std::move(variants);
    }
    if (!report.rungs.empty()) {
        nlohmann::ordered_json rungs = nlohmann::ordered_json::array();
        for (const LimitRung& r : report.rungs) {
            nlohmann::ordered_json rj;
            rj["eps"] = r.eps;
            rj["mean_err_bures"] = r.mean_err_bures;
            rj["mean_err_affinity"] = r.mean_err_affinity;
            nlohmann::ordered_json per_metric;
            for (std::size_t k = 0; k < kAllMetricKinds.size(); ++k)
                per_metric[metric_name(kAllMetricKinds[k])] = r.mean_metric_err[k];
            rj["mean_metric_err"] = std::move(per_metric);
            rungs.push_back(std::move(rj));
        }
        j["rungs"] = std::move(rungs);
        j["bures_orders"] = report.bures_orders;
        j["affinity_orders"] = report.affinity_orders;
    }
    return j.dump(2) + "\n";
}

std::string report_csv_header() {
    return "name,dim,measure,trials,seed,tol,violations,marginal,min_margin,elapsed_s\n";
}

std::string report_csv_row(const ExperimentReport& report) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%d,%s,%lld,%llu,%g,%lld,%lld,%.17g,%.3f\n",
                  report.name.c_str(), report.dim, report.measure.c_str(),
                  static_cast<long long>(report.trials),
                  static_cast<unsigned long long>(report.seed), report.tol,
                  static_cast<long long>(report.violations),
                  static_cast<long long>(report.marginal), report.min_margin, report.elapsed_s);
    return buf;
}

std::string report_summary_line(const ExperimentReport& report) {
    std::ostringstream out;
    out << report.name << " dim=" << report.dim << " measure=" << report.measure;
    if (!report.metric.empty()) out << " metric=" << report.metric;
    out << " trials=" << report.trials << " seed=" << report.seed << " tol=" << report.tol
        << ": " << report.violations << " violations, " << report.marginal
        << " marginal, min margin ";
    char num[64];
    std::snprintf(num, sizeof(num), "%.6g", report.min_margin);
    out << num;
    std::snprintf(num, sizeof(num), "%.2f", report.elapsed_s);
    out << " (" << num << " s)";
    return out.str();
}

std::string report_table(const ExperimentReport& report) {
    std::ostringstream out;
    const auto row = [&out](const std::string& key, const std::string& value) {
        out << key;
        for (std::size_t i = key.size(); i < 18; ++i) out << ' ';
        out << value << '\n';
    };
    const auto num = [](double x) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", x);
        return std::string(buf);
    };

    row("experiment", report.name);
    row("dim", std::to_string(report.dim));
    row("measure", report.measure);
    if (!report.metric.empty()) row("metric", report.metric);
    row("trials", std::to_string(report.trials));
    row("seed", std::to_string(report.seed));
    row("tol", num(report.tol));
    row("violations", std::to_string(report.violations));
    row("marginal", std::to_string(report.marginal));
    row("min_margin", num(report.min_margin));
    row("elapsed_s", num(report.elapsed_s));
    if (report.worst.trial >= 0) {
        row("worst_trial", std::to_string(report.worst.trial));
        row("worst_margin", num(report.worst.margin));
    }
    for (const VariantReport& v : report.variants) {
        out << "variant " << v.name << ": evaluated=" << v.evaluated
            << " skipped_pure=" << v.skipped_pure << " violations=" << v.violations
            << " marginal=" << v.marginal << " min_margin=" << num(v.min_margin) << '\n';
    }
    for (const LimitRung& r : report.rungs) {
        out << "rung eps=" << num(r.eps) << ": mean_err_bures=" << num(r.mean_err_bures)
            << " mean_err_affinity=" << num(r.mean_err_affinity) << '\n';
    }
    if (!report.bures_orders.empty()) {
        out << "orders bures:";
        for (double o : report.bures_orders) out << ' ' << num(o);
        out << " | affinity:";
        for (double o : report.affinity_orders) out << ' ' << num(o);
        out << '\n';
    }
    return out.str();
}

}  // namespace qfid

#include "qfid/metrics.hpp"

#include <cmath>
#include <limits>

#include "qfid/fidelity.hpp"
#include "qfid/linalg.hpp"

namespace qfid {

std::string metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::BuresAngle: return "bures-angle";
        case MetricKind::BuresMetric: return "bures-metric";
        case MetricKind::GoldMetric: return "gold-metric";
        case MetricKind::AAngle: return "a-angle";
        case MetricKind::AMetric: return "a-metric";
        case MetricKind::ACMetric: return "ac-metric";
    }
    throw DomainError("unreachable metric kind");
}

MetricKind metric_from_name(const std::string& name) {
    for (MetricKind kind : kAllMetricKinds)
        if (metric_name(kind) == name) return kind;
    throw ParseError("unknown metric \"" + name +
                     "\" (expected bures-angle, bures-metric, gold-metric, a-angle, a-metric, "
                     "or ac-metric)");
}

bool metric_uses_affinity(MetricKind kind) {
    return kind == MetricKind::AAngle || kind == MetricKind::AMetric ||
           kind == MetricKind::ACMetric;
}

double distance_from_fidelity(MetricKind kind, double fidelity) {
    const double f = clamp_unit_interval(fidelity);
    switch (kind) {
        case MetricKind::BuresAngle:
        case MetricKind::AAngle: return std::acos(std::sqrt(f));
        case MetricKind::BuresMetric:
        case MetricKind::AMetric: return std::sqrt(2.0 - 2.0 * std::sqrt(f));
        case MetricKind::GoldMetric:
        case MetricKind::ACMetric: return std::sqrt(1.0 - f);
    }
    throw DomainError("unreachable metric kind");
}

double distance(MetricKind kind, const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DimMismatchError(r1.dim(), r2.dim());
    const double f =
        metric_uses_affinity(kind) ? a_fidelity(r1, r2) : bures_fidelity(r1, r2);
    return distance_from_fidelity(kind, f);
}

double min_triangle_slack(double d_ab, double d_ac, double d_bc) {
    const double s1 = d_ac + d_bc - d_ab;
    const double s2 = d_ab + d_bc - d_ac;
    const double s3 = d_ab + d_ac - d_bc;
    return std::min(s1, std::min(s2, s3));
}

AxiomReport check_metric_axioms(MetricKind kind,
                                const std::vector<std::array<DensityMatrix, 3>>& triples,
                                double tol) {
    AxiomReport report;
    report.kind = kind;
    report.tol = tol;
    report.triples = static_cast<std::int64_t>(triples.size());
    report.m4_min_slack = std::numeric_limits<double>::infinity();
    if (triples.empty()) {
        report.m4_min_slack = 0.0;
        return report;
    }

    const bool affinity = metric_uses_affinity(kind);
    for (std::size_t idx = 0; idx < triples.size(); ++idx) {
        const auto& t = triples[idx];
        std::array<ComplexMatrix, 3> roots = {psd_sqrt(t[0].matrix()), psd_sqrt(t[1].matrix()),
                                              psd_sqrt(t[2].matrix())};

        // Ordered distances for the three pairs (0,1), (0,2), (1,2).
        double forward[3], backward[3];
        const int pair_a[3] = {0, 0, 1};
        const int pair_b[3] = {1, 2, 2};
        for (int p = 0; p < 3; ++p) {
            const int a = pair_a[p], b = pair_b[p];
            const double f_ab = affinity ? a_fidelity_sqrt(roots[a], roots[b])
                                         : bures_fidelity_sqrt(roots[a], t[b]);
            const double f_ba = affinity ? a_fidelity_sqrt(roots[b], roots[a])
                                         : bures_fidelity_sqrt(roots[b], t[a]);
            forward[p] = distance_from_fidelity(kind, f_ab);
            backward[p] = distance_from_fidelity(kind, f_ba);
        }

        bool m1 = true, m2 = true, m3 = true;
        for (int p = 0; p < 3; ++p) {
            if (forward[p] < 0.0 || backward[p] < 0.0) m1 = false;
            if (std::abs(forward[p] - backward[p]) > tolerances::kSymmetrySlack) m3 = false;
            if (forward[p] < tolerances::kM2DistanceWindow) {
                const double frob =
                    frobenius_norm(t[pair_a[p]].matrix() - t[pair_b[p]].matrix());
                if (frob >= tolerances::kM2FrobeniusWindow) m2 = false;
            }
        }
        report.m1_pass += m1;
        report.m2_pass += m2;
        report.m3_pass += m3;

        const double slack = min_triangle_slack(forward[0], forward[1], forward[2]);
        if (slack >= -tol)
            ++report.m4_pass;
        else
            ++report.m4_violations;
        if (slack < report.m4_min_slack) {
            report.m4_min_slack = slack;
            report.m4_min_slack_index = static_cast<std::int64_t>(idx);
        }
    }
    return report;
}

double small_ball_limit_error(MetricKind kind, const BlochVector& u, const BlochVector& v,
                              double eps) {
    if (u.dim() != v.dim()) throw DimMismatchError(u.dim(), v.dim());
    if (u.dim() != 2) throw InvalidDimError(u.dim(), "small-ball limit is defined for qubits");
    if (!(eps >= 0.0 && eps <= 1.0))
        throw DomainError("eps must lie in [0, 1], got " + std::to_string(eps));
    const DensityMatrix s1 = qubit_from_bloch(u.scaled(eps));
    const DensityMatrix s2 = qubit_from_bloch(v.scaled(eps));
    const double d = distance(kind, s1, s2);
    const double sep =
        std::sqrt(std::max(0.0, u.norm() * u.norm() + v.norm() * v.norm() - 2.0 * u.dot(v)));
    return std::abs(d - 0.5 * eps * sep);
}

}  // namespace qfid

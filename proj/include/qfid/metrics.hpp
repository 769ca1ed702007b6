#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qfid/states.hpp"

namespace qfid {

// First three derive from Bures fidelity, last three from the affinity.
enum class MetricKind { BuresAngle, BuresMetric, GoldMetric, AAngle, AMetric, ACMetric };

inline constexpr std::array<MetricKind, 6> kAllMetricKinds = {
    MetricKind::BuresAngle, MetricKind::BuresMetric, MetricKind::GoldMetric,
    MetricKind::AAngle,     MetricKind::AMetric,     MetricKind::ACMetric};

std::string metric_name(MetricKind kind);
MetricKind metric_from_name(const std::string& name);
bool metric_uses_affinity(MetricKind kind);

// arccos sqrt(F), sqrt(2 - 2 sqrt(F)), or sqrt(1 - F) per kind.
double distance_from_fidelity(MetricKind kind, double fidelity);
double distance(MetricKind kind, const DensityMatrix& r1, const DensityMatrix& r2);

// Smallest d(x,z) + d(y,z) - d(x,y) over the three labelings of a triple.
double min_triangle_slack(double d_ab, double d_ac, double d_bc);

struct AxiomReport {
    MetricKind kind;
    double tol = 0.0;
    std::int64_t triples = 0;
    std::int64_t m1_pass = 0;
    std::int64_t m2_pass = 0;
    std::int64_t m3_pass = 0;
    std::int64_t m4_pass = 0;
    std::int64_t m4_violations = 0;
    double m4_min_slack = 0.0;
    std::int64_t m4_min_slack_index = -1;  // first triple attaining the minimum
};

AxiomReport check_metric_axioms(MetricKind kind,
                                const std::vector<std::array<DensityMatrix, 3>>& triples,
                                double tol);

// |distance(states of eps*u, eps*v) - eps/2 |u - v||, qubits only.
double small_ball_limit_error(MetricKind kind, const BlochVector& u, const BlochVector& v,
                              double eps);

namespace tolerances {
// Calibrated stand-in for the identity axiom: distances below the first
// window must only occur when the states agree to the second.
inline constexpr double kM2DistanceWindow = 1e-6;
inline constexpr double kM2FrobeniusWindow = 1e-4;
inline constexpr double kSymmetrySlack = 1e-12;
}  // namespace tolerances

}  // namespace qfid

#pragma once

#include "qfid/states.hpp"

namespace qfid {

// [Tr sqrt(sqrt(r1) r2 sqrt(r1))]^2, the standard mixed-state transition
// probability. Symmetric; output clamped into [0,1] when eigen-noise
// pushes it at most 1e-9 outside (anything worse throws).
double bures_fidelity(const DensityMatrix& r1, const DensityMatrix& r2);

// [Tr(sqrt(r1) sqrt(r2))]^2, the quantum affinity.
double a_fidelity(const DensityMatrix& r1, const DensityMatrix& r2);

// Variants taking precomputed PSD square roots, for callers that reuse
// a state's root across many pairings.
double bures_fidelity_sqrt(const ComplexMatrix& sqrt_r1, const DensityMatrix& r2);
double a_fidelity_sqrt(const ComplexMatrix& sqrt_r1, const ComplexMatrix& sqrt_r2);

// (1/2) sum |eig(r1 - r2)|; for qubits this is half the Euclidean Bloch
// distance.
double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2);

// g(r1, r2) = (N Tr(r1 r2) - 1)/(N - 1); equals the Euclidean inner
// product of the generalized Bloch vectors.
double overlap_g(const DensityMatrix& r1, const DensityMatrix& r2);

// N-state affinity built from the overlap g alone:
//   [(1+sqrt(1-g11))(1+sqrt(1-g22)) + g12]^2 / [4 (1+sqrt(1-g11))(1+sqrt(1-g22))].
// Coincides with a_fidelity for qubits.
double alt_a_fidelity(const DensityMatrix& r1, const DensityMatrix& r2);

// Clamp x into [0,1] tolerating at most `slack` of overshoot on either
// side; beyond that the value indicates a solver inconsistency and throws.
double clamp_unit_interval(double x, double slack = 1e-9);

}  // namespace qfid

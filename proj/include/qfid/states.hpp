#pragma once

#include <string>
#include <vector>

#include "qfid/linalg.hpp"

namespace qfid {

// Real coefficient vector of a state in the generalized Pauli/Gell-Mann
// basis: length N^2 - 1, Euclidean norm <= 1 (+1e-12 slack).
class BlochVector {
public:
    BlochVector(int dim, std::vector<double> coords);

    static BlochVector qubit(double x, double y, double z) { return {2, {x, y, z}}; }

    int dim() const { return dim_; }
    const std::vector<double>& coords() const { return coords_; }
    double norm() const;

    // Dot product; requires matching system dimension.
    double dot(const BlochVector& other) const;

    BlochVector scaled(double factor) const;

private:
    int dim_;
    std::vector<double> coords_;
};

// Validated N x N density matrix: Hermitian within 1e-9, unit trace
// within 1e-9, eigenvalues >= -1e-10.
class DensityMatrix {
public:
    // Validates all invariants; throws NotHermitianError / TraceError /
    // NotPsdError naming the one that failed.
    static DensityMatrix from_matrix(ComplexMatrix m);

    int dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

// The N^2 - 1 SU(N) generators: Hermitian, traceless, Tr(g_a g_b) = 2 delta_ab.
class GeneratorBasis {
public:
    static GeneratorBasis make(int dim);

    int dim() const { return dim_; }
    const std::vector<ComplexMatrix>& generators() const { return generators_; }

private:
    GeneratorBasis(int dim, std::vector<ComplexMatrix> gens)
        : dim_(dim), generators_(std::move(gens)) {}
    int dim_;
    std::vector<ComplexMatrix> generators_;
};

// Fixed deterministic generator ordering: symmetric pairs by (j,k)
// lexicographic, then antisymmetric pairs, then the N-1 diagonal
// generators. For N = 2 this is exactly (sigma_x, sigma_y, sigma_z).
GeneratorBasis generator_basis(int dim);

// rho = (1 + sigma . n) / 2
DensityMatrix qubit_from_bloch(const BlochVector& n);

// rho = (1/N)[1_N + sqrt(N(N-1)/2) lambda . m]; validated PSD before
// return, since for N > 2 the unit ball contains non-states.
DensityMatrix qunit_from_bloch(const BlochVector& m, const GeneratorBasis& basis);

// n_a = Tr(rho sigma_a) for qubits; m_a = sqrt(N/(2(N-1))) Tr(rho lambda_a)
// in general. Inverse of the forward maps.
BlochVector bloch_from_density(const DensityMatrix& rho, const GeneratorBasis& basis);
BlochVector bloch_from_density(const DensityMatrix& rho);

// Tr(rho^2), in [1/N, 1].
double purity(const DensityMatrix& rho);

// State file format: a JSON object with "dim" and exactly one of
//   "matrix": row-major N x N array of [re, im] pairs,
//   "bloch":  real array of length N^2 - 1.
// Parsing validates all state invariants and reports which failed.
DensityMatrix parse_state_json(const std::string& text);
DensityMatrix load_state_file(const std::string& path);

// Serialize in the same format ("matrix" flavor), full double precision.
std::string state_to_json(const DensityMatrix& rho);

namespace tolerances {
inline constexpr double kUnitTrace = 1e-9;
inline constexpr double kBlochNormSlack = 1e-12;
}  // namespace tolerances

}  // namespace qfid

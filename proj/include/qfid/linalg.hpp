#pragma once

#include <complex>
#include <vector>

#include "qfid/errors.hpp"

namespace qfid {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Immutable size after construction.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), entries_(static_cast<size_t>(dim) * dim) {}

    ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(check_dim(dim)), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(dim_) * dim_)
            throw InvalidDimError(dim_, "entry count does not match dim*dim");
    }

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& at(int r, int c) { return entries_[static_cast<size_t>(r) * dim_ + c]; }
    const Complex& at(int r, int c) const { return entries_[static_cast<size_t>(r) * dim_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }

private:
    static int check_dim(int dim) {
        if (dim < 1) throw InvalidDimError(dim, "matrix dimension must be >= 1");
        return dim;
    }

    int dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& m);
ComplexMatrix operator*(double s, const ComplexMatrix& m);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

// Largest entrywise |m - m^dagger| deviation.
double max_asymmetry(const ComplexMatrix& m);

// Eigenvalues ascending; eigenvector column k belongs to eigenvalue k.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization for Hermitian matrices. Input must be
// Hermitian within 1e-9 (max entry asymmetry); converges when the
// off-diagonal Frobenius norm drops below 1e-13 * ||m||_F, capped at
// 100 sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

// Hermitian PSD square root via the eigendecomposition. Eigenvalues in
// [-1e-10, 0) are clamped to zero; anything below that window throws.
// Eigenvalues in [0, kEigZeroFloor) are also treated as exact zeros:
// matmul round-off plants spurious ~1e-15 eigenvalues in the null space
// of rank-deficient inputs, and sqrt would amplify them to ~1e-8.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

namespace tolerances {
inline constexpr double kHermiticity = 1e-9;
inline constexpr double kEigNegativeWindow = -1e-10;
inline constexpr double kEigZeroFloor = 1e-14;
inline constexpr double kJacobiRelTarget = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
}  // namespace tolerances

}  // namespace qfid

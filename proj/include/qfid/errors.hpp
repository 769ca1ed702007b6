#pragma once

#include <stdexcept>
#include <string>

namespace qfid {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input matrix deviates from Hermitian symmetry beyond tolerance.
struct NotHermitianError : Error {
    double max_asymmetry;
    explicit NotHermitianError(double asym)
        : Error("matrix is not Hermitian (max |m - m^dagger| entry = " +
                std::to_string(asym) + ")"),
          max_asymmetry(asym) {}
};

// Input matrix has an eigenvalue below the accepted negative window.
struct NotPsdError : Error {
    double min_eigenvalue;
    explicit NotPsdError(double eig)
        : Error("matrix is not positive semidefinite (most negative eigenvalue = " +
                std::to_string(eig) + ")"),
          min_eigenvalue(eig) {}
};

// Density matrix trace deviates from one beyond tolerance.
struct TraceError : Error {
    double trace_value;
    explicit TraceError(double tr)
        : Error("density matrix trace deviates from 1 (trace = " + std::to_string(tr) + ")"),
          trace_value(tr) {}
};

struct DimMismatchError : Error {
    int dim_a, dim_b;
    DimMismatchError(int a, int b)
        : Error("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)),
          dim_a(a), dim_b(b) {}
};

struct InvalidDimError : Error {
    int dim;
    explicit InvalidDimError(int d, const std::string& what)
        : Error("invalid dimension " + std::to_string(d) + ": " + what), dim(d) {}
};

// Bloch vector norm exceeds the unit ball.
struct NormExceededError : Error {
    double norm;
    explicit NormExceededError(double n)
        : Error("Bloch vector norm " + std::to_string(n) + " exceeds 1"), norm(n) {}
};

// Rapidity diverges as the Bloch vector approaches the sphere; the
// geometric route rejects such inputs (the closed forms accept them).
struct PureStateSingularityError : Error {
    double norm;
    explicit PureStateSingularityError(double n)
        : Error("Bloch vector norm " + std::to_string(n) +
                " too close to 1: rapidity diverges for pure states"),
          norm(n) {}
};

struct DomainError : Error {
    using Error::Error;
};

// The Jacobi sweep cap was reached before the off-diagonal norm target.
struct ConvergenceError : Error {
    using Error::Error;
};

struct InvalidSpecError : Error {
    using Error::Error;
};

// State file (or report) could not be parsed / validated.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace qfid

#include "qfid/fidelity.hpp"

#include <cmath>
#include <string>

namespace qfid {

double clamp_unit_interval(double x, double slack) {
    if (x < 0.0) {
        if (x < -slack)
            throw DomainError("fidelity escaped [0,1] beyond clamp window: " + std::to_string(x));
        return 0.0;
    }
    if (x > 1.0) {
        if (x > 1.0 + slack)
            throw DomainError("fidelity escaped [0,1] beyond clamp window: " + std::to_string(x));
        return 1.0;
    }
    return x;
}

double bures_fidelity_sqrt(const ComplexMatrix& sqrt_r1, const DensityMatrix& r2) {
    if (sqrt_r1.dim() != r2.dim()) throw DimMismatchError(sqrt_r1.dim(), r2.dim());
    const ComplexMatrix inner = matmul(matmul(sqrt_r1, r2.matrix()), sqrt_r1);
    EigenDecomposition d = hermitian_eig(inner);
    double sum = 0.0;
    // the zero floor keeps rank-deficient pairs exact: sqrt of a spurious
    // 1e-15 null-space eigenvalue would contribute ~3e-8 to the trace
    for (double e : d.eigenvalues)
        if (e >= tolerances::kEigZeroFloor) sum += std::sqrt(e);
    return clamp_unit_interval(sum * sum);
}

double bures_fidelity(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DimMismatchError(r1.dim(), r2.dim());
    return bures_fidelity_sqrt(psd_sqrt(r1.matrix()), r2);
}

double a_fidelity_sqrt(const ComplexMatrix& sqrt_r1, const ComplexMatrix& sqrt_r2) {
    if (sqrt_r1.dim() != sqrt_r2.dim()) throw DimMismatchError(sqrt_r1.dim(), sqrt_r2.dim());
    // Tr(s1 s2) is real and nonnegative for PSD factors
    Complex t{};
    const int n = sqrt_r1.dim();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t += sqrt_r1.at(i, k) * sqrt_r2.at(k, i);
    const double tr = t.real();
    return clamp_unit_interval(tr * tr);
}

double a_fidelity(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DimMismatchError(r1.dim(), r2.dim());
    return a_fidelity_sqrt(psd_sqrt(r1.matrix()), psd_sqrt(r2.matrix()));
}

double trace_distance(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DimMismatchError(r1.dim(), r2.dim());
    EigenDecomposition d = hermitian_eig(r1.matrix() - r2.matrix());
    double sum = 0.0;
    for (double e : d.eigenvalues) sum += std::abs(e);
    return 0.5 * sum;
}

double overlap_g(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DimMismatchError(r1.dim(), r2.dim());
    const int n = r1.dim();
    Complex t{};
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t += r1.matrix().at(i, k) * r2.matrix().at(k, i);
    return (n * t.real() - 1.0) / (n - 1.0);
}

double alt_a_fidelity(const DensityMatrix& r1, const DensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DimMismatchError(r1.dim(), r2.dim());
    const double g11 = overlap_g(r1, r1);
    const double g22 = overlap_g(r2, r2);
    const double g12 = overlap_g(r1, r2);
    // g(r,r) <= 1 for any valid state; beyond slack means corrupted input
    if (1.0 - g11 < -1e-12 || 1.0 - g22 < -1e-12)
        throw DomainError("self-overlap g(r,r) exceeds 1: input is not a valid state");
    const double s1 = 1.0 + std::sqrt(std::max(1.0 - g11, 0.0));
    const double s2 = 1.0 + std::sqrt(std::max(1.0 - g22, 0.0));
    const double num = s1 * s2 + g12;
    return clamp_unit_interval(num * num / (4.0 * s1 * s2));
}

}  // namespace qfid

#include "qfid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qfid {

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimMismatchError(a.dim(), b.dim());
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimMismatchError(a.dim(), b.dim());
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = s * m.at(i, j);
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) { return Complex(s, 0.0) * m; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimMismatchError(a.dim(), b.dim());
    const int n = a.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r.at(i, j) = std::conj(m.at(j, i));
    return r;
}

Complex trace(const ComplexMatrix& m) {
    Complex t{};
    for (int i = 0; i < m.dim(); ++i) t += m.at(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& e : m.entries()) s += std::norm(e);
    return std::sqrt(s);
}

double max_asymmetry(const ComplexMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            worst = std::max(worst, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return worst;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::norm(m.at(i, j));
    return std::sqrt(s);
}

// One two-sided Jacobi rotation zeroing the (p,q) pair of a Hermitian
// matrix; accumulates the same rotation into v.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a.at(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;

    const Complex phase = apq / abs_apq;
    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double sign = tau >= 0.0 ? 1.0 : -1.0;
    const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    const Complex jpq = s * phase;             // J[p][q]
    const Complex jqp = -s * std::conj(phase); // J[q][p]

    // a <- a * J
    for (int k = 0; k < n; ++k) {
        const Complex akp = a.at(k, p), akq = a.at(k, q);
        a.at(k, p) = c * akp + jqp * akq;
        a.at(k, q) = jpq * akp + c * akq;
    }
    // a <- J^dagger * a
    for (int k = 0; k < n; ++k) {
        const Complex apk = a.at(p, k), aqk = a.at(q, k);
        a.at(p, k) = c * apk + std::conj(jqp) * aqk;
        a.at(q, k) = std::conj(jpq) * apk + c * aqk;
    }
    // v <- v * J
    for (int k = 0; k < n; ++k) {
        const Complex vkp = v.at(k, p), vkq = v.at(k, q);
        v.at(k, p) = c * vkp + jqp * vkq;
        v.at(k, q) = jpq * vkp + c * vkq;
    }

    // the rotation is exact on the pivot pair; pin it against round-off
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
    a.at(p, p) = a.at(p, p).real();
    a.at(q, q) = a.at(q, q).real();
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    const double asym = max_asymmetry(m);
    if (asym > tolerances::kHermiticity) throw NotHermitianError(asym);

    const int n = m.dim();

    // work on the exactly Hermitian part
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = m.at(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const Complex e = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
            a.at(i, j) = e;
            a.at(j, i) = std::conj(e);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double target = tolerances::kJacobiRelTarget * frobenius_norm(a);
    const double skip_below = n > 1 ? target / n : 0.0;

    if (target > 0.0) {
        bool converged = off_diagonal_norm(a) <= target;
        int sweep = 0;
        while (!converged) {
            if (sweep++ >= tolerances::kJacobiMaxSweeps)
                throw ConvergenceError("Jacobi eigensolver failed to converge in " +
                                       std::to_string(tolerances::kJacobiMaxSweeps) + " sweeps");
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q)
                    if (std::abs(a.at(p, q)) >= skip_below) rotate(a, v, p, q);
            converged = off_diagonal_norm(a) <= target;
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

    EigenDecomposition d{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[k] = a.at(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) d.eigenvectors.at(r, k) = v.at(r, order[k]);
    }
    return d;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigenDecomposition d = hermitian_eig(m);
    const double min_eig = d.eigenvalues.front();
    if (min_eig < tolerances::kEigNegativeWindow) throw NotPsdError(min_eig);

    const int n = m.dim();
    std::vector<double> roots(n);
    for (int k = 0; k < n; ++k) {
        const double e = d.eigenvalues[k];
        roots[k] = e < tolerances::kEigZeroFloor ? 0.0 : std::sqrt(e);
    }

    // S = V diag(sqrt(e)) V^dagger, assembled Hermitian
    ComplexMatrix s(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex e{};
            for (int k = 0; k < n; ++k)
                e += roots[k] * d.eigenvectors.at(i, k) * std::conj(d.eigenvectors.at(j, k));
            if (i == j) {
                s.at(i, i) = e.real();
            } else {
                s.at(i, j) = e;
                s.at(j, i) = std::conj(e);
            }
        }
    }
    return s;
}

}  // namespace qfid

#pragma once

#include <cmath>

#include "qfid/linalg.hpp"
#include "qfid/sampling.hpp"
#include "qfid/states.hpp"

namespace qfid::test {

// Dense Hermitian matrix with Gaussian entries, H = (G + G^dag)/2.
inline ComplexMatrix random_hermitian(int dim, TrialStream& s) {
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto [re, im] = s.gaussian_pair();
            g.at(i, j) = Complex(re, im);
        }
    return 0.5 * (g + adjoint(g));
}

inline DensityMatrix draw_state(const char* measure, int dim, std::uint64_t seed,
                                std::uint64_t trial) {
    return sample_state(SamplerSpec{measure_from_name(measure), dim, seed}, trial);
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

}  // namespace qfid::test

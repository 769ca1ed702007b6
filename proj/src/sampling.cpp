#include "qfid/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qfid/linalg.hpp"

namespace qfid {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoNeg53 = 0x1.0p-53;
}  // namespace

std::string measure_name(Measure measure) {
    switch (measure) {
        case Measure::HilbertSchmidtMixed: return "hs";
        case Measure::HaarPure: return "haar-pure";
        case Measure::BlochBallUniform: return "bloch-uniform";
    }
    throw DomainError("unreachable measure");
}

Measure measure_from_name(const std::string& name) {
    if (name == "hs") return Measure::HilbertSchmidtMixed;
    if (name == "haar-pure") return Measure::HaarPure;
    if (name == "bloch-uniform") return Measure::BlochBallUniform;
    throw ParseError("unknown measure \"" + name +
                     "\" (expected hs, haar-pure, or bloch-uniform)");
}

void validate_spec(const SamplerSpec& spec) {
    if (spec.dim < 2)
        throw InvalidSpecError("sampler dim must be >= 2, got " + std::to_string(spec.dim));
    if (spec.measure == Measure::BlochBallUniform && spec.dim != 2)
        throw InvalidSpecError("bloch-uniform is defined for dim 2 only, got dim " +
                               std::to_string(spec.dim));
}

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial_index)
    : state_(mix64(seed ^ mix64(trial_index + kGolden))) {}

std::uint64_t TrialStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double TrialStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * kTwoNeg53;
}

double TrialStream::next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * kTwoNeg53;
}

std::pair<double, double> TrialStream::gaussian_pair() {
    const double u1 = next_unit();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

BlochVector sample_bloch_ball(TrialStream& stream) {
    const auto [g0, g1] = stream.gaussian_pair();
    const auto [g2, g3] = stream.gaussian_pair();
    (void)g3;
    const double radius = std::cbrt(stream.next_double());
    const double len = std::sqrt(g0 * g0 + g1 * g1 + g2 * g2);
    if (len == 0.0) return BlochVector(2, {0.0, 0.0, 0.0});
    const double scale = radius / len;
    return BlochVector(2, {g0 * scale, g1 * scale, g2 * scale});
}

namespace {

ComplexMatrix ginibre(int dim, TrialStream& stream) {
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const auto [re, im] = stream.gaussian_pair();
            g.at(r, c) = Complex(re, im);
        }
    return g;
}

DensityMatrix hs_mixed(int dim, TrialStream& stream) {
    const ComplexMatrix g = ginibre(dim, stream);
    ComplexMatrix m = matmul(g, adjoint(g));
    const double tr = trace(m).real();
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) /= tr;
    return DensityMatrix::from_matrix(m);
}

DensityMatrix haar_pure(int dim, TrialStream& stream) {
    std::vector<Complex> psi(dim);
    double norm2 = 0.0;
    for (int i = 0; i < dim; ++i) {
        const auto [re, im] = stream.gaussian_pair();
        psi[i] = Complex(re, im);
        norm2 += re * re + im * im;
    }
    ComplexMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m.at(r, c) = psi[r] * std::conj(psi[c]) / norm2;
    return DensityMatrix::from_matrix(m);
}

}  // namespace

DensityMatrix sample_state_stream(Measure measure, int dim, TrialStream& stream) {
    switch (measure) {
        case Measure::HilbertSchmidtMixed: return hs_mixed(dim, stream);
        case Measure::HaarPure: return haar_pure(dim, stream);
        case Measure::BlochBallUniform: return qubit_from_bloch(sample_bloch_ball(stream));
    }
    throw DomainError("unreachable measure");
}

DensityMatrix sample_state(const SamplerSpec& spec, std::uint64_t trial_index) {
    validate_spec(spec);
    TrialStream stream(spec.seed, trial_index);
    return sample_state_stream(spec.measure, spec.dim, stream);
}

}  // namespace qfid

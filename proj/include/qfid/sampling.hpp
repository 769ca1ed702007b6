#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "qfid/states.hpp"

namespace qfid {

enum class Measure { HilbertSchmidtMixed, HaarPure, BlochBallUniform };

std::string measure_name(Measure measure);
Measure measure_from_name(const std::string& name);

struct SamplerSpec {
    Measure measure = Measure::HilbertSchmidtMixed;
    int dim = 2;
    std::uint64_t seed = 42;
};

// Throws InvalidSpecError (dim < 2, or BlochBallUniform with dim != 2).
void validate_spec(const SamplerSpec& spec);

// splitmix64 finalizer; the stream below and the reference vectors both
// depend on these exact constants.
std::uint64_t mix64(std::uint64_t z);

// Counter-based generator: each (seed, trial_index) keys an independent
// stream, so trials can run in any order or in parallel.
class TrialStream {
  public:
    TrialStream(std::uint64_t seed, std::uint64_t trial_index);

    std::uint64_t next_u64();
    double next_double();  // uniform in [0, 1)
    double next_unit();    // uniform in (0, 1], safe under log
    std::pair<double, double> gaussian_pair();  // Box-Muller

  private:
    std::uint64_t state_;
};

// Draws one state from the stream. The number of values consumed is fixed
// per (measure, dim): N^2 gaussian pairs, N pairs, or 2 pairs + 1 uniform.
DensityMatrix sample_state_stream(Measure measure, int dim, TrialStream& stream);

// Uniform point in the closed unit 3-ball (direction from 3 gaussians,
// radius from U^(1/3)); consumes 2 gaussian pairs + 1 uniform.
BlochVector sample_bloch_ball(TrialStream& stream);

DensityMatrix sample_state(const SamplerSpec& spec, std::uint64_t trial_index);

}  // namespace qfid

// Regenerates data/sampler_reference.json: the first draws of every
// (measure, dim) combination at seed 42, plus raw stream values, so an
// independent implementation can check stream compatibility.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "qfid/sampling.hpp"
#include "qfid/states.hpp"

int main(int argc, char** argv) {
    const std::string out_path = argc > 1 ? argv[1] : "data/sampler_reference.json";
    constexpr std::uint64_t kSeed = 42;
    constexpr int kDraws = 5;

    nlohmann::ordered_json doc;
    doc["seed"] = kSeed;

    nlohmann::ordered_json stream_doc;
    {
        qfid::TrialStream s(kSeed, 0);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int i = 0; i < kDraws; ++i) arr.push_back(std::to_string(s.next_u64()));
        stream_doc["first_u64"] = std::move(arr);
    }
    {
        qfid::TrialStream s(kSeed, 0);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int i = 0; i < kDraws; ++i) arr.push_back(s.next_double());
        stream_doc["first_doubles"] = std::move(arr);
    }
    {
        qfid::TrialStream s(kSeed, 0);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int i = 0; i < kDraws; ++i) {
            const auto [g0, g1] = s.gaussian_pair();
            arr.push_back({g0, g1});
        }
        stream_doc["first_gaussian_pairs"] = std::move(arr);
    }
    doc["stream"] = std::move(stream_doc);

    nlohmann::ordered_json states;
    const auto add = [&states](qfid::Measure measure, int dim) {
        const qfid::SamplerSpec spec{measure, dim, kSeed};
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int trial = 0; trial < kDraws; ++trial) {
            const qfid::DensityMatrix rho = qfid::sample_state(spec, trial);
            arr.push_back(nlohmann::ordered_json::parse(qfid::state_to_json(rho)));
        }
        states[qfid::measure_name(measure)][std::to_string(dim)] = std::move(arr);
    };
    for (int dim : {2, 3, 4}) add(qfid::Measure::HilbertSchmidtMixed, dim);
    for (int dim : {2, 3, 4}) add(qfid::Measure::HaarPure, dim);
    add(qfid::Measure::BlochBallUniform, 2);
    doc["states"] = std::move(states);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << out_path << '\n';
        return 1;
    }
    out << doc.dump(2) << '\n';
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

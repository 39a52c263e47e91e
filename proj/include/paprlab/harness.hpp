/*
   Copyright 2026 The papr-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PAPRLAB_HARNESS_HPP
#define PAPRLAB_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "paprlab/codes.hpp"
#include "paprlab/ofdm.hpp"
#include "paprlab/stats.hpp"

namespace paprlab::harness {

/// Name of the bit-source PRNG, recorded in every report for reproducibility.
inline constexpr const char* kPrngName = "splitmix64";

/// SplitMix64: a splittable 64-bit generator with a one-word state.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t state_;
};

struct ExperimentConfig {
    std::size_t subcarriers = 64;
    ofdm::Modulation modulation = ofdm::Modulation::qam16;
    std::size_t oversample = 4;
    std::size_t frames = 20000;
    std::uint64_t seed = 1;
    std::string input = "random";  ///< "random" or a file path
    std::vector<codes::CodeSpec> code_specs;
    double ccdf_level = 0.01;
};

struct RunMetadata {
    std::string label;
    double code_rate = 1.0;
    std::size_t source_bits = 0;
    std::size_t coded_bits = 0;
};

struct LabeledCurve {
    std::string label;
    stats::CcdfCurve curve;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<stats::ReductionRow> rows;  ///< baseline first, then requested specs
    std::vector<LabeledCurve> curves;
    double wall_time_seconds = 0.0;
};

/// Exactly `needed` bits. A file source expands bytes most-significant-bit
/// first and cycles from the start when shorter than needed; "random" draws
/// from a seeded splitmix64 stream (each 64-bit word emitted MSB first).
gf2::BitVector ingest_bits(const std::string& source, std::size_t needed, std::uint64_t seed);

/// Source bits -> encode_stream -> frames of N * bits_per_symbol coded bits
/// (one continuous stream; codewords may straddle frame boundaries) -> map ->
/// synthesize -> per-frame PAPR. Deterministic in (seed, config, spec).
std::pair<stats::PaprSamples, RunMetadata> run_pipeline(const ExperimentConfig& config,
                                                        const codes::CodeSpec& spec);

/// Runs every configured spec plus an implicit uncoded baseline and collects
/// reduction rows and CCDF curves.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Writes summary.json and one ccdf_<label>.csv per spec into out_dir.
/// CSV columns are threshold_db,ccdf_empirical,ccdf_theoretical with the
/// theoretical column filled only on the uncoded curve. Returns the paths.
std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& out_dir, bool csv,
                                               bool json);

}  // namespace paprlab::harness

#endif

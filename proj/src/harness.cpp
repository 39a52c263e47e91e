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

#include "paprlab/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace paprlab::harness {

namespace {

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (!in.good() && !in.eof()) throw std::runtime_error("error reading input file: " + path);
    if (bytes.empty()) throw std::runtime_error("input file is empty: " + path);
    return bytes;
}

}  // namespace

gf2::BitVector ingest_bits(const std::string& source, std::size_t needed, std::uint64_t seed) {
    gf2::BitVector bits;
    if (source == "random") {
        SplitMix64 rng(seed);
        std::uint64_t word = 0;
        for (std::size_t i = 0; i < needed; ++i) {
            if (i % 64 == 0) word = rng.next();
            bits.push_back((word >> (63 - i % 64)) & 1);
        }
        return bits;
    }
    const std::vector<std::uint8_t> bytes = read_file_bytes(source);
    const std::size_t total = bytes.size() * 8;
    for (std::size_t i = 0; i < needed; ++i) {
        const std::size_t pos = i % total;  // cycle when the file runs out
        bits.push_back((bytes[pos / 8] >> (7 - pos % 8)) & 1);
    }
    return bits;
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Source bits for `frames` worth of coded payload: coded demand scaled by the
// code rate, rounded up to whole message blocks.
std::size_t source_bits_needed(std::size_t coded_bits, const codes::CodeInfo& info) {
    if (info.rate >= 1.0) return coded_bits;
    const auto scaled = static_cast<std::size_t>(
        std::ceil(static_cast<double>(coded_bits) * info.rate));
    return ceil_div(scaled, info.message_block) * info.message_block;
}

}  // namespace

std::pair<stats::PaprSamples, RunMetadata> run_pipeline(const ExperimentConfig& config,
                                                        const codes::CodeSpec& spec) {
    if (config.frames < 1) throw std::invalid_argument("run_pipeline: frames must be >= 1");
    if (config.subcarriers < 2) throw std::invalid_argument("run_pipeline: need at least 2 subcarriers");

    const std::size_t bps = ofdm::bits_per_symbol(config.modulation);
    const std::size_t frame_bits = config.subcarriers * bps;
    const std::size_t coded_needed = config.frames * frame_bits;
    const codes::CodeInfo info = codes::code_info(spec);

    RunMetadata meta;
    meta.label = info.label;
    meta.code_rate = info.rate;
    meta.source_bits = source_bits_needed(coded_needed, info);

    gf2::BitVector source = ingest_bits(config.input, meta.source_bits, config.seed);
    gf2::BitVector coded = codes::encode_stream(spec, source);
    meta.coded_bits = coded.size();
    while (coded.size() < coded_needed) coded.push_back(0);  // zero-pad a final partial frame

    stats::PaprSamples samples;
    samples.values.reserve(config.frames);
    for (std::size_t f = 0; f < config.frames; ++f) {
        const gf2::BitVector frame_bits_slice = coded.slice(f * frame_bits, frame_bits);
        const ofdm::SymbolFrame frame =
            config.modulation == ofdm::Modulation::bpsk
                ? ofdm::map_bpsk(frame_bits_slice, config.subcarriers)
                : ofdm::map_qam16(frame_bits_slice, config.subcarriers);
        samples.values.push_back(ofdm::papr_db(ofdm::synthesize(frame, config.oversample)));
    }
    return {std::move(samples), std::move(meta)};
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.ccdf_level <= 0.0 || config.ccdf_level >= 1.0)
        throw std::invalid_argument("run_experiment: ccdf level must lie in (0, 1)");

    const auto start = std::chrono::steady_clock::now();

    ExperimentReport report;
    report.config = config;

    std::vector<codes::CodeSpec> specs = config.code_specs;
    if (specs.empty()) specs.push_back(codes::CodeSpec{});
    const bool has_baseline =
        std::any_of(specs.begin(), specs.end(), [](const codes::CodeSpec& s) {
            return s.family == codes::CodeSpec::Family::none;
        });
    if (!has_baseline) specs.insert(specs.begin(), codes::CodeSpec{});

    const codes::CodeSpec baseline_spec{};
    auto [baseline_samples, baseline_meta] = run_pipeline(config, baseline_spec);

    for (const codes::CodeSpec& spec : specs) {
        const bool is_baseline = spec.family == codes::CodeSpec::Family::none;
        auto [samples, meta] = is_baseline
                                   ? std::pair{baseline_samples, baseline_meta}
                                   : run_pipeline(config, spec);
        report.rows.push_back(stats::reduction_row(meta.label, baseline_samples, samples,
                                                   config.ccdf_level, meta.code_rate));
        report.curves.push_back(
            {meta.label, stats::empirical_ccdf(samples, stats::default_threshold_grid(samples))});
    }

    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label) out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string modulation_name(ofdm::Modulation mod) {
    return mod == ofdm::Modulation::bpsk ? "bpsk" : "qam16";
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const ExperimentReport& report,
                                               const std::filesystem::path& out_dir, bool csv,
                                               bool json) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    if (csv) {
        for (const LabeledCurve& lc : report.curves) {
            const bool uncoded = lc.label == "none";
            const std::filesystem::path path = out_dir / ("ccdf_" + sanitize_label(lc.label) + ".csv");
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            out << "threshold_db,ccdf_empirical,ccdf_theoretical\n";
            for (const stats::CcdfPoint& p : lc.curve.points) {
                out << format_sig(p.threshold_db) << ',' << format_sig(p.probability) << ',';
                if (uncoded) {
                    const double xi_linear = std::pow(10.0, p.threshold_db / 10.0);
                    out << format_sig(stats::theoretical_ccdf(report.config.subcarriers, xi_linear));
                }
                out << '\n';
            }
            written.push_back(path);
        }
    }

    if (json) {
        nlohmann::ordered_json doc;
        doc["config"] = {
            {"subcarriers", report.config.subcarriers},
            {"modulation", modulation_name(report.config.modulation)},
            {"oversample", report.config.oversample},
            {"frames", report.config.frames},
            {"seed", report.config.seed},
            {"input", report.config.input},
            {"ccdf_level", report.config.ccdf_level},
            {"prng", kPrngName},
        };
        doc["wall_time_seconds"] = report.wall_time_seconds;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const stats::ReductionRow& row : report.rows) {
            doc["rows"].push_back({
                {"label", row.label},
                {"code_rate", row.code_rate},
                {"uncoded_papr_db", row.uncoded_papr_db},
                {"coded_papr_db", row.coded_papr_db},
                {"reduction_db", row.reduction_db},
                {"frames", report.config.frames},
                {"seed", report.config.seed},
            });
        }
        const std::filesystem::path path = out_dir / "summary.json";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << doc.dump(2) << '\n';
        written.push_back(path);
    }

    return written;
}

}  // namespace paprlab::harness

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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "paprlab/harness.hpp"

namespace py = pybind11;
using namespace paprlab;

namespace {

gf2::BitVector to_bitvector(const std::vector<int>& bits) {
    gf2::BitVector v;
    for (int b : bits) v.push_back(static_cast<gf2::Bit>(b));
    return v;
}

std::vector<int> from_bitvector(const gf2::BitVector& v) {
    return std::vector<int>(v.begin(), v.end());
}

ofdm::Modulation parse_modulation(const std::string& name) {
    if (name == "bpsk") return ofdm::Modulation::bpsk;
    if (name == "qam16") return ofdm::Modulation::qam16;
    throw std::invalid_argument("unknown modulation '" + name + "'");
}

ofdm::SymbolFrame to_frame(const std::vector<std::complex<double>>& symbols) {
    ofdm::SymbolFrame frame;
    frame.symbols = symbols;
    return frame;
}

py::dict code_summary(const std::string& spec_text) {
    const codes::CodeSpec spec = codes::CodeSpec::parse(spec_text);
    const codes::CodeInfo info = codes::code_info(spec);
    py::dict out;
    out["label"] = info.label;
    out["rate"] = info.rate;
    out["message_block"] = info.message_block;
    if (spec.family == codes::CodeSpec::Family::conv) {
        const codes::ConvolutionalCode code =
            codes::odenwalder_code(spec.rate_denominator, spec.constraint_length);
        out["constraint_length"] = code.constraint_length;
        out["free_distance"] = codes::free_distance(code);
        out["taps"] = code.taps;
    } else if (spec.family != codes::CodeSpec::Family::none) {
        codes::LinearBlockCode code;
        switch (spec.family) {
            case codes::CodeSpec::Family::hamming: code = codes::hamming_code(spec.m); break;
            case codes::CodeSpec::Family::cyclic: {
                const auto [g, n] = codes::cyclic_default_generator(spec.m);
                code = codes::CyclicCode::create(g, n).as_block_code(info.label);
                break;
            }
            case codes::CodeSpec::Family::golay: code = codes::golay_code(spec.golay_n == 24); break;
            default: code = codes::reed_muller_code(spec.r, spec.m); break;
        }
        out["n"] = code.n;
        out["k"] = code.k;
        if (code.k <= 20) out["d_min"] = codes::min_distance(code);
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < code.k; ++i) rows.push_back(code.generator.row(i).to_string());
        out["generator_rows"] = rows;
    }
    return out;
}

py::dict run_experiment_py(std::size_t subcarriers, const std::string& modulation,
                           std::size_t oversample, std::size_t frames, std::uint64_t seed,
                           const std::string& input, const std::vector<std::string>& code_specs,
                           double ccdf_level) {
    harness::ExperimentConfig config;
    config.subcarriers = subcarriers;
    config.modulation = parse_modulation(modulation);
    config.oversample = oversample;
    config.frames = frames;
    config.seed = seed;
    config.input = input;
    config.ccdf_level = ccdf_level;
    for (const std::string& text : code_specs)
        config.code_specs.push_back(codes::CodeSpec::parse(text));

    const harness::ExperimentReport report = harness::run_experiment(config);
    py::list rows;
    for (const auto& row : report.rows) {
        py::dict d;
        d["label"] = row.label;
        d["code_rate"] = row.code_rate;
        d["uncoded_papr_db"] = row.uncoded_papr_db;
        d["coded_papr_db"] = row.coded_papr_db;
        d["reduction_db"] = row.reduction_db;
        rows.append(d);
    }
    py::dict out;
    out["rows"] = rows;
    out["prng"] = harness::kPrngName;
    out["wall_time_seconds"] = report.wall_time_seconds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_papr_lab, m) {
    m.doc() = "coded-OFDM PAPR laboratory (C++ core)";

    m.def("encode_stream",
          [](const std::string& spec, const std::vector<int>& bits) {
              return from_bitvector(codes::encode_stream(codes::CodeSpec::parse(spec),
                                                         to_bitvector(bits)));
          },
          py::arg("spec"), py::arg("bits"),
          "Encode a bit stream with one of the code-spec families.");

    m.def("code_info", &code_summary, py::arg("spec"),
          "Parameters (n, k, rate, d_min, generator) of a code spec.");

    m.def("map_bpsk",
          [](const std::vector<int>& bits) {
              return ofdm::map_bpsk(to_bitvector(bits), bits.size()).symbols;
          },
          py::arg("bits"));

    m.def("map_qam16",
          [](const std::vector<int>& bits) {
              return ofdm::map_qam16(to_bitvector(bits), bits.size() / 4).symbols;
          },
          py::arg("bits"));

    m.def("synthesize",
          [](const std::vector<std::complex<double>>& symbols, std::size_t oversample) {
              return ofdm::synthesize(to_frame(symbols), oversample).samples;
          },
          py::arg("symbols"), py::arg("oversample") = 4,
          "Baseband samples of one OFDM symbol (zero-padded inverse DFT).");

    m.def("papr_db",
          [](const std::vector<std::complex<double>>& samples) {
              ofdm::TimeSignal signal;
              signal.samples = samples;
              return ofdm::papr_db(signal);
          },
          py::arg("samples"));

    m.def("aperiodic_autocorrelation",
          [](const std::vector<std::complex<double>>& symbols) {
              return ofdm::aperiodic_autocorrelation(to_frame(symbols)).values;
          },
          py::arg("symbols"), "C_1 .. C_(N-1) of a real +-1 frame.");

    m.def("papr_via_autocorrelation",
          [](const std::vector<std::complex<double>>& symbols, std::size_t grid_points) {
              return ofdm::papr_via_autocorrelation(to_frame(symbols), grid_points);
          },
          py::arg("symbols"), py::arg("grid_points"));

    m.def("theoretical_ccdf", &stats::theoretical_ccdf, py::arg("subcarriers"),
          py::arg("xi_linear"), "1 - (1 - exp(-xi))^N");

    m.def("papr_at_ccdf",
          [](const std::vector<double>& samples_db, double level) {
              stats::PaprSamples samples;
              samples.values = samples_db;
              return stats::papr_at_ccdf(samples, level);
          },
          py::arg("samples_db"), py::arg("level"));

    m.def("ingest_bits",
          [](const std::string& source, std::size_t needed, std::uint64_t seed) {
              return from_bitvector(harness::ingest_bits(source, needed, seed));
          },
          py::arg("source"), py::arg("needed"), py::arg("seed") = 1);

    m.def("run_experiment", &run_experiment_py, py::arg("subcarriers") = 64,
          py::arg("modulation") = "qam16", py::arg("oversample") = 4, py::arg("frames") = 20000,
          py::arg("seed") = 1, py::arg("input") = "random",
          py::arg("codes") = std::vector<std::string>{}, py::arg("ccdf_level") = 0.01,
          "Full coding -> OFDM -> CCDF comparison; returns the reduction rows.");
}

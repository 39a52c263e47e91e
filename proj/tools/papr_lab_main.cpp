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

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paprlab/harness.hpp"

namespace {

using namespace paprlab;

int run_command(const harness::ExperimentConfig& config, const std::string& out_dir,
                const std::string& formats) {
    bool csv = false;
    bool json = false;
    std::stringstream ss(formats);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "csv")
            csv = true;
        else if (item == "json")
            json = true;
        else
            throw CLI::ValidationError("--format", "unknown format '" + item + "'");
    }

    const harness::ExperimentReport report = harness::run_experiment(config);

    std::printf("%-22s %10s %10s %10s %8s\n", "code", "uncoded dB", "coded dB", "reduction", "rate");
    for (const auto& row : report.rows)
        std::printf("%-22s %10.4f %10.4f %10.4f %8.4f\n", row.label.c_str(), row.uncoded_papr_db,
                    row.coded_papr_db, row.reduction_db, row.code_rate);
    std::printf("# %zu frames, seed %llu, prng %s, %.2f s\n", report.config.frames,
                static_cast<unsigned long long>(report.config.seed), harness::kPrngName,
                report.wall_time_seconds);

    for (const auto& path : harness::emit_report(report, out_dir, csv, json))
        std::printf("wrote %s\n", path.string().c_str());
    return 0;
}

void print_block_code(const codes::LinearBlockCode& code) {
    std::printf("n: %zu\nk: %zu\nrate: %.6f\n", code.n, code.k, code.rate());
    if (code.k <= 20)
        std::printf("d_min: %zu\n", codes::min_distance(code));
    else
        std::printf("d_min: not enumerated (k > 20)\n");
    std::printf("G (%zu x %zu):\n", code.k, code.n);
    for (std::size_t i = 0; i < code.k; ++i)
        std::printf("  %s\n", code.generator.row(i).to_string().c_str());
}

int show_command(const std::string& spec_text) {
    const codes::CodeSpec spec = codes::CodeSpec::parse(spec_text);
    std::printf("spec: %s\n", spec.to_string().c_str());
    switch (spec.family) {
        case codes::CodeSpec::Family::none:
            std::printf("identity (no coding), rate 1\n");
            break;
        case codes::CodeSpec::Family::hamming:
            print_block_code(codes::hamming_code(spec.m));
            break;
        case codes::CodeSpec::Family::cyclic: {
            const auto [g, n] = codes::cyclic_default_generator(spec.m);
            std::printf("g(X) = %s\n", g.to_string().c_str());
            print_block_code(codes::CyclicCode::create(g, n).as_block_code(spec.to_string()));
            break;
        }
        case codes::CodeSpec::Family::conv: {
            const codes::ConvolutionalCode code =
                codes::odenwalder_code(spec.rate_denominator, spec.constraint_length);
            std::printf("rate: 1/%d\nK: %d\ntaps (octal):", code.n_out, code.constraint_length);
            for (std::uint32_t tap : code.taps) std::printf(" %o", tap);
            std::printf("\nfree distance: %d\n", codes::free_distance(code));
            break;
        }
        case codes::CodeSpec::Family::golay:
            print_block_code(codes::golay_code(spec.golay_n == 24));
            break;
        case codes::CodeSpec::Family::reed_muller:
            print_block_code(codes::reed_muller_code(spec.r, spec.m));
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coded-OFDM PAPR laboratory"};
    app.require_subcommand(1);

    harness::ExperimentConfig config;
    std::string modulation = "qam16";
    std::vector<std::string> code_texts;
    std::string out_dir = "papr-out";
    std::string formats = "csv,json";

    CLI::App* run = app.add_subcommand("run", "run the coding -> OFDM -> CCDF pipeline");
    run->add_option("--subcarriers", config.subcarriers, "number of subcarriers N")
        ->capture_default_str();
    run->add_option("--mod", modulation, "modulation: bpsk or qam16")->capture_default_str();
    run->add_option("--oversample", config.oversample, "time samples per subcarrier L")
        ->capture_default_str();
    run->add_option("--frames", config.frames, "Monte-Carlo frame count")->capture_default_str();
    run->add_option("--seed", config.seed, "PRNG seed")->capture_default_str();
    run->add_option("--input", config.input, "'random' or a file of source bytes")
        ->capture_default_str();
    run->add_option("--code", code_texts,
                    "code spec (repeatable): none, hamming:m=6, cyclic:m=4, conv:rate=1/2,K=6, "
                    "golay:23, golay:24, rm:r=1,m=4");
    run->add_option("--ccdf-level", config.ccdf_level, "CCDF level for the PAPR readout")
        ->capture_default_str();
    run->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    run->add_option("--format", formats, "comma-separated: csv,json")->capture_default_str();

    CLI::App* codes_cmd = app.add_subcommand("codes", "inspect code constructions");
    std::string show_spec;
    CLI::App* show = codes_cmd->add_subcommand("show", "print parameters and generator matrix");
    show->add_option("spec", show_spec, "code spec")->required();
    codes_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(run)) {
            if (modulation == "bpsk")
                config.modulation = ofdm::Modulation::bpsk;
            else if (modulation == "qam16")
                config.modulation = ofdm::Modulation::qam16;
            else
                throw std::invalid_argument("unknown modulation '" + modulation + "'");
            if (code_texts.empty()) code_texts.push_back("none");
            for (const std::string& text : code_texts)
                config.code_specs.push_back(codes::CodeSpec::parse(text));
            return run_command(config, out_dir, formats);
        }
        return show_command(show_spec);
    } catch (const std::exception& e) {
        std::cerr << "papr-lab: " << e.what() << '\n';
        return 1;
    }
}

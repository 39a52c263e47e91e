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

#ifndef PAPRLAB_STATS_HPP
#define PAPRLAB_STATS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace paprlab::stats {

/// Per-frame PAPR measurements in dB.
struct PaprSamples {
    std::vector<double> values;

    std::size_t count() const noexcept { return values.size(); }
};

struct CcdfPoint {
    double threshold_db = 0.0;
    double probability = 0.0;
};

/// Exceedance curve: strictly increasing thresholds, non-increasing
/// probabilities in [0, 1].
struct CcdfCurve {
    std::vector<CcdfPoint> points;
};

/// One comparison line of a reduction report.
struct ReductionRow {
    std::string label;
    double uncoded_papr_db = 0.0;
    double coded_papr_db = 0.0;
    double reduction_db = 0.0;  ///< uncoded - coded (may be negative)
    double code_rate = 1.0;
};

/// Pr(PAPR > xi) = 1 - (1 - e^-xi)^N for a linear (not dB) threshold xi >= 0.
double theoretical_ccdf(std::size_t n_subcarriers, double xi_linear);

/// Empirical exceedance probabilities (# samples strictly above each
/// threshold) / count. Thresholds must be strictly increasing.
CcdfCurve empirical_ccdf(const PaprSamples& samples, const std::vector<double>& thresholds_db);

/// 0.05 dB steps spanning [min, max] of the samples.
std::vector<double> default_threshold_grid(const PaprSamples& samples);

/// Smallest threshold whose exceedance probability is <= level, refined by
/// linear interpolation between the bracketing points in
/// (dB, log10 probability) coordinates. Throws std::runtime_error when every
/// point of the curve sits above the level.
double papr_at_ccdf(const CcdfCurve& curve, double level);

/// Same readout on the default grid of the samples. Warns on stderr when
/// fewer than ceil(2 / level) samples are available.
double papr_at_ccdf(const PaprSamples& samples, double level);

ReductionRow reduction_row(const std::string& label, const PaprSamples& uncoded,
                           const PaprSamples& coded, double level, double code_rate);

}  // namespace paprlab::stats

#endif

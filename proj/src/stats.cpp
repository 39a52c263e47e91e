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

#include "paprlab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace paprlab::stats {

double theoretical_ccdf(std::size_t n_subcarriers, double xi_linear) {
    if (n_subcarriers < 1) throw std::invalid_argument("theoretical_ccdf: N must be >= 1");
    if (xi_linear < 0.0) throw std::invalid_argument("theoretical_ccdf: threshold must be >= 0");
    // 1 - (1 - e^-xi)^N, evaluated as -expm1(N log1p(-e^-xi)) so the deep
    // tail stays accurate.
    const double inner = std::log1p(-std::exp(-xi_linear));
    return -std::expm1(static_cast<double>(n_subcarriers) * inner);
}

CcdfCurve empirical_ccdf(const PaprSamples& samples, const std::vector<double>& thresholds_db) {
    if (samples.count() == 0) throw std::invalid_argument("empirical_ccdf: no samples");
    for (std::size_t i = 1; i < thresholds_db.size(); ++i)
        if (thresholds_db[i] <= thresholds_db[i - 1])
            throw std::invalid_argument("empirical_ccdf: thresholds must be strictly increasing");

    std::vector<double> sorted = samples.values;
    std::sort(sorted.begin(), sorted.end());

    CcdfCurve curve;
    curve.points.reserve(thresholds_db.size());
    const auto total = static_cast<double>(sorted.size());
    for (double xi : thresholds_db) {
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), xi);
        curve.points.push_back({xi, static_cast<double>(above) / total});
    }
    return curve;
}

std::vector<double> default_threshold_grid(const PaprSamples& samples) {
    if (samples.count() == 0) throw std::invalid_argument("default_threshold_grid: no samples");
    const auto [lo_it, hi_it] = std::minmax_element(samples.values.begin(), samples.values.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    constexpr double step = 0.05;
    std::vector<double> grid;
    double xi = lo;
    for (std::size_t i = 0; xi < hi; ++i) {
        grid.push_back(xi);
        xi = lo + step * static_cast<double>(i + 1);
    }
    grid.push_back(xi);  // first grid point at or above the maximum
    return grid;
}

double papr_at_ccdf(const CcdfCurve& curve, double level) {
    if (level <= 0.0 || level >= 1.0)
        throw std::invalid_argument("papr_at_ccdf: level must lie strictly inside (0, 1)");
    if (curve.points.empty()) throw std::invalid_argument("papr_at_ccdf: empty curve");

    std::size_t i = 0;
    while (i < curve.points.size() && curve.points[i].probability > level) ++i;
    if (i == curve.points.size())
        throw std::runtime_error("papr_at_ccdf: level not reached by the curve (insufficient data)");

    const CcdfPoint& at = curve.points[i];
    if (at.probability == level || i == 0 || at.probability == 0.0) return at.threshold_db;

    const CcdfPoint& prev = curve.points[i - 1];
    const double l0 = std::log10(prev.probability);
    const double l1 = std::log10(at.probability);
    const double f = (std::log10(level) - l0) / (l1 - l0);
    return prev.threshold_db + f * (at.threshold_db - prev.threshold_db);
}

double papr_at_ccdf(const PaprSamples& samples, double level) {
    if (level <= 0.0 || level >= 1.0)
        throw std::invalid_argument("papr_at_ccdf: level must lie strictly inside (0, 1)");
    const auto recommended = static_cast<std::size_t>(std::ceil(2.0 / level));
    if (samples.count() < recommended)
        std::cerr << "papr_at_ccdf: only " << samples.count() << " samples for level " << level
                  << " (recommend >= " << recommended << "); readout will be noisy\n";
    return papr_at_ccdf(empirical_ccdf(samples, default_threshold_grid(samples)), level);
}

ReductionRow reduction_row(const std::string& label, const PaprSamples& uncoded,
                           const PaprSamples& coded, double level, double code_rate) {
    ReductionRow row;
    row.label = label;
    row.uncoded_papr_db = papr_at_ccdf(uncoded, level);
    row.coded_papr_db = papr_at_ccdf(coded, level);
    row.reduction_db = row.uncoded_papr_db - row.coded_papr_db;
    row.code_rate = code_rate;
    return row;
}

}  // namespace paprlab::stats

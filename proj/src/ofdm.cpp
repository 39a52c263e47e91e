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

#include "paprlab/ofdm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace paprlab::ofdm {

std::size_t bits_per_symbol(Modulation mod) {
    return mod == Modulation::bpsk ? 1 : 4;
}

SymbolFrame map_bpsk(const gf2::BitVector& bits, std::size_t n_subcarriers) {
    if (bits.size() != n_subcarriers)
        throw std::invalid_argument("map_bpsk: expected exactly one bit per subcarrier");
    SymbolFrame frame;
    frame.symbols.reserve(n_subcarriers);
    for (gf2::Bit b : bits) frame.symbols.emplace_back(b ? -1.0 : 1.0, 0.0);
    return frame;
}

namespace {

// Gray pair -> amplitude level, before the 1/sqrt(10) normalization.
double qam16_level(gf2::Bit high, gf2::Bit low) {
    if (!high) return low ? -1.0 : -3.0;  // 00 -> -3, 01 -> -1
    return low ? 1.0 : 3.0;               // 11 -> +1, 10 -> +3
}

}  // namespace

SymbolFrame map_qam16(const gf2::BitVector& bits, std::size_t n_subcarriers) {
    if (bits.size() != 4 * n_subcarriers)
        throw std::invalid_argument("map_qam16: expected exactly four bits per subcarrier");
    const double scale = 1.0 / std::sqrt(10.0);
    SymbolFrame frame;
    frame.symbols.reserve(n_subcarriers);
    for (std::size_t s = 0; s < n_subcarriers; ++s) {
        const std::size_t base = 4 * s;
        const double i_level = qam16_level(bits[base], bits[base + 1]);
        const double q_level = qam16_level(bits[base + 2], bits[base + 3]);
        frame.symbols.emplace_back(i_level * scale, q_level * scale);
    }
    return frame;
}

namespace {

// In-place iterative radix-2 transform, unnormalized:
// data[j] <- sum_k data[k] exp(sign * 2 pi i k j / M) with M a power of two.
void fft_pow2(std::vector<Complex>& data, double sign) {
    const std::size_t m = data.size();
    for (std::size_t i = 1, j = 0; i < m; ++i) {  // bit-reversal permutation
        std::size_t bit = m >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= m; len <<= 1) {
        const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const Complex root(std::cos(angle), std::sin(angle));
        for (std::size_t start = 0; start < m; start += len) {
            Complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex a = data[start + j];
                const Complex b = data[start + j + len / 2] * w;
                data[start + j] = a + b;
                data[start + j + len / 2] = a - b;
                w *= root;
            }
        }
    }
}

}  // namespace

TimeSignal synthesize(const SymbolFrame& frame, std::size_t oversample) {
    const std::size_t n = frame.size();
    if (n == 0) throw std::invalid_argument("synthesize: empty frame");
    if (oversample < 1) throw std::invalid_argument("synthesize: oversample must be >= 1");
    const std::size_t m = n * oversample;

    TimeSignal signal;
    signal.subcarriers = n;
    signal.oversample = oversample;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    if (std::has_single_bit(m)) {
        std::vector<Complex> data(m, Complex{0.0, 0.0});
        std::copy(frame.symbols.begin(), frame.symbols.end(), data.begin());
        fft_pow2(data, +1.0);
        for (Complex& v : data) v *= scale;
        signal.samples = std::move(data);
    } else {
        // direct evaluation for grid sizes without a radix-2 factorization
        signal.samples.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                const double phase =
                    2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(m);
                acc += frame.symbols[k] * Complex{std::cos(phase), std::sin(phase)};
            }
            signal.samples[j] = acc * scale;
        }
    }
    return signal;
}

double papr_db(const TimeSignal& signal) {
    if (signal.samples.empty()) throw std::domain_error("papr_db: empty signal");
    double peak = 0.0;
    double sum = 0.0;
    for (const Complex& v : signal.samples) {
        const double power = std::norm(v);
        peak = std::max(peak, power);
        sum += power;
    }
    const double mean = sum / static_cast<double>(signal.samples.size());
    if (mean <= 0.0) throw std::domain_error("papr_db: zero signal has no PAPR");
    return 10.0 * std::log10(peak / mean);
}

namespace {

std::vector<double> real_pm1_values(const SymbolFrame& frame) {
    std::vector<double> c;
    c.reserve(frame.size());
    for (const Complex& v : frame.symbols) {
        if (v.imag() != 0.0 || std::abs(v.real()) != 1.0)
            throw std::invalid_argument("autocorrelation analysis requires a real +-1 frame");
        c.push_back(v.real());
    }
    return c;
}

}  // namespace

AutocorrelationVector aperiodic_autocorrelation(const SymbolFrame& frame) {
    const std::vector<double> c = real_pm1_values(frame);
    const std::size_t n = c.size();
    AutocorrelationVector ac;
    if (n == 0) return ac;
    ac.values.resize(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) sum += c[i] * c[i + k];
        ac.values[k - 1] = sum;
    }
    return ac;
}

double power_envelope_ac(const AutocorrelationVector& autocorrelation, double t) {
    double sum = 0.0;
    for (std::size_t k = 1; k <= autocorrelation.max_lag(); ++k)
        sum += autocorrelation.at(k) *
               std::cos(2.0 * std::numbers::pi * static_cast<double>(k) * t);
    return sum;
}

double power_envelope_ac(const SymbolFrame& frame, double t) {
    return power_envelope_ac(aperiodic_autocorrelation(frame), t);
}

double papr_via_autocorrelation(const SymbolFrame& frame, std::size_t grid_points) {
    if (grid_points < 2)
        throw std::invalid_argument("papr_via_autocorrelation: need at least 2 grid points");
    const AutocorrelationVector ac = aperiodic_autocorrelation(frame);
    const auto n = static_cast<double>(frame.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double t = 0.5 * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        peak = std::max(peak, 1.0 + (2.0 / n) * power_envelope_ac(ac, t));
    }
    if (peak <= 0.0) throw std::domain_error("papr_via_autocorrelation: vanishing envelope on grid");
    return 10.0 * std::log10(peak);
}

}  // namespace paprlab::ofdm

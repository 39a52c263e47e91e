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

#ifndef PAPRLAB_OFDM_HPP
#define PAPRLAB_OFDM_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "paprlab/gf2.hpp"

namespace paprlab::ofdm {

using Complex = std::complex<double>;

enum class Modulation { bpsk, qam16 };

std::size_t bits_per_symbol(Modulation mod);

/// Multicarrier configuration; the symbol period is normalized to 1, so the
/// time grid is t_j = j / (subcarriers * oversample).
struct OfdmConfig {
    std::size_t subcarriers = 64;
    std::size_t oversample = 4;
    Modulation modulation = Modulation::qam16;
};

/// One frame of frequency-domain symbols, one per subcarrier.
struct SymbolFrame {
    std::vector<Complex> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
};

/// Complex baseband samples of one OFDM symbol on the uniform grid
/// t_j = j / (N * L), j = 0 .. N*L - 1.
struct TimeSignal {
    std::vector<Complex> samples;
    std::size_t subcarriers = 0;
    std::size_t oversample = 1;
};

/// Aperiodic autocorrelation values C_1 .. C_(N-1) of a real-valued frame:
/// C_k = sum_i c_i * c_(i+k).
struct AutocorrelationVector {
    std::vector<double> values;  ///< values[k - 1] holds C_k

    std::size_t max_lag() const noexcept { return values.size(); }
    double at(std::size_t k) const { return values.at(k - 1); }
};

/// BPSK map, bit 0 -> +1 and bit 1 -> -1; requires exactly n_subcarriers bits.
SymbolFrame map_bpsk(const gf2::BitVector& bits, std::size_t n_subcarriers);

/// Gray-coded 16-QAM with unit average energy: each group of four stream bits
/// b3 b2 b1 b0 picks I from b3 b2 and Q from b1 b0 via
/// 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3, scaled by 1/sqrt(10).
/// Requires exactly 4 * n_subcarriers bits.
SymbolFrame map_qam16(const gf2::BitVector& bits, std::size_t n_subcarriers);

/// samples[j] = (1/sqrt(N)) * sum_k c_k exp(2 pi i k j / (N L)), i.e. the
/// zero-padded inverse DFT of the frame, unitary at L = 1.
TimeSignal synthesize(const SymbolFrame& frame, std::size_t oversample);

/// 10 log10(max_j |s_j|^2 / mean_j |s_j|^2) with the per-frame time average
/// in the denominator. Throws std::domain_error on an empty or zero signal.
double papr_db(const TimeSignal& signal);

/// Requires a real +-1 frame.
AutocorrelationVector aperiodic_autocorrelation(const SymbolFrame& frame);

/// AC component of the power envelope: P0(t) = sum_k C_k cos(2 pi k t).
double power_envelope_ac(const SymbolFrame& frame, double t);
double power_envelope_ac(const AutocorrelationVector& autocorrelation, double t);

/// PAPR of a BPSK frame from its autocorrelation alone:
/// max over a uniform grid of [0, 0.5] of (1 + (2/N) P0(t)), in dB. The
/// average power of a +-1 frame is exactly 1, and |s(t)|^2 is symmetric about
/// the half-symbol point, so the half grid suffices. With
/// grid_points = N*L/2 + 1 the grid coincides with the synthesis grid.
double papr_via_autocorrelation(const SymbolFrame& frame, std::size_t grid_points);

}  // namespace paprlab::ofdm

#endif

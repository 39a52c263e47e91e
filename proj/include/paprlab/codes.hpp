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

#ifndef PAPRLAB_CODES_HPP
#define PAPRLAB_CODES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paprlab/gf2.hpp"

namespace paprlab::codes {

using gf2::BitVector;
using gf2::Gf2Matrix;
using gf2::Gf2Poly;

/// Generator-matrix description of an (n, k) binary linear block code.
struct LinearBlockCode {
    std::size_t n = 0;                 ///< block length
    std::size_t k = 0;                 ///< message length
    Gf2Matrix generator;               ///< k x n
    std::optional<Gf2Matrix> parity_check;  ///< (n - k) x n, when known
    std::string name;

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
    /// c = u . G
    BitVector encode(const BitVector& u) const { return gf2::mat_vec_mul(generator, u); }
};

/// Feed-forward shift-register encoder of rate 1/n_out with K stages.
/// Tap masks are read with bit 0 multiplying the newest input bit.
struct ConvolutionalCode {
    int constraint_length = 0;         ///< K
    int n_out = 0;                     ///< output bits per input bit (2 or 3)
    std::vector<std::uint32_t> taps;   ///< n_out masks, each nonzero and < 2^K
    std::string name;

    double rate() const { return 1.0 / n_out; }
};

/// Systematic cyclic encoder for a generator polynomial g of degree n - k
/// dividing X^n + 1 (divisibility is checked once, at creation).
struct CyclicCode {
    Gf2Poly generator;
    std::size_t n = 0;
    std::size_t k = 0;

    static CyclicCode create(const Gf2Poly& g, std::size_t n);
    BitVector encode(const BitVector& u) const;
    /// Generator matrix in systematic form (rows encode the unit messages).
    LinearBlockCode as_block_code(const std::string& name) const;
};

/// Hamming code with m parity bits: n = 2^m - 1, k = 2^m - m - 1, d_min = 3.
/// H = [I_m | Q] with the weight->=2 m-tuples as Q columns in increasing
/// integer order (row 0 = most significant bit); G = [Q^T | I_k].
LinearBlockCode hamming_code(int m);

/// One systematic codeword: I(X) = X^(n-k) u(X), v(X) = I(X) + (I(X) mod g).
/// Validates that g divides X^n + 1 on every call; use CyclicCode for bulk work.
BitVector cyclic_encode(const BitVector& u, const Gf2Poly& g, std::size_t n);

/// Built-in primitive polynomial of degree m (3 <= m <= 8) and n = 2^m - 1,
/// giving the cyclic Hamming code of that order.
std::pair<Gf2Poly, std::size_t> cyclic_default_generator(int m);

/// Zero-state encoding with K - 1 flush zeros appended; output length is
/// (u.size() + K - 1) * n_out, tap outputs emitted in listing order.
BitVector convolutional_encode(const ConvolutionalCode& code, const BitVector& u);

/// Best-known rate 1/2 and 1/3 generators (octal), K = 3..14.
ConvolutionalCode odenwalder_code(int rate_denominator, int constraint_length);

/// Free distance by lowest-weight-loop search over the 2^(K-1)-state trellis.
int free_distance(const ConvolutionalCode& code);

/// Binary Golay code from the quadratic-residue block of the order-12 Paley
/// Hadamard construction: extended -> [24,12,8] with G = [I | B]; otherwise
/// the [23,12,7] code obtained by puncturing the last column. The d_min
/// self-check runs at construction and throws std::runtime_error on failure.
LinearBlockCode golay_code(bool extended);

/// X^11 + X^10 + X^6 + X^5 + X^4 + X^2 + 1
Gf2Poly golay_p1();
/// X^11 + X^9 + X^7 + X^6 + X^5 + X + 1
Gf2Poly golay_p2();

/// CRC-style [23,12] Golay codeword via cyclic encoding with P1.
BitVector golay_polynomial_encode(const BitVector& u);

/// Reed-Muller RM(r, m): n = 2^m, k = sum_{i<=r} C(m, i). Generator rows are
/// the evaluations of all square-free monomials of degree <= r, ordered by
/// degree then lexicographically by variable index.
LinearBlockCode reed_muller_code(int r, int m);

/// Minimum distance / weight histogram of a block code by exhaustive
/// enumeration (k <= 20).
std::size_t min_distance(const LinearBlockCode& code);
std::vector<std::uint64_t> weight_distribution(const LinearBlockCode& code);

/// Parsed form of the code-selection grammar:
///   none | hamming:m=6 | cyclic:m=4 | conv:rate=1/2,K=6 | golay:23 |
///   golay:24 | rm:r=1,m=4
struct CodeSpec {
    enum class Family { none, hamming, cyclic, conv, golay, reed_muller };

    Family family = Family::none;
    int m = 0;                 // hamming/cyclic parity bits; reed-muller m
    int r = 0;                 // reed-muller order
    int constraint_length = 0; // conv K
    int rate_denominator = 0;  // conv n_out
    int golay_n = 0;           // 23 or 24

    static CodeSpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// Nominal stream geometry of a spec: code rate and the message block size
/// the encoder consumes (1 for convolutional and uncoded streams).
struct CodeInfo {
    std::string label;
    double rate = 1.0;
    std::size_t message_block = 1;
};

CodeInfo code_info(const CodeSpec& spec);

/// Encode a whole bit stream: `none` is the identity; block codes split the
/// input into k-bit messages (the final partial message zero-padded) and
/// concatenate the codewords; convolutional codes encode the stream in one
/// pass with a single termination.
BitVector encode_stream(const CodeSpec& spec, const BitVector& bits);

}  // namespace paprlab::codes

#endif

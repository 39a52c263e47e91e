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

#ifndef PAPRLAB_GF2_HPP
#define PAPRLAB_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paprlab::gf2 {

using Bit = std::uint8_t;

/// Ordered sequence of bits; the universal message/codeword carrier.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : bits_(n, 0) {}
    BitVector(std::initializer_list<int> l);

    /// Parse from a string of '0'/'1' characters, e.g. "0101011".
    static BitVector from_string(std::string_view s);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    Bit operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, Bit b);
    void push_back(Bit b);
    void append(const BitVector& other);

    /// Contiguous sub-range [start, start + len).
    BitVector slice(std::size_t start, std::size_t len) const;

    std::size_t weight() const noexcept;
    std::string to_string() const;

    BitVector& operator^=(const BitVector& rhs);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::vector<Bit>::const_iterator begin() const noexcept { return bits_.begin(); }
    std::vector<Bit>::const_iterator end() const noexcept { return bits_.end(); }

   private:
    std::vector<Bit> bits_;
};

/// Polynomial over GF(2), coefficients in ascending power: index i holds the
/// coefficient of X^i. The zero polynomial is the empty coefficient list and
/// has no degree.
class Gf2Poly {
   public:
    Gf2Poly() = default;

    /// From ascending coefficients, trailing zeros trimmed.
    static Gf2Poly from_coeffs(std::initializer_list<int> ascending);
    static Gf2Poly from_bits(const BitVector& ascending);
    /// X^d
    static Gf2Poly monomial(std::size_t d);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; throws std::logic_error on the zero polynomial.
    std::size_t degree() const;
    Bit coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Bit{0}; }

    /// Coefficients as a fixed-width ascending BitVector (width >= degree+1).
    BitVector to_bits(std::size_t width) const;
    std::string to_string() const;

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);
    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

   private:
    void trim();
    std::vector<Bit> coeffs_;
};

/// quotient/remainder of polynomial long division over GF(2);
/// dividend = quotient * divisor + remainder with deg(remainder) < deg(divisor).
/// Throws std::domain_error on a zero divisor.
std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& dividend, const Gf2Poly& divisor);

/// true iff divisor divides dividend exactly.
bool poly_divides(const Gf2Poly& divisor, const Gf2Poly& dividend);

/// Dense binary matrix, row-major.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static Gf2Matrix identity(std::size_t n);
    /// [A | B] side by side; row counts must match.
    static Gf2Matrix hstack(const Gf2Matrix& a, const Gf2Matrix& b);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Bit at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Bit b);

    BitVector row(std::size_t i) const;
    void set_row(std::size_t i, const BitVector& r);

    Gf2Matrix transposed() const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Bit> entries_;
};

/// Row-vector by matrix product over GF(2): result[j] = XOR_i x[i] & M[i][j].
/// x.size() must equal M.rows().
BitVector mat_vec_mul(const Gf2Matrix& m, const BitVector& x);

/// Matrix product over GF(2).
Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b);

/// Rank by Gaussian elimination.
std::size_t rank(const Gf2Matrix& m);

/// Minimum Hamming weight over all 2^k - 1 nonzero codewords of the row space
/// of `generator` (for a linear code this equals the minimum distance).
/// Gray-code enumeration; throws std::length_error past k = 20 rows.
std::size_t min_distance_exhaustive(const Gf2Matrix& generator);

/// Weight histogram A_w over all 2^k codewords of the row space, w = 0..n.
/// Same k <= 20 enumeration bound as min_distance_exhaustive.
std::vector<std::uint64_t> weight_distribution(const Gf2Matrix& generator);

/// Square matrix over {-1, 0, +1} (Jacobsthal and Hadamard instances).
class SignMatrix {
   public:
    SignMatrix() = default;
    explicit SignMatrix(std::size_t n) : order_(n), entries_(n * n, 0) {}

    std::size_t order() const noexcept { return order_; }
    int at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, int v);

    /// true iff all entries are +-1 and M * M^T = order * I.
    bool is_hadamard() const;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

   private:
    std::size_t order_ = 0;
    std::vector<std::int8_t> entries_;
};

/// Legendre symbol of i modulo an odd prime p: 0 if p | i, +1 if i is a
/// nonzero quadratic residue mod p, -1 otherwise. Throws std::invalid_argument
/// unless p is an odd prime.
int legendre_symbol(long long i, long long p);

/// p x p matrix with entry (i, j) = legendre_symbol(j - i, p). Requires an odd
/// prime p with p = 3 (mod 4); zero diagonal, rows are cyclic shifts of row 0.
SignMatrix jacobsthal_matrix(long long p);

/// Normalized Hadamard matrix of order p + 1 for prime p = 3 (mod 4):
/// all-ones first row and column, interior Q - I with Q the Jacobsthal matrix.
/// Satisfies H * H^T = (p + 1) * I.
SignMatrix paley_hadamard(long long p);

}  // namespace paprlab::gf2

#endif

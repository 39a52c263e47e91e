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

#include "paprlab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace paprlab::gf2 {

namespace {

void check_bit(int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("bit value must be 0 or 1");
}

}  // namespace

BitVector::BitVector(std::initializer_list<int> l) {
    bits_.reserve(l.size());
    for (int b : l) {
        check_bit(b);
        bits_.push_back(static_cast<Bit>(b));
    }
}

BitVector BitVector::from_string(std::string_view s) {
    BitVector v;
    v.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bit string may contain only '0' and '1'");
        v.bits_.push_back(static_cast<Bit>(c - '0'));
    }
    return v;
}

void BitVector::set(std::size_t i, Bit b) {
    check_bit(b);
    if (i >= bits_.size()) throw std::out_of_range("BitVector index out of range");
    bits_[i] = b;
}

void BitVector::push_back(Bit b) {
    check_bit(b);
    bits_.push_back(b);
}

void BitVector::append(const BitVector& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitVector BitVector::slice(std::size_t start, std::size_t len) const {
    if (start + len > bits_.size()) throw std::out_of_range("BitVector slice out of range");
    BitVector v;
    v.bits_.assign(bits_.begin() + start, bits_.begin() + start + len);
    return v;
}

std::size_t BitVector::weight() const noexcept {
    return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (Bit b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (bits_.size() != rhs.bits_.size()) throw std::invalid_argument("BitVector XOR length mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= rhs.bits_[i];
    return *this;
}

Gf2Poly Gf2Poly::from_coeffs(std::initializer_list<int> ascending) {
    Gf2Poly p;
    p.coeffs_.reserve(ascending.size());
    for (int c : ascending) {
        check_bit(c);
        p.coeffs_.push_back(static_cast<Bit>(c));
    }
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::from_bits(const BitVector& ascending) {
    Gf2Poly p;
    p.coeffs_.assign(ascending.begin(), ascending.end());
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::monomial(std::size_t d) {
    Gf2Poly p;
    p.coeffs_.assign(d + 1, 0);
    p.coeffs_.back() = 1;
    return p;
}

std::size_t Gf2Poly::degree() const {
    if (is_zero()) throw std::logic_error("the zero polynomial has no degree");
    return coeffs_.size() - 1;
}

BitVector Gf2Poly::to_bits(std::size_t width) const {
    if (!is_zero() && width < coeffs_.size()) throw std::invalid_argument("width too small for polynomial degree");
    BitVector v(width);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v.set(i, coeffs_[i]);
    return v;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i]) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "X";
        else
            s += "X^" + std::to_string(i);
    }
    return s;
}

void Gf2Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] ^= rhs.coeffs_[i];
    trim();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    Gf2Poly prod;
    prod.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (!lhs.coeffs_[i]) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) prod.coeffs_[i + j] ^= rhs.coeffs_[j];
    }
    return prod;
}

std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& dividend, const Gf2Poly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Gf2Poly quotient;
    Gf2Poly remainder = dividend;
    const std::size_t dd = divisor.degree();
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const std::size_t shift = remainder.degree() - dd;
        quotient += Gf2Poly::monomial(shift);
        remainder += Gf2Poly::monomial(shift) * divisor;
    }
    return {quotient, remainder};
}

bool poly_divides(const Gf2Poly& divisor, const Gf2Poly& dividend) {
    return poly_divmod(dividend, divisor).second.is_zero();
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Gf2Matrix Gf2Matrix::hstack(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row count mismatch");
    Gf2Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
    }
    return m;
}

void Gf2Matrix::set(std::size_t i, std::size_t j, Bit b) {
    check_bit(b);
    if (i >= rows_ || j >= cols_) throw std::out_of_range("Gf2Matrix index out of range");
    entries_[i * cols_ + j] = b;
}

BitVector Gf2Matrix::row(std::size_t i) const {
    BitVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, at(i, j));
    return r;
}

void Gf2Matrix::set_row(std::size_t i, const BitVector& r) {
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, r[j]);
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

BitVector mat_vec_mul(const Gf2Matrix& m, const BitVector& x) {
    if (x.size() != m.rows()) throw std::invalid_argument("mat_vec_mul dimension mismatch");
    BitVector acc(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!x[i]) continue;
        acc ^= m.row(i);
    }
    return acc;
}

Gf2Matrix mat_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul dimension mismatch");
    Gf2Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.at(i, k)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b.at(k, j)) c.set(i, j, c.at(i, j) ^ 1);
        }
    return c;
}

std::size_t rank(const Gf2Matrix& m) {
    Gf2Matrix work = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < work.cols() && r < work.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.rows() && !work.at(pivot, col)) ++pivot;
        if (pivot == work.rows()) continue;
        if (pivot != r) {
            BitVector tmp = work.row(pivot);
            work.set_row(pivot, work.row(r));
            work.set_row(r, tmp);
        }
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i != r && work.at(i, col)) {
                BitVector reduced = work.row(i) ^ work.row(r);
                work.set_row(i, reduced);
            }
        }
        ++r;
    }
    return r;
}

namespace {

constexpr std::size_t kEnumerationBound = 20;

// Rows packed into 64-bit words for fast XOR/popcount during enumeration.
std::vector<std::vector<std::uint64_t>> pack_rows(const Gf2Matrix& g, std::size_t& words_out) {
    const std::size_t words = (g.cols() + 63) / 64;
    words_out = words;
    std::vector<std::vector<std::uint64_t>> rows(g.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g.at(i, j)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
    return rows;
}

template <typename Visit>
void enumerate_codewords(const Gf2Matrix& g, Visit&& visit) {
    const std::size_t k = g.rows();
    if (k > kEnumerationBound)
        throw std::length_error("exhaustive enumeration limited to 20 generator rows");
    std::size_t words = 0;
    const auto rows = pack_rows(g, words);
    std::vector<std::uint64_t> word(words, 0);
    visit(word);  // zero codeword
    // Gray-code walk: step i flips exactly one generator row.
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int flip = std::countr_zero(i);
        for (std::size_t w = 0; w < words; ++w) word[w] ^= rows[flip][w];
        visit(word);
    }
}

std::size_t word_weight(const std::vector<std::uint64_t>& word) {
    std::size_t w = 0;
    for (std::uint64_t x : word) w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

}  // namespace

std::size_t min_distance_exhaustive(const Gf2Matrix& generator) {
    std::size_t best = generator.cols() + 1;
    bool first = true;
    enumerate_codewords(generator, [&](const std::vector<std::uint64_t>& word) {
        if (first) {  // skip the zero codeword
            first = false;
            return;
        }
        best = std::min(best, word_weight(word));
    });
    return best;
}

std::vector<std::uint64_t> weight_distribution(const Gf2Matrix& generator) {
    std::vector<std::uint64_t> hist(generator.cols() + 1, 0);
    enumerate_codewords(generator,
                        [&](const std::vector<std::uint64_t>& word) { ++hist[word_weight(word)]; });
    return hist;
}

void SignMatrix::set(std::size_t i, std::size_t j, int v) {
    if (v < -1 || v > 1) throw std::invalid_argument("SignMatrix entries must be -1, 0 or +1");
    if (i >= order_ || j >= order_) throw std::out_of_range("SignMatrix index out of range");
    entries_[i * order_ + j] = static_cast<std::int8_t>(v);
}

bool SignMatrix::is_hadamard() const {
    const auto n = static_cast<long long>(order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j)
            if (at(i, j) != 1 && at(i, j) != -1) return false;
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) {
            long long dot = 0;
            for (std::size_t k = 0; k < order_; ++k) dot += at(i, k) * at(j, k);
            if (dot != (i == j ? n : 0)) return false;
        }
    return true;
}

namespace {

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    unsigned long long result = 1;
    auto b = static_cast<unsigned long long>(base % mod);
    while (exp > 0) {
        if (exp & 1) result = static_cast<unsigned long long>((__int128)result * b % mod);
        b = static_cast<unsigned long long>((__int128)b * b % mod);
        exp >>= 1;
    }
    return static_cast<long long>(result);
}

}  // namespace

int legendre_symbol(long long i, long long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("legendre_symbol requires an odd prime modulus");
    long long r = i % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler's criterion: r^((p-1)/2) is 1 for residues, p-1 for nonresidues.
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

void check_paley_prime(long long p) {
    if (!is_odd_prime(p) || p % 4 != 3)
        throw std::invalid_argument("construction requires a prime p with p = 3 (mod 4)");
}

}  // namespace

SignMatrix jacobsthal_matrix(long long p) {
    check_paley_prime(p);
    const auto n = static_cast<std::size_t>(p);
    SignMatrix q(n);
    // Row 0 determines everything: entry (i, j) = chi((j - i) mod p).
    std::vector<int> chi(n);
    for (std::size_t d = 0; d < n; ++d) chi[d] = legendre_symbol(static_cast<long long>(d), p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q.set(i, j, chi[(j + n - i) % n]);
    return q;
}

SignMatrix paley_hadamard(long long p) {
    check_paley_prime(p);
    const SignMatrix q = jacobsthal_matrix(p);
    const auto n = static_cast<std::size_t>(p) + 1;
    SignMatrix h(n);
    for (std::size_t j = 0; j < n; ++j) h.set(0, j, 1);
    for (std::size_t i = 1; i < n; ++i) {
        h.set(i, 0, 1);
        for (std::size_t j = 1; j < n; ++j) h.set(i, j, q.at(i - 1, j - 1) - (i == j ? 1 : 0));
    }
    return h;
}

}  // namespace paprlab::gf2

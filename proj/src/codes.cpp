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

#include "paprlab/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace paprlab::codes {

LinearBlockCode hamming_code(int m) {
    if (m < 3 || m > 12) throw std::invalid_argument("hamming_code: m must be in 3..12");
    const std::size_t n = (std::size_t{1} << m) - 1;
    const std::size_t k = n - static_cast<std::size_t>(m);

    // Q columns: the m-tuples of weight >= 2 in increasing integer value,
    // row 0 holding the most significant bit.
    Gf2Matrix q(static_cast<std::size_t>(m), k);
    std::size_t col = 0;
    for (std::size_t v = 1; v <= n; ++v) {
        if (std::popcount(v) < 2) continue;
        for (int row = 0; row < m; ++row) q.set(row, col, (v >> (m - 1 - row)) & 1);
        ++col;
    }

    LinearBlockCode code;
    code.n = n;
    code.k = k;
    code.generator = Gf2Matrix::hstack(q.transposed(), Gf2Matrix::identity(k));
    code.parity_check = Gf2Matrix::hstack(Gf2Matrix::identity(m), q);
    code.name = "hamming:m=" + std::to_string(m);
    return code;
}

CyclicCode CyclicCode::create(const Gf2Poly& g, std::size_t n) {
    if (g.is_zero()) throw std::invalid_argument("cyclic generator must be nonzero");
    const std::size_t deg = g.degree();
    if (deg == 0 || deg >= n) throw std::invalid_argument("cyclic generator degree must be in 1..n-1");
    Gf2Poly xn1 = Gf2Poly::monomial(n) + Gf2Poly::from_coeffs({1});
    if (!gf2::poly_divides(g, xn1))
        throw std::invalid_argument("cyclic generator does not divide X^n + 1");
    CyclicCode code;
    code.generator = g;
    code.n = n;
    code.k = n - deg;
    return code;
}

BitVector CyclicCode::encode(const BitVector& u) const {
    if (u.size() != k) throw std::invalid_argument("cyclic_encode: message length mismatch");
    // I(X) = X^(n-k) u(X); v(X) = I(X) + (I(X) mod g); parity lands in the
    // low n-k coefficients, the message verbatim in the high k.
    const std::size_t shift = n - k;
    const Gf2Poly shifted = Gf2Poly::monomial(shift) * Gf2Poly::from_bits(u);
    const Gf2Poly v = shifted + poly_divmod(shifted, generator).second;
    return v.to_bits(n);
}

LinearBlockCode CyclicCode::as_block_code(const std::string& name) const {
    LinearBlockCode code;
    code.n = n;
    code.k = k;
    code.generator = Gf2Matrix(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector e(k);
        e.set(i, 1);
        code.generator.set_row(i, encode(e));
    }
    // systematic G = [P | I_k]  ->  H = [I_(n-k) | P^T]
    const std::size_t m = n - k;
    Gf2Matrix p(k, m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) p.set(i, j, code.generator.at(i, j));
    code.parity_check = Gf2Matrix::hstack(Gf2Matrix::identity(m), p.transposed());
    code.name = name;
    return code;
}

BitVector cyclic_encode(const BitVector& u, const Gf2Poly& g, std::size_t n) {
    if (g.is_zero() || g.degree() != n - u.size())
        throw std::invalid_argument("cyclic_encode: generator degree must equal n - k");
    return CyclicCode::create(g, n).encode(u);
}

std::pair<Gf2Poly, std::size_t> cyclic_default_generator(int m) {
    if (m < 3 || m > 8) throw std::invalid_argument("cyclic_default_generator: m must be in 3..8");
    // Primitive polynomials of degree 3..8, ascending coefficient lists.
    static const std::array<Gf2Poly, 6> table = {
        Gf2Poly::from_coeffs({1, 1, 0, 1}),              // X^3 + X + 1
        Gf2Poly::from_coeffs({1, 1, 0, 0, 1}),           // X^4 + X + 1
        Gf2Poly::from_coeffs({1, 0, 1, 0, 0, 1}),        // X^5 + X^2 + 1
        Gf2Poly::from_coeffs({1, 1, 0, 0, 0, 0, 1}),     // X^6 + X + 1
        Gf2Poly::from_coeffs({1, 0, 0, 1, 0, 0, 0, 1}),  // X^7 + X^3 + 1
        Gf2Poly::from_coeffs({1, 0, 1, 1, 1, 0, 0, 0, 1})// X^8 + X^4 + X^3 + X^2 + 1
    };
    return {table[m - 3], (std::size_t{1} << m) - 1};
}

BitVector convolutional_encode(const ConvolutionalCode& code, const BitVector& u) {
    if (u.empty()) throw std::invalid_argument("convolutional_encode: empty input");
    const int k_len = code.constraint_length;
    const std::uint32_t reg_mask = (k_len == 32) ? ~0u : ((1u << k_len) - 1);
    BitVector out;
    std::uint32_t reg = 0;
    auto push_outputs = [&](std::uint32_t r) {
        for (std::uint32_t tap : code.taps) out.push_back(std::popcount(r & tap) & 1u);
    };
    for (std::size_t i = 0; i < u.size(); ++i) {
        reg = ((reg << 1) | u[i]) & reg_mask;
        push_outputs(reg);
    }
    for (int i = 0; i < k_len - 1; ++i) {  // flush to the zero state
        reg = (reg << 1) & reg_mask;
        push_outputs(reg);
    }
    return out;
}

namespace {

struct OctalRow {
    int constraint_length;
    std::array<std::uint32_t, 3> taps;  // third entry unused for rate 1/2
};

// Best rate 1/2 codes, K = 3..14 (generators as octal literals).
constexpr std::array<OctalRow, 12> kRateHalf = {{
    {3, {05, 07, 0}},
    {4, {015, 017, 0}},
    {5, {023, 035, 0}},
    {6, {053, 075, 0}},
    {7, {0133, 0171, 0}},
    {8, {0247, 0371, 0}},
    {9, {0561, 0753, 0}},
    {10, {01167, 01545, 0}},
    {11, {02335, 03661, 0}},
    {12, {04335, 05723, 0}},
    {13, {010533, 017661, 0}},
    {14, {021675, 027123, 0}},
}};

// Best rate 1/3 codes, K = 3..14.
constexpr std::array<OctalRow, 12> kRateThird = {{
    {3, {05, 07, 07}},
    {4, {013, 015, 017}},
    {5, {025, 033, 037}},
    {6, {047, 053, 075}},
    {7, {0133, 0145, 0175}},
    {8, {0225, 0331, 0367}},
    {9, {0557, 0663, 0711}},
    {10, {01117, 01365, 01633}},
    {11, {02353, 02671, 03175}},
    {12, {04767, 05723, 06265}},
    {13, {010533, 010675, 017661}},
    {14, {021645, 035661, 037133}},
}};

}  // namespace

ConvolutionalCode odenwalder_code(int rate_denominator, int constraint_length) {
    if (rate_denominator != 2 && rate_denominator != 3)
        throw std::invalid_argument("odenwalder_code: rate must be 1/2 or 1/3");
    if (constraint_length < 3 || constraint_length > 14)
        throw std::invalid_argument("odenwalder_code: K must be in 3..14");
    const auto& table = (rate_denominator == 2) ? kRateHalf : kRateThird;
    const OctalRow& row = table[constraint_length - 3];

    ConvolutionalCode code;
    code.constraint_length = constraint_length;
    code.n_out = rate_denominator;
    const std::uint32_t limit = 1u << constraint_length;
    for (int i = 0; i < rate_denominator; ++i) {
        const std::uint32_t tap = row.taps[i];
        if (tap == 0 || tap >= limit) throw std::logic_error("generator table entry out of range");
        code.taps.push_back(tap);
    }
    code.name = "conv:rate=1/" + std::to_string(rate_denominator) +
                ",K=" + std::to_string(constraint_length);
    return code;
}

int free_distance(const ConvolutionalCode& code) {
    const int k_len = code.constraint_length;
    const std::uint32_t n_states = 1u << (k_len - 1);
    const std::uint32_t state_mask = n_states - 1;
    auto branch_weight = [&](std::uint32_t reg) {
        int w = 0;
        for (std::uint32_t tap : code.taps) w += std::popcount(reg & tap) & 1;
        return w;
    };
    // Lowest-weight path that diverges from the zero state and remerges.
    constexpr int inf = std::numeric_limits<int>::max();
    std::vector<int> dist(n_states, inf);
    using Entry = std::pair<int, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    const std::uint32_t start = std::uint32_t{1} & state_mask;
    dist[start] = branch_weight(1);  // the diverging input-1 branch
    heap.emplace(dist[start], start);
    int remerge = inf;
    while (!heap.empty()) {
        auto [d, s] = heap.top();
        heap.pop();
        if (d > dist[s]) continue;
        for (std::uint32_t b = 0; b < 2; ++b) {
            const std::uint32_t reg = (s << 1) | b;
            const std::uint32_t next = reg & state_mask;
            const int nd = d + branch_weight(reg);
            if (next == 0) {
                remerge = std::min(remerge, nd);
            } else if (nd < dist[next]) {
                dist[next] = nd;
                heap.emplace(nd, next);
            }
        }
    }
    return remerge;
}

namespace {

// 12x12 block B of the Golay generator [I | B], from the order-12 Paley
// construction: an all-ones border around the quadratic-residue circulant
// Q + I. The binary images of the bordered Q - I block (either sign mapped
// to 1) contain weight-13 resp. weight-1 rows and fail the distance
// self-check; the Q + I image is the mapping that passes, so it is the one
// frozen here.
Gf2Matrix golay_b_block() {
    constexpr long long p = 11;
    Gf2Matrix b(12, 12);
    for (std::size_t j = 1; j < 12; ++j) b.set(0, j, 1);
    for (std::size_t i = 1; i < 12; ++i) {
        b.set(i, 0, 1);
        for (std::size_t j = 1; j < 12; ++j) {
            const bool one = (i == j) || gf2::legendre_symbol(static_cast<long long>(j) -
                                                              static_cast<long long>(i), p) == 1;
            b.set(i, j, one ? 1 : 0);
        }
    }
    return b;
}

}  // namespace

LinearBlockCode golay_code(bool extended) {
    const Gf2Matrix b = golay_b_block();
    LinearBlockCode code;
    code.k = 12;
    if (extended) {
        code.n = 24;
        code.generator = Gf2Matrix::hstack(Gf2Matrix::identity(12), b);
        code.parity_check = Gf2Matrix::hstack(b.transposed(), Gf2Matrix::identity(12));
        code.name = "golay:24";
        if (gf2::min_distance_exhaustive(code.generator) != 8)
            throw std::runtime_error("golay_code: [24,12] construction failed the d_min = 8 check");
    } else {
        const Gf2Matrix full = Gf2Matrix::hstack(Gf2Matrix::identity(12), b);
        code.n = 23;
        code.generator = Gf2Matrix(12, 23);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 23; ++j) code.generator.set(i, j, full.at(i, j));
        code.name = "golay:23";
        if (gf2::min_distance_exhaustive(code.generator) != 7)
            throw std::runtime_error("golay_code: [23,12] construction failed the d_min = 7 check");
    }
    return code;
}

Gf2Poly golay_p1() {
    return Gf2Poly::from_coeffs({1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1});
}

Gf2Poly golay_p2() {
    return Gf2Poly::from_coeffs({1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1});
}

BitVector golay_polynomial_encode(const BitVector& u) {
    if (u.size() != 12) throw std::invalid_argument("golay_polynomial_encode: message must be 12 bits");
    return cyclic_encode(u, golay_p1(), 23);
}

namespace {

// Evaluation of x_i over the 2^m points: bit (m-1-i) of the column index is 0.
BitVector rm_variable_row(int i, int m) {
    const std::size_t n = std::size_t{1} << m;
    BitVector row(n);
    for (std::size_t j = 0; j < n; ++j) row.set(j, ((j >> (m - 1 - i)) & 1) ? 0 : 1);
    return row;
}

Gf2Matrix rm_generator(int r, int m) {
    const std::size_t n = std::size_t{1} << m;
    std::vector<BitVector> var_rows;
    for (int i = 0; i < m; ++i) var_rows.push_back(rm_variable_row(i, m));

    std::vector<BitVector> rows;
    BitVector ones(n);
    for (std::size_t j = 0; j < n; ++j) ones.set(j, 1);
    rows.push_back(ones);
    // degree-then-lexicographic monomial order; products are componentwise
    for (int deg = 1; deg <= r; ++deg) {
        std::vector<int> idx(deg);
        for (int i = 0; i < deg; ++i) idx[i] = i;
        while (true) {
            BitVector row = ones;
            for (int i : idx)
                for (std::size_t j = 0; j < n; ++j)
                    if (!var_rows[i][j]) row.set(j, 0);
            rows.push_back(row);
            int pos = deg - 1;
            while (pos >= 0 && idx[pos] == m - deg + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < deg; ++i) idx[i] = idx[i - 1] + 1;
        }
    }

    Gf2Matrix g(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) g.set_row(i, rows[i]);
    return g;
}

}  // namespace

LinearBlockCode reed_muller_code(int r, int m) {
    if (m < 2 || m > 5 || r < 1 || r >= m)
        throw std::invalid_argument("reed_muller_code requires 0 < r < m <= 5");
    LinearBlockCode code;
    code.generator = rm_generator(r, m);
    code.n = std::size_t{1} << m;
    code.k = code.generator.rows();
    // the dual of RM(r, m) is RM(m - r - 1, m); its generator is a parity check
    code.parity_check = rm_generator(m - r - 1, m);
    code.name = "rm:r=" + std::to_string(r) + ",m=" + std::to_string(m);
    return code;
}

std::size_t min_distance(const LinearBlockCode& code) {
    return gf2::min_distance_exhaustive(code.generator);
}

std::vector<std::uint64_t> weight_distribution(const LinearBlockCode& code) {
    return gf2::weight_distribution(code.generator);
}

namespace {

[[noreturn]] void bad_spec(std::string_view text) {
    throw std::invalid_argument("unrecognized code spec: '" + std::string(text) + "'");
}

int parse_int(std::string_view s, std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) bad_spec(text);
    return value;
}

// "key=value" with the given key
int parse_kv(std::string_view part, std::string_view key, std::string_view text) {
    if (part.size() <= key.size() + 1 || part.substr(0, key.size()) != key ||
        part[key.size()] != '=')
        bad_spec(text);
    return parse_int(part.substr(key.size() + 1), text);
}

}  // namespace

CodeSpec CodeSpec::parse(std::string_view text) {
    CodeSpec spec;
    if (text == "none") return spec;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) bad_spec(text);
    const std::string_view family = text.substr(0, colon);
    const std::string_view args = text.substr(colon + 1);

    if (family == "hamming" || family == "cyclic") {
        spec.family = (family == "hamming") ? Family::hamming : Family::cyclic;
        spec.m = parse_kv(args, "m", text);
        if (spec.m < 3 || spec.m > 8) bad_spec(text);
    } else if (family == "conv") {
        spec.family = Family::conv;
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) bad_spec(text);
        const std::string_view rate = args.substr(0, comma);
        if (rate == "rate=1/2")
            spec.rate_denominator = 2;
        else if (rate == "rate=1/3")
            spec.rate_denominator = 3;
        else
            bad_spec(text);
        spec.constraint_length = parse_kv(args.substr(comma + 1), "K", text);
        if (spec.constraint_length < 3 || spec.constraint_length > 14) bad_spec(text);
    } else if (family == "golay") {
        spec.family = Family::golay;
        spec.golay_n = parse_int(args, text);
        if (spec.golay_n != 23 && spec.golay_n != 24) bad_spec(text);
    } else if (family == "rm") {
        spec.family = Family::reed_muller;
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) bad_spec(text);
        spec.r = parse_kv(args.substr(0, comma), "r", text);
        spec.m = parse_kv(args.substr(comma + 1), "m", text);
        if (spec.r < 1 || spec.m > 5 || spec.r >= spec.m) bad_spec(text);
    } else {
        bad_spec(text);
    }
    return spec;
}

std::string CodeSpec::to_string() const {
    switch (family) {
        case Family::none:
            return "none";
        case Family::hamming:
            return "hamming:m=" + std::to_string(m);
        case Family::cyclic:
            return "cyclic:m=" + std::to_string(m);
        case Family::conv:
            return "conv:rate=1/" + std::to_string(rate_denominator) +
                   ",K=" + std::to_string(constraint_length);
        case Family::golay:
            return "golay:" + std::to_string(golay_n);
        case Family::reed_muller:
            return "rm:r=" + std::to_string(r) + ",m=" + std::to_string(m);
    }
    return "none";
}

CodeInfo code_info(const CodeSpec& spec) {
    CodeInfo info;
    info.label = spec.to_string();
    switch (spec.family) {
        case CodeSpec::Family::none:
            break;
        case CodeSpec::Family::hamming: {
            const std::size_t n = (std::size_t{1} << spec.m) - 1;
            info.message_block = n - spec.m;
            info.rate = static_cast<double>(info.message_block) / n;
            break;
        }
        case CodeSpec::Family::cyclic: {
            const auto [g, n] = cyclic_default_generator(spec.m);
            info.message_block = n - g.degree();
            info.rate = static_cast<double>(info.message_block) / n;
            break;
        }
        case CodeSpec::Family::conv:
            info.rate = 1.0 / spec.rate_denominator;
            break;
        case CodeSpec::Family::golay:
            info.message_block = 12;
            info.rate = 12.0 / spec.golay_n;
            break;
        case CodeSpec::Family::reed_muller: {
            const std::size_t n = std::size_t{1} << spec.m;
            std::size_t k = 0;
            std::uint64_t binom = 1;
            for (int i = 0; i <= spec.r; ++i) {
                k += binom;
                binom = binom * (spec.m - i) / (i + 1);
            }
            info.message_block = k;
            info.rate = static_cast<double>(k) / n;
            break;
        }
    }
    return info;
}

namespace {

BitVector encode_blocks(const BitVector& bits, std::size_t k,
                        const std::function<BitVector(const BitVector&)>& encode_block) {
    BitVector out;
    for (std::size_t start = 0; start < bits.size(); start += k) {
        const std::size_t len = std::min(k, bits.size() - start);
        BitVector block = bits.slice(start, len);
        while (block.size() < k) block.push_back(0);  // final partial message
        out.append(encode_block(block));
    }
    return out;
}

}  // namespace

BitVector encode_stream(const CodeSpec& spec, const BitVector& bits) {
    switch (spec.family) {
        case CodeSpec::Family::none:
            return bits;
        case CodeSpec::Family::hamming: {
            const LinearBlockCode code = hamming_code(spec.m);
            return encode_blocks(bits, code.k, [&](const BitVector& u) { return code.encode(u); });
        }
        case CodeSpec::Family::cyclic: {
            const auto [g, n] = cyclic_default_generator(spec.m);
            const CyclicCode code = CyclicCode::create(g, n);
            return encode_blocks(bits, code.k, [&](const BitVector& u) { return code.encode(u); });
        }
        case CodeSpec::Family::conv: {
            const ConvolutionalCode code =
                odenwalder_code(spec.rate_denominator, spec.constraint_length);
            return convolutional_encode(code, bits);
        }
        case CodeSpec::Family::golay: {
            const LinearBlockCode code = golay_code(spec.golay_n == 24);
            return encode_blocks(bits, code.k, [&](const BitVector& u) { return code.encode(u); });
        }
        case CodeSpec::Family::reed_muller: {
            const LinearBlockCode code = reed_muller_code(spec.r, spec.m);
            return encode_blocks(bits, code.k, [&](const BitVector& u) { return code.encode(u); });
        }
    }
    return bits;
}

}  // namespace paprlab::codes

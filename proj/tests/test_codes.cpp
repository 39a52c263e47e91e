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

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "paprlab/codes.hpp"
#include "test_util.hpp"

using namespace paprlab;
using codes::CodeSpec;
using gf2::BitVector;
using gf2::Gf2Matrix;
using gf2::Gf2Poly;

namespace {

bool is_zero_matrix(const Gf2Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) return false;
    return true;
}

void check_parity_and_rank(const codes::LinearBlockCode& code) {
    REQUIRE(code.parity_check.has_value());
    CHECK(is_zero_matrix(gf2::mat_mul(code.generator, code.parity_check->transposed())));
    CHECK(gf2::rank(code.generator) == code.k);
}

void check_linearity(const codes::LinearBlockCode& code, int trials, std::uint64_t seed) {
    testutil::Xorshift64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const BitVector a = rng.bits(code.k);
        const BitVector b = rng.bits(code.k);
        CHECK((code.encode(a) ^ code.encode(b)) == code.encode(a ^ b));
    }
}

}  // namespace

TEST_CASE("hamming code parameters and encoding") {
    const codes::LinearBlockCode h3 = codes::hamming_code(3);
    CHECK(h3.n == 7);
    CHECK(h3.k == 4);
    CHECK(codes::min_distance(h3) == 3);

    const BitVector u = BitVector::from_string("1011");
    const BitVector c = h3.encode(u);
    CHECK(c == BitVector::from_string("0101011"));
    // systematic tail carries the message verbatim
    CHECK(c.slice(h3.n - h3.k, h3.k) == u);
    // c H^T = 0
    CHECK(gf2::mat_vec_mul(h3.parity_check->transposed(), c) == BitVector(3));

    CHECK(codes::hamming_code(6).rate() == doctest::Approx(57.0 / 63.0));
    CHECK_THROWS_AS(codes::hamming_code(2), std::invalid_argument);
    CHECK_THROWS_AS(codes::hamming_code(13), std::invalid_argument);
}

TEST_CASE("hamming structural checks across m") {
    for (int m = 3; m <= 8; ++m) {
        const codes::LinearBlockCode code = codes::hamming_code(m);
        CHECK(code.n == (std::size_t{1} << m) - 1);
        CHECK(code.k == code.n - m);
        check_parity_and_rank(code);
    }
    check_linearity(codes::hamming_code(4), 50, 101);
}

TEST_CASE("cyclic default generators match the Hamming orders") {
    const auto [g3, n3] = codes::cyclic_default_generator(3);
    CHECK(g3 == Gf2Poly::from_coeffs({1, 1, 0, 1}));  // X^3 + X + 1
    CHECK(n3 == 7);
    CHECK(static_cast<double>(n3 - g3.degree()) / n3 == doctest::Approx(4.0 / 7.0));

    const auto [g4, n4] = codes::cyclic_default_generator(4);
    CHECK(n4 == 15);
    CHECK(n4 - g4.degree() == 11);
    CHECK(11.0 / 15.0 == doctest::Approx(0.7333).epsilon(1e-4));

    for (int m = 3; m <= 8; ++m) {
        const auto [g, n] = codes::cyclic_default_generator(m);
        CHECK(g.degree() == static_cast<std::size_t>(m));
        const Gf2Poly xn1 = Gf2Poly::monomial(n) + Gf2Poly::from_coeffs({1});
        CHECK(gf2::poly_divides(g, xn1));  // remainder-zero oracle
    }
    CHECK_THROWS_AS(codes::cyclic_default_generator(2), std::invalid_argument);
    CHECK_THROWS_AS(codes::cyclic_default_generator(9), std::invalid_argument);
}

TEST_CASE("cyclic encoding is systematic and divisible by g") {
    const auto [g, n] = codes::cyclic_default_generator(3);

    CHECK(codes::cyclic_encode(BitVector(4), g, n) == BitVector(7));

    const BitVector u = BitVector::from_string("1000");  // u_0 = 1
    const BitVector v = codes::cyclic_encode(u, g, n);
    CHECK(gf2::poly_divides(g, Gf2Poly::from_bits(v)));
    CHECK(v.slice(3, 4) == u);

    testutil::Xorshift64 rng(2024);
    for (int m = 3; m <= 8; ++m) {
        const auto [gm, nm] = codes::cyclic_default_generator(m);
        const codes::CyclicCode code = codes::CyclicCode::create(gm, nm);
        for (int t = 0; t < 100; ++t) {
            const BitVector msg = rng.bits(code.k);
            const BitVector cw = code.encode(msg);
            CHECK(gf2::poly_divides(gm, Gf2Poly::from_bits(cw)));
            CHECK(cw.slice(nm - code.k, code.k) == msg);
        }
    }
}

TEST_CASE("cyclic encoding rejects bad generators") {
    // X^2 + 1 = (X + 1)^2 does not divide X^7 + 1
    CHECK_THROWS_AS(codes::cyclic_encode(BitVector(5), Gf2Poly::from_coeffs({1, 0, 1}), 7),
                    std::invalid_argument);
    const auto [g, n] = codes::cyclic_default_generator(3);
    CHECK_THROWS_AS(codes::cyclic_encode(BitVector(5), g, n), std::invalid_argument);
}

TEST_CASE("cyclic block-code view") {
    const auto [g, n] = codes::cyclic_default_generator(4);
    const codes::LinearBlockCode code =
        codes::CyclicCode::create(g, n).as_block_code("cyclic:m=4");
    CHECK(code.n == 15);
    CHECK(code.k == 11);
    check_parity_and_rank(code);
    check_linearity(code, 30, 55);
}

TEST_CASE("convolutional encoder hand-simulated example") {
    codes::ConvolutionalCode code;
    code.constraint_length = 3;
    code.n_out = 2;
    code.taps = {05, 07};

    CHECK(codes::convolutional_encode(code, BitVector{1}) == BitVector::from_string("110111"));
    CHECK(codes::convolutional_encode(code, BitVector(5)) == BitVector(14));
    CHECK_THROWS_AS(codes::convolutional_encode(code, BitVector{}), std::invalid_argument);

    // zero-state encoding is linear
    testutil::Xorshift64 rng(321);
    for (int t = 0; t < 30; ++t) {
        const BitVector a = rng.bits(40);
        const BitVector b = rng.bits(40);
        CHECK((codes::convolutional_encode(code, a) ^ codes::convolutional_encode(code, b)) ==
              codes::convolutional_encode(code, a ^ b));
    }
}

TEST_CASE("generator table covers every listed rate/K pair") {
    const codes::ConvolutionalCode k6 = codes::odenwalder_code(2, 6);
    CHECK(k6.taps == std::vector<std::uint32_t>{053, 075});

    testutil::Xorshift64 rng(99);
    for (int denom : {2, 3})
        for (int k_len = 3; k_len <= 14; ++k_len) {
            const codes::ConvolutionalCode code = codes::odenwalder_code(denom, k_len);
            REQUIRE(code.taps.size() == static_cast<std::size_t>(denom));
            for (std::uint32_t tap : code.taps) {
                CHECK(tap != 0);
                CHECK(tap < (1u << k_len));
            }
            const BitVector u = rng.bits(25);
            CHECK(codes::convolutional_encode(code, u).size() == (25 + k_len - 1) * denom);
        }
    CHECK_THROWS_AS(codes::odenwalder_code(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(codes::odenwalder_code(2, 15), std::invalid_argument);
}

TEST_CASE("free distance of the [5,7] code") {
    CHECK(codes::free_distance(codes::odenwalder_code(2, 3)) == 5);
}

TEST_CASE("golay codes from the Hadamard construction") {
    const codes::LinearBlockCode g24 = codes::golay_code(true);
    CHECK(g24.n == 24);
    CHECK(g24.k == 12);
    CHECK(codes::min_distance(g24) == 8);
    check_parity_and_rank(g24);
    check_linearity(g24, 30, 77);

    const auto dist24 = codes::weight_distribution(g24);
    for (std::size_t w = 0; w <= 24; ++w) CHECK(dist24[w] == dist24[24 - w]);

    const codes::LinearBlockCode g23 = codes::golay_code(false);
    CHECK(g23.n == 23);
    CHECK(g23.k == 12);
    CHECK(codes::min_distance(g23) == 7);
    CHECK(gf2::rank(g23.generator) == 12);
}

TEST_CASE("golay generator polynomials factor X^23 + 1") {
    const Gf2Poly p1 = codes::golay_p1();
    const Gf2Poly p2 = codes::golay_p2();
    const Gf2Poly x_plus_1 = Gf2Poly::from_coeffs({1, 1});
    const Gf2Poly x23_1 = Gf2Poly::monomial(23) + Gf2Poly::from_coeffs({1});
    CHECK(x_plus_1 * p1 * p2 == x23_1);

    CHECK(codes::golay_polynomial_encode(BitVector(12)) == BitVector(23));
    CHECK_THROWS_AS(codes::golay_polynomial_encode(BitVector(11)), std::invalid_argument);

    // polynomial route has d_min 7 and the same weight distribution as the
    // punctured Hadamard route
    const codes::LinearBlockCode poly_code =
        codes::CyclicCode::create(p1, 23).as_block_code("golay-poly");
    CHECK(codes::min_distance(poly_code) == 7);
    CHECK(codes::weight_distribution(poly_code) ==
          codes::weight_distribution(codes::golay_code(false)));
}

TEST_CASE("golay meets the Hamming bound with equality") {
    std::uint64_t sum = 0;
    std::uint64_t binom = 1;
    for (int i = 0; i <= 3; ++i) {
        sum += binom;
        binom = binom * (23 - i) / (i + 1);
    }
    CHECK(sum == (1u << 11));
}

TEST_CASE("reed-muller generator rows for r=1, m=3") {
    const codes::LinearBlockCode rm13 = codes::reed_muller_code(1, 3);
    REQUIRE(rm13.k == 4);
    REQUIRE(rm13.n == 8);
    CHECK(rm13.generator.row(0) == BitVector::from_string("11111111"));
    CHECK(rm13.generator.row(1) == BitVector::from_string("11110000"));
    CHECK(rm13.generator.row(2) == BitVector::from_string("11001100"));
    CHECK(rm13.generator.row(3) == BitVector::from_string("10101010"));
    CHECK(codes::min_distance(rm13) == 4);
}

TEST_CASE("reed-muller parameters across all orders") {
    const codes::LinearBlockCode rm24 = codes::reed_muller_code(2, 4);
    CHECK(rm24.k == 11);
    CHECK(rm24.n == 16);
    CHECK(rm24.rate() == doctest::Approx(0.6875));

    CHECK(codes::min_distance(codes::reed_muller_code(1, 4)) == 8);

    for (int m = 2; m <= 5; ++m)
        for (int r = 1; r < m; ++r) {
            const codes::LinearBlockCode code = codes::reed_muller_code(r, m);
            std::size_t k = 0;
            std::uint64_t binom = 1;
            for (int i = 0; i <= r; ++i) {
                k += binom;
                binom = binom * (m - i) / (i + 1);
            }
            CHECK(code.k == k);
            CHECK(code.n == (std::size_t{1} << m));
            check_parity_and_rank(code);
            if (code.k <= 20) CHECK(codes::min_distance(code) == (std::size_t{1} << (m - r)));
        }
    check_linearity(codes::reed_muller_code(2, 4), 30, 13);

    CHECK_THROWS_AS(codes::reed_muller_code(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(codes::reed_muller_code(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(codes::reed_muller_code(1, 6), std::invalid_argument);
}

TEST_CASE("code spec grammar") {
    for (const char* text : {"none", "hamming:m=6", "cyclic:m=4", "conv:rate=1/2,K=6",
                             "conv:rate=1/3,K=9", "golay:23", "golay:24", "rm:r=1,m=4"}) {
        const CodeSpec spec = CodeSpec::parse(text);
        CHECK(spec.to_string() == text);
    }
    for (const char* text : {"", "hamming", "hamming:m=2", "hamming:m=9", "conv:rate=1/4,K=6",
                             "conv:rate=1/2,K=2", "golay:25", "rm:r=2,m=2", "rm:r=0,m=3",
                             "bogus", "rm:r=,m=3"}) {
        CHECK_THROWS_AS(CodeSpec::parse(text), std::invalid_argument);
    }
}

TEST_CASE("code info rates match the published rate columns") {
    CHECK(codes::code_info(CodeSpec::parse("none")).rate == 1.0);
    CHECK(codes::code_info(CodeSpec::parse("hamming:m=6")).rate == doctest::Approx(57.0 / 63.0));
    CHECK(codes::code_info(CodeSpec::parse("cyclic:m=4")).rate == doctest::Approx(11.0 / 15.0));
    CHECK(codes::code_info(CodeSpec::parse("conv:rate=1/2,K=6")).rate == doctest::Approx(0.5));
    CHECK(codes::code_info(CodeSpec::parse("conv:rate=1/3,K=9")).rate ==
          doctest::Approx(1.0 / 3.0));
    CHECK(codes::code_info(CodeSpec::parse("golay:23")).rate == doctest::Approx(12.0 / 23.0));
    CHECK(codes::code_info(CodeSpec::parse("golay:24")).rate == doctest::Approx(0.5));
    CHECK(codes::code_info(CodeSpec::parse("rm:r=1,m=4")).rate == doctest::Approx(0.3125));
}

TEST_CASE("encode_stream segmentation") {
    testutil::Xorshift64 rng(5);
    const BitVector bits = rng.bits(64);
    CHECK(codes::encode_stream(CodeSpec::parse("none"), bits) == bits);

    const codes::LinearBlockCode h3 = codes::hamming_code(3);
    const BitVector eight = rng.bits(8);
    const BitVector two_blocks = codes::encode_stream(CodeSpec::parse("hamming:m=3"), eight);
    REQUIRE(two_blocks.size() == 14);
    CHECK(two_blocks.slice(0, 7) == h3.encode(eight.slice(0, 4)));
    CHECK(two_blocks.slice(7, 7) == h3.encode(eight.slice(4, 4)));

    // final partial message is zero-padded
    const BitVector six = rng.bits(6);
    const BitVector padded = codes::encode_stream(CodeSpec::parse("hamming:m=3"), six);
    REQUIRE(padded.size() == 14);
    BitVector tail = six.slice(4, 2);
    tail.push_back(0);
    tail.push_back(0);
    CHECK(padded.slice(7, 7) == h3.encode(tail));

    const BitVector conv = codes::encode_stream(CodeSpec::parse("conv:rate=1/3,K=9"), bits);
    CHECK(conv.size() == (64 + 8) * 3);
}

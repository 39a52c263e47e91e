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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "paprlab/stats.hpp"
#include "test_util.hpp"

using namespace paprlab;
using stats::CcdfCurve;
using stats::PaprSamples;

TEST_CASE("theoretical ccdf") {
    CHECK(stats::theoretical_ccdf(64, 0.0) == doctest::Approx(1.0));
    CHECK(stats::theoretical_ccdf(64, 50.0) < 1e-15);

    // direct-formula oracle at xi = 8
    const double direct = 1.0 - std::pow(1.0 - std::exp(-8.0), 64);
    CHECK(std::abs(stats::theoretical_ccdf(64, 8.0) - direct) < 1e-12);
    CHECK(stats::theoretical_ccdf(64, 8.0) == doctest::Approx(0.02124).epsilon(1e-3));

    CHECK_THROWS_AS(stats::theoretical_ccdf(64, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(stats::theoretical_ccdf(0, 1.0), std::invalid_argument);

    // strictly decreasing in xi, strictly increasing in N
    double prev = 2.0;
    for (double xi = 0.5; xi <= 14.0; xi += 0.5) {
        const double v = stats::theoretical_ccdf(64, xi);
        CHECK(v < prev);
        prev = v;
    }
    for (std::size_t n : {2u, 16u, 64u, 256u})
        CHECK(stats::theoretical_ccdf(n, 6.0) < stats::theoretical_ccdf(n * 2, 6.0));
}

TEST_CASE("empirical ccdf counting") {
    PaprSamples samples{{9.0, 10.0, 11.0}};
    const CcdfCurve curve = stats::empirical_ccdf(samples, {8.0, 9.5, 11.5});
    REQUIRE(curve.points.size() == 3);
    CHECK(curve.points[0].probability == doctest::Approx(1.0));
    CHECK(curve.points[1].probability == doctest::Approx(2.0 / 3.0));
    CHECK(curve.points[2].probability == doctest::Approx(0.0));

    CHECK_THROWS_AS(stats::empirical_ccdf(samples, {9.0, 9.0}), std::invalid_argument);
    CHECK_THROWS_AS(stats::empirical_ccdf(PaprSamples{}, {9.0}), std::invalid_argument);

    // strict inequality: a sample equal to the threshold does not exceed it
    const CcdfCurve edge = stats::empirical_ccdf(samples, {9.0});
    CHECK(edge.points[0].probability == doctest::Approx(2.0 / 3.0));

    // non-increasing and equal to brute force on random data
    testutil::Xorshift64 rng(91);
    PaprSamples rand_samples;
    for (int i = 0; i < 500; ++i)
        rand_samples.values.push_back(static_cast<double>(rng.next() % 1000) / 100.0);
    const auto grid = stats::default_threshold_grid(rand_samples);
    const CcdfCurve rand_curve = stats::empirical_ccdf(rand_samples, grid);
    double last = 1.1;
    for (std::size_t i = 0; i < rand_curve.points.size(); ++i) {
        const auto& p = rand_curve.points[i];
        std::size_t above = 0;
        for (double v : rand_samples.values)
            if (v > p.threshold_db) ++above;
        CHECK(p.probability == doctest::Approx(static_cast<double>(above) / 500.0));
        CHECK(p.probability <= last);
        last = p.probability;
    }
}

TEST_CASE("default grid spans the samples in 0.05 dB steps") {
    PaprSamples samples{{3.0, 3.9, 5.2}};
    const auto grid = stats::default_threshold_grid(samples);
    CHECK(grid.front() == doctest::Approx(3.0));
    CHECK(grid.back() >= 5.2);
    for (std::size_t i = 1; i < grid.size(); ++i)
        CHECK(grid[i] - grid[i - 1] == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("papr readout interpolates in log10 probability") {
    CcdfCurve curve;
    curve.points = {{9.0, 0.02}, {9.5, 0.005}};
    // log10 0.01 sits exactly halfway between log10 0.02 and log10 0.005
    CHECK(stats::papr_at_ccdf(curve, 0.01) == doctest::Approx(9.25).epsilon(1e-12));

    CcdfCurve exact;
    exact.points = {{8.0, 0.5}, {9.0, 0.01}, {10.0, 0.001}};
    CHECK(stats::papr_at_ccdf(exact, 0.01) == doctest::Approx(9.0));

    CHECK_THROWS_AS(stats::papr_at_ccdf(curve, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(stats::papr_at_ccdf(curve, 0.0), std::invalid_argument);

    CcdfCurve unreachable;
    unreachable.points = {{8.0, 0.5}, {9.0, 0.2}};
    CHECK_THROWS_AS(stats::papr_at_ccdf(unreachable, 0.01), std::runtime_error);
}

TEST_CASE("papr readout shifts with the samples") {
    testutil::Xorshift64 rng(92);
    PaprSamples samples;
    for (int i = 0; i < 4000; ++i)
        samples.values.push_back(6.0 + static_cast<double>(rng.next() % 500) / 100.0);
    const double base = stats::papr_at_ccdf(samples, 0.05);

    constexpr double delta = 1.25;
    PaprSamples shifted;
    for (double v : samples.values) shifted.values.push_back(v + delta);
    CHECK(stats::papr_at_ccdf(shifted, 0.05) == doctest::Approx(base + delta).epsilon(1e-9));
}

TEST_CASE("reduction rows") {
    PaprSamples a{std::vector<double>(2000, 11.2742)};
    PaprSamples b{std::vector<double>(2000, 9.0380)};
    const stats::ReductionRow headline = stats::reduction_row("rm:r=1,m=4", a, b, 0.01, 0.3125);
    CHECK(headline.uncoded_papr_db == doctest::Approx(11.2742));
    CHECK(headline.coded_papr_db == doctest::Approx(9.0380));
    CHECK(headline.reduction_db == doctest::Approx(2.2362));
    CHECK(headline.code_rate == doctest::Approx(0.3125));

    // a code may also lose ground; the difference goes negative
    PaprSamples worse{std::vector<double>(2000, 11.4355)};
    const stats::ReductionRow negative = stats::reduction_row("conv:rate=1/3,K=3", a, worse, 0.01, 1.0 / 3.0);
    CHECK(negative.reduction_db == doctest::Approx(-0.1613));

    const stats::ReductionRow self = stats::reduction_row("none", a, a, 0.01, 1.0);
    CHECK(self.reduction_db == doctest::Approx(0.0));
}

// Copyright 2026 The Welcherweg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "welcherweg/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "welcherweg/error.hpp"

using namespace welcherweg;
using namespace welcherweg::interferometer;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(interferometer, screen_intensity_examples) {
    EXPECT_NEAR(screen_intensity(PathPair(1.0, 1.0, 0.0)), 4.0, 1e-15);
    EXPECT_NEAR(screen_intensity(PathPair(1.0, 1.0, kPi)), 0.0, 1e-15);
    for (double theta : {0.0, 0.3, 1.0, 2.5, 4.0, 6.0}) {
        EXPECT_NEAR(screen_intensity(PathPair(1.0, 0.5, theta)), 1.25 + std::cos(theta), 1e-14);
    }
}

TEST(interferometer, fringe_extrema_examples) {
    const auto e = fringe_extrema(PathPair(1.0, 0.5));
    EXPECT_NEAR(e.imax, 2.25, 1e-15);
    EXPECT_NEAR(e.imin, 0.25, 1e-15);

    const auto [lo, hi] = oracle::grid_extrema([](double t) { return oracle::expanded_intensity(1.0, 0.5, t); });
    EXPECT_NEAR(e.imax, hi, 1e-7);
    EXPECT_NEAR(e.imin, lo, 1e-7);
}

TEST(interferometer, modulation_examples) {
    EXPECT_EQ(modulation(1.0), 1.0);
    EXPECT_EQ(modulation(0.0), 0.0);
    // Oracle: (Imax - Imin)/Imax for amplitudes (0.5, 1).
    const double imax = 1.5 * 1.5;
    const double imin = 0.5 * 0.5;
    EXPECT_NEAR(modulation(0.5), (imax - imin) / imax, 1e-15);
    EXPECT_NEAR(modulation(0.5), 0.88888888888888884, 1e-15);
    EXPECT_THROW(modulation(1.5), Error);
    EXPECT_THROW(modulation(-0.1), Error);
    EXPECT_THROW(modulation(NAN), Error);
}

TEST(interferometer, visibility_examples) {
    EXPECT_NEAR(visibility(2.25, 0.25), 0.8, 1e-15);
    EXPECT_EQ(visibility(4.0, 0.0), 1.0);
    EXPECT_EQ(visibility(1.0, 1.0), 0.0);
    try {
        visibility(0.0, 0.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Domain);
    }
    EXPECT_THROW(visibility(1.0, -0.1), Error);
    EXPECT_THROW(visibility(1.0, 2.0), Error);
}

TEST(interferometer, predictability_and_duality_examples) {
    EXPECT_NEAR(predictability(PathPair(1.0, 0.5)), 0.6, 1e-15);
    EXPECT_EQ(predictability(PathPair(1.0, 1.0)), 0.0);
    EXPECT_EQ(predictability(PathPair(1.0, 0.0)), 1.0);

    const auto d = duality_point(PathPair(1.0, 0.5), 1.0);
    EXPECT_NEAR(d.predictability, 0.6, 1e-15);
    EXPECT_NEAR(d.visibility, 0.8, 1e-15);
    EXPECT_TRUE(check_duality(d));

    const auto which = duality_point(PathPair(1.0, 1.0), 0.0);
    EXPECT_EQ(which.visibility, 0.0);
    EXPECT_EQ(which.predictability, 0.0);

    EXPECT_THROW(duality_point(PathPair(1.0, 1.0), 1.5), Error);
}

TEST(interferometer, path_pair_construction) {
    EXPECT_THROW(PathPair(0.0, 0.0), Error);
    EXPECT_THROW(PathPair(NAN, 1.0), Error);
    EXPECT_THROW(PathPair::from_asymmetry(1.2), Error);
    const auto p = PathPair::from_asymmetry(0.25, 0.5);
    EXPECT_EQ(p.a1(), Complex(0.25));
    EXPECT_EQ(p.a2(), Complex(1.0));
    EXPECT_EQ(p.theta(), 0.5);
    EXPECT_NEAR(p.alpha(), 0.25, 1e-15);
    EXPECT_NEAR(p.total_weight(), 1.0625, 1e-15);
}

TEST(interferometer, property_intensity_is_bounded_by_extrema) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
    for (int trial = 0; trial < 10000; trial++) {
        const auto a1 = oracle::random_amplitude(rng);
        const auto a2 = oracle::random_amplitude(rng);
        if (std::norm(a1) + std::norm(a2) == 0) {
            continue;
        }
        const double theta = phase(rng);
        const PathPair p(a1, a2, theta);
        const auto e = fringe_extrema(p);
        const double i = screen_intensity(p);
        ASSERT_GE(i, -1e-15);
        ASSERT_GE(i, e.imin - 1e-12);
        ASSERT_LE(i, e.imax + 1e-12);
        ASSERT_NEAR(i, oracle::expanded_intensity(a1, a2, theta), 1e-12);
    }
}

TEST(interferometer, property_modulation_matches_extrema) {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 1000; trial++) {
        const double alpha = u(rng);
        const double imax = (1 + alpha) * (1 + alpha);
        const double imin = (1 - alpha) * (1 - alpha);
        ASSERT_NEAR(modulation(alpha), (imax - imin) / imax, 1e-12);
        ASSERT_GE(modulation(alpha), 0.0);
        ASSERT_LE(modulation(alpha), 1.0);
    }
}

TEST(interferometer, property_duality_inequality) {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 10000; trial++) {
        const auto a1 = oracle::random_amplitude(rng);
        const auto a2 = oracle::random_amplitude(rng);
        if (std::norm(a1) + std::norm(a2) == 0) {
            continue;
        }
        const auto c = oracle::random_overlap(rng);
        const auto d = duality_point(PathPair(a1, a2), c);
        ASSERT_LE(d.sum_of_squares(), 1.0 + 1e-12);
        ASSERT_TRUE(check_duality(d));
        const auto full = duality_point(PathPair(a1, a2), std::polar(1.0, std::arg(c)));
        ASSERT_NEAR(full.sum_of_squares(), 1.0, 1e-12);
    }
}

TEST(interferometer, property_global_scaling_invariance) {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int trial = 0; trial < 1000; trial++) {
        const auto a1 = oracle::random_amplitude(rng);
        const auto a2 = oracle::random_amplitude(rng);
        if (std::norm(a1) + std::norm(a2) < 1e-6) {
            continue;
        }
        const Complex k = std::polar(scale(rng), 1.0);
        const PathPair p(a1, a2);
        const PathPair q(k * a1, k * a2);
        ASSERT_NEAR(predictability(p), predictability(q), 1e-12);
        const auto ep = fringe_extrema(p);
        const auto eq = fringe_extrema(q);
        if (ep.imax > 1e-9) {
            ASSERT_NEAR(visibility(ep), visibility(eq), 1e-9);
        }
    }
}

TEST(interferometer, property_extrema_match_grid_search) {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 100; trial++) {
        const auto a1 = oracle::random_amplitude(rng);
        const auto a2 = oracle::random_amplitude(rng);
        if (std::norm(a1) + std::norm(a2) == 0) {
            continue;
        }
        const auto e = fringe_extrema(PathPair(a1, a2));
        const auto [lo, hi] =
            oracle::grid_extrema([&](double t) { return screen_intensity(PathPair(a1, a2, t)); });
        // Grid spacing 2 pi / 1e4 bounds the grid's shortfall at |a1||a2| (2 pi / 1e4)^2 / 4.
        ASSERT_NEAR(e.imax, hi, 1e-6);
        ASSERT_NEAR(e.imin, lo, 1e-6);
    }
}

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

#include "welcherweg/rng.hpp"

#include <cmath>
#include <cstdint>

#include "gtest/gtest.h"

using welcherweg::Pcg32;

TEST(rng, pcg32_reference_sequence) {
    Pcg32 g(42, 54);
    const std::uint32_t expected[] = {0xa15c02b7u, 0x7b47f409u, 0xba1d3330u, 0x83d2f293u, 0xbfa4784bu, 0xcbed606eu};
    for (auto e : expected) {
        EXPECT_EQ(g.next_u32(), e);
    }
}

TEST(rng, per_shot_streams_are_reproducible_and_distinct) {
    auto a = Pcg32::for_shot(7, 1000);
    auto b = Pcg32::for_shot(7, 1000);
    auto c = Pcg32::for_shot(7, 1001);
    auto d = Pcg32::for_shot(8, 1000);
    const auto va = a.next_u32();
    EXPECT_EQ(va, b.next_u32());
    EXPECT_NE(va, c.next_u32());
    EXPECT_NE(va, d.next_u32());
}

TEST(rng, doubles_are_uniform_in_unit_interval) {
    Pcg32 g(1, 2);
    double sum = 0;
    const int n = 200000;
    for (int i = 0; i < n; i++) {
        const double x = g.next_double();
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 1.0);
        sum += x;
    }
    EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
}

TEST(rng, bernoulli_edges) {
    Pcg32 g(3, 4);
    for (int i = 0; i < 1000; i++) {
        ASSERT_FALSE(g.bernoulli(0.0));
        ASSERT_TRUE(g.bernoulli(1.0));
    }
}

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

#pragma once

#include <cstdint>

namespace welcherweg {

/// SplitMix64 finalizer. Used to hash stream selectors, never as a generator.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// PCG32 (XSH-RR, 64-bit LCG state), seeded the way the reference pcg32_srandom_r
/// is: an initial state plus a stream selector. Each shot gets its own stream,
/// selected by a hash of the shot index, so results do not depend on the order
/// or thread in which shots are simulated.
class Pcg32 {
  public:
    using result_type = std::uint32_t;

    constexpr Pcg32(std::uint64_t initstate, std::uint64_t initseq) noexcept : state_(0), inc_((initseq << 1u) | 1u) {
        next_u32();
        state_ += initstate;
        next_u32();
    }

    /// Generator for shot `index` of a run seeded with `seed`.
    static constexpr Pcg32 for_shot(std::uint64_t seed, std::uint64_t index) noexcept {
        return Pcg32(seed, splitmix64(index));
    }

    static constexpr result_type min() noexcept {
        return 0;
    }
    static constexpr result_type max() noexcept {
        return 0xFFFFFFFFu;
    }

    constexpr result_type operator()() noexcept {
        return next_u32();
    }

    constexpr std::uint32_t next_u32() noexcept {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double next_double() noexcept {
        const std::uint64_t hi = next_u32() >> 5u;  // 27 bits
        const std::uint64_t lo = next_u32() >> 6u;  // 26 bits
        return static_cast<double>((hi << 26u) | lo) * 0x1.0p-53;
    }

    /// True with probability p. p <= 0 never fires, p >= 1 always fires.
    constexpr bool bernoulli(double p) noexcept {
        return next_double() < p;
    }

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace welcherweg

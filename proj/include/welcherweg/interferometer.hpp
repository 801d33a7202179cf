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

#include "welcherweg/hilbert.hpp"

namespace welcherweg::interferometer {

/// Two path amplitudes and the Aharonov-Bohm phase between the arms.
/// The screen amplitude is a1 + exp(i theta) a2.
class PathPair {
  public:
    /// Rejects a1 = a2 = 0 (no quanton) and non-finite input.
    PathPair(Complex a1, Complex a2, double theta = 0.0);

    /// |a1| = alpha * |a2| with |a2| = 1, both amplitudes real.
    static PathPair from_asymmetry(double alpha, double theta = 0.0);

    Complex a1() const noexcept {
        return a1_;
    }
    Complex a2() const noexcept {
        return a2_;
    }
    double theta() const noexcept {
        return theta_;
    }

    PathPair with_theta(double theta) const {
        return PathPair(a1_, a2_, theta);
    }

    /// Ratio of the smaller to the larger amplitude magnitude, in [0, 1].
    double alpha() const noexcept;

    /// |a1|^2 + |a2|^2.
    double total_weight() const noexcept;

  private:
    Complex a1_;
    Complex a2_;
    double theta_;
};

struct FringeExtrema {
    double imax;
    double imin;
};

struct DualityPoint {
    double predictability;
    double visibility;

    double sum_of_squares() const noexcept {
        return predictability * predictability + visibility * visibility;
    }
};

inline constexpr double kDualityTolerance = 1e-12;
// Rounding slack accepted on |c| <= 1, e.g. for c = exp(i phi).
inline constexpr double kOverlapSlack = 1e-12;

/// |a1 + e^{i theta} a2|^2, a proportional (not absolute) intensity.
double screen_intensity(const PathPair &p) noexcept;

/// ((|a1| + |a2|)^2, (|a1| - |a2|)^2): the extremes of screen_intensity over theta.
FringeExtrema fringe_extrema(const PathPair &p) noexcept;

/// Relative modulation (Imax - Imin) / Imax = 4 alpha / (1 + alpha)^2.
/// Not the same quantity as visibility(); alpha outside [0, 1] is a Domain error.
double modulation(double alpha);

/// Standard fringe contrast (Imax - Imin) / (Imax + Imin).
double visibility(double imax, double imin);
double visibility(const FringeExtrema &e);

/// Intensity-imbalance which-path predictability ||a1|^2 - |a2|^2| / (|a1|^2 + |a2|^2).
double predictability(const PathPair &p) noexcept;

/// (P, V) for the pair observed through a which-path detector with pointer
/// overlap c. V is the pure-state visibility scaled by |c|; |c| > 1 is rejected.
DualityPoint duality_point(const PathPair &p, Complex detector_overlap);

/// P^2 + V^2 <= 1 + tol.
bool check_duality(const DualityPoint &d, double tol = kDualityTolerance) noexcept;

}  // namespace welcherweg::interferometer

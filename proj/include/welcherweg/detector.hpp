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

#include "welcherweg/interferometer.hpp"

namespace welcherweg::detector {

using interferometer::PathPair;

/// Which-path detector, described only by the overlap c = <1|2> of its two
/// normalized pointer states. c = 0 records the path perfectly; |c| = 1
/// records nothing.
class DetectorCoupling {
  public:
    explicit DetectorCoupling(Complex overlap = 0.0);

    static DetectorCoupling orthogonal() {
        return DetectorCoupling(0.0);
    }
    static DetectorCoupling blind() {
        return DetectorCoupling(1.0);
    }

    Complex overlap() const noexcept {
        return overlap_;
    }
    bool is_orthogonal(double tol = 1e-12) const noexcept;

  private:
    Complex overlap_;
};

/// psi1 |1> + e^{i theta} psi2 |2>, kept as two branch amplitudes plus the
/// detector overlap. The detector Hilbert space is never materialized.
class EntangledState {
  public:
    EntangledState(Complex branch1, Complex branch2, DetectorCoupling coupling);

    Complex branch1() const noexcept {
        return branch1_;
    }
    /// Includes the phase factor e^{i theta}.
    Complex branch2() const noexcept {
        return branch2_;
    }
    const DetectorCoupling &coupling() const noexcept {
        return coupling_;
    }

  private:
    Complex branch1_;
    Complex branch2_;
    DetectorCoupling coupling_;
};

struct ErasureSplit {
    double fringe;
    double antifringe;
};

EntangledState entangle(const PathPair &p, const DetectorCoupling &d);

/// |b1|^2 + |b2|^2 + 2 Re(c b1* b2).
double intensity_entangled(const EntangledState &s) noexcept;

/// |a1|^2 + |a2|^2, the theta-independent intensity of an orthogonal detector.
double collapsed_intensity(const PathPair &p) noexcept;

/// |<w|Phi>|^2 for the unnormalized detector state |w> = w1|1> + w2|2>.
/// Non-orthogonal pointer states enter through their Gram matrix, so
/// <w|Phi> = w1*(b1 + c b2) + w2*(c* b1 + b2).
double erase(const EntangledState &s, Complex w1, Complex w2);

/// Halves of the symmetric and antisymmetric erasure outcomes. They sum to the
/// collapsed intensity. Requires an orthogonal detector.
ErasureSplit erasure_decomposition(const EntangledState &s);

}  // namespace welcherweg::detector

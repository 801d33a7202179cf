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

#include <string>
#include <utility>
#include <vector>

#include "welcherweg/hilbert.hpp"

namespace welcherweg::complementarity {

using hilbert::ComplexMatrix;

inline constexpr double kComplementarityTolerance = 1e-8;

struct LabeledProjector {
    std::string label;
    ComplexMatrix projector;
};

/// A named set of projectors together with the pairs expected to fail to
/// commute. Every operator is checked against the projector invariant.
class Scenario {
  public:
    Scenario(std::string name, std::vector<LabeledProjector> operators,
             std::vector<std::pair<std::string, std::string>> expected_complementary_pairs);

    const std::string &name() const noexcept {
        return name_;
    }
    const std::vector<LabeledProjector> &operators() const noexcept {
        return operators_;
    }
    const std::vector<std::pair<std::string, std::string>> &expected_complementary_pairs() const noexcept {
        return expected_;
    }

    const ComplexMatrix &op(const std::string &label) const;
    bool expects_complementary(const std::string &a, const std::string &b) const;

  private:
    std::string name_;
    std::vector<LabeledProjector> operators_;
    std::vector<std::pair<std::string, std::string>> expected_;
};

enum class Relation { Compatible, Complementary };

const char *to_string(Relation r) noexcept;

struct PairClassification {
    std::string first;
    std::string second;
    double commutator_norm;
    Relation relation;
};

struct ClassificationReport {
    std::string scenario;
    double tolerance;
    std::vector<PairClassification> pairs;

    /// Order-insensitive lookup. Throws InvalidArgument for an unknown pair.
    const PairClassification &find(const std::string &a, const std::string &b) const;
};

/// Beam splitter with which-way detectors. Basis {reflected, tunneled, transmitted-other}:
/// P_r = e1, P_t = span{e2, e3}, P_wave = e2, so the wave subspace sits inside
/// the transmitted one and every pair commutes.
Scenario biprism_operators();

/// Two-arm interferometer: P_1 = e1, P_2 = e2 and P_wave onto
/// (e1 + e^{i theta} e2)/sqrt(2). P_wave is complementary to both path projectors.
Scenario mz_operators(double theta);

/// Classifies every unordered operator pair (i < j in declaration order).
ClassificationReport classify(const Scenario &scenario, double tol = kComplementarityTolerance);

/// True when the report flags exactly the scenario's expected pairs.
bool matches_expectation(const ClassificationReport &report, const Scenario &scenario);

}  // namespace welcherweg::complementarity

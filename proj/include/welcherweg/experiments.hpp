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

#include "welcherweg/config.hpp"

namespace welcherweg::experiments {

inline constexpr double kInterferenceThreshold = 1e-12;
inline constexpr double kDiscriminationThreshold = 1e-12;

/// Closed-form collector intensity I(theta) = A + B cos(theta) + C sin(theta)
/// for one physical reading of a configuration.
struct CurrentPrediction {
    PhysicalModel model = PhysicalModel::UnitaryQm;
    double theta = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double collector_current = 0.0;  // I(theta) at the configured phase
    bool interference_present = false;

    double intensity_at(double phase) const noexcept;
    /// sqrt(B^2 + C^2) / A, or 0 when A = 0.
    double visibility() const noexcept;

    bool operator==(const CurrentPrediction &) const = default;
};

/// Intensities are in the units of the detector module: arm amplitudes
/// (alpha, 1), each attenuated by its barrier amplitude.
///   unitary-qm         |b1|^2 + |b2|^2 + 2 Re(c b1* b2); an active
///                      eraser gives the symmetric post-selected intensity.
///   orthodox-particle  with detectors on and the slit closed, no interference
///                      and no current through any arm holding a barrier.
///   classical-field    the detector does not disturb the field.
/// Throws ConfigError for invalid configurations.
CurrentPrediction predict(const ExperimentConfig &config, PhysicalModel model);

struct DiscriminationReport {
    CurrentPrediction unitary;
    CurrentPrediction orthodox;
    double difference = 0.0;  // unitary - orthodox collector current
    bool discriminating = false;
    std::string reason;
};

/// Compares unitary-qm and orthodox-particle collector currents for the
/// configuration. Indistinguishable set-ups are reported, not rejected.
DiscriminationReport discriminate(const ExperimentConfig &config);

}  // namespace welcherweg::experiments

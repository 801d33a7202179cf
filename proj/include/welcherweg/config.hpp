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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "welcherweg/error.hpp"
#include "welcherweg/interferometer.hpp"

namespace welcherweg {

enum class Topology { Biprism, MachZehnder, AbRing };

/// Physical reading used to turn amplitudes into shots and currents.
///   UnitaryQm         Born-rule sampling of the entangled pure state.
///   OrthodoxParticle  a which-path click makes the quanton a particle that
///                     cannot tunnel through a barrier.
///   ClassicalField    contrast model: both path detectors respond on every shot.
enum class PhysicalModel { UnitaryQm, OrthodoxParticle, ClassicalField };

std::string_view to_string(Topology t) noexcept;
std::string_view to_string(PhysicalModel m) noexcept;
std::optional<Topology> parse_topology(std::string_view s) noexcept;
std::optional<PhysicalModel> parse_model(std::string_view s) noexcept;

/// Half-open phase grid start + k (stop - start) / points, k = 0..points-1.
struct ThetaSweep {
    double start = 0.0;
    double stop = 0.0;
    std::size_t points = 0;

    std::vector<double> grid() const;
    bool operator==(const ThetaSweep &) const = default;
};

/// One experiment: which topology, the arm asymmetry, the A-B phase and the
/// which-path apparatus. Optional fields are optional in the config file too.
struct ExperimentConfig {
    Topology topology = Topology::MachZehnder;
    double alpha = 1.0;
    double theta = 0.0;
    std::optional<ThetaSweep> theta_sweep;
    bool detectors_on = false;
    std::optional<Complex> detector_overlap;
    // Tunnel barriers, ab_ring only. The second arm defaults to the first.
    std::optional<Complex> barrier_transmission;
    std::optional<Complex> barrier_transmission2;
    bool slit_open = false;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    std::optional<PhysicalModel> model;

    /// <1|2> actually seen by the quanton: 1 when detectors are off, else the
    /// configured overlap (default 0, a perfect which-path record).
    Complex effective_overlap() const;

    /// Barrier amplitude in arm 1 or 2; 1 where no barrier is configured.
    Complex transmission(int arm) const;
    /// A barrier is present in an arm when |t| < 1 there.
    bool barrier_in_arm(int arm) const;
    bool barriers_present() const;

    /// Unattenuated arm amplitudes (alpha, 1) at phase theta.
    interferometer::PathPair arms() const;
    interferometer::PathPair arms(double theta) const;

    /// True when the slit erases an orthogonal which-path record.
    bool erasure_active() const;

    PhysicalModel model_or_default() const {
        return model.value_or(PhysicalModel::UnitaryQm);
    }

    bool operator==(const ExperimentConfig &) const = default;
};

struct ConfigDiagnostic {
    std::size_t line;  // 1-based; 0 when the problem is not tied to one line
    std::string field;
    std::string message;
};

/// Raised by load_config and validate_config. Carries every problem found, not
/// just the first.
class ConfigError : public Error {
  public:
    explicit ConfigError(std::vector<ConfigDiagnostic> diagnostics);

    const std::vector<ConfigDiagnostic> &diagnostics() const noexcept {
        return diagnostics_;
    }

  private:
    std::vector<ConfigDiagnostic> diagnostics_;
};

/// Range and topology checks. Empty when the config is valid.
std::vector<ConfigDiagnostic> validate(const ExperimentConfig &config);
void validate_or_throw(const ExperimentConfig &config);

/// Parses the flat `key = value` format:
///
///   # comment
///   topology = ab_ring            # biprism | mach_zehnder | ab_ring
///   alpha = 1
///   theta = 0.5pi                 # numbers may carry a trailing `pi`
///   theta_sweep = {start = 0, stop = 2pi, points = 32}
///   detectors_on = true
///   detector_overlap_re = 0
///   barrier_transmission_re = 0.6
///   slit_open = false
///   shots = 100000
///   seed = 7
///   model = unitary-qm
ExperimentConfig load_config(std::string_view text);
ExperimentConfig load_config_file(const std::filesystem::path &path);

/// Inverse of load_config: every set field, floats with 17 significant digits.
std::string to_config_text(const ExperimentConfig &config);

}  // namespace welcherweg

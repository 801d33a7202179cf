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

#include "welcherweg/config.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gtest/gtest.h"
#include "welcherweg/error.hpp"

using namespace welcherweg;

namespace {

std::vector<ConfigDiagnostic> diagnostics_of(const std::string &text) {
    try {
        load_config(text);
    } catch (const ConfigError &e) {
        return e.diagnostics();
    }
    return {};
}

}  // namespace

TEST(config, defaults) {
    const auto c = load_config("");
    EXPECT_EQ(c.topology, Topology::MachZehnder);
    EXPECT_EQ(c.alpha, 1.0);
    EXPECT_FALSE(c.detectors_on);
    EXPECT_EQ(c.effective_overlap(), Complex(1.0));
    EXPECT_FALSE(c.barriers_present());
    EXPECT_EQ(c.model_or_default(), PhysicalModel::UnitaryQm);
    EXPECT_TRUE(validate(c).empty());
}

TEST(config, parses_all_keys) {
    const auto c = load_config(R"(# ring
topology = ab_ring
alpha = 0.5
theta = 0.5pi
theta_sweep = {start = 0, stop = 2pi, points = 16}
detectors_on = true
detector_overlap_re = 0
barrier_transmission_re = 0.6
barrier_transmission_im = 0.0  # trailing comment
barrier_transmission2_re = 0.8
slit_open = false
shots = 123
seed = 18446744073709551615
model = "orthodox-particle"
)");
    EXPECT_EQ(c.topology, Topology::AbRing);
    EXPECT_EQ(c.alpha, 0.5);
    EXPECT_NEAR(c.theta, std::numbers::pi / 2, 1e-15);
    ASSERT_TRUE(c.theta_sweep);
    EXPECT_EQ(c.theta_sweep->points, 16u);
    EXPECT_EQ(c.theta_sweep->grid().size(), 16u);
    EXPECT_NEAR(c.theta_sweep->grid()[8], std::numbers::pi, 1e-15);
    EXPECT_EQ(c.effective_overlap(), Complex(0.0));
    EXPECT_EQ(c.transmission(1), Complex(0.6));
    EXPECT_EQ(c.transmission(2), Complex(0.8));
    EXPECT_TRUE(c.barrier_in_arm(1));
    EXPECT_EQ(c.shots, 123u);
    EXPECT_EQ(c.seed, 18446744073709551615ull);
    EXPECT_EQ(c.model_or_default(), PhysicalModel::OrthodoxParticle);
}

TEST(config, overlap_out_of_range_names_the_field) {
    const auto d = diagnostics_of("detectors_on = true\ndetector_overlap_re = 1.5\n");
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].field, "detector_overlap");
    EXPECT_EQ(d[0].line, 2u);
    EXPECT_NE(d[0].message.find("|c|"), std::string::npos);
}

TEST(config, topology_mismatch) {
    const auto d = diagnostics_of("topology = biprism\nslit_open = true\n");
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].field, "slit_open");
    EXPECT_NE(d[0].message.find("biprism"), std::string::npos);

    const auto b = diagnostics_of("topology = mach_zehnder\nbarrier_transmission_re = 0.5\n");
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].field, "barrier_transmission");
}

TEST(config, reports_every_error_with_line_numbers) {
    const auto d = diagnostics_of(R"(topology = pentagon
alpha = 3
colour = blue
shots = -4
alpha = 0.5
model = rubber-duck
)");
    ASSERT_EQ(d.size(), 6u);
    EXPECT_EQ(d[0].line, 1u);
    EXPECT_EQ(d[0].field, "topology");
    EXPECT_EQ(d[1].line, 2u);
    EXPECT_EQ(d[1].field, "alpha");
    EXPECT_EQ(d[2].line, 3u);
    EXPECT_EQ(d[3].line, 4u);
    EXPECT_EQ(d[4].line, 5u);
    EXPECT_EQ(d[5].line, 6u);
    try {
        load_config("alpha = 3\n");
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_EQ(e.code(), ErrorCode::Validation);
        EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
    }
}

TEST(config, malformed_lines) {
    EXPECT_FALSE(diagnostics_of("alpha 0.5\n").empty());
    EXPECT_FALSE(diagnostics_of("alpha = \n").empty());
    EXPECT_FALSE(diagnostics_of("detectors_on = maybe\n").empty());
    EXPECT_FALSE(diagnostics_of("theta_sweep = {start = 0, stop = 1}\n").empty());
    EXPECT_FALSE(diagnostics_of("theta_sweep = {start = 0, stop = 1, points = 0}\n").empty());
}

TEST(config, eraser_needs_orthogonal_detectors) {
    const auto d = diagnostics_of("topology = ab_ring\ndetectors_on = true\ndetector_overlap_re = 0.3\nslit_open = true\n");
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].field, "slit_open");
    EXPECT_TRUE(load_config("topology = ab_ring\ndetectors_on = true\nslit_open = true\n").erasure_active());
}

TEST(config, round_trip_through_text) {
    ExperimentConfig c;
    c.topology = Topology::AbRing;
    c.alpha = 0.1 + 0.2;
    c.theta = std::numbers::pi / 3;
    c.theta_sweep = ThetaSweep{0.1, 6.0, 7};
    c.detectors_on = true;
    c.detector_overlap = Complex(0.0, 0.0);
    c.barrier_transmission = Complex(0.6, -0.1);
    c.barrier_transmission2 = Complex(0.3, 0.2);
    c.shots = 77;
    c.seed = 12345678901234567ull;
    c.model = PhysicalModel::ClassicalField;
    EXPECT_EQ(load_config(to_config_text(c)), c);
    EXPECT_EQ(load_config(to_config_text(ExperimentConfig{})), ExperimentConfig{});
}

TEST(config, missing_file_is_an_io_error) {
    try {
        load_config_file("/nonexistent/experiment.cfg");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::Io);
    }
}

TEST(config, name_parsing) {
    EXPECT_EQ(parse_topology("ab_ring"), Topology::AbRing);
    EXPECT_EQ(parse_model("classical_field"), PhysicalModel::ClassicalField);
    EXPECT_FALSE(parse_model("bohmian"));
    EXPECT_EQ(to_string(PhysicalModel::UnitaryQm), "unitary-qm");
}

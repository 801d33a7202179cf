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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "welcherweg/format.hpp"

namespace welcherweg {

std::string_view to_string(Topology t) noexcept {
    switch (t) {
        case Topology::Biprism:
            return "biprism";
        case Topology::MachZehnder:
            return "mach_zehnder";
        case Topology::AbRing:
            return "ab_ring";
    }
    return "?";
}

std::string_view to_string(PhysicalModel m) noexcept {
    switch (m) {
        case PhysicalModel::UnitaryQm:
            return "unitary-qm";
        case PhysicalModel::OrthodoxParticle:
            return "orthodox-particle";
        case PhysicalModel::ClassicalField:
            return "classical-field";
    }
    return "?";
}

std::optional<Topology> parse_topology(std::string_view s) noexcept {
    for (auto t : {Topology::Biprism, Topology::MachZehnder, Topology::AbRing}) {
        if (s == to_string(t)) {
            return t;
        }
    }
    return std::nullopt;
}

std::optional<PhysicalModel> parse_model(std::string_view s) noexcept {
    for (auto m : {PhysicalModel::UnitaryQm, PhysicalModel::OrthodoxParticle, PhysicalModel::ClassicalField}) {
        const auto name = to_string(m);
        if (s.size() != name.size()) {
            continue;
        }
        bool same = true;
        for (std::size_t i = 0; i < s.size(); i++) {
            const char a = s[i] == '_' ? '-' : s[i];
            same = same && a == name[i];
        }
        if (same) {
            return m;
        }
    }
    return std::nullopt;
}

std::vector<double> ThetaSweep::grid() const {
    std::vector<double> g(points);
    const double step = points == 0 ? 0.0 : (stop - start) / static_cast<double>(points);
    for (std::size_t k = 0; k < points; k++) {
        g[k] = start + static_cast<double>(k) * step;
    }
    return g;
}

Complex ExperimentConfig::effective_overlap() const {
    if (!detectors_on) {
        return 1.0;
    }
    return detector_overlap.value_or(0.0);
}

Complex ExperimentConfig::transmission(int arm) const {
    require(arm == 1 || arm == 2, ErrorCode::InvalidArgument, "arm index must be 1 or 2");
    if (arm == 2 && barrier_transmission2) {
        return *barrier_transmission2;
    }
    return barrier_transmission.value_or(1.0);
}

bool ExperimentConfig::barrier_in_arm(int arm) const {
    return std::abs(transmission(arm)) < 1.0;
}

bool ExperimentConfig::barriers_present() const {
    return barrier_in_arm(1) || barrier_in_arm(2);
}

interferometer::PathPair ExperimentConfig::arms() const {
    return arms(theta);
}

interferometer::PathPair ExperimentConfig::arms(double phase) const {
    return interferometer::PathPair::from_asymmetry(alpha, phase);
}

bool ExperimentConfig::erasure_active() const {
    return slit_open && detectors_on;
}

namespace {

std::string join_diagnostics(const std::vector<ConfigDiagnostic> &diagnostics) {
    std::ostringstream out;
    out << "invalid configuration";
    for (const auto &d : diagnostics) {
        out << "\n  ";
        if (d.line > 0) {
            out << "line " << d.line << ": ";
        }
        out << d.field << ": " << d.message;
    }
    return out.str();
}

}  // namespace

ConfigError::ConfigError(std::vector<ConfigDiagnostic> diagnostics)
    : Error(ErrorCode::Validation, join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {
}

std::vector<ConfigDiagnostic> validate(const ExperimentConfig &c) {
    std::vector<ConfigDiagnostic> out;
    auto bad = [&](std::string field, std::string message) { out.push_back({0, std::move(field), std::move(message)}); };
    auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };

    if (!(c.alpha >= 0 && c.alpha <= 1)) {
        bad("alpha", "must lie in [0, 1]");
    }
    if (!std::isfinite(c.theta)) {
        bad("theta", "must be finite");
    }
    if (c.theta_sweep) {
        if (!std::isfinite(c.theta_sweep->start) || !std::isfinite(c.theta_sweep->stop)) {
            bad("theta_sweep", "start and stop must be finite");
        }
        if (c.theta_sweep->points == 0) {
            bad("theta_sweep", "points must be at least 1");
        }
    }
    if (c.detector_overlap) {
        if (!finite(*c.detector_overlap) || std::abs(*c.detector_overlap) > 1.0 + interferometer::kOverlapSlack) {
            bad("detector_overlap", "|c| must not exceed 1");
        }
    }
    auto check_barrier = [&](const std::optional<Complex> &t, const char *field) {
        if (!t) {
            return;
        }
        if (!finite(*t) || std::abs(*t) > 1.0) {
            bad(field, "|t| must not exceed 1");
        }
        if (c.topology != Topology::AbRing) {
            bad(field, "tunnel barriers are only available on ab_ring, not " + std::string(to_string(c.topology)));
        }
    };
    check_barrier(c.barrier_transmission, "barrier_transmission");
    check_barrier(c.barrier_transmission2, "barrier_transmission2");
    if (c.slit_open) {
        if (c.topology != Topology::AbRing) {
            bad("slit_open", "the eraser slit is only available on ab_ring, not " + std::string(to_string(c.topology)));
        } else if (c.detectors_on && std::abs(c.effective_overlap()) > 1e-12) {
            bad("slit_open", "ideal erasure needs orthogonal detector states (detector_overlap = 0)");
        }
    }
    if (c.shots == 0) {
        bad("shots", "must be at least 1");
    }
    return out;
}

void validate_or_throw(const ExperimentConfig &config) {
    auto diagnostics = validate(config);
    if (!diagnostics.empty()) {
        throw ConfigError(std::move(diagnostics));
    }
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') || (s.front() == '\'' && s.back() == '\''))) {
        return s.substr(1, s.size() - 2);
    }
    return s;
}

std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    double factor = 1.0;
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
        factor = std::numbers::pi;
        s = trim(s.substr(0, s.size() - 2));
        if (!s.empty() && s.back() == '*') {
            s = trim(s.substr(0, s.size() - 1));
        }
        if (s.empty() || s == "+") {
            return factor;
        }
        if (s == "-") {
            return -factor;
        }
    }
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v * factor;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
    s = trim(s);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return v;
}

std::optional<bool> parse_bool(std::string_view s) {
    s = trim(s);
    if (s == "true") {
        return true;
    }
    if (s == "false") {
        return false;
    }
    return std::nullopt;
}

std::size_t find_comment(std::string_view line) {
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); i++) {
        const char ch = line[i];
        if (quote) {
            if (ch == quote) {
                quote = 0;
            }
        } else if (ch == '"' || ch == '\'') {
            quote = ch;
        } else if (ch == '#') {
            return i;
        }
    }
    return std::string_view::npos;
}

const char *const kKnownKeys[] = {
    "topology",
    "alpha",
    "theta",
    "theta_sweep",
    "detectors_on",
    "detector_overlap_re",
    "detector_overlap_im",
    "barrier_transmission_re",
    "barrier_transmission_im",
    "barrier_transmission2_re",
    "barrier_transmission2_im",
    "slit_open",
    "shots",
    "seed",
    "model",
};

bool known_key(std::string_view key) {
    for (const char *k : kKnownKeys) {
        if (key == k) {
            return true;
        }
    }
    return false;
}

// Field name used by validate() for a file key.
std::string field_of(std::string_view key) {
    for (const char *suffix : {"_re", "_im"}) {
        if (key.ends_with(suffix)) {
            return std::string(key.substr(0, key.size() - 3));
        }
    }
    return std::string(key);
}

}  // namespace

ExperimentConfig load_config(std::string_view text) {
    ExperimentConfig config;
    std::vector<ConfigDiagnostic> diagnostics;
    std::map<std::string, std::size_t> seen;  // key -> line
    std::map<std::string, std::size_t> field_lines;

    auto bad = [&](std::size_t line, std::string field, std::string message) {
        diagnostics.push_back({line, std::move(field), std::move(message)});
    };

    std::optional<double> overlap_re, overlap_im, t1_re, t1_im, t2_re, t2_im;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;

        if (const auto hash = find_comment(line); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            bad(line_no, std::string(line), "expected `key = value`");
            continue;
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!known_key(key)) {
            bad(line_no, key, "unknown key");
            continue;
        }
        if (auto it = seen.find(key); it != seen.end()) {
            bad(line_no, key, "duplicate key (first set on line " + std::to_string(it->second) + ")");
            continue;
        }
        seen[key] = line_no;
        field_lines.emplace(field_of(key), line_no);

        auto real = [&](std::optional<double> &slot) {
            if (auto v = parse_real(value)) {
                slot = *v;
            } else {
                bad(line_no, key, "expected a real number, got `" + std::string(value) + "`");
            }
        };

        if (key == "topology") {
            if (auto t = parse_topology(unquote(value))) {
                config.topology = *t;
            } else {
                bad(line_no, key, "expected biprism, mach_zehnder or ab_ring, got `" + std::string(value) + "`");
            }
        } else if (key == "alpha" || key == "theta") {
            std::optional<double> v;
            real(v);
            if (v) {
                (key == "alpha" ? config.alpha : config.theta) = *v;
            }
        } else if (key == "theta_sweep") {
            if (value.size() < 2 || value.front() != '{' || value.back() != '}') {
                bad(line_no, key, "expected {start = ..., stop = ..., points = ...}");
                continue;
            }
            ThetaSweep sweep;
            bool has_start = false, has_stop = false, has_points = false, ok = true;
            std::string_view body = value.substr(1, value.size() - 2);
            while (!trim(body).empty()) {
                const auto comma = body.find(',');
                const std::string_view item = trim(body.substr(0, comma));
                body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
                const auto ieq = item.find('=');
                const std::string_view name = ieq == std::string_view::npos ? item : trim(item.substr(0, ieq));
                const std::string_view v = ieq == std::string_view::npos ? std::string_view{} : trim(item.substr(ieq + 1));
                if (name == "start" || name == "stop") {
                    if (auto r = parse_real(v)) {
                        (name == "start" ? sweep.start : sweep.stop) = *r;
                        (name == "start" ? has_start : has_stop) = true;
                    } else {
                        bad(line_no, key, "bad " + std::string(name) + " value `" + std::string(v) + "`");
                        ok = false;
                    }
                } else if (name == "points") {
                    if (auto n = parse_u64(v)) {
                        sweep.points = static_cast<std::size_t>(*n);
                        has_points = true;
                    } else {
                        bad(line_no, key, "bad points value `" + std::string(v) + "`");
                        ok = false;
                    }
                } else {
                    bad(line_no, key, "unknown sweep field `" + std::string(name) + "`");
                    ok = false;
                }
            }
            if (ok && !(has_start && has_stop && has_points)) {
                bad(line_no, key, "start, stop and points are all required");
                ok = false;
            }
            if (ok) {
                config.theta_sweep = sweep;
            }
        } else if (key == "detectors_on" || key == "slit_open") {
            if (auto b = parse_bool(value)) {
                (key == "detectors_on" ? config.detectors_on : config.slit_open) = *b;
            } else {
                bad(line_no, key, "expected true or false, got `" + std::string(value) + "`");
            }
        } else if (key == "detector_overlap_re") {
            real(overlap_re);
        } else if (key == "detector_overlap_im") {
            real(overlap_im);
        } else if (key == "barrier_transmission_re") {
            real(t1_re);
        } else if (key == "barrier_transmission_im") {
            real(t1_im);
        } else if (key == "barrier_transmission2_re") {
            real(t2_re);
        } else if (key == "barrier_transmission2_im") {
            real(t2_im);
        } else if (key == "shots" || key == "seed") {
            if (auto n = parse_u64(value)) {
                (key == "shots" ? config.shots : config.seed) = *n;
            } else {
                bad(line_no, key, "expected an unsigned 64-bit integer, got `" + std::string(value) + "`");
            }
        } else if (key == "model") {
            if (auto m = parse_model(unquote(value))) {
                config.model = *m;
            } else {
                bad(line_no, key,
                    "expected unitary-qm, orthodox-particle or classical-field, got `" + std::string(value) + "`");
            }
        }
    }

    auto complex_of = [](const std::optional<double> &re, const std::optional<double> &im) -> std::optional<Complex> {
        if (!re && !im) {
            return std::nullopt;
        }
        return Complex(re.value_or(0.0), im.value_or(0.0));
    };
    const bool overlap_keys = seen.count("detector_overlap_re") || seen.count("detector_overlap_im");
    const bool t1_keys = seen.count("barrier_transmission_re") || seen.count("barrier_transmission_im");
    const bool t2_keys = seen.count("barrier_transmission2_re") || seen.count("barrier_transmission2_im");
    config.detector_overlap = overlap_keys ? complex_of(overlap_re, overlap_im) : std::nullopt;
    config.barrier_transmission = t1_keys ? complex_of(t1_re, t1_im) : std::nullopt;
    config.barrier_transmission2 = t2_keys ? complex_of(t2_re, t2_im) : std::nullopt;

    // Skip range checks on values that failed to parse on the same line.
    for (auto d : validate(config)) {
        if (auto it = field_lines.find(d.field); it != field_lines.end()) {
            d.line = it->second;
        }
        const bool already = std::any_of(diagnostics.begin(), diagnostics.end(), [&](const ConfigDiagnostic &e) {
            return field_of(e.field) == d.field && e.line == d.line;
        });
        if (!already) {
            diagnostics.push_back(std::move(d));
        }
    }
    if (!diagnostics.empty()) {
        std::stable_sort(diagnostics.begin(), diagnostics.end(),
                         [](const ConfigDiagnostic &a, const ConfigDiagnostic &b) { return a.line < b.line; });
        throw ConfigError(std::move(diagnostics));
    }
    return config;
}

ExperimentConfig load_config_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config(buffer.str());
}

std::string to_config_text(const ExperimentConfig &c) {
    std::ostringstream out;
    out << "topology = " << to_string(c.topology) << '\n';
    out << "alpha = " << format_double(c.alpha) << '\n';
    out << "theta = " << format_double(c.theta) << '\n';
    if (c.theta_sweep) {
        out << "theta_sweep = {start = " << format_double(c.theta_sweep->start)
            << ", stop = " << format_double(c.theta_sweep->stop) << ", points = " << c.theta_sweep->points << "}\n";
    }
    out << "detectors_on = " << (c.detectors_on ? "true" : "false") << '\n';
    auto complex_keys = [&](const char *key, const std::optional<Complex> &z) {
        if (z) {
            out << key << "_re = " << format_double(z->real()) << '\n';
            out << key << "_im = " << format_double(z->imag()) << '\n';
        }
    };
    complex_keys("detector_overlap", c.detector_overlap);
    complex_keys("barrier_transmission", c.barrier_transmission);
    complex_keys("barrier_transmission2", c.barrier_transmission2);
    out << "slit_open = " << (c.slit_open ? "true" : "false") << '\n';
    out << "shots = " << c.shots << '\n';
    out << "seed = " << c.seed << '\n';
    if (c.model) {
        out << "model = " << to_string(*c.model) << '\n';
    }
    return out.str();
}

}  // namespace welcherweg

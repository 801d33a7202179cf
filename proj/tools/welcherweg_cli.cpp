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

// Command-line front end. Talks to the library only through welcherweg.h.
//
//   welcherweg run          --config exp.cfg [--model M] [--seed S] [--shots N]
//   welcherweg sweep        --config exp.cfg [--shots-per-point N] [--channel C]
//   welcherweg predict      --config exp.cfg [--model M]
//   welcherweg discriminate --config exp.cfg
//   welcherweg scenario     [--name biprism|mach_zehnder] [--theta T] [--tol X]
//
// Common flags: --format csv|json, --out <path>. Seed precedence is
// --seed, then $WELCHERWEG_SEED, then the config file.
//
// Exit status: 0 success, 1 validation error, 2 runtime error.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "welcherweg.h"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct CliFailure {
    int exit_code;
    std::string message;
};

int exit_code_of(ww_status s) {
    switch (s) {
        case WW_ERR_IO:
        case WW_ERR_INTERNAL:
            return kExitRuntime;
        default:
            return kExitValidation;
    }
}

void check(ww_status s, const char *what) {
    if (s != WW_OK) {
        throw CliFailure{exit_code_of(s), std::string(what) + ": " + ww_last_error()};
    }
}

struct ConfigDeleter {
    void operator()(ww_config *c) const {
        ww_config_free(c);
    }
};
struct ResultDeleter {
    void operator()(ww_result *r) const {
        ww_result_free(r);
    }
};
using ConfigPtr = std::unique_ptr<ww_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<ww_result, ResultDeleter>;

struct Options {
    std::string config_path;
    std::string model;
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
    std::string out;
    std::optional<std::uint64_t> shots;
    std::string channel = "auto";
    std::string scenario = "mach_zehnder";
    double theta = 0.0;
    double tol = 1e-8;
};

ConfigPtr load(const Options &o) {
    ww_config *raw = nullptr;
    check(ww_config_load(o.config_path.c_str(), &raw), "config");
    ConfigPtr config(raw);

    if (o.seed) {
        check(ww_config_set_seed(config.get(), *o.seed), "seed");
    } else if (const char *env = std::getenv("WELCHERWEG_SEED"); env != nullptr && *env != '\0') {
        errno = 0;
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0' || env[0] == '-') {
            throw CliFailure{kExitValidation, std::string("WELCHERWEG_SEED is not an unsigned 64-bit integer: ") + env};
        }
        check(ww_config_set_seed(config.get(), static_cast<std::uint64_t>(v)), "seed");
    }
    if (!o.model.empty()) {
        ww_model m{};
        check(ww_model_parse(o.model.c_str(), &m), "model");
        check(ww_config_set_model(config.get(), m), "model");
    }
    if (o.shots) {
        check(ww_config_set_shots(config.get(), *o.shots), "shots");
    }
    return config;
}

ww_format format_of(const Options &o) {
    return o.format == "json" ? WW_FORMAT_JSON : WW_FORMAT_CSV;
}

void write(const Options &o, const ResultPtr &result) {
    char *text = nullptr;
    std::size_t length = 0;
    check(ww_result_emit(result.get(), format_of(o), &text, &length), "emit");
    std::unique_ptr<char, void (*)(char *)> owned(text, ww_string_free);
    if (o.out.empty()) {
        std::cout.write(text, static_cast<std::streamsize>(length));
        std::cout.flush();
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    f.write(text, static_cast<std::streamsize>(length));
    if (!f) {
        throw CliFailure{kExitRuntime, "cannot write '" + o.out + "'"};
    }
}

ww_model model_in(const ConfigPtr &c) {
    ww_model m{};
    check(ww_config_get_model(c.get(), &m), "model");
    return m;
}

std::uint64_t seed_in(const ConfigPtr &c) {
    std::uint64_t s = 0;
    check(ww_config_get_seed(c.get(), &s), "seed");
    return s;
}

std::uint64_t shots_in(const ConfigPtr &c) {
    std::uint64_t n = 0;
    check(ww_config_get_shots(c.get(), &n), "shots");
    return n;
}

void cmd_run(const Options &o) {
    auto c = load(o);
    ww_result *raw = nullptr;
    check(ww_run(c.get(), model_in(c), shots_in(c), seed_in(c), &raw), "run");
    write(o, ResultPtr(raw));
}

void cmd_sweep(const Options &o) {
    auto c = load(o);
    std::size_t count = 0;
    check(ww_config_sweep_grid(c.get(), nullptr, 0, &count), "theta_sweep");
    std::vector<double> grid(count);
    check(ww_config_sweep_grid(c.get(), grid.data(), grid.size(), &count), "theta_sweep");
    ww_channel channel = WW_CHANNEL_AUTO;
    if (o.channel == "arrivals") {
        channel = WW_CHANNEL_ARRIVALS;
    } else if (o.channel == "symmetric") {
        channel = WW_CHANNEL_SYMMETRIC;
    } else if (o.channel == "antisymmetric") {
        channel = WW_CHANNEL_ANTISYMMETRIC;
    }
    ww_result *raw = nullptr;
    check(ww_sweep(c.get(), model_in(c), grid.data(), grid.size(), shots_in(c), seed_in(c), channel, &raw), "sweep");
    write(o, ResultPtr(raw));
}

void cmd_predict(const Options &o) {
    auto c = load(o);
    ww_result *raw = nullptr;
    check(ww_predict(c.get(), model_in(c), &raw), "predict");
    write(o, ResultPtr(raw));
}

void cmd_discriminate(const Options &o) {
    auto c = load(o);
    ww_result *raw = nullptr;
    check(ww_discriminate(c.get(), &raw), "discriminate");
    write(o, ResultPtr(raw));
}

void cmd_scenario(const Options &o) {
    ww_result *raw = nullptr;
    check(ww_scenario(o.scenario.c_str(), o.theta, o.tol, &raw), "scenario");
    write(o, ResultPtr(raw));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"welcherweg: which-path interferometry simulator"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    };
    auto add_config = [&](CLI::App *sub) {
        sub->add_option("--config", o.config_path, "Experiment configuration file")->required();
        sub->add_option("--model", o.model, "unitary-qm | orthodox-particle | classical-field");
        sub->add_option("--seed", o.seed, "RNG seed (overrides $WELCHERWEG_SEED and the file)");
        add_common(sub);
    };

    auto *run = app.add_subcommand("run", "Simulate single-quanton shots at the configured phase");
    add_config(run);
    run->add_option("--shots", o.shots, "Number of shots (overrides the file)");

    auto *sweep = app.add_subcommand("sweep", "Simulate a phase sweep and estimate the fringe visibility");
    add_config(sweep);
    sweep->add_option("--shots-per-point", o.shots, "Shots per phase point (overrides the file)");
    sweep->add_option("--channel", o.channel, "Reported arrivals")
        ->check(CLI::IsMember({"auto", "arrivals", "symmetric", "antisymmetric"}));

    auto *predict = app.add_subcommand("predict", "Closed-form collector intensity");
    add_config(predict);

    auto *disc = app.add_subcommand("discriminate", "Compare unitary-qm and orthodox-particle predictions");
    add_config(disc);

    auto *scenario = app.add_subcommand("scenario", "Classify projector pairs as compatible or complementary");
    scenario->add_option("--name", o.scenario, "Scenario")->check(CLI::IsMember({"biprism", "mach_zehnder"}));
    scenario->add_option("--theta", o.theta, "A-B phase for the mach_zehnder scenario");
    scenario->add_option("--tol", o.tol, "Commutator norm threshold")->check(CLI::PositiveNumber);
    add_common(scenario);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitValidation;
    }

    try {
        if (*run) {
            cmd_run(o);
        } else if (*sweep) {
            cmd_sweep(o);
        } else if (*predict) {
            cmd_predict(o);
        } else if (*disc) {
            cmd_discriminate(o);
        } else if (*scenario) {
            cmd_scenario(o);
        }
    } catch (const CliFailure &f) {
        std::cerr << "welcherweg: " << f.message << '\n';
        return f.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "welcherweg: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}

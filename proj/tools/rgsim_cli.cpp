// Copyright 2026 The rgsim Authors
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

// Command-line driver: simulate, sweep, verify.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rgsim/config.hpp"
#include "rgsim/sweep.hpp"
#include "rgsim/verify.hpp"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct Overrides {
    std::optional<std::string> config_path;
    std::map<std::string, std::string> values;

    void bind(CLI::App *app, bool list_distance) {
        app->add_option("-c,--config", config_path, "flat key=value config file");
        auto opt = [&](const char *flag, const char *key, const char *help) {
            app->add_option_function<std::string>(
                flag, [this, key](const std::string &v) { values[key] = v; }, help);
        };
        opt("--distance", "distance", list_distance ? "end-to-end distances in km, comma separated" : "distance in km");
        opt("--spacing", "spacing", "RGSS spacing in km");
        opt("--attenuation", "attenuation", "fiber attenuation in dB/km");
        opt("--bsm-cap", "bsm_cap", "BSM success probability");
        opt("--efficiency", "efficiency", "detector efficiency");
        opt("--m", "m", "arms per side");
        opt("--b", "b", "branching vector, e.g. 10,5");
        if (list_distance) {
            opt("--specs", "specs", "RGS specs 'm:b1,b2' separated by spaces");
        }
        opt("--trials", "trials", "attempts per cell");
        opt("--seed", "seed", "master seed");
        opt("--mode", "mode", "accounting or exact");
        opt("--out", "out", "CSV output path (JSON written alongside)");
        opt("--threads", "threads", "worker threads (0 = all cores)");
        opt("--period", "period", "seconds per attempt, for the rate estimate");
    }

    rgsim::SweepSpec resolve() const {
        auto cfg = config_path ? rgsim::KeyValueConfig::load(*config_path) : rgsim::KeyValueConfig{};
        for (const auto &[k, v] : values) {
            cfg.set(k, v);
        }
        return rgsim::sweep_spec_from(cfg);
    }
};

void progress(std::size_t done, std::size_t total) {
    std::cerr << "cell " << done << "/" << total << " done\n";
}

int run_simulate(const Overrides &o) {
    auto spec = o.resolve();
    if (spec.distances_km.size() != 1 || spec.specs.size() != 1) {
        throw std::invalid_argument("simulate takes one distance and one RGS spec; use sweep for more");
    }
    auto rows = rgsim::run_sweep(spec);
    if (!spec.output_path.empty()) {
        rgsim::write_sweep_outputs(spec, rows);
        std::cerr << "wrote " << spec.output_path << " and " << rgsim::json_path_for(spec.output_path) << "\n";
        return 0;
    }
    rgsim::write_json(std::cout, rows);
    return 0;
}

int run_sweep_cmd(const Overrides &o) {
    auto spec = o.resolve();
    auto rows = rgsim::run_sweep(spec, progress);
    if (spec.output_path.empty()) {
        rgsim::write_csv(std::cout, rows);
        return 0;
    }
    rgsim::write_sweep_outputs(spec, rows);
    std::cerr << "wrote " << spec.output_path << " and " << rgsim::json_path_for(spec.output_path) << "\n";
    return 0;
}

int run_verify(std::size_t graphs, std::uint64_t seed, std::size_t max_vertices) {
    auto report = rgsim::check_graph_rules(graphs, seed, max_vertices);
    nlohmann::ordered_json j;
    j["graphs"] = report.graphs;
    j["branches"] = report.branches;
    j["failures"] = report.failures;
    j["min_fidelity"] = report.min_fidelity;
    j["ok"] = report.ok();
    j["notes"] = report.notes;
    std::cout << j.dump(2) << "\n";
    return report.ok() ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"All-photonic repeater chain simulator"};
    app.require_subcommand(1);

    Overrides sim_opts;
    auto *simulate = app.add_subcommand("simulate", "run attempts for a single chain configuration");
    sim_opts.bind(simulate, false);

    Overrides sweep_opts;
    auto *sweep = app.add_subcommand("sweep", "grid over distances and RGS specs");
    sweep_opts.bind(sweep, true);

    std::size_t graphs = 500;
    std::uint64_t seed = 2026;
    std::size_t max_vertices = 8;
    auto *verify = app.add_subcommand("verify", "check graph rules against the dense reference");
    verify->add_option("--graphs", graphs, "random graphs to test");
    verify->add_option("--seed", seed, "seed");
    verify->add_option("--max-vertices", max_vertices, "largest graph size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*simulate) {
            return run_simulate(sim_opts);
        }
        if (*sweep) {
            return run_sweep_cmd(sweep_opts);
        }
        return run_verify(graphs, seed, max_vertices);
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

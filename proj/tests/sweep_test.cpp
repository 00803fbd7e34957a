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

#include "rgsim/sweep.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rgsim/config.hpp"

namespace rgsim {
namespace {

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SweepSpec small_spec() {
    SweepSpec s;
    s.distances_km = {8, 16};
    s.specs = {{2, {2}}, {3, {2, 2}}};
    s.trials = 40;
    s.master_seed = 5;
    return s;
}

TEST(Rate, Examples) {
    auto r = estimate_rate(100, 100, 1e-6);
    EXPECT_NEAR(r.rate_hz, 1e6, 1e-6);
    EXPECT_EQ(r.stderr_hz, 0.0);
    EXPECT_EQ(estimate_rate(0, 10, 1.0).rate_hz, 0.0);
    r = estimate_rate(500, 1000, 1.0);
    EXPECT_DOUBLE_EQ(r.rate_hz, 0.5);
    EXPECT_NEAR(r.stderr_hz, 0.0158, 5e-5);
    EXPECT_THROW(estimate_rate(0, 0, 1.0), std::invalid_argument);
    EXPECT_THROW(estimate_rate(std::vector<TrialOutcome>{}, 1.0), std::invalid_argument);
    EXPECT_THROW(estimate_rate(1, 2, 0.0), std::invalid_argument);
    std::vector<TrialOutcome> outs(4);
    outs[1].success = true;
    EXPECT_DOUBLE_EQ(estimate_rate(outs, 2.0).rate_hz, 0.125);
}

TEST(Sweep, RowCountAndOrder) {
    auto rows = run_sweep(small_spec());
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].distance_km, 8);
    EXPECT_EQ(rows[0].m, 2u);
    EXPECT_EQ(rows[1].m, 3u);
    EXPECT_EQ(rows[2].distance_km, 16);
    for (const auto &r : rows) {
        EXPECT_EQ(r.trials, 40u);
        if (r.two_stage_end_bits > 0) {
            EXPECT_DOUBLE_EQ(r.ratio, r.one_stage_end_bits / r.two_stage_end_bits);
        }
    }
}

TEST(Sweep, ThreadCountDoesNotChangeRows) {
    auto s = small_spec();
    s.threads = 1;
    auto a = run_sweep(s);
    s.threads = 5;
    auto b = run_sweep(s);
    EXPECT_EQ(a, b);
}

TEST(Sweep, ExactZeroLossFullCap) {
    SweepSpec s;
    s.distances_km = {4};
    s.specs = {{1, {1}}};
    s.trials = 20;
    s.mode = SimMode::Exact;
    s.attenuation_db_per_km = 0;
    s.bsm_success_cap = 1;
    auto rows = run_sweep(s);
    EXPECT_EQ(rows[0].success_rate, 1.0);
}

TEST(Sweep, InvalidSpec) {
    auto s = small_spec();
    s.trials = 0;
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
    s = small_spec();
    s.distances_km = {-1};
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
    s = small_spec();
    s.distances_km = {2};  // below spacing
    EXPECT_THROW(run_sweep(s), std::invalid_argument);
}

TEST(Output, CsvRoundTripAndJsonAgree) {
    auto rows = run_sweep(small_spec());
    rows[0].one_stage_end_bits = 0.1 + 0.2;  // not exactly representable in short decimal
    std::stringstream csv;
    write_csv(csv, rows);
    auto back = parse_csv(csv);
    EXPECT_EQ(back, rows);

    std::stringstream js;
    write_json(js, rows);
    auto j = nlohmann::json::parse(js.str());
    ASSERT_EQ(j.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(j[i]["distance_km"].get<double>(), rows[i].distance_km);
        EXPECT_EQ(j[i]["b"].get<std::vector<std::uint32_t>>(), rows[i].b);
        EXPECT_EQ(j[i]["one_stage_end_bits"].get<double>(), rows[i].one_stage_end_bits);
        EXPECT_EQ(j[i]["ratio"].get<double>(), rows[i].ratio);
        EXPECT_EQ(j[i]["successes"].get<std::uint64_t>(), rows[i].successes);
    }
}

TEST(Output, FormatDouble) {
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(1000), "1000");
    EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(Output, FilesAreByteIdenticalAcrossRuns) {
    auto dir = std::filesystem::temp_directory_path() / "rgsim_sweep_test";
    std::filesystem::create_directories(dir);
    auto s = small_spec();
    s.trials = 1;
    s.output_path = (dir / "a.csv").string();
    write_sweep_outputs(s, run_sweep(s));
    s.output_path = (dir / "b.csv").string();
    s.threads = 3;
    write_sweep_outputs(s, run_sweep(s));
    EXPECT_EQ(slurp((dir / "a.csv").string()), slurp((dir / "b.csv").string()));
    EXPECT_EQ(slurp((dir / "a.json").string()), slurp((dir / "b.json").string()));
    EXPECT_EQ(json_path_for("x.csv"), "x.json");
    EXPECT_EQ(json_path_for("x.out"), "x.out.json");
    std::filesystem::remove_all(dir);
}

TEST(Output, UnwritablePath) {
    auto s = small_spec();
    s.output_path = "/nonexistent-dir/out.csv";
    EXPECT_THROW(write_sweep_outputs(s, {}), std::runtime_error);
}

TEST(Config, ParseAndOverride) {
    std::stringstream in(R"(# chain
distance = 100, 200
spacing = 4   # km
m = 14
b = 10,5
trials = 7
mode = exact
)");
    auto cfg = KeyValueConfig::parse(in);
    cfg.set("trials", "9");
    auto s = sweep_spec_from(cfg);
    EXPECT_EQ(s.distances_km, (std::vector<double>{100, 200}));
    ASSERT_EQ(s.specs.size(), 1u);
    EXPECT_EQ(s.specs[0], (RgsSpec{14, {10, 5}}));
    EXPECT_EQ(s.trials, 9u);
    EXPECT_EQ(s.mode, SimMode::Exact);
}

TEST(Config, SpecsList) {
    KeyValueConfig cfg;
    cfg.set("specs", "1:1  2:2,2");
    auto s = sweep_spec_from(cfg);
    ASSERT_EQ(s.specs.size(), 2u);
    EXPECT_EQ(s.specs[1], (RgsSpec{2, {2, 2}}));
}

TEST(Config, Errors) {
    std::stringstream bad("distance 100\n");
    EXPECT_THROW(KeyValueConfig::parse(bad), std::invalid_argument);
    KeyValueConfig cfg;
    cfg.set("colour", "red");
    EXPECT_THROW(sweep_spec_from(cfg), std::invalid_argument);
    KeyValueConfig c2;
    c2.set("trials", "ten");
    EXPECT_THROW(sweep_spec_from(c2), std::invalid_argument);
    KeyValueConfig c3;
    c3.set("m", "0");
    EXPECT_THROW(sweep_spec_from(c3), std::invalid_argument);
    KeyValueConfig c4;
    c4.set("mode", "fast");
    EXPECT_THROW(sweep_spec_from(c4), std::invalid_argument);
    EXPECT_THROW(KeyValueConfig::load("/nonexistent/cfg.txt"), std::invalid_argument);
}

}  // namespace
}  // namespace rgsim

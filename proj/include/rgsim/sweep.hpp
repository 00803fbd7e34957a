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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "rgsim/chain.hpp"
#include "rgsim/protocol.hpp"

namespace rgsim {

struct SweepSpec {
    std::vector<double> distances_km{1000.0};
    std::vector<RgsSpec> specs{RgsSpec{}};
    std::uint64_t trials = 100;
    std::uint64_t master_seed = 1;
    std::string output_path;  // CSV; JSON goes next to it with a .json suffix
    SimMode mode = SimMode::Accounting;
    double spacing_km = 4.0;
    double attenuation_db_per_km = 0.2;
    double bsm_success_cap = 0.5;
    double detector_efficiency = 1.0;
    double trial_period_s = 1e-6;
    unsigned threads = 0;  // 0: hardware concurrency

    void validate() const;
    ChainConfig chain(double distance_km, const RgsSpec &spec) const;
};

struct SweepRow {
    double distance_km = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> b;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double success_rate = 0;
    double success_stderr = 0;
    double rate_hz = 0;
    double rate_stderr_hz = 0;
    double one_stage_end_bits = 0;  // mean per attempt, left end node
    double two_stage_end_bits = 0;
    double per_absa_bits = 0;       // Two-Stage processed bits at an interior ABSA
    double ratio = 0;

    friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

using ProgressFn = std::function<void(std::size_t done_cells, std::size_t total_cells)>;

/// One row per (distance, spec), in that nesting order. Trial t of cell c uses
/// the seed trial_seed(trial_seed(master, c), t); results do not depend on the
/// thread count.
std::vector<SweepRow> run_sweep(const SweepSpec &spec, const ProgressFn &progress = {});

/// Writes CSV to spec.output_path and JSON to output_path + ".json" (or to the
/// replacement of a trailing ".csv"). Throws std::runtime_error when a file
/// cannot be written.
void write_sweep_outputs(const SweepSpec &spec, const std::vector<SweepRow> &rows);
std::string json_path_for(const std::string &csv_path);

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
void write_json(std::ostream &out, const std::vector<SweepRow> &rows);
std::vector<SweepRow> parse_csv(std::istream &in);

/// Shortest text that reads back to the same double.
std::string format_double(double v);

struct RateEstimate {
    double rate_hz = 0;
    double stderr_hz = 0;
};

RateEstimate estimate_rate(std::uint64_t successes, std::uint64_t trials, double trial_period_s);
RateEstimate estimate_rate(const std::vector<TrialOutcome> &outcomes, double trial_period_s);

}  // namespace rgsim

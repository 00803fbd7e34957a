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

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rgsim/correction.hpp"

namespace rgsim {

void SweepSpec::validate() const {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (distances_km.empty() || specs.empty()) {
        throw std::invalid_argument("sweep needs at least one distance and one RGS spec");
    }
    for (double d : distances_km) {
        if (!(d > 0)) {
            throw std::invalid_argument("distances must be positive");
        }
    }
    if (!(trial_period_s > 0)) {
        throw std::invalid_argument("trial period must be positive");
    }
    for (double d : distances_km) {
        for (const auto &s : specs) {
            chain(d, s).validate();
        }
    }
}

ChainConfig SweepSpec::chain(double distance_km, const RgsSpec &spec) const {
    ChainConfig c;
    c.distance_km = distance_km;
    c.rgss_spacing_km = spacing_km;
    c.attenuation_db_per_km = attenuation_db_per_km;
    c.bsm_success_cap = bsm_success_cap;
    c.detector_efficiency = detector_efficiency;
    c.rgs = spec;
    c.rng_seed = master_seed;
    return c;
}

RateEstimate estimate_rate(std::uint64_t successes, std::uint64_t trials, double trial_period_s) {
    if (trials == 0) {
        throw std::invalid_argument("rate estimate needs at least one trial");
    }
    if (!(trial_period_s > 0)) {
        throw std::invalid_argument("trial period must be positive");
    }
    const double p = static_cast<double>(successes) / static_cast<double>(trials);
    return {p / trial_period_s, std::sqrt(p * (1 - p) / static_cast<double>(trials)) / trial_period_s};
}

RateEstimate estimate_rate(const std::vector<TrialOutcome> &outcomes, double trial_period_s) {
    auto ok = static_cast<std::uint64_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const TrialOutcome &t) { return t.success; }));
    return estimate_rate(ok, outcomes.size(), trial_period_s);
}

namespace {

struct TrialStats {
    bool success = false;
    std::uint64_t one_stage_end = 0;
    std::uint64_t two_stage_end = 0;
    std::uint64_t per_absa = 0;
};

TrialStats summarize(const TrialOutcome &t) {
    TrialStats s;
    s.success = t.success;
    auto one = comms_ledger(t, CorrectionMethod::OneStage);
    auto two = comms_ledger(t, CorrectionMethod::TwoStage);
    s.one_stage_end = one.end(EndNode::Left).bits_processed;
    s.two_stage_end = two.end(EndNode::Left).bits_processed;
    // An interior ABSA when there is one; the two end ABSAs see end-node
    // photons on one side.
    const std::size_t j = two.absa_count() > 2 ? 1 : 0;
    s.per_absa = two.absa(j).bits_processed;
    return s;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec &spec, const ProgressFn &progress) {
    spec.validate();
    struct Cell {
        ChainConfig config;
        ChainTopology topology;
    };
    std::vector<Cell> cells;
    for (double d : spec.distances_km) {
        for (const auto &s : spec.specs) {
            auto c = spec.chain(d, s);
            cells.push_back({c, plan_chain(c)});
        }
    }
    const std::uint64_t per_cell = spec.trials;
    const std::uint64_t total = per_cell * cells.size();
    std::vector<TrialStats> stats(total);
    std::vector<std::atomic<std::uint64_t>> remaining(cells.size());
    for (auto &r : remaining) {
        r = per_cell;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::size_t> cells_done{0};
    std::mutex progress_mutex;
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= total) {
                return;
            }
            const std::size_t c = i / per_cell;
            const std::uint64_t t = i % per_cell;
            try {
                Rng rng(trial_seed(trial_seed(spec.master_seed, c), t));
                stats[i] = summarize(run_attempt(cells[c].config, cells[c].topology, rng, spec.mode));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = total;
                return;
            }
            if (remaining[c].fetch_sub(1) == 1 && progress) {
                std::lock_guard lock(progress_mutex);
                progress(++cells_done, cells.size());
            }
        }
    };
    unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }

    std::vector<SweepRow> rows;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        SweepRow row;
        const auto &cfg = cells[c].config;
        row.distance_km = cfg.distance_km;
        row.m = cfg.rgs.m;
        row.b = cfg.rgs.branching;
        row.trials = per_cell;
        double one = 0;
        double two = 0;
        std::uint64_t per_absa = 0;
        for (std::uint64_t t = 0; t < per_cell; ++t) {
            const auto &s = stats[c * per_cell + t];
            row.successes += s.success;
            one += static_cast<double>(s.one_stage_end);
            two += static_cast<double>(s.two_stage_end);
            per_absa = std::max(per_absa, s.per_absa);
        }
        const auto rate = estimate_rate(row.successes, per_cell, spec.trial_period_s);
        row.success_rate = static_cast<double>(row.successes) / static_cast<double>(per_cell);
        row.success_stderr = rate.stderr_hz * spec.trial_period_s;
        row.rate_hz = rate.rate_hz;
        row.rate_stderr_hz = rate.stderr_hz;
        row.one_stage_end_bits = one / static_cast<double>(per_cell);
        row.two_stage_end_bits = two / static_cast<double>(per_cell);
        row.per_absa_bits = static_cast<double>(per_absa);
        row.ratio = (row.one_stage_end_bits > 0 && row.two_stage_end_bits > 0)
                        ? row.one_stage_end_bits / row.two_stage_end_bits
                        : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

const char *const kColumns[] = {"distance_km",    "m",       "b",
                                "trials",         "successes", "success_rate",
                                "success_stderr", "rate_hz",   "rate_stderr_hz",
                                "one_stage_end_bits", "two_stage_end_bits", "per_absa_bits",
                                "ratio"};

std::string join_b(const std::vector<std::uint32_t> &b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        s += (i ? ";" : "") + std::to_string(b[i]);
    }
    return s;
}

template <class T>
T parse_number(const std::string &text, const char *field) {
    T v{};
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw std::runtime_error(std::string("bad CSV value for ") + field + ": '" + text + "'");
    }
    return v;
}

}  // namespace

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
        out << (i ? "," : "") << kColumns[i];
    }
    out << '\n';
    for (const auto &r : rows) {
        out << format_double(r.distance_km) << ',' << r.m << ',' << join_b(r.b) << ',' << r.trials << ','
            << r.successes << ',' << format_double(r.success_rate) << ',' << format_double(r.success_stderr) << ','
            << format_double(r.rate_hz) << ',' << format_double(r.rate_stderr_hz) << ','
            << format_double(r.one_stage_end_bits) << ',' << format_double(r.two_stage_end_bits) << ','
            << format_double(r.per_absa_bits) << ',' << format_double(r.ratio) << '\n';
    }
}

std::vector<SweepRow> parse_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty CSV");
    }
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != std::size(kColumns)) {
            throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields");
        }
        SweepRow r;
        r.distance_km = parse_number<double>(f[0], kColumns[0]);
        r.m = parse_number<std::uint32_t>(f[1], kColumns[1]);
        r.b = parse_branching(f[2]);
        r.trials = parse_number<std::uint64_t>(f[3], kColumns[3]);
        r.successes = parse_number<std::uint64_t>(f[4], kColumns[4]);
        r.success_rate = parse_number<double>(f[5], kColumns[5]);
        r.success_stderr = parse_number<double>(f[6], kColumns[6]);
        r.rate_hz = parse_number<double>(f[7], kColumns[7]);
        r.rate_stderr_hz = parse_number<double>(f[8], kColumns[8]);
        r.one_stage_end_bits = parse_number<double>(f[9], kColumns[9]);
        r.two_stage_end_bits = parse_number<double>(f[10], kColumns[10]);
        r.per_absa_bits = parse_number<double>(f[11], kColumns[11]);
        r.ratio = parse_number<double>(f[12], kColumns[12]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_json(std::ostream &out, const std::vector<SweepRow> &rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json o;
        o["distance_km"] = r.distance_km;
        o["m"] = r.m;
        o["b"] = r.b;
        o["trials"] = r.trials;
        o["successes"] = r.successes;
        o["success_rate"] = r.success_rate;
        o["success_stderr"] = r.success_stderr;
        o["rate_hz"] = r.rate_hz;
        o["rate_stderr_hz"] = r.rate_stderr_hz;
        o["one_stage_end_bits"] = r.one_stage_end_bits;
        o["two_stage_end_bits"] = r.two_stage_end_bits;
        o["per_absa_bits"] = r.per_absa_bits;
        o["ratio"] = r.ratio;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

std::string json_path_for(const std::string &csv_path) {
    const std::string ext = ".csv";
    if (csv_path.size() > ext.size() && csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0) {
        return csv_path.substr(0, csv_path.size() - ext.size()) + ".json";
    }
    return csv_path + ".json";
}

void write_sweep_outputs(const SweepSpec &spec, const std::vector<SweepRow> &rows) {
    if (spec.output_path.empty()) {
        throw std::invalid_argument("no output path");
    }
    auto write = [](const std::string &path, auto &&fn) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw std::runtime_error("cannot open '" + path + "' for writing");
        }
        fn(f);
        f.flush();
        if (!f) {
            throw std::runtime_error("failed writing '" + path + "'");
        }
    };
    write(spec.output_path, [&](std::ostream &o) { write_csv(o, rows); });
    write(json_path_for(spec.output_path), [&](std::ostream &o) { write_json(o, rows); });
}

}  // namespace rgsim

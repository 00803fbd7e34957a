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

#include "rgsim/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rgsim {

namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <class T>
T number(const std::string &key, const std::string &text) {
    T v{};
    auto t = trim(text);
    auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
        throw std::invalid_argument("bad value for '" + key + "': '" + text + "'");
    }
    return v;
}

std::vector<double> number_list(const std::string &key, const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(number<double>(key, item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty list for '" + key + "'");
    }
    return out;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream &in, const std::string &origin) {
    KeyValueConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": expected key = value");
        }
        auto key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        cfg.set(key, trim(line.substr(eq + 1)));
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot read config file '" + path + "'");
    }
    return parse(f, path);
}

std::optional<std::string> KeyValueConfig::get(const std::string &key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SweepSpec sweep_spec_from(const KeyValueConfig &config) {
    static const std::set<std::string> known{"distance", "spacing", "attenuation", "bsm_cap", "efficiency",
                                             "m",        "b",       "specs",       "trials",  "seed",
                                             "mode",     "out",     "threads",     "period"};
    for (const auto &[k, v] : config.entries()) {
        if (!known.contains(k)) {
            throw std::invalid_argument("unknown config key '" + k + "'");
        }
    }
    SweepSpec s;
    auto has = [&](const char *k) { return config.get(k).has_value(); };
    auto val = [&](const char *k) { return *config.get(k); };
    if (has("distance")) s.distances_km = number_list("distance", val("distance"));
    if (has("spacing")) s.spacing_km = number<double>("spacing", val("spacing"));
    if (has("attenuation")) s.attenuation_db_per_km = number<double>("attenuation", val("attenuation"));
    if (has("bsm_cap")) s.bsm_success_cap = number<double>("bsm_cap", val("bsm_cap"));
    if (has("efficiency")) s.detector_efficiency = number<double>("efficiency", val("efficiency"));
    if (has("trials")) s.trials = number<std::uint64_t>("trials", val("trials"));
    if (has("seed")) s.master_seed = number<std::uint64_t>("seed", val("seed"));
    if (has("threads")) s.threads = number<unsigned>("threads", val("threads"));
    if (has("period")) s.trial_period_s = number<double>("period", val("period"));
    if (has("mode")) s.mode = parse_mode(val("mode"));
    if (has("out")) s.output_path = val("out");

    RgsSpec single;
    if (has("m")) single.m = number<std::uint32_t>("m", val("m"));
    if (has("b")) single.branching = parse_branching(val("b"));
    s.specs = {single};
    if (has("specs")) {
        s.specs.clear();
        std::stringstream ss(val("specs"));
        std::string item;
        while (ss >> item) {
            auto colon = item.find(':');
            if (colon == std::string::npos) {
                throw std::invalid_argument("spec entry '" + item + "' must look like m:b1,b2");
            }
            s.specs.push_back(
                {number<std::uint32_t>("specs", item.substr(0, colon)), parse_branching(item.substr(colon + 1))});
        }
    }
    for (const auto &spec : s.specs) {
        spec.validate();
    }
    return s;
}

}  // namespace rgsim

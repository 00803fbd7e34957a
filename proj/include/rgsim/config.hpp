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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "rgsim/sweep.hpp"

namespace rgsim {

/// Flat "key = value" settings. Blank lines and text after '#' are ignored.
class KeyValueConfig {
   public:
    static KeyValueConfig parse(std::istream &in, const std::string &origin = "<input>");
    static KeyValueConfig load(const std::string &path);

    void set(const std::string &key, const std::string &value) { entries_[key] = value; }
    std::optional<std::string> get(const std::string &key) const;
    const std::map<std::string, std::string> &entries() const { return entries_; }

   private:
    std::map<std::string, std::string> entries_;
};

/// Keys: distance (comma list, km), spacing, attenuation (dB/km), bsm_cap,
/// efficiency, m, b, specs ("m:b1,b2" entries separated by spaces; overrides
/// m and b), trials, seed, mode, out, threads, period (s). Unknown keys and
/// malformed values throw std::invalid_argument.
SweepSpec sweep_spec_from(const KeyValueConfig &config);

}  // namespace rgsim

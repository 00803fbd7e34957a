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
#include <random>

namespace rgsim {

/// Seeded generator for one trial. Fair bits are served from a 64-bit cache.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    bool bit() {
        if (left_ == 0) {
            cache_ = engine_();
            left_ = 64;
        }
        bool b = cache_ & 1;
        cache_ >>= 1;
        --left_;
        return b;
    }

    bool bernoulli(double p) {
        if (p >= 1.0) {
            return true;
        }
        if (p <= 0.0) {
            return false;
        }
        return std::bernoulli_distribution(p)(engine_);
    }

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
    std::uint64_t cache_ = 0;
    int left_ = 0;
};

/// splitmix64 finalizer over (master, index); gives each trial its own stream.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace rgsim

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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rgsim/chain.hpp"
#include "rgsim/graph_state.hpp"
#include "rgsim/tree_measure.hpp"

namespace rgsim {

/// Supplies physical measurement outcomes in exact mode. `forced` is set when
/// the state admits only one outcome; the source must return it.
class OutcomeSource {
   public:
    virtual ~OutcomeSource() = default;
    virtual bool next(std::optional<bool> forced) = 0;
};

class RandomOutcomes final : public OutcomeSource {
   public:
    explicit RandomOutcomes(Rng &rng) : rng_(rng) {}
    bool next(std::optional<bool> forced) override { return forced ? *forced : rng_.bit(); }

   private:
    Rng &rng_;
};

/// Walks every branch of the free outcomes in depth-first order. Call next()
/// during one run, then advance() to move to the following branch.
class EnumeratedOutcomes final : public OutcomeSource {
   public:
    bool next(std::optional<bool> forced) override;
    /// False once every branch has been visited.
    bool advance();
    std::size_t depth() const { return path_.size(); }

   private:
    std::vector<bool> path_;
    std::size_t pos_ = 0;
};

enum class BsmStatus : std::uint8_t { Success, Failed, Lost };

struct BsmRecord {
    BsmStatus status = BsmStatus::Lost;
    bool outcome_left = false;   // raw detector bits, meaningful on success
    bool outcome_right = false;
};

struct TreeRecord {
    std::uint8_t input = 0;  // 0: left input, 1: right input
    std::uint32_t arm = 0;
    Basis logical = Basis::Z;
    LogicalResult result;
};

struct AbsaReport {
    std::uint32_t index = 0;
    std::vector<std::uint32_t> branching;
    AbsaInputs inputs;
    std::array<std::vector<bool>, 2> outcomes;  // raw bit per slot; false if none
    std::vector<BsmRecord> bsm;
    std::optional<std::uint32_t> kept_arm;
    std::vector<TreeRecord> z_logical;
    std::array<std::optional<LogicalResult>, 2> x_logical;  // kept trees (RGS inputs only)
    bool success = false;

    /// Photons with a recorded outcome: BSM-successful outers and arrived
    /// tree photons.
    std::uint64_t measured_photons() const;
    std::uint64_t photon_slots() const { return inputs[0].slots() + inputs[1].slots(); }
    std::uint64_t outcome_bits() const { return measured_photons(); }
    std::uint64_t vop_bits() const { return measured_photons(); }
};

/// Reference to one photon: ABSA index, input side, slot.
struct PhotonRef {
    std::uint32_t absa = 0;
    std::uint8_t input = 0;
    std::size_t slot = 0;
};

/// What happens physically to photons. Accounting mode draws fair bits;
/// exact mode drives a GraphState.
class PhotonBackend {
   public:
    virtual ~PhotonBackend() = default;
    /// CZ then joint X measurement of two outer photons; raw outcomes.
    virtual std::pair<bool, bool> bell_measure(PhotonRef left, PhotonRef right) = 0;
    /// Photon consumed by a failed BSM (Z-measured, outcome discarded).
    virtual void absorb(PhotonRef p) = 0;
    virtual bool measure(PhotonRef p, Basis basis) = 0;
};

/// Stage 1 coin flips: a BSM is attempted iff both outer photons arrived and
/// succeeds with probability `cap`.
std::vector<BsmStatus> bsm_attempts(const AbsaInputs &inputs, double cap, Rng &rng);

/// Runs the three stages at one ABSA.
AbsaReport run_absa(std::uint32_t index, const AbsaInputs &inputs, const RgsSpec &spec, double bsm_cap, Rng &rng,
                    PhotonBackend &backend);

struct EndRecord {
    std::optional<std::uint32_t> kept_memory;
    /// Z outcome of each memory that was not kept.
    std::vector<std::optional<bool>> memory_outcomes;

    std::uint64_t local_bits() const;
};

struct ExactFinal {
    GraphState graph;
    VertexId left = 0;
    VertexId right = 0;
};

struct TrialOutcome {
    bool success = false;
    std::vector<AbsaReport> reports;
    std::array<EndRecord, 2> ends;
    std::optional<ExactFinal> exact;
};

enum class SimMode : std::uint8_t { Accounting, Exact };

const char *mode_name(SimMode mode);
SimMode parse_mode(const std::string &text);

/// One attempt in accounting mode (no graph engine).
TrialOutcome run_attempt_accounting(const ChainConfig &config, const ChainTopology &topology, Rng &rng);

/// One attempt on the exact graph engine. All photons and non-kept memories
/// are measured; lost photons are traced out with a Z measurement whose
/// outcome is not reported. On success `exact` holds the two kept memories.
/// `adjust` may edit the sampled VOPs and arrivals before anything is built.
using InputsHook = std::function<void(std::vector<AbsaInputs> &)>;
TrialOutcome run_attempt_exact(const ChainConfig &config, const ChainTopology &topology, Rng &rng,
                               OutcomeSource &outcomes, const InputsHook &adjust = {});

TrialOutcome run_attempt(const ChainConfig &config, const ChainTopology &topology, Rng &rng, SimMode mode);

}  // namespace rgsim

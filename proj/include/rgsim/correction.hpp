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
#include <string>
#include <vector>

#include "rgsim/pauli_frame.hpp"
#include "rgsim/protocol.hpp"

namespace rgsim {

/// The two bits an ABSA forwards: the Z-correction parity owed by the left
/// end node and by the right end node on account of this ABSA.
struct TwoBitSummary {
    bool x_outcome_left = false;
    bool x_outcome_right = false;

    friend bool operator==(const TwoBitSummary &, const TwoBitSummary &) = default;
};

/// Thrown when a correction is requested for an attempt that did not succeed.
class FailedAttempt : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Reduction done at the ABSA from its own in-flight decisions.
TwoBitSummary reduce_absa(const AbsaReport &report);

/// End nodes decode every raw photon record of the chain themselves.
PauliFrame correction_one_stage(const std::vector<AbsaReport> &reports);

/// End nodes only combine the per-ABSA summaries. Memories that were not
/// kept leave no byproduct on the kept ones, so `ends` enters only through
/// the validity check.
PauliFrame correction_two_stage(const std::vector<TwoBitSummary> &summaries, const std::array<EndRecord, 2> &ends);

enum class CorrectionMethod : std::uint8_t { OneStage, TwoStage };

const char *method_name(CorrectionMethod method);

struct NodeBits {
    std::string node;
    std::uint64_t bits_received = 0;
    std::uint64_t bits_processed = 0;
    std::uint64_t bits_sent = 0;
};

/// Nodes in chain order: end_left, absa_0 .. absa_N, end_right.
struct CommsLedger {
    CorrectionMethod method = CorrectionMethod::OneStage;
    std::vector<NodeBits> nodes;

    const NodeBits &end(EndNode e) const { return e == EndNode::Left ? nodes.front() : nodes.back(); }
    const NodeBits &absa(std::size_t j) const { return nodes.at(1 + j); }
    std::size_t absa_count() const { return nodes.size() - 2; }
};

/// OneStage: every ABSA forwards 2 bits per measured photon to both end
/// nodes, which process them together with their local memory bits.
/// TwoStage: every ABSA processes 2 bits per photon slot it serves (outcome
/// or loss flag, plus VOP) and sends the 2-bit summary; end nodes process
/// 2 bits per ABSA plus local bits.
CommsLedger comms_ledger(const TrialOutcome &trial, CorrectionMethod method);

}  // namespace rgsim

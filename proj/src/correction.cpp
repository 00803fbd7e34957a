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

#include "rgsim/correction.hpp"

#include <stdexcept>

namespace rgsim {

namespace {

// Graph-level X outcome of the kept outer photon on one input.
bool kept_outer_bit(const AbsaReport &r, int input, std::uint32_t arm) {
    const auto &half = r.inputs[input];
    const std::size_t s = half.slot(arm, 0);
    return r.outcomes[input][s] != half.vop_z[s];
}

LogicalResult decode_tree(const AbsaReport &r, const TreeShape &shape, int input, std::uint32_t arm,
                          Basis logical) {
    const auto &half = r.inputs[input];
    std::vector<bool> arrived(shape.size());
    std::vector<bool> outcomes(shape.size());
    std::vector<bool> vop(shape.size());
    for (std::size_t k = 0; k < shape.size(); ++k) {
        const std::size_t s = half.slot(arm, 1 + k);
        arrived[k] = half.arrived[s];
        outcomes[k] = r.outcomes[input][s];
        vop[k] = half.vop_z[s];
    }
    return decode_logical(shape, logical, arrived, outcomes, vop);
}

[[noreturn]] void fail(const AbsaReport &r, const std::string &why) {
    throw FailedAttempt("ABSA " + std::to_string(r.index) + ": " + why);
}

PauliFrame frame_from(bool left, bool right) {
    PauliFrame f;
    if (left) {
        f.apply(EndNode::Left, Pauli::Z);
    }
    if (right) {
        f.apply(EndNode::Right, Pauli::Z);
    }
    return f;
}

}  // namespace

TwoBitSummary reduce_absa(const AbsaReport &r) {
    if (!r.success || !r.kept_arm) {
        fail(r, "attempt did not succeed");
    }
    bool pruned = false;
    for (const auto &t : r.z_logical) {
        pruned = pruned != t.result.outcome;
    }
    TwoBitSummary out;
    out.x_outcome_left = kept_outer_bit(r, 1, *r.kept_arm) != pruned;
    out.x_outcome_right = kept_outer_bit(r, 0, *r.kept_arm) != pruned;
    if (r.x_logical[0]) {
        out.x_outcome_left = out.x_outcome_left != r.x_logical[0]->outcome;
    }
    if (r.x_logical[1]) {
        out.x_outcome_right = out.x_outcome_right != r.x_logical[1]->outcome;
    }
    return out;
}

PauliFrame correction_one_stage(const std::vector<AbsaReport> &reports) {
    if (reports.empty()) {
        throw std::invalid_argument("no ABSA reports");
    }
    // Chain-wide parities, re-derived from raw records: BSM bits seen from
    // each side, logical X of kept trees per side, and logical Z of all pruned
    // trees (which reaches both ends).
    bool left = false;
    bool right = false;
    bool pruned = false;
    for (const auto &r : reports) {
        std::optional<std::uint32_t> kept;
        for (std::uint32_t arm = 0; arm < r.bsm.size() && !kept; ++arm) {
            if (r.bsm[arm].status == BsmStatus::Success) {
                kept = arm;
            }
        }
        if (!kept) {
            fail(r, "no successful BSM");
        }
        left = left != kept_outer_bit(r, 1, *kept);
        right = right != kept_outer_bit(r, 0, *kept);
        const TreeShape shape(r.branching);
        for (int h = 0; h < 2; ++h) {
            if (r.inputs[h].kind != SourceKind::Rgss) {
                continue;
            }
            for (std::uint32_t arm = 0; arm < r.inputs[h].m; ++arm) {
                const Basis logical = arm == *kept ? Basis::X : Basis::Z;
                auto res = decode_tree(r, shape, h, arm, logical);
                if (!res.success) {
                    fail(r, std::string("logical ") + basis_char(logical) + " failed");
                }
                if (logical == Basis::Z) {
                    pruned = pruned != res.outcome;
                } else if (h == 0) {
                    left = left != res.outcome;
                } else {
                    right = right != res.outcome;
                }
            }
        }
    }
    return frame_from(left != pruned, right != pruned);
}

PauliFrame correction_two_stage(const std::vector<TwoBitSummary> &summaries, const std::array<EndRecord, 2> &ends) {
    if (summaries.empty()) {
        throw std::invalid_argument("no ABSA summaries");
    }
    if (!ends[0].kept_memory || !ends[1].kept_memory) {
        throw FailedAttempt("an end node holds no kept memory");
    }
    bool left = false;
    bool right = false;
    for (const auto &s : summaries) {
        left = left != s.x_outcome_left;
        right = right != s.x_outcome_right;
    }
    return frame_from(left, right);
}

const char *method_name(CorrectionMethod method) {
    return method == CorrectionMethod::OneStage ? "one_stage" : "two_stage";
}

CommsLedger comms_ledger(const TrialOutcome &trial, CorrectionMethod method) {
    CommsLedger ledger;
    ledger.method = method;
    const std::uint64_t absas = trial.reports.size();
    std::uint64_t forwarded = 0;
    std::vector<NodeBits> absa_nodes;
    for (const auto &r : trial.reports) {
        NodeBits n;
        n.node = "absa_" + std::to_string(r.index);
        if (method == CorrectionMethod::OneStage) {
            const std::uint64_t bits = r.outcome_bits() + r.vop_bits();
            n.bits_sent = 2 * bits;  // to both end nodes
            forwarded += bits;
        } else {
            n.bits_received = r.photon_slots();  // VOP bits from the sources
            n.bits_processed = 2 * r.photon_slots();
            n.bits_sent = 2;
        }
        absa_nodes.push_back(std::move(n));
    }
    auto end_node = [&](int side) {
        NodeBits n;
        n.node = side == 0 ? "end_left" : "end_right";
        n.bits_received = method == CorrectionMethod::OneStage ? forwarded : 2 * absas;
        n.bits_processed = n.bits_received + trial.ends[side].local_bits();
        return n;
    };
    ledger.nodes.push_back(end_node(0));
    ledger.nodes.insert(ledger.nodes.end(), absa_nodes.begin(), absa_nodes.end());
    ledger.nodes.push_back(end_node(1));
    return ledger;
}

}  // namespace rgsim

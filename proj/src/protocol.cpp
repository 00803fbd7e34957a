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

#include "rgsim/protocol.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace rgsim {

bool EnumeratedOutcomes::next(std::optional<bool> forced) {
    if (forced) {
        return *forced;
    }
    if (pos_ == path_.size()) {
        path_.push_back(false);
    }
    return path_[pos_++];
}

bool EnumeratedOutcomes::advance() {
    path_.resize(pos_);
    pos_ = 0;
    while (!path_.empty() && path_.back()) {
        path_.pop_back();
    }
    if (path_.empty()) {
        return false;
    }
    path_.back() = true;
    return true;
}

std::uint64_t AbsaReport::measured_photons() const {
    std::uint64_t n = 0;
    for (const auto &b : bsm) {
        n += b.status == BsmStatus::Success ? 2 : 0;
    }
    for (const auto &half : inputs) {
        if (half.kind != SourceKind::Rgss) {
            continue;
        }
        for (std::size_t s = 0; s < half.slots(); ++s) {
            n += (s % half.stride != 0 && half.arrived[s]) ? 1 : 0;
        }
    }
    return n;
}

std::uint64_t EndRecord::local_bits() const {
    std::uint64_t n = 0;
    for (const auto &o : memory_outcomes) {
        n += o ? 2 : 0;
    }
    return n;
}

const char *mode_name(SimMode mode) { return mode == SimMode::Exact ? "exact" : "accounting"; }

SimMode parse_mode(const std::string &text) {
    if (text == "exact") {
        return SimMode::Exact;
    }
    if (text == "accounting") {
        return SimMode::Accounting;
    }
    throw std::invalid_argument("unknown mode '" + text + "' (expected exact or accounting)");
}

std::vector<BsmStatus> bsm_attempts(const AbsaInputs &inputs, double cap, Rng &rng) {
    const std::uint32_t m = inputs[0].m;
    if (inputs[1].m != m) {
        throw std::invalid_argument("ABSA inputs disagree on the arm count");
    }
    std::vector<BsmStatus> out(m, BsmStatus::Lost);
    for (std::uint32_t arm = 0; arm < m; ++arm) {
        if (inputs[0].arrived[inputs[0].slot(arm, 0)] && inputs[1].arrived[inputs[1].slot(arm, 0)]) {
            out[arm] = rng.bernoulli(cap) ? BsmStatus::Success : BsmStatus::Failed;
        }
    }
    return out;
}

AbsaReport run_absa(std::uint32_t index, const AbsaInputs &inputs, const RgsSpec &spec, double bsm_cap, Rng &rng,
                    PhotonBackend &backend) {
    AbsaReport r;
    r.index = index;
    r.branching = spec.branching;
    r.inputs = inputs;
    for (int h = 0; h < 2; ++h) {
        r.outcomes[h].assign(inputs[h].slots(), false);
    }
    const TreeShape shape(spec.branching);
    const std::uint32_t m = inputs[0].m;

    // Stage 1: BSMs on outer photons.
    auto status = bsm_attempts(inputs, bsm_cap, rng);
    for (std::uint32_t arm = 0; arm < m; ++arm) {
        BsmRecord rec{status[arm]};
        PhotonRef left{index, 0, inputs[0].slot(arm, 0)};
        PhotonRef right{index, 1, inputs[1].slot(arm, 0)};
        if (rec.status == BsmStatus::Success) {
            std::tie(rec.outcome_left, rec.outcome_right) = backend.bell_measure(left, right);
            r.outcomes[0][left.slot] = rec.outcome_left;
            r.outcomes[1][right.slot] = rec.outcome_right;
            if (!r.kept_arm) {
                r.kept_arm = arm;
            }
        } else {
            for (const auto &p : {left, right}) {
                if (inputs[p.input].arrived[p.slot]) {
                    backend.absorb(p);
                }
            }
        }
        r.bsm.push_back(rec);
    }

    auto measure_tree = [&](std::uint8_t h, std::uint32_t arm, Basis logical) {
        const auto &half = inputs[h];
        std::vector<bool> arrived(shape.size());
        std::vector<bool> outcomes(shape.size(), false);
        std::vector<bool> vop(shape.size());
        for (std::size_t k = 0; k < shape.size(); ++k) {
            const std::size_t s = half.slot(arm, 1 + k);
            arrived[k] = half.arrived[s];
            vop[k] = half.vop_z[s];
            if (arrived[k]) {
                outcomes[k] = backend.measure({index, h, s}, pattern_basis(logical, shape.level(k)));
                r.outcomes[h][s] = outcomes[k];
            }
        }
        return decode_logical(shape, logical, arrived, outcomes, vop);
    };

    // Stage 2: logical Z on every tree not in the kept arm.
    bool ok = r.kept_arm.has_value();
    for (std::uint8_t h = 0; h < 2; ++h) {
        if (inputs[h].kind != SourceKind::Rgss) {
            continue;
        }
        for (std::uint32_t arm = 0; arm < m; ++arm) {
            if (r.kept_arm && arm == *r.kept_arm) {
                continue;
            }
            TreeRecord t{h, arm, Basis::Z, measure_tree(h, arm, Basis::Z)};
            ok = ok && t.result.success;
            r.z_logical.push_back(t);
        }
    }
    // Stage 3: logical X on the kept trees.
    if (r.kept_arm) {
        for (std::uint8_t h = 0; h < 2; ++h) {
            if (inputs[h].kind == SourceKind::Rgss) {
                r.x_logical[h] = measure_tree(h, *r.kept_arm, Basis::X);
                ok = ok && r.x_logical[h]->success;
            }
        }
    }
    r.success = ok;
    return r;
}

namespace {

class AccountingBackend final : public PhotonBackend {
   public:
    explicit AccountingBackend(Rng &rng) : rng_(rng) {}
    std::pair<bool, bool> bell_measure(PhotonRef, PhotonRef) override {
        bool a = rng_.bit();
        return {a, rng_.bit()};
    }
    void absorb(PhotonRef) override {}
    bool measure(PhotonRef, Basis) override { return rng_.bit(); }

   private:
    Rng &rng_;
};

class GraphBackend final : public PhotonBackend {
   public:
    GraphBackend(GraphState &graph, OutcomeSource &source, const std::vector<std::array<std::vector<VertexId>, 2>> &ids)
        : g_(graph), src_(source), ids_(ids) {}

    std::pair<bool, bool> bell_measure(PhotonRef left, PhotonRef right) override {
        VertexId u = id(left);
        VertexId v = id(right);
        g_.apply_cz(u, v);
        bool a = src_.next(g_.forced_outcome(u, Basis::X));
        bool b = src_.next(g_.forced_outcome(v, Basis::X));
        g_.measure_xx(u, v, a, b);
        return {a, b};
    }
    void absorb(PhotonRef p) override { measure(p, Basis::Z); }
    bool measure(PhotonRef p, Basis basis) override {
        VertexId v = id(p);
        bool s = src_.next(g_.forced_outcome(v, basis));
        g_.measure(v, basis, s);
        return s;
    }

   private:
    VertexId id(PhotonRef p) const { return ids_[p.absa][p.input][p.slot]; }

    GraphState &g_;
    OutcomeSource &src_;
    const std::vector<std::array<std::vector<VertexId>, 2>> &ids_;
};

void finish_ends(TrialOutcome &out, std::uint32_t m, const std::function<bool(int side, std::uint32_t arm)> &measure) {
    const auto &first = out.reports.front();
    const auto &last = out.reports.back();
    out.ends[0].kept_memory = first.kept_arm;
    out.ends[1].kept_memory = last.kept_arm;
    for (int side = 0; side < 2; ++side) {
        auto &e = out.ends[side];
        e.memory_outcomes.assign(m, std::nullopt);
        for (std::uint32_t arm = 0; arm < m; ++arm) {
            if (!e.kept_memory || arm != *e.kept_memory) {
                e.memory_outcomes[arm] = measure(side, arm);
            }
        }
    }
}

bool all_success(const TrialOutcome &out) {
    for (const auto &r : out.reports) {
        if (!r.success) {
            return false;
        }
    }
    return true;
}

}  // namespace

TrialOutcome run_attempt_accounting(const ChainConfig &config, const ChainTopology &topology, Rng &rng) {
    auto inputs = sample_arrivals(topology, config, rng);
    AccountingBackend backend(rng);
    TrialOutcome out;
    out.reports.reserve(inputs.size());
    for (std::uint32_t j = 0; j < inputs.size(); ++j) {
        out.reports.push_back(run_absa(j, inputs[j], config.rgs, config.bsm_success_cap, rng, backend));
    }
    finish_ends(out, config.rgs.m, [&](int, std::uint32_t) { return rng.bit(); });
    out.success = all_success(out);
    return out;
}

TrialOutcome run_attempt_exact(const ChainConfig &config, const ChainTopology &topology, Rng &rng,
                               OutcomeSource &outcomes, const InputsHook &adjust) {
    constexpr std::uint64_t kMaxVertices = 200000;
    const auto &spec = config.rgs;
    const std::uint64_t total = photons_per_rgs(spec) * topology.rgss_count() + 4ULL * spec.m;
    if (total > kMaxVertices) {
        throw std::invalid_argument("exact mode limited to " + std::to_string(kMaxVertices) + " qubits, config needs " +
                                    std::to_string(total));
    }
    auto inputs = sample_arrivals(topology, config, rng);
    if (adjust) {
        adjust(inputs);
    }
    const std::size_t absas = inputs.size();

    GraphState g;
    std::vector<std::array<std::vector<VertexId>, 2>> ids(absas);
    std::array<std::vector<VertexId>, 2> memories;
    auto add_end = [&](int side, std::vector<VertexId> &photons) {
        for (std::uint32_t arm = 0; arm < spec.m; ++arm) {
            VertexId q = g.add_vertex();
            VertexId p = g.add_vertex();
            g.add_edge(q, p);
            memories[side].push_back(q);
            photons.push_back(p);
        }
    };
    add_end(0, ids[0][0]);
    for (std::size_t s = 1; s < absas; ++s) {
        const auto &left = inputs[s - 1][1];
        const auto &right = inputs[s][0];
        std::vector<bool> vops(left.vop_z);
        vops.insert(vops.end(), right.vop_z.begin(), right.vop_z.end());
        auto layout = append_rgs(g, spec, vops);
        for (int side = 0; side < 2; ++side) {
            auto &dest = side == 0 ? ids[s - 1][1] : ids[s][0];
            for (std::uint32_t arm = 0; arm < spec.m; ++arm) {
                dest.push_back(layout.outer_vertex(static_cast<Side>(side), arm));
                auto tree = layout.tree_vertices(static_cast<Side>(side), arm);
                dest.insert(dest.end(), tree.begin(), tree.end());
            }
        }
    }
    add_end(1, ids[absas - 1][1]);

    GraphBackend backend(g, outcomes, ids);
    TrialOutcome out;
    for (std::uint32_t j = 0; j < absas; ++j) {
        out.reports.push_back(run_absa(j, inputs[j], spec, config.bsm_success_cap, rng, backend));
    }
    finish_ends(out, spec.m, [&](int side, std::uint32_t arm) {
        VertexId q = memories[side][arm];
        bool s = outcomes.next(g.forced_outcome(q, Basis::Z));
        g.measure_z(q, s);
        return s;
    });
    // Lost photons are traced out.
    for (std::uint32_t j = 0; j < absas; ++j) {
        for (int h = 0; h < 2; ++h) {
            for (std::size_t s = 0; s < inputs[j][h].slots(); ++s) {
                VertexId v = ids[j][h][s];
                if (g.contains(v)) {
                    g.measure_z(v, outcomes.next(g.forced_outcome(v, Basis::Z)));
                }
            }
        }
    }
    out.success = all_success(out);
    if (out.success) {
        out.exact = ExactFinal{std::move(g), memories[0][*out.ends[0].kept_memory],
                               memories[1][*out.ends[1].kept_memory]};
    }
    return out;
}

TrialOutcome run_attempt(const ChainConfig &config, const ChainTopology &topology, Rng &rng, SimMode mode) {
    if (mode == SimMode::Exact) {
        RandomOutcomes source(rng);
        return run_attempt_exact(config, topology, rng, source);
    }
    return run_attempt_accounting(config, topology, rng);
}

}  // namespace rgsim

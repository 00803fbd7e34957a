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

#include "rgsim/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "rgsim/dense_state.hpp"

namespace rgsim {
namespace {

constexpr double kFidelityTol = 1e-9;

class Checker {
   public:
    void record(bool ok, double fidelity, const std::function<std::string()> &describe) {
        ++report.branches;
        report.min_fidelity = std::min(report.min_fidelity, fidelity);
        if (!ok) {
            ++report.failures;
            if (report.notes.size() < 10) {
                report.notes.push_back(describe());
            }
        }
    }

    // Runs `op` on a copy of `g` and compares with the projected oracle state.
    // `expected` is empty when the oracle says the branch has probability 0.
    void compare(const GraphState &g, const std::optional<DenseState> &expected,
                 const std::function<void(GraphState &)> &op, const std::string &label) {
        GraphState after = g;
        bool threw_zero = false;
        try {
            op(after);
        } catch (const ZeroProbabilityBranch &) {
            threw_zero = true;
        }
        if (!expected) {
            record(threw_zero, 1.0, [&] { return label + ": engine accepted a zero-probability branch"; });
            return;
        }
        if (threw_zero) {
            record(false, 0.0, [&] { return label + ": engine rejected a possible branch"; });
            return;
        }
        auto actual = DenseState::from_graph(after);
        double f = actual.fidelity(*expected);
        record(f >= 1.0 - kFidelityTol, f, [&] {
            std::ostringstream out;
            out << label << ": fidelity " << f << "\n" << g.dump();
            return out.str();
        });
    }

    RuleCheckReport report;
};

std::optional<DenseState> project(const DenseState &psi, VertexId v, Pauli p, bool outcome) {
    try {
        return psi.project_pauli(v, p, outcome).first;
    } catch (const ZeroProbabilityBranch &) {
        return std::nullopt;
    }
}

void check_one(Checker &checker, const GraphState &g) {
    const auto psi = DenseState::from_graph(g);
    for (VertexId v : g.vertices()) {
        {
            GraphState after = g;
            after.local_complement(v);
            double f = DenseState::from_graph(after).fidelity(psi);
            checker.record(f >= 1.0 - kFidelityTol, f, [&] { return "local_complement " + std::to_string(v); });
        }
        for (bool outcome : {false, true}) {
            checker.compare(g, project(psi, v, Pauli::Z, outcome),
                            [&](GraphState &s) { s.measure_z(v, outcome); },
                            "measure_z " + std::to_string(v));
            auto expected_x = project(psi, v, Pauli::X, outcome);
            checker.compare(g, expected_x, [&](GraphState &s) { s.measure_x(v, outcome); },
                            "measure_x " + std::to_string(v));
            for (VertexId b : g.neighbors(v)) {
                checker.compare(g, expected_x, [&](GraphState &s) { s.measure_x(v, outcome, b); },
                                "measure_x " + std::to_string(v) + " via " + std::to_string(b));
            }
        }
        for (VertexId u : g.neighbors(v)) {
            if (u < v) {
                continue;
            }
            bool shared = std::any_of(g.neighbors(u).begin(), g.neighbors(u).end(),
                                      [&](VertexId w) { return w != v && g.neighbors(v).contains(w); });
            bool x_like = g.vop(u).conjugate_by_inverse(Pauli::X).pauli == Pauli::X &&
                          g.vop(v).conjugate_by_inverse(Pauli::X).pauli == Pauli::X;
            if (shared || !x_like) {
                continue;
            }
            for (int bits = 0; bits < 4; ++bits) {
                bool ou = bits & 1;
                bool ov = bits & 2;
                std::optional<DenseState> expected;
                if (auto first = project(psi, v, Pauli::X, ov)) {
                    expected = project(*first, u, Pauli::X, ou);
                }
                checker.compare(g, expected, [&](GraphState &s) { s.measure_xx(v, u, ov, ou); },
                                "measure_xx " + std::to_string(v) + "," + std::to_string(u));
            }
        }
    }
}

}  // namespace

RuleCheckReport check_graph_rules(std::size_t graph_count, std::uint64_t seed, std::size_t max_vertices) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(2, max_vertices));
    std::uniform_real_distribution<double> density(0.2, 0.8);
    std::bernoulli_distribution scramble(0.5);
    Checker checker;
    for (std::size_t t = 0; t < graph_count; ++t) {
        std::size_t n = size_dist(rng);
        GraphState g = random_graph(n, density(rng), rng);
        check_one(checker, g);
        if (scramble(rng)) {
            // Same state, general VOPs: exercises the byproduct algebra beyond {I, Z}.
            auto ids = g.vertices();
            std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
            for (int k = 0; k < 3; ++k) {
                g.local_complement(ids[pick(rng)]);
            }
            check_one(checker, g);
        }
        ++checker.report.graphs;
    }
    return checker.report;
}

}  // namespace rgsim

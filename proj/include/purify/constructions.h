// Copyright 2026 The purify Authors
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

#ifndef PURIFY_CONSTRUCTIONS_H
#define PURIFY_CONSTRUCTIONS_H

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "purify/circuit.h"
#include "purify/verifier.h"

namespace purify {

enum class Family {
    ThreeOneOne,
    FiveOneOne,
    SevenOneTwo,
    NineOneThree,
    FiveOneTwoA,
    FiveOneTwoB,
    EightTwoTwo,
    HammingSevenFourOne,
    Cycle,
    Path,
    TolerantCycle,
    TolerantPath,
    ExplicitOdd,
};

/// A circuit family with its size parameter (cycle/path length, or m for
/// ExplicitOdd). Written `three-one-one`, `cycle:10`, `explicit-odd:2`, ...
struct NamedFamily {
    Family family = Family::ThreeOneOne;
    uint32_t size = 0;

    /// Throws ContractError on unknown names or bad parameters.
    static NamedFamily parse(const std::string &text);
    std::string str() const;
    /// Whether the family takes a size parameter.
    bool sized() const;
    /// Nominal (n, k, e).
    PurificationParams params() const;
    void validate() const;
};

/// Every family name, in enumeration order (sized ones shown with ":k").
std::vector<std::string> family_names();

Circuit build_named(const NamedFamily &family);

/// The gate lists the named circuits are scheduled from, where one exists.
std::vector<Gate> hamming_legible_gates();

/// Feeds the single output of inners[j] into qubit j of `outer`.
///
/// Inner j occupies a contiguous block of qubits, blocks in order of j. The
/// inners run side by side from the first round, padded with idles to the
/// deepest one, then the rounds of the outer circuit follow on the inner
/// outputs. A 1-qubit identity circuit stands for a naive preparation.
Circuit compose(std::span<const Circuit> inners, const Circuit &outer);

struct Graph {
    uint32_t vertex_count = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;

    /// Throws ContractError on self loops, duplicate edges or bad vertices.
    void validate() const;

    static Graph path(uint32_t vertices);
    static Graph cycle(uint32_t vertices);
    static Graph complete(uint32_t vertices);
};

/// (r + s, s, 1) circuit of a graph with r vertices and s edges.
///
/// Paths 0-1-...-(k-1) and cycles 0-1-...-(k-1)-0, with edges listed in that
/// order, get the interleaved layout v0, e0, v1, e1, ... and hand scheduling:
/// all CNOTs e_i -> v_i, then all e_i -> v_{i+1}, then the Toffolis on even
/// edges, then odd edges (plus one more round for the closing edge of an odd
/// cycle). The tolerant variant adds Toffolis (e_{i-1}, e_i -> v_i) before the
/// correct stage, odd vertices first. Other graphs put vertex qubits first and
/// edge qubits after, colour edges greedily in input order and spend two CNOT
/// rounds and one Toffoli round per colour.
///
/// Throws ContractError when `tolerant` is set for a graph that is not a
/// path or cycle in the form above.
Circuit graph_circuit(const Graph &graph, bool tolerant);

/// Juxtaposes two circuits, identifying qubit a of c1 with qubit b of c2 for
/// every (a, b) in `shared`. The qubits of c1 keep their indices; the
/// remaining qubits of c2 follow in order. Gates run c1 then c2 and are
/// rescheduled greedily. Outputs are those of c1 followed by those of c2.
///
/// Throws ContractError when a shared qubit is an output of either circuit.
Circuit overlap(const Circuit &c1, const Circuit &c2, std::span<const std::pair<uint32_t, uint32_t>> shared);

}  // namespace purify

#endif

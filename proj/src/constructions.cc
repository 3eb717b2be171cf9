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

#include "purify/constructions.h"

#include <algorithm>
#include <array>
#include <set>

#include "purify/errors.h"

namespace purify {

namespace {

struct FamilyName {
    Family family;
    const char *name;
    bool sized;
};

constexpr std::array<FamilyName, 13> FAMILY_NAMES{{
    {Family::ThreeOneOne, "three-one-one", false},
    {Family::FiveOneOne, "five-one-one", false},
    {Family::SevenOneTwo, "seven-one-two", false},
    {Family::NineOneThree, "nine-one-three", false},
    {Family::FiveOneTwoA, "five-one-two-a", false},
    {Family::FiveOneTwoB, "five-one-two-b", false},
    {Family::EightTwoTwo, "eight-two-two", false},
    {Family::HammingSevenFourOne, "hamming-seven-four-one", false},
    {Family::Cycle, "cycle", true},
    {Family::Path, "path", true},
    {Family::TolerantCycle, "tolerant-cycle", true},
    {Family::TolerantPath, "tolerant-path", true},
    {Family::ExplicitOdd, "explicit-odd", true},
}};

const FamilyName &lookup(Family family) {
    for (const auto &f : FAMILY_NAMES) {
        if (f.family == family) {
            return f;
        }
    }
    throw ContractError("unknown family");
}

Gate cx(uint32_t c, uint32_t t) {
    return Gate::cnot(c, t);
}

Gate ccx(uint32_t c1, uint32_t c2, uint32_t t) {
    return Gate::toffoli(c1, c2, t);
}

std::vector<Gate> three_one_one_gates() {
    return {cx(0, 1), cx(0, 2), ccx(1, 2, 0)};
}

std::vector<Gate> five_one_two_a_gates() {
    return {ccx(0, 2, 4), ccx(0, 1, 3), cx(0, 2), cx(0, 1), ccx(1, 2, 0),
            ccx(3, 4, 0), ccx(0, 1, 3), ccx(0, 2, 4), ccx(3, 4, 0)};
}

std::vector<Gate> five_one_two_b_gates() {
    return {ccx(1, 2, 3), cx(0, 2),     cx(0, 1),     ccx(1, 2, 0), cx(0, 4),
            ccx(1, 3, 0), ccx(0, 4, 3), ccx(2, 4, 1), ccx(1, 3, 0)};
}

/// Two copies of the (5,1,2)a circuit sharing qubits 3 and 4. The second copy
/// maps 0, 1, 2 to 7, 5, 6 and starts marking the shared qubits before the
/// first copy's final three gates.
std::vector<Gate> eight_two_two_gates() {
    return {ccx(0, 2, 4), ccx(0, 1, 3), cx(0, 2),     cx(0, 1),     ccx(1, 2, 0), ccx(7, 6, 4),
            ccx(7, 5, 3), ccx(3, 4, 0), ccx(0, 1, 3), ccx(0, 2, 4), ccx(3, 4, 0), cx(7, 6),
            cx(7, 5),     ccx(5, 6, 7), ccx(3, 4, 7), ccx(7, 5, 3), ccx(7, 6, 4), ccx(3, 4, 7)};
}

/// Sorted list of all size-k subsets of {first, ..., last}.
std::vector<std::vector<uint32_t>> subsets(uint32_t first, uint32_t last, uint32_t k) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> pick;
    auto rec = [&](auto &&self, uint32_t next) -> void {
        if (pick.size() == k) {
            out.push_back(pick);
            return;
        }
        for (uint32_t q = next; q <= last; q++) {
            if (last - q + 1 < k - pick.size()) {
                break;
            }
            pick.push_back(q);
            self(self, q + 1);
            pick.pop_back();
        }
    };
    rec(rec, first);
    return out;
}

Circuit explicit_odd(uint32_t m) {
    uint32_t n = (uint32_t{1} << (m + 1)) - 1;
    uint32_t e = (uint32_t{1} << m) - 1;
    std::vector<Gate> gates;
    for (uint32_t q = 1; q < n; q++) {
        gates.push_back(cx(0, q));
    }
    for (auto &controls : subsets(1, n - 1, e + 1)) {
        gates.push_back(controls.size() == 2 ? ccx(controls[0], controls[1], 0) : Gate::mcx(controls, 0));
    }
    return schedule(gates, n, {0});
}

bool is_path_order(const Graph &g) {
    if (g.edges.size() + 1 != g.vertex_count) {
        return false;
    }
    for (uint32_t i = 0; i < g.edges.size(); i++) {
        if (g.edges[i] != std::make_pair(i, i + 1)) {
            return false;
        }
    }
    return true;
}

bool is_cycle_order(const Graph &g) {
    uint32_t k = g.vertex_count;
    if (k < 3 || g.edges.size() != k) {
        return false;
    }
    for (uint32_t i = 0; i + 1 < k; i++) {
        if (g.edges[i] != std::make_pair(i, i + 1)) {
            return false;
        }
    }
    const auto &last = g.edges.back();
    return last == std::make_pair(k - 1, 0u) || last == std::make_pair(0u, k - 1);
}

/// Hand-scheduled layout for paths and cycles; qubit 2i is vertex i, qubit
/// 2i + 1 is edge i = (i, i + 1 mod k).
Circuit ring_circuit(uint32_t k, bool closed, bool tolerant) {
    uint32_t edges = closed ? k : k - 1;
    uint32_t n = k + edges;
    auto v = [&](uint32_t i) { return 2 * (i % k); };
    auto e = [&](uint32_t i) { return 2 * i + 1; };

    Circuit c;
    c.num_qubits = n;
    for (uint32_t i = 0; i < edges; i++) {
        c.outputs.push_back(e(i));
    }
    std::vector<Gate> round;
    for (uint32_t i = 0; i < edges; i++) {
        round.push_back(cx(e(i), v(i)));
    }
    c.rounds.push_back(round);
    round.clear();
    for (uint32_t i = 0; i < edges; i++) {
        round.push_back(cx(e(i), v(i + 1)));
    }
    c.rounds.push_back(round);

    if (tolerant) {
        // Vertex i sits between edges i - 1 and i.
        std::vector<uint32_t> inner;
        for (uint32_t i = closed ? 0 : 1; i < (closed ? k : k - 1); i++) {
            inner.push_back(i);
        }
        auto mark = [&](uint32_t i) { return ccx(e((i + edges - 1) % edges), e(i), v(i)); };
        std::vector<Gate> odd, even, last;
        for (uint32_t i : inner) {
            if (closed && k % 2 == 1 && i == 0) {
                last.push_back(mark(i));
            } else if (i % 2 == 1) {
                odd.push_back(mark(i));
            } else {
                even.push_back(mark(i));
            }
        }
        for (auto *r : {&odd, &even, &last}) {
            if (!r->empty()) {
                c.rounds.push_back(*r);
            }
        }
    }

    std::vector<Gate> even, odd, last;
    for (uint32_t i = 0; i < edges; i++) {
        Gate g = ccx(v(i), v(i + 1), e(i));
        if (closed && k % 2 == 1 && i == k - 1) {
            last.push_back(g);
        } else if (i % 2 == 0) {
            even.push_back(g);
        } else {
            odd.push_back(g);
        }
    }
    for (auto *r : {&even, &odd, &last}) {
        if (!r->empty()) {
            c.rounds.push_back(*r);
        }
    }
    c = fill_idles(std::move(c));
    c.validate();
    return c;
}

/// Two CNOT rounds per colour, then one Toffoli round per colour.
Circuit colored_graph_circuit(const Graph &g) {
    uint32_t r = g.vertex_count;
    uint32_t n = r + static_cast<uint32_t>(g.edges.size());
    std::vector<uint32_t> color(g.edges.size());
    std::vector<std::set<uint32_t>> used(r);
    uint32_t colors = 0;
    for (size_t i = 0; i < g.edges.size(); i++) {
        auto [a, b] = g.edges[i];
        uint32_t c = 0;
        while (used[a].count(c) || used[b].count(c)) {
            c++;
        }
        color[i] = c;
        used[a].insert(c);
        used[b].insert(c);
        colors = std::max(colors, c + 1);
    }
    Circuit circuit;
    circuit.num_qubits = n;
    for (size_t i = 0; i < g.edges.size(); i++) {
        circuit.outputs.push_back(r + static_cast<uint32_t>(i));
    }
    for (uint32_t c = 0; c < colors; c++) {
        std::vector<Gate> first, second;
        for (size_t i = 0; i < g.edges.size(); i++) {
            if (color[i] == c) {
                uint32_t q = r + static_cast<uint32_t>(i);
                first.push_back(cx(q, g.edges[i].first));
                second.push_back(cx(q, g.edges[i].second));
            }
        }
        circuit.rounds.push_back(first);
        circuit.rounds.push_back(second);
    }
    for (uint32_t c = 0; c < colors; c++) {
        std::vector<Gate> round;
        for (size_t i = 0; i < g.edges.size(); i++) {
            if (color[i] == c) {
                round.push_back(ccx(g.edges[i].first, g.edges[i].second, r + static_cast<uint32_t>(i)));
            }
        }
        circuit.rounds.push_back(round);
    }
    circuit = fill_idles(std::move(circuit));
    circuit.validate();
    return circuit;
}

}  // namespace

NamedFamily NamedFamily::parse(const std::string &text) {
    std::string name = text;
    std::string arg;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        arg = text.substr(colon + 1);
    }
    for (const auto &f : FAMILY_NAMES) {
        if (name != f.name) {
            continue;
        }
        NamedFamily result{f.family, 0};
        if (f.sized) {
            if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 6) {
                throw ContractError("family '" + name + "' needs a size, e.g. " + name + ":10");
            }
            result.size = static_cast<uint32_t>(std::stoul(arg));
        } else if (!arg.empty()) {
            throw ContractError("family '" + name + "' takes no size");
        }
        result.validate();
        return result;
    }
    throw ContractError("unknown family '" + name + "'");
}

std::string NamedFamily::str() const {
    const FamilyName &f = lookup(family);
    return f.sized ? std::string(f.name) + ":" + std::to_string(size) : std::string(f.name);
}

bool NamedFamily::sized() const {
    return lookup(family).sized;
}

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto &f : FAMILY_NAMES) {
        out.push_back(f.sized ? std::string(f.name) + ":k" : std::string(f.name));
    }
    return out;
}

void NamedFamily::validate() const {
    switch (family) {
        case Family::Cycle:
        case Family::TolerantCycle:
            if (size < 3 || size > 32) {
                throw ContractError("cycles need 3 to 32 vertices");
            }
            break;
        case Family::Path:
        case Family::TolerantPath:
            if (size < 2 || size > 32) {
                throw ContractError("paths need 2 to 32 vertices");
            }
            break;
        case Family::ExplicitOdd:
            if (size < 1 || size > 4) {
                throw ContractError("explicit-odd needs 1 <= m <= 4");
            }
            break;
        default:
            break;
    }
}

PurificationParams NamedFamily::params() const {
    validate();
    switch (family) {
        case Family::ThreeOneOne:
            return {3, 1, 1};
        case Family::FiveOneOne:
            return {5, 1, 1};
        case Family::SevenOneTwo:
            return {7, 1, 2};
        case Family::NineOneThree:
            return {9, 1, 3};
        case Family::FiveOneTwoA:
        case Family::FiveOneTwoB:
            return {5, 1, 2};
        case Family::EightTwoTwo:
            return {8, 2, 2};
        case Family::HammingSevenFourOne:
            return {7, 4, 1};
        case Family::Cycle:
        case Family::TolerantCycle:
            return {2 * size, size, 1};
        case Family::Path:
        case Family::TolerantPath:
            return {2 * size - 1, size - 1, 1};
        case Family::ExplicitOdd:
            return {(uint32_t{1} << (size + 1)) - 1, 1, (uint32_t{1} << size) - 1};
    }
    throw ContractError("unknown family");
}

std::vector<Gate> hamming_legible_gates() {
    return {cx(0, 3), cx(0, 6), ccx(3, 6, 0), cx(1, 4), cx(1, 6), ccx(4, 6, 1),
            cx(2, 5), cx(2, 6), ccx(5, 6, 2), cx(3, 4), cx(3, 5), ccx(4, 5, 3)};
}

Circuit build_named(const NamedFamily &family) {
    family.validate();
    Circuit three = schedule(three_one_one_gates(), 3, {0});
    Circuit naive = identity_circuit();
    switch (family.family) {
        case Family::ThreeOneOne:
            return three;
        case Family::FiveOneOne: {
            std::vector<Circuit> inners{three, naive, naive};
            return compose(inners, three);
        }
        case Family::SevenOneTwo: {
            std::vector<Circuit> inners{three, three, naive};
            return compose(inners, three);
        }
        case Family::NineOneThree: {
            std::vector<Circuit> inners{three, three, three};
            return compose(inners, three);
        }
        case Family::FiveOneTwoA:
            return schedule(five_one_two_a_gates(), 5, {0});
        case Family::FiveOneTwoB:
            return schedule(five_one_two_b_gates(), 5, {0});
        case Family::EightTwoTwo:
            return schedule(eight_two_two_gates(), 8, {0, 7});
        case Family::HammingSevenFourOne:
            return schedule(hamming_legible_gates(), 7, {0, 1, 2, 3});
        case Family::Cycle:
            return ring_circuit(family.size, true, false);
        case Family::Path:
            return ring_circuit(family.size, false, false);
        case Family::TolerantCycle:
            return ring_circuit(family.size, true, true);
        case Family::TolerantPath:
            return ring_circuit(family.size, false, true);
        case Family::ExplicitOdd:
            return explicit_odd(family.size);
    }
    throw ContractError("unknown family");
}

Circuit compose(std::span<const Circuit> inners, const Circuit &outer) {
    outer.validate();
    if (inners.size() != outer.num_qubits) {
        throw ContractError("compose needs one inner circuit per outer qubit");
    }
    uint32_t total = 0;
    size_t depth = 0;
    std::vector<uint32_t> offset;
    for (const Circuit &inner : inners) {
        inner.validate();
        if (inner.outputs.size() != 1) {
            throw ContractError("each inner circuit must have exactly one output");
        }
        offset.push_back(total);
        total += inner.num_qubits;
        depth = std::max(depth, inner.depth());
    }
    if (total > MAX_QUBITS) {
        throw ContractError("composed circuit would exceed 64 qubits");
    }

    Circuit result;
    result.num_qubits = total;
    result.rounds.resize(depth);
    auto shift = [](Gate g, uint32_t by) {
        g.target += by;
        for (uint32_t &c : g.controls) {
            c += by;
        }
        return g;
    };
    for (size_t j = 0; j < inners.size(); j++) {
        for (size_t r = 0; r < inners[j].depth(); r++) {
            for (const Gate &g : inners[j].rounds[r]) {
                result.rounds[r].push_back(shift(g, offset[j]));
            }
        }
    }
    std::vector<uint32_t> wire(outer.num_qubits);
    for (size_t j = 0; j < inners.size(); j++) {
        wire[j] = offset[j] + inners[j].outputs[0];
    }
    for (const auto &round : outer.rounds) {
        std::vector<Gate> mapped;
        for (Gate g : round) {
            g.target = wire[g.target];
            for (uint32_t &c : g.controls) {
                c = wire[c];
            }
            mapped.push_back(std::move(g));
        }
        result.rounds.push_back(std::move(mapped));
    }
    for (uint32_t q : outer.outputs) {
        result.outputs.push_back(wire[q]);
    }
    // A composition of naive preparations has no gates at all.
    std::erase_if(result.rounds, [](const auto &round) { return round.empty(); });
    result = fill_idles(std::move(result));
    result.validate();
    return result;
}

void Graph::validate() const {
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw ContractError("edge endpoint out of range");
        }
        if (a == b) {
            throw ContractError("graphs may not have self loops");
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            throw ContractError("graphs may not have duplicate edges");
        }
    }
    if (vertex_count + edges.size() > MAX_QUBITS) {
        throw ContractError("graph circuit would exceed 64 qubits");
    }
}

Graph Graph::path(uint32_t vertices) {
    Graph g{vertices, {}};
    for (uint32_t i = 0; i + 1 < vertices; i++) {
        g.edges.emplace_back(i, i + 1);
    }
    return g;
}

Graph Graph::cycle(uint32_t vertices) {
    Graph g = path(vertices);
    g.edges.emplace_back(vertices - 1, 0);
    return g;
}

Graph Graph::complete(uint32_t vertices) {
    Graph g{vertices, {}};
    for (uint32_t a = 0; a < vertices; a++) {
        for (uint32_t b = a + 1; b < vertices; b++) {
            g.edges.emplace_back(a, b);
        }
    }
    return g;
}

Circuit graph_circuit(const Graph &graph, bool tolerant) {
    graph.validate();
    if (graph.edges.empty()) {
        throw ContractError("graph has no edges");
    }
    if (is_cycle_order(graph)) {
        return ring_circuit(graph.vertex_count, true, tolerant);
    }
    if (is_path_order(graph)) {
        return ring_circuit(graph.vertex_count, false, tolerant);
    }
    if (tolerant) {
        throw ContractError("the tolerant construction is defined only for paths and cycles");
    }
    return colored_graph_circuit(graph);
}

Circuit overlap(const Circuit &c1, const Circuit &c2, std::span<const std::pair<uint32_t, uint32_t>> shared) {
    c1.validate();
    c2.validate();
    std::vector<uint32_t> mapping(c2.num_qubits, UINT32_MAX);
    std::set<uint32_t> taken;
    for (auto [a, b] : shared) {
        if (a >= c1.num_qubits || b >= c2.num_qubits) {
            throw ContractError("shared qubit out of range");
        }
        bool output1 = std::find(c1.outputs.begin(), c1.outputs.end(), a) != c1.outputs.end();
        bool output2 = std::find(c2.outputs.begin(), c2.outputs.end(), b) != c2.outputs.end();
        if (output1 || output2) {
            throw ContractError("shared qubits must be auxiliary in both circuits");
        }
        if (mapping[b] != UINT32_MAX || !taken.insert(a).second) {
            throw ContractError("each qubit may be shared once");
        }
        mapping[b] = a;
    }
    uint32_t next = c1.num_qubits;
    for (uint32_t q = 0; q < c2.num_qubits; q++) {
        if (mapping[q] == UINT32_MAX) {
            mapping[q] = next++;
        }
    }
    if (next > MAX_QUBITS) {
        throw ContractError("overlapped circuit would exceed 64 qubits");
    }
    std::vector<Gate> gates = c1.flat_gates();
    for (Gate g : c2.flat_gates()) {
        g.target = mapping[g.target];
        for (uint32_t &c : g.controls) {
            c = mapping[c];
        }
        gates.push_back(std::move(g));
    }
    std::vector<uint32_t> outputs = c1.outputs;
    for (uint32_t q : c2.outputs) {
        outputs.push_back(mapping[q]);
    }
    return schedule(gates, next, outputs);
}

}  // namespace purify

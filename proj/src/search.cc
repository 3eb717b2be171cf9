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

#include "purify/search.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

#include "purify/errors.h"
#include "purify/parallel.h"

namespace purify {

namespace {

using Count = unsigned __int128;

struct Node {
    uint32_t depth = 0;
    Count count = 0;
    StateSet parent = 0;
    uint32_t gate = 0;
};

using Visited = std::unordered_map<StateSet, Node>;

Count checked_add(Count a, Count b) {
    Count r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ResourceError("minimal circuit count overflowed 128 bits");
    }
    return r;
}

Count checked_mul(Count a, Count b) {
    Count r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceError("minimal circuit count overflowed 128 bits");
    }
    return r;
}

std::string to_decimal(Count value) {
    if (value == 0) {
        return "0";
    }
    std::string digits;
    while (value) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

/// Merges a freshly discovered child into a layer map. The recorded parent
/// edge is the least (parent, gate) pair so the result does not depend on
/// discovery order.
void record(Visited &layer, StateSet child, StateSet parent, uint32_t gate, Count count, uint32_t depth) {
    auto [it, inserted] = layer.try_emplace(child, Node{depth, count, parent, gate});
    if (!inserted) {
        Node &node = it->second;
        node.count = checked_add(node.count, count);
        if (std::tie(parent, gate) < std::tie(node.parent, node.gate)) {
            node.parent = parent;
            node.gate = gate;
        }
    }
}

void expand_serial(
    const GateSet &gates, const std::vector<StateSet> &frontier, const Visited &visited, Visited &layer, uint32_t depth) {
    for (StateSet s : frontier) {
        const Count c = visited.at(s).count;
        for (uint32_t g = 0; g < gates.size(); g++) {
            StateSet child = gates.apply(g, s);
            if (!visited.contains(child)) {
                record(layer, child, s, g, c, depth);
            }
        }
    }
}

void expand_parallel(
    const GateSet &gates, const std::vector<StateSet> &frontier, const Visited &visited, Visited &layer, uint32_t depth) {
    int threads = thread_count();
    std::vector<Visited> partial(threads);
    int64_t size = static_cast<int64_t>(frontier.size());
#pragma omp parallel num_threads(threads)
    {
        Visited &mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
        for (int64_t i = 0; i < size; i++) {
            StateSet s = frontier[i];
            const Count c = visited.at(s).count;
            for (uint32_t g = 0; g < gates.size(); g++) {
                StateSet child = gates.apply(g, s);
                if (!visited.contains(child)) {
                    record(mine, child, s, g, c, depth);
                }
            }
        }
    }
    for (Visited &p : partial) {
        for (const auto &[child, node] : p) {
            record(layer, child, node.parent, node.gate, node.count, depth);
        }
    }
}

/// Grows one side by a layer. Returns the new frontier, sorted.
std::vector<StateSet> grow(
    const GateSet &gates, const std::vector<StateSet> &frontier, Visited &visited, uint32_t depth, bool parallel) {
    Visited layer;
    if (parallel) {
        expand_parallel(gates, frontier, visited, layer, depth);
    } else {
        expand_serial(gates, frontier, visited, layer, depth);
    }
    std::vector<StateSet> next;
    next.reserve(layer.size());
    for (const auto &[child, node] : layer) {
        next.push_back(child);
        visited.emplace(child, node);
    }
    std::sort(next.begin(), next.end());
    return next;
}

struct Enumerator {
    const GateSet &gates;
    const Visited &forward;
    const Visited &backward;
    size_t limit;
    std::vector<std::vector<Gate>> *out;

    // Gate ids from the start set to `s`, in execution order.
    void forward_paths(StateSet s, uint32_t depth, std::vector<uint32_t> &suffix, std::vector<std::vector<uint32_t>> &acc) {
        if (acc.size() >= limit) {
            return;
        }
        if (depth == 0) {
            acc.emplace_back(suffix.rbegin(), suffix.rend());
            return;
        }
        for (uint32_t g = 0; g < gates.size(); g++) {
            StateSet p = gates.apply(g, s);
            auto it = forward.find(p);
            if (it != forward.end() && it->second.depth == depth - 1) {
                suffix.push_back(g);
                forward_paths(p, depth - 1, suffix, acc);
                suffix.pop_back();
            }
        }
    }

    // Gate ids from `s` to a target seed, in execution order.
    void backward_paths(StateSet s, uint32_t depth, std::vector<uint32_t> &prefix, std::vector<std::vector<uint32_t>> &acc) {
        if (acc.size() >= limit) {
            return;
        }
        if (depth == 0) {
            acc.push_back(prefix);
            return;
        }
        for (uint32_t g = 0; g < gates.size(); g++) {
            StateSet q = gates.apply(g, s);
            auto it = backward.find(q);
            if (it != backward.end() && it->second.depth == depth - 1) {
                prefix.push_back(g);
                backward_paths(q, depth - 1, prefix, acc);
                prefix.pop_back();
            }
        }
    }
};

std::vector<Gate> to_gates(const GateSet &gates, const std::vector<uint32_t> &ids) {
    std::vector<Gate> result;
    for (uint32_t id : ids) {
        result.push_back(gates.gate(id));
    }
    return result;
}

std::vector<StateSet> backward_seeds(uint32_t n, StateSet target, uint64_t ball) {
    std::vector<uint32_t> states;
    for (uint32_t s = 0; s < (uint32_t{1} << n); s++) {
        if (target & (uint64_t{1} << s)) {
            states.push_back(s);
        }
    }
    std::vector<StateSet> seeds;
    if (ball == states.size()) {
        seeds.push_back(target);
        return seeds;
    }
    // Gosper's hack over index masks into `states`.
    uint64_t m = states.size();
    uint64_t pick = (uint64_t{1} << ball) - 1;
    while (pick < (uint64_t{1} << m)) {
        StateSet set = 0;
        for (uint64_t bits = pick; bits; bits &= bits - 1) {
            set |= uint64_t{1} << states[std::countr_zero(bits)];
        }
        seeds.push_back(set);
        uint64_t c = pick & (~pick + 1);
        uint64_t r = pick + c;
        pick = (((r ^ pick) >> 2) / c) | r;
    }
    std::sort(seeds.begin(), seeds.end());
    return seeds;
}

}  // namespace

GateSet::GateSet(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > MAX_SEARCH_QUBITS) {
        throw ResourceError("set-of-states search is limited to " + std::to_string(MAX_SEARCH_QUBITS) + " qubits");
    }
    for (uint32_t c = 0; c < num_qubits; c++) {
        for (uint32_t t = 0; t < num_qubits; t++) {
            if (c != t) {
                gates_.push_back(Gate::cnot(c, t));
            }
        }
    }
    for (uint32_t c1 = 0; c1 < num_qubits; c1++) {
        for (uint32_t c2 = c1 + 1; c2 < num_qubits; c2++) {
            for (uint32_t t = 0; t < num_qubits; t++) {
                if (t != c1 && t != c2) {
                    gates_.push_back(Gate::toffoli(c1, c2, t));
                }
            }
        }
    }
    uint32_t states = uint32_t{1} << num_qubits;
    for (const Gate &g : gates_) {
        Move m{0, 0, uint32_t{1} << g.target};
        uint64_t cm = g.control_mask();
        for (uint32_t s = 0; s < states; s++) {
            bool fires = (s & cm) == cm;
            if (!fires) {
                m.stay |= uint64_t{1} << s;
            } else if (!((s >> g.target) & 1)) {
                m.low |= uint64_t{1} << s;
            }
        }
        moves_.push_back(m);
    }
}

size_t GateSet::index_of(const Gate &g) const {
    Gate normal = g;
    if (normal.kind == GateKind::Toffoli && normal.controls[0] > normal.controls[1]) {
        std::swap(normal.controls[0], normal.controls[1]);
    }
    for (size_t i = 0; i < gates_.size(); i++) {
        if (gates_[i] == normal) {
            return i;
        }
    }
    throw ContractError("gate " + g.str() + " is not in the gate set");
}

StateSet ball_mask(uint32_t n, uint32_t e) {
    StateSet m = 0;
    for (uint32_t s = 0; s < (uint32_t{1} << n); s++) {
        if (static_cast<uint32_t>(std::popcount(s)) <= e) {
            m |= uint64_t{1} << s;
        }
    }
    return m;
}

StateSet vanishing_mask(uint32_t n, const std::vector<uint32_t> &wires) {
    uint32_t wm = 0;
    for (uint32_t w : wires) {
        wm |= uint32_t{1} << w;
    }
    StateSet m = 0;
    for (uint32_t s = 0; s < (uint32_t{1} << n); s++) {
        if ((s & wm) == 0) {
            m |= uint64_t{1} << s;
        }
    }
    return m;
}

SearchOutcome meet_in_middle(const PurificationParams &params, const SearchOptions &options) {
    params.validate();
    if (params.n > MAX_SEARCH_QUBITS) {
        throw ResourceError("set-of-states search is limited to " + std::to_string(MAX_SEARCH_QUBITS) + " qubits");
    }
    if (!feasible(params)) {
        throw ContractError("parameters violate the counting bound; no purification circuit exists");
    }
    if (options.output_wire + params.k > params.n) {
        throw ContractError("output wires run past the last qubit");
    }

    SearchOutcome outcome;
    for (uint32_t i = 0; i < params.k; i++) {
        outcome.outputs.push_back(options.output_wire + i);
    }
    GateSet gates(params.n);
    const StateSet start = ball_mask(params.n, params.e);
    const StateSet target = vanishing_mask(params.n, outcome.outputs);
    const uint64_t ball = static_cast<uint64_t>(std::popcount(start));
    const uint64_t room = static_cast<uint64_t>(std::popcount(target));

    uint64_t seed_count = binomial(room, ball);
    bool bidirectional = seed_count <= MAX_BACKWARD_SEEDS;
    outcome.stats.bidirectional = bidirectional;

    Visited forward;
    Visited backward;
    forward.emplace(start, Node{0, 1, start, 0});
    std::vector<StateSet> f_front{start};
    std::vector<StateSet> b_front;
    if (bidirectional) {
        b_front = backward_seeds(params.n, target, ball);
        for (StateSet s : b_front) {
            backward.emplace(s, Node{0, 1, s, 0});
        }
        outcome.stats.backward_seeds = b_front.size();
    }

    auto in_target = [&](StateSet s) {
        if (bidirectional) {
            auto it = backward.find(s);
            return it != backward.end();
        }
        return (s & ~target) == 0;
    };

    uint32_t f_depth = 0;
    uint32_t b_depth = 0;
    std::vector<StateSet> meeting;
    if (in_target(start)) {
        meeting.push_back(start);
    }
    while (meeting.empty()) {
        if (f_depth + b_depth >= options.max_length || f_front.empty() || (bidirectional && b_front.empty())) {
            break;
        }
        bool grow_forward = !bidirectional || f_front.size() <= b_front.size();
        if (grow_forward) {
            f_depth++;
            f_front = grow(gates, f_front, forward, f_depth, options.parallel);
            for (StateSet s : f_front) {
                if (in_target(s)) {
                    meeting.push_back(s);
                }
            }
        } else {
            b_depth++;
            b_front = grow(gates, b_front, backward, b_depth, options.parallel);
            for (StateSet s : b_front) {
                if (forward.contains(s)) {
                    meeting.push_back(s);
                }
            }
        }
        if (forward.size() + backward.size() > MAX_VISITED_SETS) {
            throw ResourceError("search exceeded " + std::to_string(MAX_VISITED_SETS) + " visited sets");
        }
    }
    outcome.stats.forward_sets = forward.size();
    outcome.stats.backward_sets = backward.size();
    if (meeting.empty()) {
        return outcome;
    }
    std::sort(meeting.begin(), meeting.end());

    outcome.found = true;
    Count total = 0;
    for (StateSet s : meeting) {
        Count fc = forward.at(s).count;
        Count bc = bidirectional ? backward.at(s).count : 1;
        total = checked_add(total, checked_mul(fc, bc));
    }
    outcome.count = to_decimal(total);

    // Depths of the meeting sets on each side.
    uint32_t fd = forward.at(meeting.front()).depth;
    uint32_t bd = bidirectional ? backward.at(meeting.front()).depth : 0;
    outcome.min_length = fd + bd;

    if (options.enumerate_all) {
        Enumerator en{gates, forward, backward, options.max_listed, &outcome.circuits};
        for (StateSet s : meeting) {
            std::vector<std::vector<uint32_t>> heads;
            std::vector<uint32_t> scratch;
            en.forward_paths(s, fd, scratch, heads);
            std::vector<std::vector<uint32_t>> tails;
            if (bidirectional) {
                en.backward_paths(s, bd, scratch, tails);
            } else {
                tails.emplace_back();
            }
            for (const auto &h : heads) {
                for (const auto &t : tails) {
                    if (outcome.circuits.size() >= options.max_listed) {
                        break;
                    }
                    std::vector<uint32_t> ids = h;
                    ids.insert(ids.end(), t.begin(), t.end());
                    outcome.circuits.push_back(to_gates(gates, ids));
                }
            }
        }
    } else {
        StateSet s = meeting.front();
        std::vector<uint32_t> ids;
        for (StateSet cur = s; cur != start;) {
            const Node &node = forward.at(cur);
            ids.push_back(node.gate);
            cur = node.parent;
        }
        std::reverse(ids.begin(), ids.end());
        if (bidirectional) {
            for (StateSet cur = s; backward.at(cur).depth > 0;) {
                const Node &node = backward.at(cur);
                ids.push_back(node.gate);
                cur = node.parent;
            }
        }
        outcome.circuits.push_back(to_gates(gates, ids));
    }
    return outcome;
}

std::vector<EquivalenceClass> classify_minimal(const SearchOutcome &outcome, uint32_t num_qubits) {
    const auto &circuits = outcome.circuits;
    GateSet gates(num_qubits);
    auto key_of = [&](const std::vector<Gate> &seq) {
        std::vector<uint32_t> ids;
        for (const Gate &g : seq) {
            ids.push_back(static_cast<uint32_t>(gates.index_of(g)));
        }
        return ids;
    };
    std::map<std::vector<uint32_t>, size_t> index;
    std::vector<std::vector<uint32_t>> keys;
    for (size_t i = 0; i < circuits.size(); i++) {
        keys.push_back(key_of(circuits[i]));
        index.emplace(keys.back(), i);
    }

    std::vector<size_t> parent(circuits.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    };

    std::vector<uint32_t> free_wires;
    for (uint32_t q = 0; q < num_qubits; q++) {
        if (std::find(outcome.outputs.begin(), outcome.outputs.end(), q) == outcome.outputs.end()) {
            free_wires.push_back(q);
        }
    }
    std::vector<std::vector<uint32_t>> relabelings;
    std::vector<uint32_t> perm = free_wires;
    do {
        std::vector<uint32_t> mapping(num_qubits);
        std::iota(mapping.begin(), mapping.end(), 0);
        for (size_t i = 0; i < free_wires.size(); i++) {
            mapping[free_wires[i]] = perm[i];
        }
        relabelings.push_back(mapping);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (size_t i = 0; i < circuits.size(); i++) {
        const auto &seq = circuits[i];
        for (const auto &mapping : relabelings) {
            std::vector<uint32_t> ids;
            for (Gate g : seq) {
                g.target = mapping[g.target];
                for (uint32_t &c : g.controls) {
                    c = mapping[c];
                }
                ids.push_back(static_cast<uint32_t>(gates.index_of(g)));
            }
            if (auto it = index.find(ids); it != index.end()) {
                unite(i, it->second);
            }
        }
        for (size_t j = 0; j + 1 < seq.size(); j++) {
            if (gates_commute(seq[j], seq[j + 1])) {
                std::vector<uint32_t> ids = keys[i];
                std::swap(ids[j], ids[j + 1]);
                if (auto it = index.find(ids); it != index.end()) {
                    unite(i, it->second);
                }
            }
        }
    }

    std::map<size_t, size_t> sizes;
    for (size_t i = 0; i < circuits.size(); i++) {
        sizes[find(i)]++;
    }
    std::vector<EquivalenceClass> classes;
    for (const auto &[root, size] : sizes) {
        classes.push_back({size, root});
    }
    std::stable_sort(classes.begin(), classes.end(), [](const auto &a, const auto &b) { return a.size > b.size; });
    return classes;
}

}  // namespace purify

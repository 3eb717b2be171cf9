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

#include <gtest/gtest.h>

#include "purify/errors.h"
#include "purify/verifier.h"

using namespace purify;

namespace {

Circuit named(const std::string &name) {
    return build_named(NamedFamily::parse(name));
}

/// Largest e the circuit protects against, by exhaustion.
uint32_t protection(const Circuit &c) {
    uint32_t e = 0;
    while (e < c.num_qubits && verify_purification(c, e + 1).ok) {
        e++;
    }
    return e;
}

}  // namespace

TEST(constructions, family_names_parse) {
    for (const std::string &name : family_names()) {
        std::string text = name;
        if (auto pos = text.find(":k"); pos != std::string::npos) {
            text = text.substr(0, pos) + ":4";
        }
        NamedFamily f = NamedFamily::parse(text == "explicit-odd:4" ? "explicit-odd:2" : text);
        EXPECT_EQ(NamedFamily::parse(f.str()).str(), f.str());
    }
    EXPECT_THROW(NamedFamily::parse("cycle"), ContractError);
    EXPECT_THROW(NamedFamily::parse("cycle:2"), ContractError);
    EXPECT_THROW(NamedFamily::parse("three-one-one:3"), ContractError);
    EXPECT_THROW(NamedFamily::parse("explicit-odd:0"), ContractError);
    EXPECT_THROW(NamedFamily::parse("four-one-one"), ContractError);
}

TEST(constructions, named_circuits_purify) {
    for (const char *name : {"three-one-one", "five-one-one", "seven-one-two", "nine-one-three", "five-one-two-a",
                             "five-one-two-b", "eight-two-two", "hamming-seven-four-one", "cycle:3", "cycle:10",
                             "cycle:11", "path:2", "path:6", "tolerant-cycle:3", "tolerant-cycle:10",
                             "tolerant-path:6", "explicit-odd:1", "explicit-odd:2"}) {
        NamedFamily f = NamedFamily::parse(name);
        Circuit c = build_named(f);
        PurificationParams p = f.params();
        c.validate();
        EXPECT_TRUE(c.fully_scheduled()) << name;
        EXPECT_EQ(c.num_qubits, p.n) << name;
        EXPECT_EQ(c.outputs.size(), p.k) << name;
        EXPECT_TRUE(verify_purification(c, p.e).ok) << name;
    }
}

TEST(constructions, three_one_one_shape) {
    Circuit c = named("three-one-one");
    EXPECT_EQ(c.depth(), 3u);
    EXPECT_EQ(c.counts().non_idle(), 3u);
    EXPECT_EQ(c.counts().idle, 2u);
}

TEST(constructions, cycle_shape) {
    Circuit c = named("cycle:10");
    EXPECT_EQ(c.num_qubits, 20u);
    EXPECT_EQ(c.counts().cnot, 20u);
    EXPECT_EQ(c.counts().toffoli, 10u);
    EXPECT_EQ(c.depth(), 4u);
    Circuit odd = named("cycle:11");
    EXPECT_EQ(odd.depth(), 5u);
    Circuit t = named("tolerant-cycle:10");
    EXPECT_EQ(t.counts().non_idle(), 40u);
    EXPECT_EQ(t.depth(), 6u);
}

TEST(constructions, graph_counts) {
    for (uint32_t r = 2; r <= 6; r++) {
        Graph g = Graph::complete(r);
        Circuit c = graph_circuit(g, false);
        uint32_t s = r * (r - 1) / 2;
        EXPECT_EQ(c.num_qubits, r + s);
        EXPECT_EQ(c.outputs.size(), s);
        EXPECT_EQ(c.counts().cnot, 2 * s);
        EXPECT_EQ(c.counts().toffoli, s);
        EXPECT_TRUE(verify_purification(c, 1).ok) << r;
        // Greedy colouring never needs more than 2 * max_degree - 1 colours.
        EXPECT_LE(c.depth(), 3 * (2 * (r - 1) - 1)) << r;
    }
    Graph star{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    EXPECT_TRUE(verify_purification(graph_circuit(star, false), 1).ok);
    EXPECT_THROW(graph_circuit(star, true), ContractError);
    EXPECT_THROW((Graph{3, {{0, 0}}}.validate()), ContractError);
    EXPECT_THROW((Graph{3, {{0, 1}, {1, 0}}}.validate()), ContractError);
}

TEST(constructions, tolerant_cycle_toffoli_count) {
    for (uint32_t k = 3; k <= 8; k++) {
        Circuit plain = graph_circuit(Graph::cycle(k), false);
        Circuit tolerant = graph_circuit(Graph::cycle(k), true);
        EXPECT_EQ(tolerant.counts().toffoli, plain.counts().toffoli + k);
        EXPECT_EQ(tolerant.counts().cnot, plain.counts().cnot);
    }
    Circuit path = graph_circuit(Graph::path(6), true);
    EXPECT_EQ(path.counts().toffoli, 5u + 4u);
}

TEST(constructions, single_edge_is_three_one_one) {
    Circuit edge = graph_circuit(Graph::path(2), false);
    Circuit three = named("three-one-one");
    ASSERT_EQ(edge.num_qubits, 3u);
    ASSERT_EQ(edge.outputs.size(), 1u);
    // Move the edge qubit to position 0 and compare permutations.
    uint32_t out = edge.outputs[0];
    std::vector<uint32_t> mapping(3);
    uint32_t next = 1;
    for (uint32_t q = 0; q < 3; q++) {
        mapping[q] = q == out ? 0 : next++;
    }
    Circuit moved = relabel(edge, mapping, 3);
    auto a = moved.permutation_table();
    auto b = three.permutation_table();
    auto swapped = relabel(three, std::vector<uint32_t>{0, 2, 1}, 3).permutation_table();
    EXPECT_TRUE(a == b || a == swapped);
}

TEST(constructions, compose_arithmetic) {
    Circuit three = named("three-one-one");
    Circuit five = named("five-one-two-a");
    std::vector<Circuit> inner3(3, three);
    Circuit nine = compose(inner3, three);
    EXPECT_EQ(nine.num_qubits, 9u);
    EXPECT_EQ(nine.counts().non_idle(), 12u);
    EXPECT_EQ(protection(nine), 3u);

    std::vector<Circuit> inner5(3, five);
    Circuit fifteen = compose(inner5, three);
    EXPECT_EQ(fifteen.num_qubits, 15u);
    EXPECT_EQ(fifteen.counts().non_idle(), 30u);
    EXPECT_TRUE(verify_purification(fifteen, 5).ok);

    std::vector<Circuit> three_in_five(5, three);
    Circuit other = compose(three_in_five, five);
    EXPECT_EQ(other.counts().non_idle(), 24u);
    EXPECT_TRUE(verify_purification(other, 5).ok);

    std::vector<Circuit> one{identity_circuit()};
    Circuit id = compose(one, identity_circuit());
    EXPECT_EQ(id.num_qubits, 1u);
    EXPECT_EQ(id.depth(), 0u);
    EXPECT_THROW(compose(one, three), ContractError);
}

TEST(constructions, compose_matches_parameter_rule) {
    std::vector<Circuit> small{named("three-one-one"), named("five-one-two-a"), named("five-one-two-b")};
    std::vector<uint32_t> e{1, 2, 2};
    for (size_t i = 0; i < small.size(); i++) {
        for (size_t j = 0; j < small.size(); j++) {
            std::vector<Circuit> inners(small[j].num_qubits, small[i]);
            Circuit c = compose(inners, small[j]);
            uint32_t expected = (e[i] + 1) * (e[j] + 1) - 1;
            EXPECT_TRUE(verify_purification(c, expected).ok) << i << " into " << j;
            EXPECT_FALSE(verify_purification(c, expected + 1).ok) << i << " into " << j;
        }
    }
}

TEST(constructions, overlap) {
    Circuit a = named("five-one-two-a");
    Circuit three = named("three-one-one");
    Circuit disjoint = overlap(three, three, {});
    EXPECT_EQ(disjoint.num_qubits, 6u);
    EXPECT_EQ(disjoint.outputs.size(), 2u);
    EXPECT_TRUE(verify_purification(disjoint, 1).ok);

    std::vector<std::pair<uint32_t, uint32_t>> shared{{3, 3}, {4, 4}};
    Circuit eight = overlap(a, a, shared);
    EXPECT_EQ(eight.num_qubits, 8u);
    EXPECT_EQ(eight.outputs.size(), 2u);
    EXPECT_TRUE(verify_purification(eight, 2).ok);

    std::vector<std::pair<uint32_t, uint32_t>> both{{1, 1}, {2, 2}};
    Circuit squeezed = overlap(three, three, both);
    EXPECT_EQ(squeezed.num_qubits, 4u);
    // Sharing both auxiliaries leaves too little room to correct one error.
    EXPECT_FALSE(verify_purification(squeezed, 1).ok);
    std::vector<std::pair<uint32_t, uint32_t>> output{{0, 1}};
    EXPECT_THROW(overlap(three, three, output), ContractError);
}

TEST(constructions, eight_two_two_shape) {
    Circuit c = named("eight-two-two");
    EXPECT_EQ(c.depth(), 13u);
    EXPECT_EQ(c.counts().non_idle(), 18u);
    EXPECT_EQ(c.outputs, (std::vector<uint32_t>{0, 7}));
}

TEST(constructions, explicit_odd) {
    for (uint32_t m = 1; m <= 3; m++) {
        uint32_t n = (1u << (m + 1)) - 1;
        uint32_t e = (1u << m) - 1;
        // The construction relies on C(2^m + s, s) being odd for s < 2^m.
        for (uint32_t s = 0; s < (1u << m); s++) {
            EXPECT_EQ(binomial((1u << m) + s, s) % 2, 1u);
        }
        Circuit c = named("explicit-odd:" + std::to_string(m));
        EXPECT_EQ(c.num_qubits, n);
        EXPECT_EQ(c.counts().cnot, n - 1);
        EXPECT_TRUE(verify_purification(c, e).ok) << m;
        EXPECT_FALSE(verify_purification(c, e + 1).ok) << m;
    }
    Circuit two = named("explicit-odd:2");
    EXPECT_EQ(two.counts().multi_x, 15u);
    EXPECT_EQ(named("explicit-odd:1").permutation_table(), named("three-one-one").permutation_table());
}

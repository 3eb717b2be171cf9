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


#include "purify/circuit.h"

#include <gtest/gtest.h>

#include <random>

#include "purify/circuit_text.h"
#include "purify/constructions.h"
#include "purify/errors.h"
#include "test_util.h"

using namespace purify;

namespace {

Circuit three_one_one() {
    return build_named(NamedFamily::parse("three-one-one"));
}

std::vector<Gate> fig_gates() {
    return {Gate::cnot(0, 1), Gate::cnot(0, 2), Gate::toffoli(1, 2, 0)};
}

}  // namespace

TEST(circuit, apply_examples) {
    Circuit c = three_one_one();
    // |100> has q0 = 1; |011> has q1 = q2 = 1.
    EXPECT_EQ(c.apply(0b001), 0b110u);
    EXPECT_EQ(c.apply(0), 0u);
    // |110> -> |101>: the output qubit ends in error.
    EXPECT_EQ(c.apply(0b011), 0b101u);
    EXPECT_THROW(c.apply(8), std::out_of_range);
}

TEST(circuit, permutation_table_matches_brute_force) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        uint32_t n = 3 + trial % 5;
        auto gates = random_gates(rng, n, 12);
        Circuit c = one_gate_per_round(gates, n, {0});
        EXPECT_EQ(c.permutation_table(), brute_force_table(gates, n));
    }
}

TEST(circuit, gates_are_involutions) {
    std::vector<Gate> gates{Gate::cnot(0, 3), Gate::toffoli(2, 1, 0), Gate::mcx({0, 1, 3}, 2), Gate::idle(1)};
    for (const Gate &g : gates) {
        for (BasisState s = 0; s < 16; s++) {
            EXPECT_EQ(g.apply(g.apply(s)), s);
        }
    }
}

TEST(circuit, reversed_is_inverse) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; trial++) {
        uint32_t n = 4 + trial % 3;
        Circuit c = one_gate_per_round(random_gates(rng, n, 15), n, {0});
        Circuit r = reversed(c);
        for (BasisState s = 0; s < (BasisState{1} << n); s++) {
            EXPECT_EQ(r.apply(c.apply(s)), s);
        }
    }
}

TEST(circuit, schedule_example) {
    auto gates = fig_gates();
    Circuit c = schedule(gates, 3, {0});
    ASSERT_EQ(c.depth(), 3u);
    EXPECT_EQ(c.rounds[0], (std::vector<Gate>{Gate::cnot(0, 1), Gate::idle(2)}));
    EXPECT_EQ(c.rounds[1], (std::vector<Gate>{Gate::cnot(0, 2), Gate::idle(1)}));
    EXPECT_EQ(c.rounds[2], (std::vector<Gate>{Gate::toffoli(1, 2, 0)}));
    EXPECT_TRUE(c.fully_scheduled());
}

TEST(circuit, schedule_single_gate) {
    std::vector<Gate> gates{Gate::cnot(1, 3)};
    Circuit c = schedule(gates, 5, {3});
    ASSERT_EQ(c.depth(), 1u);
    EXPECT_EQ(c.counts().idle, 3u);
    EXPECT_TRUE(c.fully_scheduled());
}

TEST(circuit, schedule_preserves_permutation) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; trial++) {
        uint32_t n = 3 + trial % 8;
        auto gates = random_gates(rng, n, 4 + trial);
        Circuit c = schedule(gates, n, {0});
        c.validate();
        EXPECT_TRUE(c.fully_scheduled());
        EXPECT_LE(c.depth(), gates.size());
        EXPECT_EQ(c.counts().non_idle(), gates.size());
        EXPECT_EQ(c.permutation_table(), brute_force_table(gates, n));
    }
}

TEST(circuit, schedule_packs_disjoint_gates) {
    std::vector<Gate> gates{Gate::cnot(0, 1), Gate::cnot(2, 3), Gate::cnot(4, 5)};
    EXPECT_EQ(schedule(gates, 6, {0}).depth(), 1u);
}

TEST(circuit, commutation_is_semantic) {
    EXPECT_TRUE(gates_commute(Gate::cnot(0, 1), Gate::cnot(0, 2)));
    EXPECT_TRUE(gates_commute(Gate::cnot(0, 2), Gate::cnot(1, 2)));
    EXPECT_FALSE(gates_commute(Gate::cnot(0, 1), Gate::cnot(1, 2)));
    EXPECT_TRUE(gates_commute(Gate::toffoli(0, 1, 2), Gate::toffoli(0, 1, 3)));
    EXPECT_FALSE(gates_commute(Gate::toffoli(0, 1, 2), Gate::cnot(2, 0)));
}

TEST(circuit, validate_rejects_bad_circuits) {
    Circuit c;
    c.num_qubits = 3;
    c.outputs = {0};
    c.rounds = {{Gate::cnot(0, 1), Gate::cnot(1, 2)}};
    EXPECT_THROW(c.validate(), ContractError);
    c.rounds = {{Gate::cnot(0, 3)}};
    EXPECT_THROW(c.validate(), ContractError);
    c.rounds = {{Gate::cnot(0, 1)}};
    c.outputs = {0, 0};
    EXPECT_THROW(c.validate(), ContractError);
    EXPECT_THROW(Gate::toffoli(1, 1, 2).validate(3), ContractError);
}

TEST(circuit, light_cone_of_single_gate) {
    Circuit c;
    c.num_qubits = 4;
    c.outputs = {2};
    c.rounds = {{Gate::cnot(0, 2), Gate::cnot(1, 3)}};
    c = fill_idles(c);
    Circuit cone = light_cone(c, 2);
    EXPECT_EQ(cone.num_qubits, 2u);
    EXPECT_EQ(light_cone_qubits(c, 2), (std::vector<uint32_t>{0, 2}));
    EXPECT_EQ(cone.counts().cnot, 1u);
    EXPECT_EQ(cone.counts().idle, 0u);
    EXPECT_THROW(light_cone(c, 1), ContractError);
}

TEST(circuit, light_cone_sizes_on_cycle) {
    Circuit c = build_named(NamedFamily::parse("cycle:10"));
    for (uint32_t q : c.outputs) {
        size_t size = light_cone_qubits(c, q).size();
        // Edge i sits on qubit 2i + 1; even edges are corrected first.
        EXPECT_EQ(size, (q / 2) % 2 == 0 ? 6u : 10u) << q;
    }
}

TEST(circuit, light_cone_preserves_marginal_action) {
    Circuit c = build_named(NamedFamily::parse("tolerant-cycle:10"));
    std::mt19937_64 rng(5);
    for (uint32_t q : c.outputs) {
        Circuit cone = light_cone(c, q);
        auto kept = light_cone_qubits(c, q);
        uint32_t local = 0;
        while (kept[local] != q) {
            local++;
        }
        ASSERT_EQ(cone.outputs, std::vector<uint32_t>{local});
        for (int i = 0; i < 200; i++) {
            BasisState s = rng() & ((BasisState{1} << c.num_qubits) - 1);
            BasisState small = 0;
            for (uint32_t j = 0; j < kept.size(); j++) {
                small |= ((s >> kept[j]) & 1) << j;
            }
            EXPECT_EQ((c.apply(s) >> q) & 1, (cone.apply(small) >> local) & 1);
        }
    }
}

TEST(circuit_text, round_trip) {
    for (const char *name : {"three-one-one", "eight-two-two", "hamming-seven-four-one", "explicit-odd:2"}) {
        Circuit c = build_named(NamedFamily::parse(name));
        EXPECT_EQ(parse_circuit(serialize(c)), c) << name;
    }
}

TEST(circuit_text, format) {
    EXPECT_EQ(serialize(three_one_one()),
              "qubits 3\noutputs 0\nCNOT 0 1\nIDLE 2\n---\nCNOT 0 2\nIDLE 1\n---\nTOFFOLI 1 2 0\n");
}

TEST(circuit_text, empty_circuit) {
    Circuit c;
    c.num_qubits = 2;
    c.outputs = {1};
    std::string text = serialize(c);
    EXPECT_EQ(text, "qubits 2\noutputs 1\n");
    EXPECT_EQ(parse_circuit(text), c);
}

TEST(circuit_text, comments_and_whitespace) {
    Circuit c = parse_circuit("# header\n  qubits   3\noutputs 0\n CNOT 0   1 # copy\n\n---\nTOFFOLI 1 2 0\n---\n---\n");
    EXPECT_EQ(c.depth(), 2u);
    EXPECT_EQ(c.rounds[1][0], Gate::toffoli(1, 2, 0));
}

TEST(circuit_text, parse_errors) {
    auto line_of = [](const char *text) -> size_t {
        try {
            parse_circuit(text);
        } catch (const ParseError &e) {
            return e.line;
        }
        return 0;
    };
    EXPECT_EQ(line_of("qubits 3\noutputs 0\nCNOT 0 1\nCNOT 1 2\n"), 4u);
    EXPECT_EQ(line_of("qubits 3\noutputs 0\nCNOT 0 3\n"), 3u);
    EXPECT_EQ(line_of("qubits 3\noutputs 5\n"), 2u);
    EXPECT_EQ(line_of("qubits 3\noutputs 0\nSWAP 0 1\n"), 3u);
    EXPECT_EQ(line_of("outputs 0\n"), 1u);
    EXPECT_NE(line_of("qubits x\n"), 0u);
}

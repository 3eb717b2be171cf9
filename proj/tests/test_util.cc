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


#include "test_util.h"

namespace purify {

std::vector<Gate> random_gates(std::mt19937_64 &rng, uint32_t n, size_t count) {
    std::vector<Gate> gates;
    std::uniform_int_distribution<uint32_t> qubit(0, n - 1);
    while (gates.size() < count) {
        uint32_t a = qubit(rng);
        uint32_t b = qubit(rng);
        uint32_t c = qubit(rng);
        if (a == b) {
            continue;
        }
        if (rng() % 2 == 0) {
            gates.push_back(Gate::cnot(a, b));
        } else if (c != a && c != b) {
            gates.push_back(Gate::toffoli(a, b, c));
        }
    }
    return gates;
}

std::vector<BasisState> brute_force_table(const std::vector<Gate> &gates, uint32_t n) {
    std::vector<BasisState> table;
    for (BasisState s = 0; s < (BasisState{1} << n); s++) {
        BasisState x = s;
        for (const Gate &g : gates) {
            bool fire = true;
            for (uint32_t q : g.controls) {
                fire &= (x >> q) & 1;
            }
            if (g.kind != GateKind::Idle && fire) {
                x ^= BasisState{1} << g.target;
            }
        }
        table.push_back(x);
    }
    return table;
}

Circuit one_gate_per_round(const std::vector<Gate> &gates, uint32_t n, std::vector<uint32_t> outputs) {
    Circuit c;
    c.num_qubits = n;
    c.outputs = std::move(outputs);
    for (const Gate &g : gates) {
        c.rounds.push_back({g});
    }
    return c;
}

}  // namespace purify

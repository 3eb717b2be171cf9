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

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "purify/errors.h"

namespace purify {

Gate Gate::idle(uint32_t target) {
    return Gate{GateKind::Idle, {}, target};
}

Gate Gate::cnot(uint32_t control, uint32_t target) {
    return Gate{GateKind::CNot, {control}, target};
}

Gate Gate::toffoli(uint32_t control1, uint32_t control2, uint32_t target) {
    return Gate{GateKind::Toffoli, {control1, control2}, target};
}

Gate Gate::mcx(std::vector<uint32_t> controls, uint32_t target) {
    return Gate{GateKind::MultiX, std::move(controls), target};
}

std::vector<uint32_t> Gate::support() const {
    std::vector<uint32_t> result;
    result.reserve(controls.size() + 1);
    result.push_back(target);
    result.insert(result.end(), controls.begin(), controls.end());
    return result;
}

uint64_t Gate::control_mask() const {
    uint64_t m = 0;
    for (uint32_t c : controls) {
        m |= uint64_t{1} << c;
    }
    return m;
}

uint64_t Gate::support_mask() const {
    return control_mask() | (uint64_t{1} << target);
}

void Gate::validate(uint32_t num_qubits) const {
    size_t expected = 0;
    switch (kind) {
        case GateKind::Idle:
            expected = 0;
            break;
        case GateKind::CNot:
            expected = 1;
            break;
        case GateKind::Toffoli:
            expected = 2;
            break;
        case GateKind::MultiX:
            expected = controls.size();
            break;
    }
    if (controls.size() != expected) {
        throw ContractError("gate " + str() + " has the wrong number of controls");
    }
    uint64_t seen = 0;
    for (uint32_t q : support()) {
        if (q >= num_qubits) {
            throw ContractError(
                "gate " + str() + " touches qubit " + std::to_string(q) + " but the circuit has " +
                std::to_string(num_qubits) + " qubits");
        }
        if (seen & (uint64_t{1} << q)) {
            throw ContractError("gate " + str() + " repeats qubit " + std::to_string(q));
        }
        seen |= uint64_t{1} << q;
    }
}

std::string Gate::str() const {
    std::ostringstream out;
    switch (kind) {
        case GateKind::Idle:
            out << "IDLE";
            break;
        case GateKind::CNot:
            out << "CNOT";
            break;
        case GateKind::Toffoli:
            out << "TOFFOLI";
            break;
        case GateKind::MultiX:
            out << "MCX";
            break;
    }
    for (uint32_t c : controls) {
        out << ' ' << c;
    }
    out << ' ' << target;
    return out.str();
}

void Circuit::validate() const {
    if (num_qubits > MAX_QUBITS) {
        throw ContractError("circuits are limited to " + std::to_string(MAX_QUBITS) + " qubits");
    }
    for (size_t r = 0; r < rounds.size(); r++) {
        if (rounds[r].empty()) {
            throw ContractError("round " + std::to_string(r) + " is empty");
        }
        uint64_t used = 0;
        for (const Gate &g : rounds[r]) {
            g.validate(num_qubits);
            if (used & g.support_mask()) {
                throw ContractError("round " + std::to_string(r) + " has overlapping gates at " + g.str());
            }
            used |= g.support_mask();
        }
    }
    uint64_t seen = 0;
    for (uint32_t q : outputs) {
        if (q >= num_qubits) {
            throw ContractError("output qubit " + std::to_string(q) + " is out of range");
        }
        if (seen & (uint64_t{1} << q)) {
            throw ContractError("output qubit " + std::to_string(q) + " is listed twice");
        }
        seen |= uint64_t{1} << q;
    }
}

bool Circuit::fully_scheduled() const {
    uint64_t all = num_qubits == 64 ? ~uint64_t{0} : (uint64_t{1} << num_qubits) - 1;
    for (const auto &round : rounds) {
        uint64_t used = 0;
        for (const Gate &g : round) {
            if (used & g.support_mask()) {
                return false;
            }
            used |= g.support_mask();
        }
        if (used != all) {
            return false;
        }
    }
    return true;
}

GateCounts Circuit::counts() const {
    GateCounts c;
    for (const auto &round : rounds) {
        for (const Gate &g : round) {
            switch (g.kind) {
                case GateKind::Idle:
                    c.idle++;
                    break;
                case GateKind::CNot:
                    c.cnot++;
                    break;
                case GateKind::Toffoli:
                    c.toffoli++;
                    break;
                case GateKind::MultiX:
                    c.multi_x++;
                    break;
            }
        }
    }
    return c;
}

std::vector<Gate> Circuit::flat_gates(bool include_idles) const {
    std::vector<Gate> result;
    for (const auto &round : rounds) {
        for (const Gate &g : round) {
            if (include_idles || g.kind != GateKind::Idle) {
                result.push_back(g);
            }
        }
    }
    return result;
}

BasisState Circuit::apply(BasisState state) const {
    if (num_qubits < 64 && (state >> num_qubits) != 0) {
        throw std::out_of_range(
            "basis state " + std::to_string(state) + " does not fit in " + std::to_string(num_qubits) + " qubits");
    }
    for (const auto &round : rounds) {
        for (const Gate &g : round) {
            state = g.apply(state);
        }
    }
    return state;
}

std::vector<BasisState> Circuit::permutation_table() const {
    if (num_qubits > MAX_TABLE_QUBITS) {
        throw ResourceError("permutation tables are limited to " + std::to_string(MAX_TABLE_QUBITS) + " qubits");
    }
    std::vector<GateMasks> compiled;
    for (const Gate &g : flat_gates()) {
        compiled.push_back({g.control_mask(), uint64_t{1} << g.target});
    }
    std::vector<BasisState> table(size_t{1} << num_qubits);
    for (BasisState s = 0; s < table.size(); s++) {
        BasisState x = s;
        for (const GateMasks &m : compiled) {
            x = m.apply(x);
        }
        table[s] = x;
    }
    return table;
}

uint64_t Circuit::output_mask() const {
    uint64_t m = 0;
    for (uint32_t q : outputs) {
        m |= uint64_t{1} << q;
    }
    return m;
}

bool gates_commute(const Gate &a, const Gate &b) {
    if (a.kind == GateKind::Idle || b.kind == GateKind::Idle) {
        return true;
    }
    if ((a.support_mask() & b.support_mask()) == 0) {
        return true;
    }
    // Controlled-X gates whose targets avoid each other's controls commute.
    if ((a.control_mask() & (uint64_t{1} << b.target)) == 0 && (b.control_mask() & (uint64_t{1} << a.target)) == 0) {
        return true;
    }
    uint64_t joint = a.support_mask() | b.support_mask();
    int width = std::popcount(joint);
    std::vector<uint32_t> bits;
    for (uint64_t m = joint; m; m &= m - 1) {
        bits.push_back(static_cast<uint32_t>(std::countr_zero(m)));
    }
    for (uint64_t local = 0; local < (uint64_t{1} << width); local++) {
        BasisState s = 0;
        for (int i = 0; i < width; i++) {
            if ((local >> i) & 1) {
                s |= uint64_t{1} << bits[i];
            }
        }
        if (b.apply(a.apply(s)) != a.apply(b.apply(s))) {
            return false;
        }
    }
    return true;
}

Circuit fill_idles(Circuit circuit) {
    for (auto &round : circuit.rounds) {
        uint64_t used = 0;
        for (const Gate &g : round) {
            used |= g.support_mask();
        }
        for (uint32_t q = 0; q < circuit.num_qubits; q++) {
            if (!(used & (uint64_t{1} << q))) {
                round.push_back(Gate::idle(q));
            }
        }
    }
    return circuit;
}

Circuit schedule(std::span<const Gate> gates, uint32_t num_qubits, std::vector<uint32_t> outputs) {
    Circuit result;
    result.num_qubits = num_qubits;
    result.outputs = std::move(outputs);

    std::vector<Gate> placed;
    std::vector<size_t> placed_round;
    std::vector<uint64_t> occupied;
    for (const Gate &g : gates) {
        g.validate(num_qubits);
        if (g.kind == GateKind::Idle) {
            continue;
        }
        size_t earliest = 0;
        for (size_t i = 0; i < placed.size(); i++) {
            if (placed_round[i] + 1 > earliest && !gates_commute(placed[i], g)) {
                earliest = placed_round[i] + 1;
            }
        }
        uint64_t mask = g.support_mask();
        size_t r = earliest;
        while (r < occupied.size() && (occupied[r] & mask)) {
            r++;
        }
        if (r == occupied.size()) {
            occupied.push_back(0);
            result.rounds.emplace_back();
        }
        occupied[r] |= mask;
        result.rounds[r].push_back(g);
        placed.push_back(g);
        placed_round.push_back(r);
    }
    result = fill_idles(std::move(result));
    result.validate();
    return result;
}

std::vector<uint32_t> light_cone_qubits(const Circuit &circuit, uint32_t output) {
    if (std::find(circuit.outputs.begin(), circuit.outputs.end(), output) == circuit.outputs.end()) {
        throw ContractError("qubit " + std::to_string(output) + " is not an output of the circuit");
    }
    uint64_t tracked = uint64_t{1} << output;
    for (size_t r = circuit.rounds.size(); r-- > 0;) {
        uint64_t grown = tracked;
        for (const Gate &g : circuit.rounds[r]) {
            if (g.support_mask() & tracked) {
                grown |= g.support_mask();
            }
        }
        tracked = grown;
    }
    std::vector<uint32_t> result;
    for (uint64_t m = tracked; m; m &= m - 1) {
        result.push_back(static_cast<uint32_t>(std::countr_zero(m)));
    }
    return result;
}

Circuit light_cone(const Circuit &circuit, uint32_t output) {
    if (std::find(circuit.outputs.begin(), circuit.outputs.end(), output) == circuit.outputs.end()) {
        throw ContractError("qubit " + std::to_string(output) + " is not an output of the circuit");
    }
    std::vector<std::vector<Gate>> kept_rounds(circuit.rounds.size());
    uint64_t tracked = uint64_t{1} << output;
    for (size_t r = circuit.rounds.size(); r-- > 0;) {
        uint64_t grown = tracked;
        for (const Gate &g : circuit.rounds[r]) {
            if (g.support_mask() & tracked) {
                kept_rounds[r].push_back(g);
                grown |= g.support_mask();
            }
        }
        tracked = grown;
    }

    std::vector<uint32_t> mapping(circuit.num_qubits, 0);
    uint32_t next = 0;
    for (uint32_t q = 0; q < circuit.num_qubits; q++) {
        if (tracked & (uint64_t{1} << q)) {
            mapping[q] = next++;
        }
    }
    Circuit cone;
    cone.num_qubits = next;
    cone.outputs = {mapping[output]};
    for (auto &round : kept_rounds) {
        if (round.empty()) {
            continue;
        }
        std::vector<Gate> renamed;
        for (Gate g : round) {
            g.target = mapping[g.target];
            for (uint32_t &c : g.controls) {
                c = mapping[c];
            }
            renamed.push_back(std::move(g));
        }
        cone.rounds.push_back(std::move(renamed));
    }
    return cone;
}

Circuit relabel(const Circuit &circuit, std::span<const uint32_t> mapping, uint32_t new_num_qubits) {
    if (mapping.size() != circuit.num_qubits) {
        throw ContractError("relabel mapping must cover every qubit");
    }
    Circuit result;
    result.num_qubits = new_num_qubits;
    for (uint32_t q : circuit.outputs) {
        result.outputs.push_back(mapping[q]);
    }
    for (const auto &round : circuit.rounds) {
        std::vector<Gate> renamed;
        for (Gate g : round) {
            g.target = mapping[g.target];
            for (uint32_t &c : g.controls) {
                c = mapping[c];
            }
            renamed.push_back(std::move(g));
        }
        result.rounds.push_back(std::move(renamed));
    }
    result.validate();
    return result;
}

Circuit reversed(const Circuit &circuit) {
    Circuit result = circuit;
    std::reverse(result.rounds.begin(), result.rounds.end());
    for (auto &round : result.rounds) {
        std::reverse(round.begin(), round.end());
    }
    return result;
}

Circuit identity_circuit() {
    Circuit c;
    c.num_qubits = 1;
    c.outputs = {0};
    return c;
}

}  // namespace purify

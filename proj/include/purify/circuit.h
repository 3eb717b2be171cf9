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

#ifndef PURIFY_CIRCUIT_H
#define PURIFY_CIRCUIT_H

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace purify {

/// Computational basis state. Bit i holds the value of qubit i.
using BasisState = uint64_t;

/// Circuits are limited to 64 qubits so that a basis state fits in one word.
constexpr uint32_t MAX_QUBITS = 64;

/// Permutation tables are only built for circuits this small.
constexpr uint32_t MAX_TABLE_QUBITS = 24;

enum class GateKind : uint8_t {
    Idle,
    CNot,
    Toffoli,
    /// Multiply controlled X. Only meaningful for verification; the noise
    /// model assigns it no failure rate.
    MultiX,
};

struct Gate {
    GateKind kind = GateKind::Idle;
    std::vector<uint32_t> controls;
    uint32_t target = 0;

    static Gate idle(uint32_t target);
    static Gate cnot(uint32_t control, uint32_t target);
    static Gate toffoli(uint32_t control1, uint32_t control2, uint32_t target);
    static Gate mcx(std::vector<uint32_t> controls, uint32_t target);

    /// Target followed by controls.
    std::vector<uint32_t> support() const;
    uint64_t support_mask() const;
    uint64_t control_mask() const;
    size_t arity() const {
        return controls.size() + 1;
    }

    /// Classical action on a basis state. Idle is the identity.
    BasisState apply(BasisState state) const {
        if (kind == GateKind::Idle) {
            return state;
        }
        uint64_t cm = control_mask();
        if ((state & cm) == cm) {
            state ^= uint64_t{1} << target;
        }
        return state;
    }

    /// Throws ContractError unless all indices are distinct and below num_qubits.
    void validate(uint32_t num_qubits) const;

    std::string str() const;
    bool operator==(const Gate &other) const = default;
};

/// Compiled form of a gate for inner loops.
struct GateMasks {
    uint64_t controls;
    uint64_t flip;
    BasisState apply(BasisState s) const {
        return (s & controls) == controls ? s ^ flip : s;
    }
};

struct GateCounts {
    size_t idle = 0;
    size_t cnot = 0;
    size_t toffoli = 0;
    size_t multi_x = 0;
    size_t non_idle() const {
        return cnot + toffoli + multi_x;
    }
    bool operator==(const GateCounts &other) const = default;
};

/// A round-scheduled circuit. Gates within a round act on disjoint qubits.
struct Circuit {
    uint32_t num_qubits = 0;
    std::vector<std::vector<Gate>> rounds;
    std::vector<uint32_t> outputs;

    /// Checks gate indices, disjoint supports per round, non-empty rounds and
    /// distinct in-range outputs. Throws ContractError.
    void validate() const;

    /// True when every qubit appears in exactly one gate in every round.
    bool fully_scheduled() const;

    size_t depth() const {
        return rounds.size();
    }
    GateCounts counts() const;

    /// Gates in execution order (round by round).
    std::vector<Gate> flat_gates(bool include_idles = false) const;

    /// Image of a basis state. Throws std::out_of_range if the state does not fit.
    BasisState apply(BasisState state) const;

    /// Full permutation of F_2^n. Limited to MAX_TABLE_QUBITS.
    std::vector<BasisState> permutation_table() const;

    uint64_t output_mask() const;

    bool operator==(const Circuit &other) const = default;
};

/// Packs gates into rounds greedily. Each gate goes into the earliest round
/// after every earlier gate it does not commute with and where its support is
/// free. Uncovered qubits receive Idle gates. The permutation is preserved.
Circuit schedule(std::span<const Gate> gates, uint32_t num_qubits, std::vector<uint32_t> outputs);

/// Adds Idle gates for every qubit not covered in each round.
Circuit fill_idles(Circuit circuit);

/// True if the two gates commute as permutations of the basis.
bool gates_commute(const Gate &a, const Gate &b);

/// Causal past of a single output qubit.
///
/// Walks the rounds backwards keeping a tracked set seeded with the output.
/// A gate is kept when it touches a tracked qubit, and then its whole support
/// becomes tracked: a failing gate depolarises its controls as well as its
/// target, so the noisy marginal of the output depends on all of them. Kept
/// qubits are renumbered in increasing order of their original index.
Circuit light_cone(const Circuit &circuit, uint32_t output);

/// Which original qubit each light-cone qubit came from.
std::vector<uint32_t> light_cone_qubits(const Circuit &circuit, uint32_t output);

/// Renames qubit q to mapping[q] in a circuit of new_num_qubits qubits.
Circuit relabel(const Circuit &circuit, std::span<const uint32_t> mapping, uint32_t new_num_qubits);

/// Circuit with the flat gate order reversed. For CNOT/Toffoli circuits this
/// realises the inverse permutation.
Circuit reversed(const Circuit &circuit);

/// A 1-qubit circuit with no gates whose single qubit is the output.
Circuit identity_circuit();

}  // namespace purify

#endif

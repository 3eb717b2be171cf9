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

#ifndef PURIFY_SEARCH_H
#define PURIFY_SEARCH_H

#include <cstdint>
#include <string>
#include <vector>

#include "purify/circuit.h"
#include "purify/verifier.h"

namespace purify {

/// A set of basis states of at most 6 qubits: bit s is set iff state s is in the set.
using StateSet = uint64_t;

/// Largest register the set-of-states search handles.
constexpr uint32_t MAX_SEARCH_QUBITS = 6;

/// Upper limit on the number of seed sets for the backward half of the search.
constexpr uint64_t MAX_BACKWARD_SEEDS = uint64_t{1} << 20;

/// Upper limit on the number of distinct sets held by both halves of a search.
constexpr size_t MAX_VISITED_SETS = size_t{1} << 24;

/// Every CNOT and Toffoli on n qubits, each precompiled into a bit permutation
/// of StateSet words. CNOTs come first ordered by (control, target), then
/// Toffolis ordered by (control1 < control2, target).
class GateSet {
   public:
    explicit GateSet(uint32_t num_qubits);

    uint32_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return gates_.size();
    }
    const Gate &gate(size_t id) const {
        return gates_[id];
    }

    /// Image of a set of states under gate `id`.
    StateSet apply(size_t id, StateSet set) const {
        const Move &m = moves_[id];
        return (set & m.stay) | ((set & m.low) << m.shift) | ((set >> m.shift) & m.low);
    }

    /// Index of a gate in this set; Toffoli controls may be given in either order.
    size_t index_of(const Gate &g) const;

   private:
    struct Move {
        uint64_t stay;
        uint64_t low;
        uint32_t shift;
    };
    uint32_t num_qubits_;
    std::vector<Gate> gates_;
    std::vector<Move> moves_;
};

/// Mask of the Hamming ball of radius e around 0 in F_2^n.
StateSet ball_mask(uint32_t n, uint32_t e);

/// Mask of the states that vanish on every given wire.
StateSet vanishing_mask(uint32_t n, const std::vector<uint32_t> &wires);

struct SearchOptions {
    /// The k outputs are wires output_wire, output_wire + 1, ..., output_wire + k - 1.
    uint32_t output_wire = 0;
    uint32_t max_length = 12;
    /// List every minimal gate sequence instead of one witness.
    bool enumerate_all = false;
    /// Cap on the number of circuits listed when enumerate_all is set.
    size_t max_listed = 1'000'000;
    bool parallel = true;
};

struct SearchStats {
    size_t forward_sets = 0;
    size_t backward_sets = 0;
    size_t backward_seeds = 0;
    bool bidirectional = true;
};

struct SearchOutcome {
    bool found = false;
    uint32_t min_length = 0;
    /// Flat gate sequences, each mapping the ball into the target space.
    std::vector<std::vector<Gate>> circuits;
    /// Number of distinct gate sequences of minimal length (decimal string;
    /// can exceed 64 bits for long searches).
    std::string count = "0";
    std::vector<uint32_t> outputs;
    SearchStats stats;
};

/// Meet-in-the-middle search over sets of basis states.
///
/// Forward layers are images of the ball B(0, e); backward layers grow from
/// the size-|B(0, e)| subsets of the target space (a single set when the
/// counting bound is tight). Both sides are breadth-first, deduplicated by
/// set, so the first layer where they meet gives the minimal length. Since
/// every gate is an involution, predecessors are recovered by re-applying
/// gates. When the number of backward seeds exceeds MAX_BACKWARD_SEEDS the
/// search runs forward only and tests each new set for containment.
///
/// Throws ResourceError when n exceeds MAX_SEARCH_QUBITS or the visited sets
/// outgrow MAX_VISITED_SETS, and ContractError
/// when the parameters are infeasible.
SearchOutcome meet_in_middle(const PurificationParams &params, const SearchOptions &options);

struct EquivalenceClass {
    size_t size = 0;
    /// Index into the outcome's circuit list of the smallest member.
    size_t representative = 0;
};

/// Partitions the listed circuits into orbits under permutations of the
/// non-output wires and swaps of adjacent commuting gates. Classes are
/// sorted by decreasing size.
std::vector<EquivalenceClass> classify_minimal(const SearchOutcome &outcome, uint32_t num_qubits);

}  // namespace purify

#endif

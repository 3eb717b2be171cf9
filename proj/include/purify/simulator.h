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

#ifndef PURIFY_SIMULATOR_H
#define PURIFY_SIMULATOR_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "purify/circuit.h"
#include "purify/polynomial.h"

namespace purify {

enum class Kernel {
    /// Dense for small registers, sparse otherwise.
    Auto,
    /// One coefficient row per basis state; parallel over cosets of each gate.
    Dense,
    /// Rows only for states that can carry weight.
    Sparse,
    /// Direct serial transcription of the update rule on arbitrary precision
    /// maps. For tests.
    Reference,
};

struct SimulationOptions {
    Caps caps = Caps::unlimited();
    Kernel kernel = Kernel::Auto;
    /// Upper limit on coefficient storage in bytes.
    size_t memory_budget = size_t{3} << 30;
};

/// Fault-location counts of a circuit: n, then idle, CNOT and Toffoli gates.
/// Throws UnsupportedGateError if the circuit contains MCX gates.
FaultCounts fault_counts(const Circuit &circuit);

class DistributionStore;

/// The noisy output distribution of a circuit: for every basis state, the
/// probability of ending there as a polynomial in the failure-count basis.
class Distribution {
   public:
    Distribution(std::shared_ptr<const DistributionStore> store, uint32_t num_qubits, FaultCounts counts, Caps caps);

    uint32_t num_qubits() const {
        return num_qubits_;
    }
    const FaultCounts &counts() const {
        return counts_;
    }
    /// Effective caps, clamped to the counts.
    const Caps &caps() const {
        return caps_;
    }
    /// Name of the integer type used for the coefficients.
    std::string coefficient_type() const;

    /// States with at least one non-zero coefficient, ascending.
    std::vector<BasisState> support() const;
    SparsePolynomial state_polynomial(BasisState state) const;
    /// Sum over all states. Equals the untruncated mass per exponent vector.
    SparsePolynomial total_mass() const;
    /// Expected number of set bits among `outputs`, divided by their count.
    SparsePolynomial output_error_polynomial(const std::vector<uint32_t> &outputs) const;

   private:
    std::shared_ptr<const DistributionStore> store_;
    uint32_t num_qubits_;
    FaultCounts counts_;
    Caps caps_;
};

/// Propagates the noise model through a scheduled circuit.
///
/// Every qubit is prepared with a flip of probability p0. Each gate G on a
/// qubit set Q then maps the distribution to
///
///     mu'(x) = (1 - p_G) mu(G x) + p_G / 2^|Q| * sum_{v in F_2^Q} mu(x + v),
///
/// kept in the failure-count basis so both branches are integer moves. Runs
/// with more failures of a type than its cap are dropped. Idle noise comes
/// only from explicit Idle gates; a qubit missing from a round is untouched,
/// as in a light cone after the qubit has stopped mattering.
///
/// Throws UnsupportedGateError for MCX gates and ResourceError when storage
/// would exceed the memory budget.
Distribution simulate(const Circuit &circuit, const SimulationOptions &options = {});

/// Output error polynomial with caps raised until its leading order is exact
/// (see leading_order_certain). Starts from caps of 1 per type.
SparsePolynomial leading_order_polynomial(const Circuit &circuit, Kernel kernel = Kernel::Auto);

/// Caps large enough that the truncation bound stays below `tolerance` for all
/// rates up to `worst`. The preparation cap always covers every qubit.
Caps caps_for(const Circuit &circuit, const ErrorParams &worst, double tolerance);

/// Turns the output polynomial of a light cone into that of the circuit it was
/// cut from: failures at fault locations outside the cone are summed out.
/// Both polynomials must be computed with the same raw caps; `full` holds the
/// counts of the full circuit.
SparsePolynomial embed_light_cone(const SparsePolynomial &cone, const FaultCounts &full, const Caps &caps);

}  // namespace purify

#endif

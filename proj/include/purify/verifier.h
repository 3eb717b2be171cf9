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

#ifndef PURIFY_VERIFIER_H
#define PURIFY_VERIFIER_H

#include <cstdint>
#include <optional>
#include <vector>

#include "purify/circuit.h"

namespace purify {

/// (n, k, e): n qubits, k nominated outputs, protection against e input errors.
struct PurificationParams {
    uint32_t n = 0;
    uint32_t k = 0;
    uint32_t e = 0;

    /// Throws ContractError unless 1 <= n <= 64, k <= n and e <= n.
    void validate() const;
};

/// Binomial coefficient, saturating at UINT64_MAX.
uint64_t binomial(uint64_t n, uint64_t k);

/// Size of the Hamming ball of radius e in F_2^n, saturating.
uint64_t ball_size(uint32_t n, uint32_t e);

/// Counting bound: sum_{i<=e} C(n, i) <= 2^(n-k).
bool feasible(const PurificationParams &params);

struct PurificationCheck {
    bool ok = true;
    /// Least-weight failing input, numerically least among ties.
    std::optional<BasisState> counterexample;
};

/// Checks that every input of weight <= e is mapped to a state that is zero on
/// all output qubits. Parallel over the inputs of each weight.
PurificationCheck verify_purification(const Circuit &circuit, uint32_t e);

/// Direct loop over all 2^n inputs. Kept as the reference for tests.
PurificationCheck verify_purification_serial(const Circuit &circuit, uint32_t e);

struct FaultViolation {
    BasisState pattern = 0;
    uint32_t input_weight = 0;
    uint32_t output_weight = 0;
    bool operator==(const FaultViolation &other) const = default;
};

struct FaultToleranceReport {
    bool tolerant = true;
    /// Sorted by input weight, then pattern value.
    std::vector<FaultViolation> violations;
};

/// Upper limit on the number of input patterns verify_fault_tolerance will enumerate.
constexpr uint64_t MAX_FAULT_PATTERNS = uint64_t{1} << 28;

/// For every input pattern of weight a <= b, counts errors on the output qubits
/// and reports patterns producing more than a. Throws ResourceError when the
/// pattern count exceeds MAX_FAULT_PATTERNS.
FaultToleranceReport verify_fault_tolerance(const Circuit &circuit, uint32_t b);

FaultToleranceReport verify_fault_tolerance_serial(const Circuit &circuit, uint32_t b);

}  // namespace purify

#endif

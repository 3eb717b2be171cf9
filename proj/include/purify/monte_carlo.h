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


#ifndef PURIFY_MONTE_CARLO_H
#define PURIFY_MONTE_CARLO_H

#include <cstdint>

#include "purify/circuit.h"
#include "purify/polynomial.h"

namespace purify {

struct MonteCarloResult {
    uint64_t trials = 0;
    /// Mean number of output errors divided by the number of outputs.
    double mean = 0;
    double standard_error = 0;
};

/// Trials per independently seeded block. Block b draws from an mt19937_64
/// seeded with (seed, b), so results do not depend on the thread count.
constexpr uint64_t MONTE_CARLO_BLOCK = 1 << 14;

/// Samples the noise model directly: each qubit starts flipped with
/// probability p0, and each gate either acts or, with its failure rate,
/// flips every qubit it touches independently with probability 1/2.
///
/// Throws ContractError for zero trials or bad rates and
/// UnsupportedGateError for MCX gates.
MonteCarloResult monte_carlo(const Circuit &circuit, const ErrorParams &params, uint64_t trials, uint64_t seed);

}  // namespace purify

#endif

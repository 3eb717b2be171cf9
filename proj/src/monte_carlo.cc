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


#include "purify/monte_carlo.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "purify/errors.h"
#include "purify/parallel.h"

namespace purify {

namespace {

/// Bernoulli(p) on raw 64-bit draws.
struct Coin {
    uint64_t threshold = 0;
    bool always = false;

    explicit Coin(double p) {
        if (p >= 1) {
            always = true;
        } else if (p > 0) {
            threshold = static_cast<uint64_t>(std::ldexp(p, 64));
        }
    }
    bool flip(std::mt19937_64 &rng) const {
        return always || rng() < threshold;
    }
};

struct NoisyGate {
    GateMasks masks;
    uint64_t support;
    uint32_t type;
};

struct Tally {
    uint64_t errors = 0;
    uint64_t squares = 0;
};

Tally run_block(
    const std::vector<NoisyGate> &gates, const std::array<Coin, NUM_ERROR_TYPES> &coins, uint32_t num_qubits,
    uint64_t output_mask, uint64_t trials, uint64_t seed, uint64_t block) {
    std::seed_seq seq{seed & 0xFFFFFFFF, seed >> 32, block & 0xFFFFFFFF, block >> 32};
    std::mt19937_64 rng(seq);
    Tally tally;
    for (uint64_t t = 0; t < trials; t++) {
        BasisState s = 0;
        for (uint32_t q = 0; q < num_qubits; q++) {
            if (coins[PREP].flip(rng)) {
                s |= uint64_t{1} << q;
            }
        }
        for (const NoisyGate &g : gates) {
            if (coins[g.type].flip(rng)) {
                s ^= rng() & g.support;
            } else {
                s = g.masks.apply(s);
            }
        }
        uint64_t w = std::popcount(s & output_mask);
        tally.errors += w;
        tally.squares += w * w;
    }
    return tally;
}

}  // namespace

MonteCarloResult monte_carlo(const Circuit &circuit, const ErrorParams &params, uint64_t trials, uint64_t seed) {
    if (trials == 0) {
        throw ContractError("monte carlo needs at least one trial");
    }
    if (circuit.outputs.empty()) {
        throw ContractError("circuit has no outputs");
    }
    params.validate();
    circuit.validate();

    std::vector<NoisyGate> gates;
    for (const Gate &g : circuit.flat_gates(true)) {
        uint32_t type = IDLE;
        switch (g.kind) {
            case GateKind::Idle:
                type = IDLE;
                break;
            case GateKind::CNot:
                type = CNOT;
                break;
            case GateKind::Toffoli:
                type = TOFFOLI;
                break;
            case GateKind::MultiX:
                throw UnsupportedGateError("MCX gates have no failure rate");
        }
        GateMasks masks{g.control_mask(), g.kind == GateKind::Idle ? 0 : uint64_t{1} << g.target};
        gates.push_back({masks, g.support_mask(), type});
    }
    std::array<Coin, NUM_ERROR_TYPES> coins{Coin(params.p0), Coin(params.pI), Coin(params.pC), Coin(params.pT)};
    uint64_t output_mask = circuit.output_mask();

    uint64_t blocks = (trials + MONTE_CARLO_BLOCK - 1) / MONTE_CARLO_BLOCK;
    std::vector<Tally> tallies(blocks);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (uint64_t b = 0; b < blocks; b++) {
        uint64_t n = std::min(MONTE_CARLO_BLOCK, trials - b * MONTE_CARLO_BLOCK);
        tallies[b] = run_block(gates, coins, circuit.num_qubits, output_mask, n, seed, b);
    }

    uint64_t errors = 0;
    uint64_t squares = 0;
    for (const Tally &t : tallies) {
        errors += t.errors;
        squares += t.squares;
    }
    double k = static_cast<double>(circuit.outputs.size());
    double n = static_cast<double>(trials);
    MonteCarloResult result;
    result.trials = trials;
    double mean_count = errors / n;
    result.mean = mean_count / k;
    if (trials > 1) {
        double variance = (squares - n * mean_count * mean_count) / (n - 1);
        result.standard_error = std::sqrt(std::max(variance, 0.0) / n) / k;
    }
    return result;
}

}  // namespace purify

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

#include "purify/verifier.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>

#include "purify/errors.h"
#include "purify/parallel.h"

namespace purify {

namespace {

std::vector<GateMasks> compile(const Circuit &circuit) {
    std::vector<GateMasks> result;
    for (const Gate &g : circuit.flat_gates()) {
        result.push_back({g.control_mask(), uint64_t{1} << g.target});
    }
    return result;
}

BasisState run(const std::vector<GateMasks> &gates, BasisState s) {
    for (const GateMasks &m : gates) {
        s = m.apply(s);
    }
    return s;
}

BasisState next_of_same_weight(BasisState s) {
    BasisState c = s & (~s + 1);
    BasisState r = s + c;
    if (r == 0) {
        return 0;
    }
    return (((r ^ s) >> 2) / c) | r;
}

/// The word of weight w with the given rank in increasing numeric order.
BasisState unrank_of_weight(uint32_t w, uint64_t rank) {
    BasisState s = 0;
    for (uint32_t i = w; i >= 1; i--) {
        uint32_t c = i - 1;
        while (binomial(c + 1, i) <= rank) {
            c++;
        }
        s |= uint64_t{1} << c;
        rank -= binomial(c, i);
    }
    return s;
}

/// Calls f on every n-bit word of weight w in increasing numeric order.
template <typename F>
void for_each_of_weight(uint32_t n, uint32_t w, F &&f) {
    if (w > n) {
        return;
    }
    uint64_t count = binomial(n, w);
    BasisState s = unrank_of_weight(w, 0);
    for (uint64_t i = 0; i < count; i++) {
        f(s);
        s = next_of_same_weight(s);
    }
}

constexpr uint64_t CHUNK = 4096;

/// Splits the words of weight w into chunks and calls f(chunk, word) from
/// parallel threads; words inside one chunk arrive in increasing order.
template <typename F>
void parallel_for_each_of_weight(uint32_t n, uint32_t w, F &&f) {
    if (w > n) {
        return;
    }
    uint64_t count = binomial(n, w);
    auto chunks = static_cast<int64_t>((count + CHUNK - 1) / CHUNK);
#pragma omp parallel for num_threads(thread_count()) schedule(dynamic)
    for (int64_t chunk = 0; chunk < chunks; chunk++) {
        uint64_t begin = static_cast<uint64_t>(chunk) * CHUNK;
        uint64_t end = std::min(count, begin + CHUNK);
        BasisState s = unrank_of_weight(w, begin);
        for (uint64_t i = begin; i < end; i++) {
            f(s);
            s = next_of_same_weight(s);
        }
    }
}

void check_purification_args(const Circuit &circuit, uint32_t e) {
    if (circuit.outputs.empty()) {
        throw ContractError("purification check needs at least one output qubit");
    }
    if (e > circuit.num_qubits) {
        throw ContractError("e exceeds the number of qubits");
    }
}

uint64_t pattern_count(uint32_t n, uint32_t b) {
    uint64_t total = 0;
    for (uint32_t a = 0; a <= b && a <= n; a++) {
        uint64_t c = binomial(n, a);
        if (c > MAX_FAULT_PATTERNS || total + c > MAX_FAULT_PATTERNS) {
            return MAX_FAULT_PATTERNS + 1;
        }
        total += c;
    }
    return total;
}

}  // namespace

void PurificationParams::validate() const {
    if (n < 1 || n > MAX_QUBITS) {
        throw ContractError("n must be between 1 and 64");
    }
    if (k > n || e > n) {
        throw ContractError("k and e must not exceed n");
    }
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (uint64_t i = 1; i <= k; i++) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<uint64_t>::max()) {
            return std::numeric_limits<uint64_t>::max();
        }
    }
    return static_cast<uint64_t>(result);
}

uint64_t ball_size(uint32_t n, uint32_t e) {
    uint64_t total = 0;
    for (uint32_t i = 0; i <= e && i <= n; i++) {
        uint64_t c = binomial(n, i);
        if (total > std::numeric_limits<uint64_t>::max() - c) {
            return std::numeric_limits<uint64_t>::max();
        }
        total += c;
    }
    return total;
}

bool feasible(const PurificationParams &params) {
    params.validate();
    uint32_t free_bits = params.n - params.k;
    uint64_t ball = ball_size(params.n, params.e);
    if (free_bits >= 64) {
        return true;
    }
    return ball <= (uint64_t{1} << free_bits);
}

PurificationCheck verify_purification(const Circuit &circuit, uint32_t e) {
    check_purification_args(circuit, e);
    auto gates = compile(circuit);
    uint64_t out = circuit.output_mask();
    uint32_t n = circuit.num_qubits;

    for (uint32_t w = 0; w <= e && w <= n; w++) {
        BasisState best = std::numeric_limits<BasisState>::max();
        bool found = false;
        parallel_for_each_of_weight(n, w, [&](BasisState s) {
            if ((run(gates, s) & out) != 0) {
#pragma omp critical(purify_best)
                {
                    found = true;
                    best = std::min(best, s);
                }
            }
        });
        if (found) {
            return {false, best};
        }
    }
    return {};
}

PurificationCheck verify_purification_serial(const Circuit &circuit, uint32_t e) {
    check_purification_args(circuit, e);
    uint64_t out = circuit.output_mask();
    for (uint32_t w = 0; w <= e; w++) {
        std::optional<BasisState> found;
        for_each_of_weight(circuit.num_qubits, w, [&](BasisState s) {
            if (!found && (circuit.apply(s) & out) != 0) {
                found = s;
            }
        });
        if (found) {
            return {false, found};
        }
    }
    return {};
}

FaultToleranceReport verify_fault_tolerance(const Circuit &circuit, uint32_t b) {
    uint32_t n = circuit.num_qubits;
    if (b > n) {
        throw ContractError("b exceeds the number of qubits");
    }
    if (pattern_count(n, b) > MAX_FAULT_PATTERNS) {
        throw ResourceError("fault-tolerance check would enumerate more than 2^28 patterns");
    }
    auto gates = compile(circuit);
    uint64_t out = circuit.output_mask();
    FaultToleranceReport report;

    auto check = [&](BasisState s, std::vector<FaultViolation> &sink) {
        uint32_t in_w = static_cast<uint32_t>(std::popcount(s));
        uint32_t out_w = static_cast<uint32_t>(std::popcount(run(gates, s) & out));
        if (out_w > in_w) {
            sink.push_back({s, in_w, out_w});
        }
    };

    int threads = thread_count();
    std::vector<std::vector<FaultViolation>> per_thread(threads);
    for (uint32_t a = 0; a <= b; a++) {
        parallel_for_each_of_weight(n, a, [&](BasisState s) { check(s, per_thread[omp_get_thread_num()]); });
    }
    for (auto &v : per_thread) {
        report.violations.insert(report.violations.end(), v.begin(), v.end());
    }
    std::sort(report.violations.begin(), report.violations.end(), [](const auto &x, const auto &y) {
        return std::tie(x.input_weight, x.pattern) < std::tie(y.input_weight, y.pattern);
    });
    report.tolerant = report.violations.empty();
    return report;
}

FaultToleranceReport verify_fault_tolerance_serial(const Circuit &circuit, uint32_t b) {
    uint32_t n = circuit.num_qubits;
    if (b > n) {
        throw ContractError("b exceeds the number of qubits");
    }
    if (pattern_count(n, b) > MAX_FAULT_PATTERNS) {
        throw ResourceError("fault-tolerance check would enumerate more than 2^28 patterns");
    }
    uint64_t out = circuit.output_mask();
    FaultToleranceReport report;
    for (uint32_t a = 0; a <= b; a++) {
        for_each_of_weight(n, a, [&](BasisState s) {
            auto out_w = static_cast<uint32_t>(std::popcount(circuit.apply(s) & out));
            if (out_w > a) {
                report.violations.push_back({s, a, out_w});
            }
        });
    }
    report.tolerant = report.violations.empty();
    return report;
}

}  // namespace purify

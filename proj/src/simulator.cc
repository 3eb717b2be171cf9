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

#include "purify/simulator.h"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <numeric>
#include <type_traits>

#include "purify/errors.h"
#include "purify/parallel.h"
#include "purify/verifier.h"

namespace purify {

namespace {

using u128 = unsigned __int128;
using boost::multiprecision::uint1024_t;
using boost::multiprecision::uint256_t;
using boost::multiprecision::uint512_t;

template <typename T>
Coefficient to_coefficient(const T &x) {
    if constexpr (std::is_same_v<T, Coefficient>) {
        return x;
    } else if constexpr (std::is_same_v<T, u128>) {
        Coefficient hi = static_cast<uint64_t>(x >> 64);
        return (hi << 64) | Coefficient(static_cast<uint64_t>(x));
    } else if constexpr (std::is_integral_v<T>) {
        return Coefficient(x);
    } else {
        return static_cast<Coefficient>(x);
    }
}

template <typename T>
const char *type_name() {
    if constexpr (std::is_same_v<T, uint64_t>) {
        return "uint64";
    } else if constexpr (std::is_same_v<T, u128>) {
        return "uint128";
    } else if constexpr (std::is_same_v<T, uint256_t>) {
        return "uint256";
    } else if constexpr (std::is_same_v<T, uint512_t>) {
        return "uint512";
    } else if constexpr (std::is_same_v<T, uint1024_t>) {
        return "uint1024";
    } else {
        return "bigint";
    }
}

/// Row layout: one slot per exponent vector within the caps, f3 fastest.
struct Layout {
    std::array<uint32_t, NUM_ERROR_TYPES> cap{};
    std::array<size_t, NUM_ERROR_TYPES> stride{};
    size_t width = 1;

    explicit Layout(const Caps &caps) {
        for (int i = NUM_ERROR_TYPES - 1; i >= 0; i--) {
            cap[i] = caps.f[i];
            stride[i] = width;
            width *= static_cast<size_t>(cap[i]) + 1;
        }
    }
    size_t index(const ExponentVector &f) const {
        size_t idx = 0;
        for (size_t i = 0; i < NUM_ERROR_TYPES; i++) {
            idx += f[i] * stride[i];
        }
        return idx;
    }
    /// Calls fn(index, f) for every f with f_i <= lim_i.
    template <typename F>
    void for_each(const std::array<uint32_t, NUM_ERROR_TYPES> &lim, F &&fn) const {
        ExponentVector f;
        for (f[0] = 0; f[0] <= lim[0]; f[0]++) {
            for (f[1] = 0; f[1] <= lim[1]; f[1]++) {
                for (f[2] = 0; f[2] <= lim[2]; f[2]++) {
                    size_t base = f[0] * stride[0] + f[1] * stride[1] + f[2] * stride[2];
                    for (f[3] = 0; f[3] <= lim[3]; f[3]++) {
                        fn(base + f[3], f);
                    }
                }
            }
        }
    }
};

}  // namespace

class DistributionStore {
   public:
    virtual ~DistributionStore() = default;
    virtual std::string type_name() const = 0;
    virtual std::vector<BasisState> support() const = 0;
    virtual SparsePolynomial weighted_sum(
        const std::function<uint32_t(BasisState)> &weight, const FaultCounts &counts, const Caps &caps,
        uint32_t divisor) const = 0;
};

namespace {

template <typename T>
class Store final : public DistributionStore {
   public:
    Store(Layout layout, bool dense, std::vector<BasisState> states, std::vector<T> coefs)
        : layout_(layout), dense_(dense), states_(std::move(states)), coefs_(std::move(coefs)) {
    }

    std::string type_name() const override {
        return purify::type_name<T>();
    }

    size_t rows() const {
        return coefs_.size() / layout_.width;
    }
    BasisState state_of(size_t row) const {
        return dense_ ? row : states_[row];
    }
    const T *row(size_t r) const {
        return coefs_.data() + r * layout_.width;
    }
    bool row_nonzero(size_t r) const {
        const T *p = row(r);
        return std::any_of(p, p + layout_.width, [](const T &x) { return x != 0; });
    }

    std::vector<BasisState> support() const override {
        std::vector<BasisState> out;
        for (size_t r = 0; r < rows(); r++) {
            if (row_nonzero(r)) {
                out.push_back(state_of(r));
            }
        }
        return out;
    }

    SparsePolynomial weighted_sum(
        const std::function<uint32_t(BasisState)> &weight, const FaultCounts &counts, const Caps &caps,
        uint32_t divisor) const override {
        std::vector<T> acc(layout_.width);
        for (size_t r = 0; r < rows(); r++) {
            uint32_t w = weight(state_of(r));
            if (w == 0) {
                continue;
            }
            const T *p = row(r);
            T tw = static_cast<T>(w);
            for (size_t i = 0; i < layout_.width; i++) {
                if (p[i] != 0) {
                    acc[i] += tw * p[i];
                }
            }
        }
        SparsePolynomial poly(counts, caps, divisor);
        layout_.for_each(layout_.cap, [&](size_t idx, const ExponentVector &f) {
            if (acc[idx] != 0) {
                poly.add(f, to_coefficient(acc[idx]));
            }
        });
        return poly;
    }

   private:
    Layout layout_;
    bool dense_;
    std::vector<BasisState> states_;
    std::vector<T> coefs_;
};

uint32_t error_type(const Gate &g) {
    switch (g.kind) {
        case GateKind::Idle:
            return IDLE;
        case GateKind::CNot:
            return CNOT;
        case GateKind::Toffoli:
            return TOFFOLI;
        default:
            throw UnsupportedGateError("the noise model has no failure rate for " + g.str());
    }
}

/// A gate prepared for the kernels: its support Q, the 2^|Q| offsets spanning
/// F_2^Q, and where the gate sends each offset.
struct CompiledGate {
    uint32_t type;
    uint64_t support;
    std::vector<uint64_t> offsets;
    std::vector<uint32_t> perm;

    explicit CompiledGate(const Gate &g) : type(error_type(g)), support(g.support_mask()) {
        std::vector<uint32_t> bits;
        for (uint64_t m = support; m; m &= m - 1) {
            bits.push_back(static_cast<uint32_t>(std::countr_zero(m)));
        }
        uint32_t size = uint32_t{1} << bits.size();
        for (uint32_t v = 0; v < size; v++) {
            uint64_t off = 0;
            for (size_t b = 0; b < bits.size(); b++) {
                if ((v >> b) & 1) {
                    off |= uint64_t{1} << bits[b];
                }
            }
            offsets.push_back(off);
        }
        for (uint32_t v = 0; v < size; v++) {
            uint64_t image = g.apply(offsets[v]);
            perm.push_back(static_cast<uint32_t>(std::find(offsets.begin(), offsets.end(), image) - offsets.begin()));
        }
    }
};

/// One coset of F_2^Q: out[v] = in[perm[v]] + shift_type(sum_w in[w]).
template <typename T>
void update_coset(
    const Layout &layout, const std::array<uint32_t, NUM_ERROR_TYPES> &lim, const CompiledGate &gate, bool can_fail,
    const std::vector<const T *> &in, const std::vector<T *> &out, std::vector<T> &sum) {
    const size_t m = in.size();
    const size_t step = layout.stride[gate.type];
    if (can_fail) {
        layout.for_each(lim, [&](size_t idx, const ExponentVector &) {
            T s = 0;
            for (size_t v = 0; v < m; v++) {
                if (in[v]) {
                    s += in[v][idx];
                }
            }
            sum[idx] = s;
        });
    }
    for (size_t v = 0; v < m; v++) {
        const T *src = in[gate.perm[v]];
        T *dst = out[v];
        layout.for_each(lim, [&](size_t idx, const ExponentVector &f) {
            T x = src ? src[idx] : T(0);
            if (can_fail && f[gate.type] > 0) {
                x += sum[idx - step];
            }
            dst[idx] = x;
        });
    }
}

struct Plan {
    uint32_t n;
    FaultCounts counts;
    Caps caps;
    Layout layout;
    std::vector<CompiledGate> gates;
};

Plan make_plan(const Circuit &circuit, const Caps &raw_caps) {
    circuit.validate();
    FaultCounts counts = fault_counts(circuit);
    Caps caps = counts.clamp(raw_caps);
    Plan plan{circuit.num_qubits, counts, caps, Layout(caps), {}};
    for (const Gate &g : circuit.flat_gates(true)) {
        plan.gates.emplace_back(g);
    }
    return plan;
}

template <typename T>
std::shared_ptr<const DistributionStore> run_dense(const Plan &plan, size_t budget) {
    const size_t width = plan.layout.width;
    const uint64_t states = uint64_t{1} << plan.n;
    if (plan.n > 30 || 2.0 * states * width * sizeof(T) > static_cast<double>(budget)) {
        throw ResourceError("dense simulation would exceed the memory budget");
    }
    std::vector<T> cur(states * width);
    std::vector<T> next(states * width);
    ExponentVector f0;
    for (uint64_t x = 0; x < states; x++) {
        f0[PREP] = static_cast<uint32_t>(std::popcount(x));
        if (f0[PREP] <= plan.caps.f[PREP]) {
            cur[x * width + plan.layout.index(f0)] = 1;
        }
    }
    std::array<uint32_t, NUM_ERROR_TYPES> applied{plan.n, 0, 0, 0};
    int threads = thread_count();
    for (const CompiledGate &gate : plan.gates) {
        applied[gate.type]++;
        std::array<uint32_t, NUM_ERROR_TYPES> lim;
        for (size_t i = 0; i < NUM_ERROR_TYPES; i++) {
            lim[i] = std::min(applied[i], plan.caps.f[i]);
        }
        bool can_fail = plan.caps.f[gate.type] > 0;
        const size_t m = gate.offsets.size();
        const int64_t total = static_cast<int64_t>(states);
#pragma omp parallel num_threads(threads)
        {
            std::vector<T> sum(width);
            std::vector<const T *> in(m);
            std::vector<T *> out(m);
#pragma omp for schedule(static)
            for (int64_t base = 0; base < total; base++) {
                if (static_cast<uint64_t>(base) & gate.support) {
                    continue;
                }
                for (size_t v = 0; v < m; v++) {
                    uint64_t x = static_cast<uint64_t>(base) | gate.offsets[v];
                    in[v] = cur.data() + x * width;
                    out[v] = next.data() + x * width;
                }
                update_coset(plan.layout, lim, gate, can_fail, in, out, sum);
            }
        }
        cur.swap(next);
    }
    return std::make_shared<Store<T>>(plan.layout, true, std::vector<BasisState>{}, std::move(cur));
}

template <typename T>
std::shared_ptr<const DistributionStore> run_sparse(const Plan &plan, size_t budget) {
    const size_t width = plan.layout.width;
    auto check_budget = [&](size_t rows) {
        if (static_cast<double>(rows) * width * sizeof(T) > static_cast<double>(budget)) {
            throw ResourceError("sparse simulation would exceed the memory budget");
        }
    };

    std::vector<BasisState> states;
    for (uint32_t w = 0; w <= plan.caps.f[PREP]; w++) {
        if (binomial(plan.n, w) > budget) {
            throw ResourceError("sparse simulation would exceed the memory budget");
        }
        // Gosper's hack over n-bit words of weight w.
        if (w == 0) {
            states.push_back(0);
            continue;
        }
        uint64_t s = (uint64_t{1} << w) - 1;
        while (plan.n == 64 || s < (uint64_t{1} << plan.n)) {
            states.push_back(s);
            uint64_t c = s & (~s + 1);
            uint64_t r = s + c;
            if (r == 0) {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    std::sort(states.begin(), states.end());
    check_budget(states.size());
    std::vector<T> coefs(states.size() * width);
    for (size_t r = 0; r < states.size(); r++) {
        ExponentVector f;
        f[PREP] = static_cast<uint32_t>(std::popcount(states[r]));
        coefs[r * width + plan.layout.index(f)] = 1;
    }

    std::array<uint32_t, NUM_ERROR_TYPES> applied{plan.n, 0, 0, 0};
    int threads = thread_count();
    for (const CompiledGate &gate : plan.gates) {
        applied[gate.type]++;
        std::array<uint32_t, NUM_ERROR_TYPES> lim;
        for (size_t i = 0; i < NUM_ERROR_TYPES; i++) {
            lim[i] = std::min(applied[i], plan.caps.f[i]);
        }
        bool can_fail = plan.caps.f[gate.type] > 0;
        const size_t m = gate.offsets.size();

        std::vector<BasisState> cosets;
        cosets.reserve(states.size());
        for (BasisState s : states) {
            cosets.push_back(s & ~gate.support);
        }
        std::sort(cosets.begin(), cosets.end());
        cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
        check_budget(states.size() + cosets.size() * m);

        std::vector<T> next(cosets.size() * m * width);
        const int64_t count = static_cast<int64_t>(cosets.size());
#pragma omp parallel num_threads(threads)
        {
            std::vector<T> sum(width);
            std::vector<const T *> in(m);
            std::vector<T *> out(m);
#pragma omp for schedule(dynamic, 16)
            for (int64_t c = 0; c < count; c++) {
                for (size_t v = 0; v < m; v++) {
                    BasisState x = cosets[c] | gate.offsets[v];
                    auto it = std::lower_bound(states.begin(), states.end(), x);
                    in[v] = (it != states.end() && *it == x) ? coefs.data() + (it - states.begin()) * width : nullptr;
                    out[v] = next.data() + (c * m + v) * width;
                }
                update_coset(plan.layout, lim, gate, can_fail, in, out, sum);
            }
        }

        std::vector<std::pair<BasisState, size_t>> kept;
        for (size_t r = 0; r < cosets.size() * m; r++) {
            const T *p = next.data() + r * width;
            if (std::any_of(p, p + width, [](const T &x) { return x != 0; })) {
                kept.emplace_back(cosets[r / m] | gate.offsets[r % m], r);
            }
        }
        std::sort(kept.begin(), kept.end());
        states.clear();
        coefs.assign(kept.size() * width, T(0));
        for (size_t i = 0; i < kept.size(); i++) {
            states.push_back(kept[i].first);
            std::copy_n(next.data() + kept[i].second * width, width, coefs.data() + i * width);
        }
    }
    return std::make_shared<Store<T>>(plan.layout, false, std::move(states), std::move(coefs));
}

/// Serial transcription of the update rule on maps of arbitrary precision
/// coefficients, looping over all 2^n states.
std::shared_ptr<const DistributionStore> run_reference(const Plan &plan) {
    if (plan.n > 16) {
        throw ResourceError("the reference simulator is limited to 16 qubits");
    }
    using Poly = std::map<ExponentVector, Coefficient>;
    const uint64_t states = uint64_t{1} << plan.n;
    std::vector<Poly> mu(states);
    for (uint64_t x = 0; x < states; x++) {
        ExponentVector f;
        f[PREP] = static_cast<uint32_t>(std::popcount(x));
        if (f[PREP] <= plan.caps.f[PREP]) {
            mu[x][f] = 1;
        }
    }
    for (const CompiledGate &gate : plan.gates) {
        // The gate as a map on states: G only changes bits inside its support.
        auto apply = [&](uint64_t x) {
            uint64_t inside = x & gate.support;
            size_t v = std::find(gate.offsets.begin(), gate.offsets.end(), inside) - gate.offsets.begin();
            return (x & ~gate.support) | gate.offsets[gate.perm[v]];
        };
        std::vector<Poly> next(states);
        for (uint64_t x = 0; x < states; x++) {
            next[x] = mu[apply(x)];
            for (uint64_t off : gate.offsets) {
                for (const auto &[f, c] : mu[x ^ off]) {
                    ExponentVector g = f;
                    g[gate.type]++;
                    if (g[gate.type] <= plan.caps.f[gate.type]) {
                        next[x][g] += c;
                    }
                }
            }
        }
        mu.swap(next);
    }
    std::vector<BasisState> kept;
    std::vector<Coefficient> coefs;
    for (uint64_t x = 0; x < states; x++) {
        if (mu[x].empty()) {
            continue;
        }
        kept.push_back(x);
        size_t base = coefs.size();
        coefs.resize(base + plan.layout.width);
        for (const auto &[f, c] : mu[x]) {
            coefs[base + plan.layout.index(f)] = c;
        }
    }
    return std::make_shared<Store<Coefficient>>(plan.layout, false, std::move(kept), std::move(coefs));
}

/// Bits needed for every intermediate coefficient: each is at most the total
/// mass n * prod_i max_f C(g_i, f) m_i^f.
size_t coefficient_bits(const Plan &plan) {
    Coefficient bound = std::max<uint32_t>(plan.n, 1);
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        Coefficient best = 0;
        Coefficient power = 1;
        for (uint32_t f = 0; f <= plan.caps.f[i]; f++) {
            Coefficient c = Coefficient(binomial(plan.counts.g[i], f)) * power;
            best = std::max(best, c);
            power *= FAILURE_BRANCHES[i];
        }
        bound *= best;
    }
    return boost::multiprecision::msb(bound) + 1;
}

template <typename T>
std::shared_ptr<const DistributionStore> run_kernel(const Plan &plan, Kernel kernel, size_t budget) {
    if (kernel == Kernel::Auto) {
        double dense_bytes = 2.0 * std::ldexp(1.0, static_cast<int>(plan.n)) * plan.layout.width * sizeof(T);
        kernel = (plan.n <= 16 && dense_bytes <= static_cast<double>(budget)) ? Kernel::Dense : Kernel::Sparse;
    }
    if (kernel == Kernel::Dense) {
        return run_dense<T>(plan, budget);
    }
    return run_sparse<T>(plan, budget);
}

}  // namespace

FaultCounts fault_counts(const Circuit &circuit) {
    GateCounts c = circuit.counts();
    if (c.multi_x) {
        throw UnsupportedGateError("the noise model has no failure rate for MCX gates");
    }
    return FaultCounts{{circuit.num_qubits, static_cast<uint32_t>(c.idle), static_cast<uint32_t>(c.cnot),
                        static_cast<uint32_t>(c.toffoli)}};
}

Distribution::Distribution(std::shared_ptr<const DistributionStore> store, uint32_t num_qubits, FaultCounts counts, Caps caps)
    : store_(std::move(store)), num_qubits_(num_qubits), counts_(counts), caps_(counts.clamp(caps)) {
}

std::string Distribution::coefficient_type() const {
    return store_->type_name();
}

std::vector<BasisState> Distribution::support() const {
    return store_->support();
}

SparsePolynomial Distribution::state_polynomial(BasisState state) const {
    return store_->weighted_sum([state](BasisState x) { return x == state ? 1u : 0u; }, counts_, caps_, 1);
}

SparsePolynomial Distribution::total_mass() const {
    return store_->weighted_sum([](BasisState) { return 1u; }, counts_, caps_, 1);
}

SparsePolynomial Distribution::output_error_polynomial(const std::vector<uint32_t> &outputs) const {
    if (outputs.empty()) {
        throw ContractError("output error polynomial needs at least one output");
    }
    uint64_t mask = 0;
    for (uint32_t q : outputs) {
        if (q >= num_qubits_) {
            throw ContractError("output qubit out of range");
        }
        mask |= uint64_t{1} << q;
    }
    return store_->weighted_sum(
        [mask](BasisState x) { return static_cast<uint32_t>(std::popcount(x & mask)); }, counts_, caps_,
        static_cast<uint32_t>(outputs.size()));
}

Distribution simulate(const Circuit &circuit, const SimulationOptions &options) {
    Plan plan = make_plan(circuit, options.caps);
    std::shared_ptr<const DistributionStore> store;
    if (options.kernel == Kernel::Reference) {
        store = run_reference(plan);
    } else {
        size_t bits = coefficient_bits(plan);
        if (bits <= 64) {
            store = run_kernel<uint64_t>(plan, options.kernel, options.memory_budget);
        } else if (bits <= 128) {
            store = run_kernel<u128>(plan, options.kernel, options.memory_budget);
        } else if (bits <= 256) {
            store = run_kernel<uint256_t>(plan, options.kernel, options.memory_budget);
        } else if (bits <= 512) {
            store = run_kernel<uint512_t>(plan, options.kernel, options.memory_budget);
        } else if (bits <= 1024) {
            store = run_kernel<uint1024_t>(plan, options.kernel, options.memory_budget);
        } else {
            store = run_kernel<Coefficient>(plan, options.kernel, options.memory_budget);
        }
    }
    return Distribution(store, plan.n, plan.counts, plan.caps);
}

SparsePolynomial leading_order_polynomial(const Circuit &circuit, Kernel kernel) {
    if (circuit.outputs.empty()) {
        throw ContractError("circuit has no outputs");
    }
    Caps caps{{1, 1, 1, 1}};
    FaultCounts counts = fault_counts(circuit);
    while (true) {
        SimulationOptions options;
        options.caps = counts.clamp(caps);
        options.kernel = kernel;
        SparsePolynomial poly = simulate(circuit, options).output_error_polynomial(circuit.outputs);
        if (leading_order_certain(poly)) {
            return poly;
        }
        // Raise the cap of every type still lacking a pure power.
        bool raised = false;
        for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
            if (caps.f[i] >= counts.g[i]) {
                continue;
            }
            bool pure = false;
            for (const auto &[f, c] : poly.terms()) {
                bool only_i = true;
                for (uint32_t j = 0; j < NUM_ERROR_TYPES; j++) {
                    only_i &= j == i || f[j] == 0;
                }
                pure |= only_i;
            }
            if (!pure) {
                caps.f[i]++;
                raised = true;
            }
        }
        if (!raised) {
            return poly;
        }
    }
}

Caps caps_for(const Circuit &circuit, const ErrorParams &worst, double tolerance) {
    worst.validate();
    FaultCounts counts = fault_counts(circuit);
    Caps caps;
    caps.f[PREP] = counts.g[PREP];
    for (uint32_t i = IDLE; i < NUM_ERROR_TYPES; i++) {
        uint32_t cap = 0;
        while (cap < counts.g[i] && binomial_tail(counts.g[i], worst.rate(i), cap) > tolerance / 3) {
            cap++;
        }
        caps.f[i] = cap;
    }
    return caps;
}

SparsePolynomial embed_light_cone(const SparsePolynomial &cone, const FaultCounts &full, const Caps &caps) {
    SparsePolynomial out(full, caps, cone.divisor());
    const Caps limit = full.clamp(caps);
    std::array<uint32_t, NUM_ERROR_TYPES> outside{};
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        if (cone.counts().g[i] > full.g[i]) {
            throw ContractError("light cone has more fault locations than the full circuit");
        }
        outside[i] = full.g[i] - cone.counts().g[i];
    }
    // weight[i][d] = C(outside_i, d) m_i^d: ways for d failures outside the cone.
    std::array<std::vector<Coefficient>, NUM_ERROR_TYPES> weight;
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        Coefficient power = 1;
        for (uint32_t d = 0; d <= std::min(outside[i], limit.f[i]); d++) {
            weight[i].push_back(Coefficient(binomial(outside[i], d)) * power);
            power *= FAILURE_BRANCHES[i];
        }
    }
    for (const auto &[e, c] : cone.terms()) {
        std::array<uint32_t, NUM_ERROR_TYPES> room{};
        bool fits = true;
        for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
            fits &= e[i] <= limit.f[i];
            room[i] = fits ? std::min<uint32_t>(limit.f[i] - e[i], static_cast<uint32_t>(weight[i].size() - 1)) : 0;
        }
        if (!fits) {
            continue;
        }
        ExponentVector d;
        for (d[0] = 0; d[0] <= room[0]; d[0]++) {
            for (d[1] = 0; d[1] <= room[1]; d[1]++) {
                for (d[2] = 0; d[2] <= room[2]; d[2]++) {
                    for (d[3] = 0; d[3] <= room[3]; d[3]++) {
                        ExponentVector f;
                        Coefficient w = c;
                        for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
                            f[i] = e[i] + d[i];
                            w *= weight[i][d[i]];
                        }
                        out.add(f, w);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace purify

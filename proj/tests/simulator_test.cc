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

#include <gtest/gtest.h>

#include <random>

#include "purify/constructions.h"
#include "purify/errors.h"
#include "purify/parallel.h"
#include "purify/verifier.h"
#include "test_util.h"

using namespace purify;

namespace {

Circuit named(const std::string &name) {
    return build_named(NamedFamily::parse(name));
}

SparsePolynomial output_poly(const Circuit &c, Caps caps = Caps::unlimited(), Kernel kernel = Kernel::Auto) {
    SimulationOptions options;
    options.caps = caps;
    options.kernel = kernel;
    return simulate(c, options).output_error_polynomial(c.outputs);
}

SparsePolynomial perfect_poly(const Circuit &c) {
    return output_poly(c, Caps{{Caps::UNLIMITED, 0, 0, 0}});
}

std::string lead(const Circuit &c) {
    SparsePolynomial p = leading_order_polynomial(c);
    return format_monomials(leading_order(p), p.divisor());
}

/// C(n, f0) C(g1, f1) 2^f1 C(g2, f2) 4^f2 C(g3, f3) 8^f3.
Coefficient closed_form_mass(const FaultCounts &counts, const ExponentVector &f) {
    Coefficient total = 1;
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        total *= Coefficient(binomial(counts.g[i], f[i]));
        for (uint32_t j = 0; j < f[i]; j++) {
            total *= FAILURE_BRANCHES[i];
        }
    }
    return total;
}

void expect_mass_conserved(const Circuit &c) {
    Distribution d = simulate(c);
    SparsePolynomial mass = d.total_mass();
    const FaultCounts &g = d.counts();
    size_t expected_terms = 1;
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        expected_terms *= g.g[i] + 1;
    }
    EXPECT_EQ(mass.terms().size(), expected_terms);
    for (const auto &[f, coef] : mass.terms()) {
        EXPECT_EQ(coef, closed_form_mass(g, f));
    }
    Evaluation one = evaluate(mass, {0.1, 0.2, 0.3, 0.4});
    EXPECT_NEAR(one.value, 1.0, 1e-12);
}

}  // namespace

TEST(simulator, empty_one_qubit) {
    Circuit c = identity_circuit();
    Distribution d = simulate(c);
    EXPECT_EQ(d.support(), (std::vector<BasisState>{0, 1}));
    EXPECT_EQ(d.state_polynomial(0).terms().size(), 1u);
    EXPECT_EQ(d.state_polynomial(0).coefficient(ExponentVector{}), 1);
    EXPECT_EQ(d.state_polynomial(1).coefficient(ExponentVector{{1, 0, 0, 0}}), 1);
    SparsePolynomial out = d.output_error_polynomial(c.outputs);
    EXPECT_DOUBLE_EQ(evaluate(out, {0.3, 0, 0, 0}).value, 0.3);
    EXPECT_THROW(d.output_error_polynomial({}), ContractError);
}

TEST(simulator, three_one_one_values) {
    SparsePolynomial p = output_poly(named("three-one-one"));
    EXPECT_NEAR(evaluate(p, {0.02, 0.001, 0.003, 0.003}).value, 0.005, 0.0005);
    EXPECT_NEAR(evaluate(p, {0.01, 0.001, 0.003, 0.003}).value, 0.004, 0.0005);
    EXPECT_EQ(evaluate(p, {0, 0, 0, 0}).value, 0.0);
    auto a = perfect_gate_coefficients(p);
    EXPECT_EQ(a[0], 0);
    EXPECT_EQ(a[1], 0);
    EXPECT_EQ(a[2], 3);
}

TEST(simulator, leading_orders) {
    EXPECT_EQ(lead(named("three-one-one")), "3p0^2+4p0(pI/2)+(pI/2)^2+3(pC/4)+4(pT/8)");
    EXPECT_EQ(lead(named("five-one-two-b")), "10p0^3+(pI/2)+3(pC/4)+15(pT/8)");
    EXPECT_EQ(lead(identity_circuit()), "p0");
    EXPECT_EQ(format_monomials({}, 1), "0");
}

TEST(simulator, kernels_agree) {
    std::mt19937_64 rng(9);
    std::vector<Circuit> circuits{named("three-one-one"), named("five-one-two-a"), named("eight-two-two"),
                                  light_cone(named("cycle:10"), 9)};
    for (int i = 0; i < 4; i++) {
        auto gates = random_gates(rng, 5, 8);
        circuits.push_back(schedule(gates, 5, {0, 3}));
    }
    for (const Circuit &c : circuits) {
        Caps caps = Caps::defaults(c.num_qubits);
        caps.f = {caps.f[0], 2, 2, 2};
        SparsePolynomial ref = output_poly(c, caps, Kernel::Reference);
        EXPECT_EQ(output_poly(c, caps, Kernel::Dense), ref);
        EXPECT_EQ(output_poly(c, caps, Kernel::Sparse), ref);
    }
}

TEST(simulator, kernels_agree_on_every_state) {
    Circuit c = named("five-one-one");
    SimulationOptions options;
    options.caps = Caps{{3, 2, 2, 2}};
    options.kernel = Kernel::Reference;
    Distribution ref = simulate(c, options);
    options.kernel = Kernel::Dense;
    Distribution dense = simulate(c, options);
    options.kernel = Kernel::Sparse;
    Distribution sparse = simulate(c, options);
    EXPECT_EQ(dense.support(), ref.support());
    EXPECT_EQ(sparse.support(), ref.support());
    for (BasisState s : ref.support()) {
        EXPECT_EQ(dense.state_polynomial(s), ref.state_polynomial(s));
        EXPECT_EQ(sparse.state_polynomial(s), ref.state_polynomial(s));
    }
}

TEST(simulator, thread_count_does_not_matter) {
    Circuit c = named("eight-two-two");
    SimulationOptions options;
    options.caps = Caps{{8, 3, 3, 3}};
    set_thread_count(1);
    SparsePolynomial one = simulate(c, options).output_error_polynomial(c.outputs);
    set_thread_count(3);
    SparsePolynomial three = simulate(c, options).output_error_polynomial(c.outputs);
    set_thread_count(0);
    EXPECT_EQ(one, three);
}

TEST(simulator, mass_conservation) {
    for (const char *name : {"three-one-one", "five-one-one", "five-one-two-a", "five-one-two-b"}) {
        expect_mass_conserved(named(name));
    }
    expect_mass_conserved(light_cone(named("cycle:10"), 9));
}

TEST(simulator, purification_consistency) {
    for (const char *name : {"three-one-one", "five-one-one", "seven-one-two", "nine-one-three", "five-one-two-a",
                             "five-one-two-b", "eight-two-two", "hamming-seven-four-one"}) {
        NamedFamily f = NamedFamily::parse(name);
        auto a = perfect_gate_coefficients(perfect_poly(build_named(f)));
        for (uint32_t j = 0; j <= f.params().e; j++) {
            EXPECT_EQ(a[j], 0) << name << " j=" << j;
        }
    }
}

TEST(simulator, fixed_points) {
    for (const char *name : {"three-one-one", "five-one-one", "seven-one-two", "nine-one-three", "five-one-two-a",
                             "five-one-two-b", "eight-two-two", "hamming-seven-four-one", "path:4", "cycle:5"}) {
        Circuit c = named(name);
        SparsePolynomial p = perfect_poly(c);
        auto a = perfect_gate_coefficients(p);
        Coefficient sum = 0;
        for (const Coefficient &x : a) {
            sum += x;
        }
        // p_out(1/2) = sum a_j / 2^n / k.
        EXPECT_EQ(2 * sum, Coefficient(p.divisor()) << c.num_qubits) << name;
    }
    // At p0 = 1 only the all-ones input remains: p_out(1) = a_n / k.
    auto at_one = [](const Circuit &c) {
        SparsePolynomial p = perfect_poly(c);
        return std::make_pair(perfect_gate_coefficients(p).back(), p.divisor());
    };
    for (const char *name : {"three-one-one", "five-one-two-a", "nine-one-three"}) {
        auto [an, k] = at_one(named(name));
        EXPECT_EQ(an, k) << name;
    }
    auto [cycle_an, cycle_k] = at_one(named("cycle:10"));
    EXPECT_EQ(cycle_an, 0);
    auto [ham_an, ham_k] = at_one(named("hamming-seven-four-one"));
    EXPECT_EQ(ham_k, 4u);
    EXPECT_EQ(ham_an, 3);
}

TEST(simulator, majority_symmetry) {
    for (const char *name : {"three-one-one", "five-one-two-a", "five-one-two-b", "explicit-odd:1"}) {
        Circuit c = named(name);
        auto a = perfect_gate_coefficients(perfect_poly(c));
        uint32_t n = c.num_qubits;
        for (uint32_t j = 0; j <= n; j++) {
            EXPECT_EQ(a[j] + a[n - j], Coefficient(binomial(n, j))) << name << " j=" << j;
        }
    }
}

TEST(simulator, monotone_start) {
    for (const char *name : {"three-one-one", "five-one-one", "seven-one-two", "nine-one-three", "five-one-two-a",
                             "five-one-two-b", "eight-two-two", "hamming-seven-four-one"}) {
        Circuit c = named(name);
        PrepSlice slice = slice_p0(perfect_poly(c), 0, 0, 0);
        double last = 0;
        for (int i = 0; i <= 200; i++) {
            double p0 = i / 200.0 / c.num_qubits;
            double v = slice.value(p0);
            EXPECT_GE(v, last - 1e-15) << name << " p0=" << p0;
            last = v;
        }
    }
}

TEST(simulator, truncation_bound_holds) {
    Circuit c = named("five-one-two-a");
    SparsePolynomial full = output_poly(c);
    ErrorParams params{0.05, 0.01, 0.02, 0.03};
    double exact = evaluate(full, params).value;
    for (uint32_t cap : {0u, 1u, 2u, 3u}) {
        SparsePolynomial cut = output_poly(c, Caps{{5, cap, cap, cap}});
        Evaluation e = evaluate(cut, params);
        EXPECT_LE(e.value, exact + 1e-15);
        EXPECT_LE(exact - e.value, e.residual + 1e-15) << cap;
    }
}

TEST(simulator, leading_order_caps_escalate) {
    SparsePolynomial p = leading_order_polynomial(named("three-one-one"));
    EXPECT_TRUE(leading_order_certain(p));
    EXPECT_EQ(p.caps(), (Caps{{2, 2, 1, 1}}));
}

TEST(simulator, caps_for_bounds_tail) {
    Circuit c = named("nine-one-three");
    ErrorParams worst{0.5, 0.001, 0.05, 0.15};
    Caps caps = caps_for(c, worst, 1e-8);
    FaultCounts g = fault_counts(c);
    EXPECT_EQ(caps.f[PREP], g.g[PREP]);
    double tail = 0;
    for (uint32_t i = IDLE; i < NUM_ERROR_TYPES; i++) {
        tail += binomial_tail(g.g[i], worst.rate(i), caps.f[i]);
    }
    EXPECT_LE(tail, 1e-8);
}

TEST(simulator, light_cone_embedding) {
    Circuit full = named("cycle:10");
    Caps caps{{2, 1, 1, 1}};
    SimulationOptions options;
    options.caps = caps;
    options.kernel = Kernel::Sparse;
    Distribution d = simulate(full, options);
    for (uint32_t q : {1u, 3u}) {
        Circuit cone = light_cone(full, q);
        SparsePolynomial local = output_poly(cone, caps);
        SparsePolynomial embedded = embed_light_cone(local, d.counts(), caps);
        EXPECT_EQ(embedded, d.output_error_polynomial({q})) << q;
    }
}

TEST(simulator, rejects_mcx) {
    EXPECT_THROW(simulate(named("explicit-odd:2")), UnsupportedGateError);
}

TEST(simulator, memory_guard) {
    SimulationOptions options;
    options.kernel = Kernel::Dense;
    options.memory_budget = 1024;
    EXPECT_THROW(simulate(named("nine-one-three"), options), ResourceError);
}

TEST(polynomial, caps_parse) {
    EXPECT_EQ(Caps::parse("1,2,3,inf").f, (std::array<uint32_t, 4>{1, 2, 3, Caps::UNLIMITED}));
    EXPECT_EQ(Caps::parse("1,2,3,inf").str(), "1,2,3,inf");
    EXPECT_THROW(Caps::parse("1,2,3"), ContractError);
    EXPECT_THROW(Caps::parse("1,2,3,4,5"), ContractError);
    EXPECT_THROW(Caps::parse("1,x,3,4"), ContractError);
    EXPECT_THROW(Caps::parse("1,-2,3,4"), ContractError);
    EXPECT_EQ(Caps::defaults(3).f, (std::array<uint32_t, 4>{3, 4, 4, 4}));
    EXPECT_EQ(Caps::defaults(20).f, (std::array<uint32_t, 4>{6, 4, 4, 4}));
}

TEST(polynomial, leading_order_is_divisibility_minimal) {
    SparsePolynomial p(FaultCounts{{3, 3, 3, 3}}, Caps::unlimited());
    p.add(ExponentVector{{2, 0, 0, 0}}, 3);
    p.add(ExponentVector{{3, 0, 0, 0}}, 5);
    p.add(ExponentVector{{1, 1, 0, 0}}, 4);
    p.add(ExponentVector{{2, 1, 0, 0}}, 7);
    p.add(ExponentVector{{0, 0, 1, 0}}, 2);
    p.add(ExponentVector{{0, 0, 1, 1}}, 9);
    EXPECT_EQ(format_monomials(leading_order(p), 2), "(3p0^2+4p0(pI/2)+2(pC/4))/2");
    EXPECT_TRUE(leading_order(SparsePolynomial(FaultCounts{}, Caps::unlimited())).empty());
}

TEST(polynomial, binomial_tail) {
    EXPECT_EQ(binomial_tail(5, 0.3, 5), 0.0);
    EXPECT_EQ(binomial_tail(5, 0.0, 0), 0.0);
    EXPECT_NEAR(binomial_tail(3, 0.5, 0), 0.875, 1e-15);
    EXPECT_NEAR(binomial_tail(4, 0.1, 1), 1 - 0.9 * 0.9 * 0.9 * 0.9 - 4 * 0.1 * 0.9 * 0.9 * 0.9, 1e-15);
}

TEST(polynomial, rejects_bad_rates) {
    SparsePolynomial p(FaultCounts{{1, 0, 0, 0}}, Caps::unlimited());
    EXPECT_THROW(evaluate(p, {1.5, 0, 0, 0}), ContractError);
    EXPECT_THROW(evaluate(p, {-0.1, 0, 0, 0}), ContractError);
}

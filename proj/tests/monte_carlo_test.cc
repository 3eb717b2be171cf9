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

#include <gtest/gtest.h>

#include <cmath>

#include "purify/constructions.h"
#include "purify/errors.h"
#include "purify/parallel.h"
#include "purify/simulator.h"

using namespace purify;

TEST(monte_carlo, zero_rates_give_zero) {
    Circuit c = build_named(NamedFamily::parse("five-one-two-a"));
    MonteCarloResult r = monte_carlo(c, {0, 0, 0, 0}, 50000, 1);
    EXPECT_EQ(r.mean, 0.0);
    EXPECT_EQ(r.standard_error, 0.0);
}

TEST(monte_carlo, bernoulli_on_identity) {
    MonteCarloResult r = monte_carlo(identity_circuit(), {0.3, 0, 0, 0}, 200000, 5);
    EXPECT_NEAR(r.mean, 0.3, 4 * r.standard_error);
    EXPECT_NEAR(r.standard_error, std::sqrt(0.3 * 0.7 / 200000), 1e-4);
}

TEST(monte_carlo, deterministic_across_threads) {
    Circuit c = build_named(NamedFamily::parse("eight-two-two"));
    ErrorParams params{0.05, 0.01, 0.02, 0.02};
    set_thread_count(1);
    MonteCarloResult a = monte_carlo(c, params, 100000, 42);
    set_thread_count(4);
    MonteCarloResult b = monte_carlo(c, params, 100000, 42);
    set_thread_count(0);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.standard_error, b.standard_error);
    MonteCarloResult other = monte_carlo(c, params, 100000, 43);
    EXPECT_NE(a.mean, other.mean);
}

TEST(monte_carlo, agrees_with_exact_polynomial) {
    for (const char *name : {"three-one-one", "five-one-two-b", "eight-two-two", "hamming-seven-four-one"}) {
        Circuit c = build_named(NamedFamily::parse(name));
        ErrorParams params{0.05, 0.01, 0.03, 0.03};
        SimulationOptions options;
        options.caps = caps_for(c, params, 1e-10);
        Evaluation exact = evaluate(simulate(c, options).output_error_polynomial(c.outputs), params);
        MonteCarloResult mc = monte_carlo(c, params, 200000, 7);
        EXPECT_NEAR(mc.mean, exact.value, 4 * mc.standard_error + exact.residual) << name;
    }
}

TEST(monte_carlo, rejects_bad_input) {
    Circuit c = build_named(NamedFamily::parse("three-one-one"));
    EXPECT_THROW(monte_carlo(c, {0.1, 0, 0, 0}, 0, 1), ContractError);
    EXPECT_THROW(monte_carlo(c, {2, 0, 0, 0}, 10, 1), ContractError);
    EXPECT_THROW(monte_carlo(build_named(NamedFamily::parse("explicit-odd:2")), {0.1, 0, 0, 0}, 10, 1),
                 UnsupportedGateError);
}

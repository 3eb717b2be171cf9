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

#include "purify/polynomial.h"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numeric>
#include <sstream>

#include "purify/errors.h"

namespace purify {

namespace {

/// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    double sum = 0;
    double carry = 0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    double value() const {
        return sum + carry;
    }
};

/// table[f] = (p / m)^f (1 - p)^(g - f) for f <= cap.
std::vector<double> power_table(double p, uint32_t m, uint32_t g, uint32_t cap) {
    std::vector<double> table(static_cast<size_t>(std::min(cap, g)) + 1);
    for (uint32_t f = 0; f < table.size(); f++) {
        table[f] = std::pow(p / m, f) * std::pow(1 - p, g - f);
    }
    return table;
}

}  // namespace

void ErrorParams::validate() const {
    for (double p : {p0, pI, pC, pT}) {
        if (!(p >= 0 && p <= 1)) {
            throw ContractError("error rates must lie in [0, 1]");
        }
    }
}

double ErrorParams::rate(uint32_t type) const {
    switch (type) {
        case PREP:
            return p0;
        case IDLE:
            return pI;
        case CNOT:
            return pC;
        default:
            return pT;
    }
}

bool ExponentVector::divides(const ExponentVector &other) const {
    for (size_t i = 0; i < NUM_ERROR_TYPES; i++) {
        if (f[i] > other.f[i]) {
            return false;
        }
    }
    return true;
}

Caps Caps::defaults(uint32_t num_qubits) {
    return Caps{{std::min(num_qubits, 6u), 4, 4, 4}};
}

Caps Caps::parse(const std::string &text) {
    Caps caps;
    std::stringstream in(text);
    std::string item;
    size_t i = 0;
    while (std::getline(in, item, ',')) {
        if (i >= NUM_ERROR_TYPES) {
            throw ContractError("caps take exactly four values");
        }
        if (item == "inf") {
            caps.f[i++] = UNLIMITED;
            continue;
        }
        size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size() || value >= UNLIMITED) {
            throw ContractError("bad cap '" + item + "'");
        }
        caps.f[i++] = static_cast<uint32_t>(value);
    }
    if (i != NUM_ERROR_TYPES) {
        throw ContractError("caps take exactly four values");
    }
    return caps;
}

std::string Caps::str() const {
    std::string out;
    for (size_t i = 0; i < NUM_ERROR_TYPES; i++) {
        if (i) {
            out += ",";
        }
        out += f[i] == UNLIMITED ? "inf" : std::to_string(f[i]);
    }
    return out;
}

Caps FaultCounts::clamp(const Caps &caps) const {
    Caps out;
    for (size_t i = 0; i < NUM_ERROR_TYPES; i++) {
        out.f[i] = std::min(caps.f[i], g[i]);
    }
    return out;
}

SparsePolynomial::SparsePolynomial(FaultCounts counts, Caps caps, uint32_t divisor)
    : counts_(counts), caps_(counts.clamp(caps)), divisor_(divisor) {
    if (divisor == 0) {
        throw ContractError("polynomial divisor must be positive");
    }
}

void SparsePolynomial::add(const ExponentVector &f, const Coefficient &c) {
    if (c == 0) {
        return;
    }
    terms_[f] += c;
}

Coefficient SparsePolynomial::coefficient(const ExponentVector &f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? Coefficient{0} : it->second;
}

double binomial_tail(uint32_t n, double p, uint32_t cap) {
    if (cap >= n || p <= 0) {
        return 0;
    }
    if (p >= 1) {
        return 1;
    }
    // P(X > cap) = I_p(cap + 1, n - cap).
    return boost::math::ibeta(static_cast<double>(cap) + 1, static_cast<double>(n - cap), p);
}

Evaluation evaluate(const SparsePolynomial &poly, const ErrorParams &params) {
    params.validate();
    const auto &g = poly.counts().g;
    const auto &caps = poly.caps().f;
    std::array<std::vector<double>, NUM_ERROR_TYPES> tables;
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        tables[i] = power_table(params.rate(i), FAILURE_BRANCHES[i], g[i], caps[i]);
    }
    CompensatedSum sum;
    for (const auto &[f, c] : poly.terms()) {
        double term = c.convert_to<double>();
        for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
            term *= tables[i][f[i]];
        }
        sum.add(term);
    }
    Evaluation result;
    result.value = sum.value() / poly.divisor();
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        result.residual += binomial_tail(g[i], params.rate(i), caps[i]);
    }
    return result;
}

PrepSlice slice_p0(const SparsePolynomial &poly, double pI, double pC, double pT) {
    ErrorParams params{0, pI, pC, pT};
    params.validate();
    const auto &g = poly.counts().g;
    const auto &caps = poly.caps().f;
    std::array<std::vector<double>, NUM_ERROR_TYPES> tables;
    for (uint32_t i = IDLE; i < NUM_ERROR_TYPES; i++) {
        tables[i] = power_table(params.rate(i), FAILURE_BRANCHES[i], g[i], caps[i]);
    }
    PrepSlice slice;
    slice.num_qubits = g[PREP];
    slice.divisor = poly.divisor();
    slice.prep_cap = caps[PREP];
    std::vector<CompensatedSum> sums(static_cast<size_t>(g[PREP]) + 1);
    for (const auto &[f, c] : poly.terms()) {
        double term = c.convert_to<double>();
        for (uint32_t i = IDLE; i < NUM_ERROR_TYPES; i++) {
            term *= tables[i][f[i]];
        }
        sums[f[PREP]].add(term);
    }
    for (const auto &s : sums) {
        slice.a.push_back(s.value());
    }
    for (uint32_t i = IDLE; i < NUM_ERROR_TYPES; i++) {
        slice.gate_residual += binomial_tail(g[i], params.rate(i), caps[i]);
    }
    return slice;
}

double PrepSlice::value(double p0) const {
    CompensatedSum sum;
    for (uint32_t j = 0; j < a.size(); j++) {
        if (a[j] != 0) {
            sum.add(a[j] * std::pow(p0, j) * std::pow(1 - p0, num_qubits - j));
        }
    }
    return sum.value() / divisor;
}

double PrepSlice::residual(double p0) const {
    return gate_residual + binomial_tail(num_qubits, p0, prep_cap);
}

std::vector<Coefficient> perfect_gate_coefficients(const SparsePolynomial &poly) {
    std::vector<Coefficient> a(static_cast<size_t>(poly.counts().g[PREP]) + 1);
    for (const auto &[f, c] : poly.terms()) {
        if (f[IDLE] == 0 && f[CNOT] == 0 && f[TOFFOLI] == 0) {
            a[f[PREP]] += c;
        }
    }
    return a;
}

std::vector<Monomial> leading_order(const SparsePolynomial &poly) {
    std::vector<const std::pair<const ExponentVector, Coefficient> *> by_degree;
    for (const auto &term : poly.terms()) {
        by_degree.push_back(&term);
    }
    auto degree = [](const ExponentVector &f) { return std::accumulate(f.f.begin(), f.f.end(), uint64_t{0}); };
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](auto *a, auto *b) {
        return degree(a->first) < degree(b->first);
    });

    std::vector<Monomial> minimal;
    for (auto *term : by_degree) {
        bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial &m) {
            return m.powers.divides(term->first);
        });
        if (!covered) {
            minimal.push_back({term->first, term->second});
        }
    }
    std::sort(minimal.begin(), minimal.end(), [](const Monomial &a, const Monomial &b) {
        return a.powers > b.powers;
    });
    return minimal;
}

bool leading_order_certain(const SparsePolynomial &poly) {
    for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
        uint32_t cap = poly.caps().f[i];
        if (cap >= poly.counts().g[i]) {
            continue;
        }
        bool pure = false;
        for (const auto &[f, c] : poly.terms()) {
            bool only_i = true;
            for (uint32_t j = 0; j < NUM_ERROR_TYPES; j++) {
                if (j != i && f[j] != 0) {
                    only_i = false;
                }
            }
            if (only_i && f[i] <= cap) {
                pure = true;
                break;
            }
        }
        if (!pure) {
            return false;
        }
    }
    return true;
}

std::string format_monomials(const std::vector<Monomial> &monomials, uint32_t divisor) {
    static const std::array<const char *, NUM_ERROR_TYPES> names{"p0", "(pI/2)", "(pC/4)", "(pT/8)"};
    std::string out;
    for (const Monomial &m : monomials) {
        if (!out.empty()) {
            out += "+";
        }
        bool constant = m.powers == ExponentVector{};
        if (m.coefficient != 1 || constant) {
            out += m.coefficient.str();
        }
        for (uint32_t i = 0; i < NUM_ERROR_TYPES; i++) {
            if (m.powers[i] == 0) {
                continue;
            }
            out += names[i];
            if (m.powers[i] > 1) {
                out += "^" + std::to_string(m.powers[i]);
            }
        }
    }
    if (out.empty()) {
        return "0";
    }
    if (divisor != 1) {
        out = "(" + out + ")/" + std::to_string(divisor);
    }
    return out;
}

}  // namespace purify

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

#ifndef PURIFY_POLYNOMIAL_H
#define PURIFY_POLYNOMIAL_H

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace purify {

using Coefficient = boost::multiprecision::cpp_int;

/// Error sources, in exponent-vector order.
enum ErrorType : uint32_t {
    PREP = 0,
    IDLE = 1,
    CNOT = 2,
    TOFFOLI = 3,
};
constexpr uint32_t NUM_ERROR_TYPES = 4;

/// Number of equally likely outcomes a failure of each type splits into:
/// preparation is a plain flip, a failed gate depolarises 1, 2 or 3 qubits.
constexpr std::array<uint32_t, NUM_ERROR_TYPES> FAILURE_BRANCHES{1, 2, 4, 8};

struct ErrorParams {
    double p0 = 0;
    double pI = 0;
    double pC = 0;
    double pT = 0;

    /// Throws ContractError unless every rate lies in [0, 1].
    void validate() const;
    double rate(uint32_t type) const;
};

/// Failure counts (f0, f1, f2, f3) for preparation, idle, CNOT and Toffoli.
struct ExponentVector {
    std::array<uint32_t, NUM_ERROR_TYPES> f{};

    uint32_t operator[](size_t i) const {
        return f[i];
    }
    uint32_t &operator[](size_t i) {
        return f[i];
    }
    /// True if every entry is <= the matching entry of other.
    bool divides(const ExponentVector &other) const;
    auto operator<=>(const ExponentVector &other) const = default;
};

/// Per-type truncation caps. A run with more failures of some type than its
/// cap is discarded.
struct Caps {
    static constexpr uint32_t UNLIMITED = std::numeric_limits<uint32_t>::max();
    std::array<uint32_t, NUM_ERROR_TYPES> f{UNLIMITED, UNLIMITED, UNLIMITED, UNLIMITED};

    static Caps unlimited() {
        return {};
    }
    /// f0 <= min(n, 6) and at most 4 failures of each gate type.
    static Caps defaults(uint32_t num_qubits);

    /// Parses "f0,f1,f2,f3". Throws ContractError.
    static Caps parse(const std::string &text);
    std::string str() const;

    bool operator==(const Caps &other) const = default;
};

/// How many of each kind of fault location a circuit has: n preparations,
/// then the idle, CNOT and Toffoli counts.
struct FaultCounts {
    std::array<uint32_t, NUM_ERROR_TYPES> g{};

    /// Caps clamped to these counts.
    Caps clamp(const Caps &caps) const;
    bool operator==(const FaultCounts &other) const = default;
};

/// A polynomial in the failure-count basis. The term keyed by f stands for
///
///     coef * prod_i (p_i / m_i)^f_i (1 - p_i)^(g_i - f_i)
///
/// with m = FAILURE_BRANCHES and g the fault counts. The polynomial value is
/// the sum of the terms divided by `divisor`.
class SparsePolynomial {
   public:
    SparsePolynomial() = default;
    SparsePolynomial(FaultCounts counts, Caps caps, uint32_t divisor = 1);

    const FaultCounts &counts() const {
        return counts_;
    }
    /// Caps the polynomial was computed with, clamped to the counts.
    const Caps &caps() const {
        return caps_;
    }
    uint32_t divisor() const {
        return divisor_;
    }

    /// Adds to a term; zero additions are ignored.
    void add(const ExponentVector &f, const Coefficient &c);
    Coefficient coefficient(const ExponentVector &f) const;
    const std::map<ExponentVector, Coefficient> &terms() const {
        return terms_;
    }
    bool empty() const {
        return terms_.empty();
    }

    bool operator==(const SparsePolynomial &other) const = default;

   private:
    FaultCounts counts_;
    Caps caps_;
    uint32_t divisor_ = 1;
    std::map<ExponentVector, Coefficient> terms_;
};

struct Evaluation {
    double value = 0;
    /// Upper bound on the probability mass removed by truncation.
    double residual = 0;
};

/// Sum of the retained terms at the given rates, plus the truncation bound
/// sum_i P(Binomial(g_i, p_i) > cap_i).
Evaluation evaluate(const SparsePolynomial &poly, const ErrorParams &params);

/// P(Binomial(n, p) > cap).
double binomial_tail(uint32_t n, double p, uint32_t cap);

/// The polynomial restricted to fixed idle and gate rates, as a function of p0
/// alone: value(p0) = sum_j a[j] p0^j (1 - p0)^(n - j) / divisor.
struct PrepSlice {
    uint32_t num_qubits = 0;
    uint32_t divisor = 1;
    std::vector<double> a;
    /// Truncation bound from the gate types, and the p0 cap.
    double gate_residual = 0;
    uint32_t prep_cap = 0;

    double value(double p0) const;
    double residual(double p0) const;
};

PrepSlice slice_p0(const SparsePolynomial &poly, double pI, double pC, double pT);

/// Coefficients a_j of the perfect-gate polynomial (terms with no gate or idle failures).
std::vector<Coefficient> perfect_gate_coefficients(const SparsePolynomial &poly);

struct Monomial {
    ExponentVector powers;
    Coefficient coefficient;
    bool operator==(const Monomial &other) const = default;
};

/// Divisibility-minimal monomials of the polynomial once the (1 - p) factors
/// are dropped, ordered by descending p0 degree, then idle, CNOT and Toffoli
/// degree.
std::vector<Monomial> leading_order(const SparsePolynomial &poly);

/// True when the caps were large enough for leading_order() to be exact:
/// for each error type either the cap covers every fault location or a pure
/// power of that type within the cap is present.
bool leading_order_certain(const SparsePolynomial &poly);

/// Renders monomials as "3p0^2+4p0(pI/2)+(pI/2)^2", wrapping in "(...)/k"
/// when the divisor is not 1. An empty list renders as "0".
std::string format_monomials(const std::vector<Monomial> &monomials, uint32_t divisor = 1);

}  // namespace purify

#endif

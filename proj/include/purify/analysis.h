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


#ifndef PURIFY_ANALYSIS_H
#define PURIFY_ANALYSIS_H

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "purify/circuit.h"
#include "purify/polynomial.h"

namespace purify {

/// The circuits and light cones whose error rates are tabulated and plotted.
struct CatalogEntry {
    std::string name;
    /// Family the circuit is built from, in CLI syntax.
    std::string family;
    /// For light cones, the output qubit of the family circuit; otherwise empty.
    std::optional<uint32_t> cone_output;
    Circuit circuit;
};

/// (3,1,1), (5,1,1), (7,1,2), (9,1,3), (5,1,2)a/b, (8,2,2), (7,4,1), then the
/// small and large light cones of the plain and tolerant 10-cycles.
std::vector<CatalogEntry> catalog();

/// p0 grid start, start + step, ... up to stop, at fixed gate rates.
struct SweepSpec {
    double start = 0;
    double stop = 0.5;
    double step = 0.01;
    double pI = 0;
    double pC = 0;
    double pT = 0;

    /// Throws ContractError unless 0 <= start <= stop <= 1, step > 0 and the
    /// rates are probabilities.
    void validate() const;
    std::vector<double> points() const;
};

struct SweepRow {
    double p0 = 0;
    double p_out = 0;
    double residual = 0;
};

std::vector<SweepRow> sweep(const SparsePolynomial &poly, const SweepSpec &spec);

struct ThresholdOptions {
    double scan_step = 1e-3;
    double tolerance = 1e-6;
};

struct ThresholdResult {
    /// Absent when the output never beats the input below 0.5.
    std::optional<double> theta;
    /// Bisection bracket: p_out - p0 is positive at lo and not positive at hi.
    double lo = 0;
    double hi = 0;
};

/// Least p0 with p_out(p0) = p0, found by scanning (0, 0.5) for the first
/// point where p_out - p0 stops being positive and bisecting the last step.
/// Returns theta = 0 when p_out(0) = 0. The crossing at p0 = 0.5, which every
/// circuit has, does not count.
ThresholdResult threshold(const PrepSlice &slice, const ThresholdOptions &options = {});
ThresholdResult threshold(
    const SparsePolynomial &poly, double pI, double pC, double pT, const ThresholdOptions &options = {});

/// A box of (pC, pT / pC) points at fixed pI.
struct GridSpec {
    double pc_min = 0;
    double pc_max = 0.05;
    uint32_t pc_points = 11;
    double ratio_min = 1;
    double ratio_max = 3;
    uint32_t ratio_points = 5;
    double pI = 0.001;
    std::vector<double> contours{0.003, 0.01, 0.03, 0.1};

    void validate() const;
    std::vector<double> pc_values() const;
    std::vector<double> ratio_values() const;
};

struct GridRow {
    double pC = 0;
    double ratio = 0;
    ThresholdResult result;
};

/// Polynomial with caps tight enough for every point of the grid: the
/// truncation bound stays below `tolerance` at the largest rates.
SparsePolynomial grid_polynomial(const Circuit &circuit, const GridSpec &grid, double tolerance = 1e-8);

/// Threshold at every grid point, ordered by pC then ratio. Parallel over points.
std::vector<GridRow> threshold_grid(
    const SparsePolynomial &poly, const GridSpec &grid, const ThresholdOptions &options = {});

struct ContourPoint {
    double level = 0;
    double ratio = 0;
    double pC = 0;
};

/// For each contour level and ratio, the pC where theta first reaches the
/// level, linearly interpolated along the pC axis. Missing thresholds count
/// as 0.5.
std::vector<ContourPoint> contour_points(const std::vector<GridRow> &rows, const GridSpec &grid);

/// One of the eight ways the two preparations and the measurement can fail
/// when a |0> is checked against a second copy with one CNOT and a
/// measurement, keeping the first qubit only if the measurement reads 0.
struct BaselineOutcome {
    bool first_flipped = false;
    bool second_flipped = false;
    bool measurement_flipped = false;
    bool accepted = false;
    bool output_error = false;
};

std::vector<BaselineOutcome> baseline_outcomes();

template <typename T>
struct BaselineStats {
    T accept{};
    T reject{};
    /// Probability of an error on the kept qubit, given acceptance.
    T error{};
};

/// Exact arithmetic version of post_selection_baseline.
BaselineStats<boost::multiprecision::cpp_rational> post_selection_baseline_exact(
    const boost::multiprecision::cpp_rational &p0);

/// Each of the three flips happens with probability p0; gates are perfect.
/// Throws ContractError unless 0 <= p0 <= 1/2.
BaselineStats<double> post_selection_baseline(double p0);

}  // namespace purify

#endif

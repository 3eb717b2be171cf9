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


#include "purify/analysis.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "purify/constructions.h"
#include "purify/errors.h"
#include "purify/parallel.h"
#include "purify/simulator.h"

namespace purify {

namespace {

void check_rate(double p, const char *name) {
    if (!(p >= 0 && p <= 1)) {
        throw ContractError(std::string(name) + " must lie in [0, 1]");
    }
}

std::vector<double> linspace(double lo, double hi, uint32_t points) {
    std::vector<double> out;
    for (uint32_t i = 0; i < points; i++) {
        out.push_back(points == 1 ? lo : lo + (hi - lo) * i / (points - 1));
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string &name, const std::string &family, std::optional<uint32_t> cone) {
        Circuit c = build_named(NamedFamily::parse(family));
        if (cone.has_value()) {
            c = light_cone(c, *cone);
        }
        out.push_back({name, family, cone, std::move(c)});
    };
    add("3-1-1", "three-one-one", {});
    add("5-1-1", "five-one-one", {});
    add("7-1-2", "seven-one-two", {});
    add("9-1-3", "nine-one-three", {});
    add("5-1-2a", "five-one-two-a", {});
    add("5-1-2b", "five-one-two-b", {});
    add("8-2-2", "eight-two-two", {});
    add("7-4-1", "hamming-seven-four-one", {});
    add("cycle-small", "cycle:10", 9);
    add("cycle-large", "cycle:10", 11);
    add("tolerant-cycle-small", "tolerant-cycle:10", 9);
    add("tolerant-cycle-large", "tolerant-cycle:10", 11);
    return out;
}

void SweepSpec::validate() const {
    if (!(start >= 0 && start <= stop && stop <= 1)) {
        throw ContractError("sweep range must satisfy 0 <= start <= stop <= 1");
    }
    if (!(step > 0)) {
        throw ContractError("sweep step must be positive");
    }
    check_rate(pI, "pI");
    check_rate(pC, "pC");
    check_rate(pT, "pT");
}

std::vector<double> SweepSpec::points() const {
    validate();
    std::vector<double> out;
    for (uint64_t i = 0;; i++) {
        double p = start + step * static_cast<double>(i);
        if (p > stop + step * 1e-9) {
            break;
        }
        out.push_back(std::min(p, stop));
    }
    return out;
}

std::vector<SweepRow> sweep(const SparsePolynomial &poly, const SweepSpec &spec) {
    std::vector<SweepRow> rows;
    PrepSlice slice = slice_p0(poly, spec.pI, spec.pC, spec.pT);
    for (double p0 : spec.points()) {
        rows.push_back({p0, slice.value(p0), slice.residual(p0)});
    }
    return rows;
}

ThresholdResult threshold(const PrepSlice &slice, const ThresholdOptions &options) {
    if (!(options.scan_step > 0) || !(options.tolerance > 0)) {
        throw ContractError("scan step and tolerance must be positive");
    }
    auto gap = [&](double p0) { return slice.value(p0) - p0; };
    ThresholdResult result;
    if (gap(0) <= 0) {
        result.theta = 0;
        return result;
    }
    double lo = 0;
    double hi = -1;
    for (uint64_t i = 1;; i++) {
        double p = options.scan_step * static_cast<double>(i);
        if (p >= 0.5 - options.scan_step * 1e-9) {
            break;
        }
        if (gap(p) <= 0) {
            hi = p;
            break;
        }
        lo = p;
    }
    if (hi < 0) {
        return result;
    }
    while (hi - lo > options.tolerance) {
        double mid = (lo + hi) / 2;
        if (gap(mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    result.lo = lo;
    result.hi = hi;
    result.theta = hi;
    return result;
}

ThresholdResult threshold(
    const SparsePolynomial &poly, double pI, double pC, double pT, const ThresholdOptions &options) {
    return threshold(slice_p0(poly, pI, pC, pT), options);
}

void GridSpec::validate() const {
    if (!(pc_min >= 0 && pc_min <= pc_max && pc_max <= 1)) {
        throw ContractError("pC range must satisfy 0 <= min <= max <= 1");
    }
    if (!(ratio_min > 0 && ratio_min <= ratio_max)) {
        throw ContractError("ratio range must satisfy 0 < min <= max");
    }
    if (pc_max * ratio_max > 1) {
        throw ContractError("largest pT = pC * ratio exceeds 1");
    }
    if (pc_points == 0 || ratio_points == 0) {
        throw ContractError("grid needs at least one point per axis");
    }
    check_rate(pI, "pI");
}

std::vector<double> GridSpec::pc_values() const {
    return linspace(pc_min, pc_max, pc_points);
}

std::vector<double> GridSpec::ratio_values() const {
    return linspace(ratio_min, ratio_max, ratio_points);
}

SparsePolynomial grid_polynomial(const Circuit &circuit, const GridSpec &grid, double tolerance) {
    grid.validate();
    ErrorParams worst{0.5, grid.pI, grid.pc_max, grid.pc_max * grid.ratio_max};
    SimulationOptions options;
    options.caps = caps_for(circuit, worst, tolerance);
    return simulate(circuit, options).output_error_polynomial(circuit.outputs);
}

std::vector<GridRow> threshold_grid(const SparsePolynomial &poly, const GridSpec &grid, const ThresholdOptions &options) {
    grid.validate();
    std::vector<GridRow> rows;
    for (double pc : grid.pc_values()) {
        for (double ratio : grid.ratio_values()) {
            rows.push_back({pc, ratio, {}});
        }
    }
    std::vector<std::exception_ptr> failures(rows.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
    for (size_t i = 0; i < rows.size(); i++) {
        try {
            rows[i].result = threshold(poly, grid.pI, rows[i].pC, rows[i].pC * rows[i].ratio, options);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return rows;
}

std::vector<ContourPoint> contour_points(const std::vector<GridRow> &rows, const GridSpec &grid) {
    std::vector<double> pcs = grid.pc_values();
    std::vector<double> ratios = grid.ratio_values();
    if (rows.size() != pcs.size() * ratios.size()) {
        throw ContractError("grid rows do not match the grid");
    }
    std::vector<ContourPoint> out;
    for (double level : grid.contours) {
        for (size_t r = 0; r < ratios.size(); r++) {
            auto theta = [&](size_t c) { return rows[c * ratios.size() + r].result.theta.value_or(0.5); };
            for (size_t c = 0; c < pcs.size(); c++) {
                double t = theta(c);
                if (t < level) {
                    continue;
                }
                double pc = pcs[c];
                if (c > 0) {
                    double t0 = theta(c - 1);
                    pc = pcs[c - 1] + (pcs[c] - pcs[c - 1]) * (level - t0) / (t - t0);
                }
                out.push_back({level, ratios[r], pc});
                break;
            }
        }
    }
    return out;
}

std::vector<BaselineOutcome> baseline_outcomes() {
    std::vector<BaselineOutcome> out;
    for (uint32_t bits = 0; bits < 8; bits++) {
        BaselineOutcome o;
        o.first_flipped = bits & 1;
        o.second_flipped = bits & 2;
        o.measurement_flipped = bits & 4;
        bool reading = o.first_flipped ^ o.second_flipped ^ o.measurement_flipped;
        o.accepted = !reading;
        o.output_error = o.first_flipped;
        out.push_back(o);
    }
    return out;
}

BaselineStats<boost::multiprecision::cpp_rational> post_selection_baseline_exact(
    const boost::multiprecision::cpp_rational &p0) {
    using boost::multiprecision::cpp_rational;
    if (p0 < 0 || p0 * 2 > 1) {
        throw ContractError("p0 must lie in [0, 1/2]");
    }
    BaselineStats<cpp_rational> stats;
    cpp_rational accepted_error = 0;
    for (const BaselineOutcome &o : baseline_outcomes()) {
        int flips = o.first_flipped + o.second_flipped + o.measurement_flipped;
        cpp_rational weight = 1;
        for (int i = 0; i < 3; i++) {
            weight *= i < flips ? p0 : 1 - p0;
        }
        if (o.accepted) {
            stats.accept += weight;
            if (o.output_error) {
                accepted_error += weight;
            }
        } else {
            stats.reject += weight;
        }
    }
    stats.error = accepted_error / stats.accept;
    return stats;
}

BaselineStats<double> post_selection_baseline(double p0) {
    if (!(p0 >= 0 && p0 <= 0.5)) {
        throw ContractError("p0 must lie in [0, 1/2]");
    }
    auto exact = post_selection_baseline_exact(boost::multiprecision::cpp_rational(p0));
    return {exact.accept.convert_to<double>(), exact.reject.convert_to<double>(), exact.error.convert_to<double>()};
}

}  // namespace purify

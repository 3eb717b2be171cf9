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


#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "purify/analysis.h"
#include "purify/circuit_text.h"
#include "purify/constructions.h"
#include "purify/errors.h"
#include "purify/monte_carlo.h"
#include "purify/report.h"
#include "purify/search.h"
#include "purify/simulator.h"
#include "purify/verifier.h"

using namespace purify;

namespace {

constexpr int EXIT_VIOLATION = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_RESOURCE = 3;

/// Where a command takes its circuit from: a file, or a named family with an
/// optional light cone.
struct CircuitSource {
    std::string file;
    std::string family;
    std::optional<uint32_t> light_cone;

    void attach(CLI::App *app) {
        auto *f = app->add_option("--circuit", file, "Circuit text file");
        auto *g = app->add_option("--family", family, "Named family, e.g. three-one-one or cycle:10");
        f->excludes(g);
        app->add_option("--light-cone", light_cone, "Keep only the light cone of this output qubit");
    }

    Circuit load() const {
        Circuit c;
        if (!file.empty()) {
            c = read_circuit_file(file);
        } else if (!family.empty()) {
            c = build_named(NamedFamily::parse(family));
        } else {
            throw ContractError("give --circuit or --family");
        }
        if (light_cone.has_value()) {
            c = light_cone_of(c);
        }
        return c;
    }

   private:
    Circuit light_cone_of(const Circuit &c) const {
        return purify::light_cone(c, *light_cone);
    }
};

Kernel parse_kernel(const std::string &name) {
    if (name == "auto") {
        return Kernel::Auto;
    }
    if (name == "dense") {
        return Kernel::Dense;
    }
    if (name == "sparse") {
        return Kernel::Sparse;
    }
    if (name == "reference") {
        return Kernel::Reference;
    }
    throw ContractError("unknown kernel '" + name + "'");
}

std::string theta_text(const ThresholdResult &r) {
    return r.theta.has_value() ? format_probability(*r.theta) : "NONE";
}

SparsePolynomial noisy_polynomial(const Circuit &c, const ErrorParams &worst) {
    SimulationOptions options;
    options.caps = caps_for(c, worst, 1e-8);
    return simulate(c, options).output_error_polynomial(c.outputs);
}

void write_report(const std::string &dir) {
    std::filesystem::create_directories(dir);
    auto path = [&](const std::string &name) { return (std::filesystem::path(dir) / name).string(); };
    std::vector<CatalogEntry> entries = catalog();

    CsvTable table{{"circuit", "n", "k", "gates", "depth", "leading_order"}, {}};
    SweepSpec noisy{0, 0.5, 0.005, 0.001, 0.003, 0.003};
    SweepSpec perfect{0, 1, 0.01, 0, 0, 0};
    CsvTable noisy_csv{{"circuit", "p0", "p_out", "residual"}, {}};
    CsvTable perfect_csv{{"circuit", "p0", "p_out", "residual"}, {}};
    std::vector<Series> noisy_series;
    std::vector<Series> perfect_series;
    for (const CatalogEntry &e : entries) {
        const Circuit &c = e.circuit;
        SparsePolynomial lo = leading_order_polynomial(c);
        table.add_row({e.name, std::to_string(c.num_qubits), std::to_string(c.outputs.size()),
                       std::to_string(c.counts().non_idle()), std::to_string(c.depth()),
                       format_monomials(leading_order(lo), lo.divisor())});

        SparsePolynomial poly = noisy_polynomial(c, {0.5, noisy.pI, noisy.pC, noisy.pT});
        Series s{e.name, {}, {}};
        for (const SweepRow &row : sweep(poly, noisy)) {
            noisy_csv.add_row({e.name, format_probability(row.p0), format_probability(row.p_out),
                               format_probability(row.residual)});
            s.x.push_back(row.p0);
            s.y.push_back(row.p_out);
        }
        noisy_series.push_back(s);

        SimulationOptions exact;
        exact.caps = Caps{{Caps::UNLIMITED, 0, 0, 0}};
        SparsePolynomial clean = simulate(c, exact).output_error_polynomial(c.outputs);
        Series t{e.name, {}, {}};
        for (const SweepRow &row : sweep(clean, perfect)) {
            perfect_csv.add_row({e.name, format_probability(row.p0), format_probability(row.p_out),
                                 format_probability(row.residual)});
            t.x.push_back(row.p0);
            t.y.push_back(row.p_out);
        }
        perfect_series.push_back(t);
    }
    Series bare{"bare", {0, 1}, {0, 1}};
    perfect_series.push_back(bare);
    noisy_series.push_back({"bare", {noisy.start, noisy.stop}, {noisy.start, noisy.stop}});
    write_text_file(path("table.csv"), table.str());
    write_text_file(path("noisy.csv"), noisy_csv.str());
    write_text_file(path("perfect.csv"), perfect_csv.str());
    write_text_file(path("noisy.svg"),
                    svg_line_chart(noisy_series, {"Noisy gates (pI = 0.001, pC = pT = 0.003)", "p0", "p_out", 0, 0.5,
                                                  1e-4, 1, true}));
    write_text_file(path("perfect.svg"),
                    svg_line_chart(perfect_series, {"Perfect gates", "p0", "p_out", 0, 1, 0, 1, false}));

    GridSpec grid;
    CsvTable grid_csv{{"circuit", "pC", "ratio", "pT", "theta"}, {}};
    CsvTable contour_csv{{"circuit", "level", "ratio", "pC"}, {}};
    for (const CatalogEntry &e : entries) {
        if (e.name != "3-1-1" && e.name != "5-1-1" && e.name != "7-1-2" && e.name != "9-1-3") {
            continue;
        }
        std::vector<GridRow> rows = threshold_grid(grid_polynomial(e.circuit, grid), grid);
        for (const GridRow &r : rows) {
            grid_csv.add_row({e.name, format_probability(r.pC), format_probability(r.ratio),
                              format_probability(r.pC * r.ratio), theta_text(r.result)});
        }
        std::vector<ContourPoint> contours = contour_points(rows, grid);
        for (const ContourPoint &p : contours) {
            contour_csv.add_row(
                {e.name, format_probability(p.level), format_probability(p.ratio), format_probability(p.pC)});
        }
        if (e.name == "3-1-1") {
            std::vector<Series> lines;
            for (double level : grid.contours) {
                Series s{"theta = " + format_probability(level), {}, {}};
                for (const ContourPoint &p : contours) {
                    if (p.level == level) {
                        s.x.push_back(p.pC);
                        s.y.push_back(p.ratio);
                    }
                }
                lines.push_back(s);
            }
            write_text_file(path("threshold.svg"),
                            svg_line_chart(lines, {"Threshold contours, (3,1,1)", "pC", "pT / pC", grid.pc_min,
                                                   grid.pc_max, grid.ratio_min, grid.ratio_max, false}));
        }
    }
    write_text_file(path("threshold_grid.csv"), grid_csv.str());
    write_text_file(path("threshold_contours.csv"), contour_csv.str());

    CsvTable baseline{{"p0", "accept", "reject", "error"}, {}};
    for (double p0 : SweepSpec{0, 0.5, 0.01}.points()) {
        auto b = post_selection_baseline(p0);
        baseline.add_row({format_probability(p0), format_probability(b.accept), format_probability(b.reject),
                          format_probability(b.error)});
    }
    write_text_file(path("baseline.csv"), baseline.str());
}

int run(int argc, char **argv) {
    CLI::App app{"Post-selection-free |0> purification circuits"};
    app.require_subcommand(1);

    CircuitSource build_src;
    std::string build_out;
    bool build_list = false;
    auto *build = app.add_subcommand("build", "Print a named circuit");
    build->add_option("--family", build_src.family, "Family name");
    build->add_option("--light-cone", build_src.light_cone, "Keep only the light cone of this output qubit");
    build->add_option("--out", build_out, "Write to this file instead of stdout");
    build->add_flag("--list", build_list, "List family names");

    CircuitSource verify_src;
    uint32_t verify_e = 0;
    auto *verify = app.add_subcommand("verify", "Check the purification property");
    verify_src.attach(verify);
    verify->add_option("--e", verify_e, "Number of input errors to tolerate")->required();

    CircuitSource ft_src;
    uint32_t ft_b = 0;
    auto *ft = app.add_subcommand("ft-check", "Check combinatorial fault tolerance");
    ft_src.attach(ft);
    ft->add_option("--b", ft_b, "Largest input error weight")->required();

    PurificationParams search_params;
    SearchOptions search_options;
    bool search_quiet = false;
    bool search_classify = false;
    auto *search = app.add_subcommand("search", "Find minimal purification circuits");
    search->add_option("--n", search_params.n)->required();
    search->add_option("--k", search_params.k)->required();
    search->add_option("--e", search_params.e)->required();
    search->add_option("--output-wire", search_options.output_wire);
    search->add_option("--max-len", search_options.max_length);
    search->add_option("--max-listed", search_options.max_listed);
    search->add_flag("--enumerate", search_options.enumerate_all, "List and count every minimal circuit");
    search->add_flag("--classify", search_classify, "Report equivalence classes of the listed circuits");
    search->add_flag("--quiet", search_quiet, "Print the summary only");

    CircuitSource sim_src;
    ErrorParams sim_params;
    std::string sim_caps;
    std::string sim_kernel = "auto";
    uint64_t sim_trials = 0;
    uint64_t sim_seed = 1;
    auto *sim = app.add_subcommand("simulate", "Output error rate at one point");
    sim_src.attach(sim);
    sim->add_option("--p0", sim_params.p0)->required();
    sim->add_option("--pI", sim_params.pI)->required();
    sim->add_option("--pC", sim_params.pC)->required();
    sim->add_option("--pT", sim_params.pT)->required();
    sim->add_option("--caps", sim_caps, "f0,f1,f2,f3 (default min(n,6),4,4,4; 'inf' for no cap)");
    sim->add_option("--kernel", sim_kernel, "auto, dense, sparse or reference");
    sim->add_option("--monte-carlo", sim_trials, "Also sample this many trials");
    sim->add_option("--seed", sim_seed);

    CircuitSource lo_src;
    std::string lo_kernel = "auto";
    auto *lo = app.add_subcommand("leading-order", "Leading order output error rate");
    lo_src.attach(lo);
    lo->add_option("--kernel", lo_kernel);

    CircuitSource sweep_src;
    SweepSpec sweep_spec;
    auto *sw = app.add_subcommand("sweep", "Output error rate over a p0 grid, as CSV");
    sweep_src.attach(sw);
    sw->add_option("--start", sweep_spec.start);
    sw->add_option("--stop", sweep_spec.stop);
    sw->add_option("--step", sweep_spec.step);
    sw->add_option("--pI", sweep_spec.pI);
    sw->add_option("--pC", sweep_spec.pC);
    sw->add_option("--pT", sweep_spec.pT);

    CircuitSource th_src;
    double th_pI = 0;
    double th_pC = 0;
    double th_pT = 0;
    ThresholdOptions th_options;
    auto *th = app.add_subcommand("threshold", "Least p0 where the circuit stops hurting");
    th_src.attach(th);
    th->add_option("--pI", th_pI)->required();
    th->add_option("--pC", th_pC)->required();
    th->add_option("--pT", th_pT)->required();
    th->add_option("--scan-step", th_options.scan_step);
    th->add_option("--tol", th_options.tolerance);

    CircuitSource grid_src;
    GridSpec grid;
    ThresholdOptions grid_options;
    auto *gr = app.add_subcommand("threshold-grid", "Thresholds over a (pC, pT/pC) box, as CSV");
    grid_src.attach(gr);
    gr->add_option("--pc-min", grid.pc_min);
    gr->add_option("--pc-max", grid.pc_max);
    gr->add_option("--pc-points", grid.pc_points);
    gr->add_option("--ratio-min", grid.ratio_min);
    gr->add_option("--ratio-max", grid.ratio_max);
    gr->add_option("--ratio-points", grid.ratio_points);
    gr->add_option("--pI", grid.pI);
    gr->add_option("--scan-step", grid_options.scan_step);
    gr->add_option("--tol", grid_options.tolerance);

    SweepSpec base_spec{0, 0.5, 0.01};
    auto *base = app.add_subcommand("baseline", "The post-selected two-qubit scheme, as CSV");
    base->add_option("--start", base_spec.start);
    base->add_option("--stop", base_spec.stop);
    base->add_option("--step", base_spec.step);

    std::string report_dir = "report";
    auto *rep = app.add_subcommand("report", "Write every CSV table and SVG plot");
    rep->add_option("--out", report_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    if (build->parsed()) {
        if (build_list) {
            for (const std::string &name : family_names()) {
                std::cout << name << "\n";
            }
            return 0;
        }
        std::string text = serialize(build_src.load());
        if (build_out.empty()) {
            std::cout << text;
        } else {
            write_text_file(build_out, text);
        }
        return 0;
    }
    if (verify->parsed()) {
        PurificationCheck check = verify_purification(verify_src.load(), verify_e);
        if (check.ok) {
            std::cout << "ok\n";
            return 0;
        }
        std::cout << "counterexample=" << *check.counterexample << "\n";
        return EXIT_VIOLATION;
    }
    if (ft->parsed()) {
        FaultToleranceReport report = verify_fault_tolerance(ft_src.load(), ft_b);
        CsvTable csv{{"pattern", "inWeight", "outWeight"}, {}};
        for (const FaultViolation &v : report.violations) {
            csv.add_row({std::to_string(v.pattern), std::to_string(v.input_weight), std::to_string(v.output_weight)});
        }
        std::cout << csv.str();
        return report.tolerant ? 0 : EXIT_VIOLATION;
    }
    if (search->parsed()) {
        SearchOutcome outcome = meet_in_middle(search_params, search_options);
        if (!outcome.found) {
            std::cout << "not found within " << search_options.max_length << " gates\n";
            return EXIT_VIOLATION;
        }
        if (!search_quiet) {
            for (size_t i = 0; i < outcome.circuits.size(); i++) {
                std::cout << "# circuit " << i << "\n"
                          << serialize(schedule(outcome.circuits[i], search_params.n, outcome.outputs));
            }
        }
        if (search_classify) {
            for (const EquivalenceClass &c : classify_minimal(outcome, search_params.n)) {
                std::cout << "class size=" << c.size << " representative=" << c.representative << "\n";
            }
        }
        std::cout << "min_length=" << outcome.min_length << " count=" << outcome.count << "\n";
        return 0;
    }
    if (sim->parsed()) {
        Circuit c = sim_src.load();
        sim_params.validate();
        SimulationOptions options;
        options.caps = sim_caps.empty() ? Caps::defaults(c.num_qubits) : Caps::parse(sim_caps);
        options.kernel = parse_kernel(sim_kernel);
        Distribution d = simulate(c, options);
        Evaluation ev = evaluate(d.output_error_polynomial(c.outputs), sim_params);
        std::cout << "p_out=" << format_probability(ev.value) << " residual=" << format_probability(ev.residual)
                  << "\n";
        if (sim_trials > 0) {
            MonteCarloResult mc = monte_carlo(c, sim_params, sim_trials, sim_seed);
            std::cout << "monte_carlo=" << format_probability(mc.mean)
                      << " standard_error=" << format_probability(mc.standard_error) << "\n";
        }
        return 0;
    }
    if (lo->parsed()) {
        SparsePolynomial poly = leading_order_polynomial(lo_src.load(), parse_kernel(lo_kernel));
        std::cout << format_monomials(leading_order(poly), poly.divisor()) << "\n";
        return 0;
    }
    if (sw->parsed()) {
        sweep_spec.validate();
        Circuit c = sweep_src.load();
        SparsePolynomial poly = noisy_polynomial(c, {sweep_spec.stop, sweep_spec.pI, sweep_spec.pC, sweep_spec.pT});
        CsvTable csv{{"p0", "p_out", "residual"}, {}};
        for (const SweepRow &row : sweep(poly, sweep_spec)) {
            csv.add_row({format_probability(row.p0), format_probability(row.p_out), format_probability(row.residual)});
        }
        std::cout << csv.str();
        return 0;
    }
    if (th->parsed()) {
        Circuit c = th_src.load();
        SparsePolynomial poly = noisy_polynomial(c, {0.5, th_pI, th_pC, th_pT});
        ThresholdResult r = threshold(poly, th_pI, th_pC, th_pT, th_options);
        std::cout << "theta=" << theta_text(r);
        if (r.theta.has_value() && *r.theta > 0) {
            std::cout << " bracket=" << format_probability(r.lo) << ":" << format_probability(r.hi);
        }
        std::cout << "\n";
        return 0;
    }
    if (gr->parsed()) {
        Circuit c = grid_src.load();
        std::vector<GridRow> rows = threshold_grid(grid_polynomial(c, grid), grid, grid_options);
        CsvTable csv{{"pC", "ratio", "pT", "theta"}, {}};
        for (const GridRow &r : rows) {
            csv.add_row({format_probability(r.pC), format_probability(r.ratio), format_probability(r.pC * r.ratio),
                         theta_text(r.result)});
        }
        std::cout << csv.str();
        return 0;
    }
    if (base->parsed()) {
        CsvTable csv{{"p0", "accept", "reject", "error"}, {}};
        for (double p0 : base_spec.points()) {
            auto b = post_selection_baseline(p0);
            csv.add_row({format_probability(p0), format_probability(b.accept), format_probability(b.reject),
                         format_probability(b.error)});
        }
        std::cout << csv.str();
        return 0;
    }
    if (rep->parsed()) {
        write_report(report_dir);
        std::cout << "wrote " << report_dir << "\n";
        return 0;
    }
    return EXIT_USAGE;
}

}  // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceError &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return EXIT_RESOURCE;
    } catch (const std::bad_alloc &) {
        std::cerr << "resource limit: out of memory\n";
        return EXIT_RESOURCE;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}

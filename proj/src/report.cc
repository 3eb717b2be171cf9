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


#include "purify/report.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "purify/errors.h"

namespace purify {

namespace {

std::string fixed(double value, int digits) {
    if (std::abs(value) < 0.5 * std::pow(10.0, -digits)) {
        value = 0;
    }
    std::array<char, 64> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, digits);
    return std::string(buf.data(), end);
}

std::string escape_xml(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string csv_field(const std::string &field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

constexpr std::array<const char *, 8> PALETTE{
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_probability(double value) {
    std::array<char, 64> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
    return std::string(buf.data(), end);
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) {
        throw ContractError("csv row has " + std::to_string(row.size()) + " fields, header has " +
                            std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
}

std::string CsvTable::str() const {
    std::string out;
    auto line = [&](const std::vector<std::string> &fields) {
        for (size_t i = 0; i < fields.size(); i++) {
            if (i) {
                out += ',';
            }
            out += csv_field(fields[i]);
        }
        out += '\n';
    };
    line(header);
    for (const auto &row : rows) {
        line(row);
    }
    return out;
}

std::string svg_line_chart(const std::vector<Series> &series, const PlotSpec &spec) {
    const double width = 640;
    const double height = 420;
    const double left = 70;
    const double right = 170;
    const double top = 40;
    const double bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min) || (spec.log_y && !(spec.y_min > 0))) {
        throw ContractError("bad plot range");
    }
    auto ty = [&](double y) {
        return spec.log_y ? (std::log10(y) - std::log10(spec.y_min)) / (std::log10(spec.y_max) - std::log10(spec.y_min))
                          : (y - spec.y_min) / (spec.y_max - spec.y_min);
    };
    auto px = [&](double x) { return left + plot_w * (x - spec.x_min) / (spec.x_max - spec.x_min); };
    auto py = [&](double y) { return top + plot_h * (1 - std::clamp(ty(y), 0.0, 1.0)); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width, 0) + "\" height=\"" + fixed(height, 0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fixed(left + plot_w / 2, 1) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
           escape_xml(spec.title) + "</text>\n";
    out += "<rect x=\"" + fixed(left, 1) + "\" y=\"" + fixed(top, 1) + "\" width=\"" + fixed(plot_w, 1) +
           "\" height=\"" + fixed(plot_h, 1) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; i++) {
        double x = spec.x_min + (spec.x_max - spec.x_min) * i / 5;
        std::string sx = fixed(px(x), 1);
        out += "<line x1=\"" + sx + "\" y1=\"" + fixed(top + plot_h, 1) + "\" x2=\"" + sx + "\" y2=\"" +
               fixed(top + plot_h + 5, 1) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + sx + "\" y=\"" + fixed(top + plot_h + 18, 1) + "\" text-anchor=\"middle\">" +
               format_probability(x) + "</text>\n";
    }
    for (int i = 0; i <= 5; i++) {
        double y = spec.log_y ? std::pow(10, std::log10(spec.y_min) +
                                                 (std::log10(spec.y_max) - std::log10(spec.y_min)) * i / 5)
                              : spec.y_min + (spec.y_max - spec.y_min) * i / 5;
        std::string sy = fixed(py(y), 1);
        out += "<line x1=\"" + fixed(left - 5, 1) + "\" y1=\"" + sy + "\" x2=\"" + fixed(left, 1) + "\" y2=\"" + sy +
               "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fixed(left - 8, 1) + "\" y=\"" + sy + "\" text-anchor=\"end\" dy=\"4\">" +
               format_probability(y) + "</text>\n";
    }
    out += "<text x=\"" + fixed(left + plot_w / 2, 1) + "\" y=\"" + fixed(height - 10, 1) +
           "\" text-anchor=\"middle\">" + escape_xml(spec.x_label) + "</text>\n";
    out += "<text transform=\"translate(16 " + fixed(top + plot_h / 2, 1) +
           ") rotate(-90)\" text-anchor=\"middle\">" + escape_xml(spec.y_label) + "</text>\n";

    for (size_t s = 0; s < series.size(); s++) {
        const Series &line = series[s];
        if (line.x.size() != line.y.size()) {
            throw ContractError("series '" + line.label + "' has mismatched coordinates");
        }
        const char *colour = PALETTE[s % PALETTE.size()];
        std::string points;
        for (size_t i = 0; i < line.x.size(); i++) {
            if (spec.log_y && !(line.y[i] > 0)) {
                continue;
            }
            if (!points.empty()) {
                points += ' ';
            }
            points += fixed(px(line.x[i]), 2) + "," + fixed(py(line.y[i]), 2);
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" +
               points + "\"/>\n";
        double ly = top + 10 + 16 * static_cast<double>(s);
        out += "<line x1=\"" + fixed(left + plot_w + 10, 1) + "\" y1=\"" + fixed(ly, 1) + "\" x2=\"" +
               fixed(left + plot_w + 30, 1) + "\" y2=\"" + fixed(ly, 1) + "\" stroke=\"" + colour +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fixed(left + plot_w + 35, 1) + "\" y=\"" + fixed(ly, 1) + "\" dy=\"4\">" +
               escape_xml(line.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

}  // namespace purify

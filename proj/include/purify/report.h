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


#ifndef PURIFY_REPORT_H
#define PURIFY_REPORT_H

#include <string>
#include <vector>

namespace purify {

/// Probability formatting used in every CSV: 9 significant digits, '.' as
/// the decimal point regardless of locale.
std::string format_probability(double value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Throws ContractError if the row width differs from the header.
    void add_row(std::vector<std::string> row);
    /// Comma separated, one line per row after the header. Fields holding a
    /// comma, quote or newline are quoted.
    std::string str() const;
};

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    double x_min = 0;
    double x_max = 1;
    double y_min = 0;
    double y_max = 1;
    bool log_y = false;
};

/// Line chart with axes, ticks and a legend. The output depends only on the
/// inputs. Points outside the y range are clipped to it; with log_y,
/// non-positive values are dropped.
std::string svg_line_chart(const std::vector<Series> &series, const PlotSpec &spec);

/// Writes text to a file. Throws std::runtime_error naming the path on failure.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace purify

#endif

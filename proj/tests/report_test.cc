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

#include <gtest/gtest.h>

#include <algorithm>
#include <clocale>

#include "purify/errors.h"

using namespace purify;

TEST(report, probability_format) {
    EXPECT_EQ(format_probability(0.00498243217123), "0.00498243217");
    EXPECT_EQ(format_probability(0.5), "0.5");
    EXPECT_EQ(format_probability(0), "0");
    EXPECT_EQ(format_probability(1.0 / 3), "0.333333333");
    EXPECT_EQ(format_probability(1.234e-12), "1.234e-12");
}

TEST(report, probability_format_ignores_locale) {
    const char *old = std::setlocale(LC_NUMERIC, nullptr);
    std::string saved = old ? old : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        EXPECT_EQ(format_probability(0.25), "0.25");
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST(report, csv) {
    CsvTable t{{"circuit", "p0"}, {}};
    EXPECT_EQ(t.str(), "circuit,p0\n");
    t.add_row({"a,b", "0.1"});
    t.add_row({"say \"x\"", "0.2"});
    EXPECT_EQ(t.str(), "circuit,p0\n\"a,b\",0.1\n\"say \"\"x\"\"\",0.2\n");
    EXPECT_THROW(t.add_row({"only one"}), ContractError);
}

TEST(report, svg_is_deterministic) {
    std::vector<Series> s{{"a", {0, 0.5, 1}, {0, 0.25, 1}}, {"b<c", {0, 1}, {1, 0}}};
    PlotSpec spec{"title", "x", "y", 0, 1, 0, 1, false};
    std::string first = svg_line_chart(s, spec);
    EXPECT_EQ(first, svg_line_chart(s, spec));
    EXPECT_EQ(first.rfind("<svg", 0), 0u);
    EXPECT_NE(first.find("b&lt;c"), std::string::npos);
    EXPECT_NE(first.find("<polyline"), std::string::npos);
    EXPECT_NE(first.find("</svg>"), std::string::npos);
}

TEST(report, svg_log_axis_drops_non_positive) {
    std::vector<Series> s{{"a", {0, 0.5, 1}, {0, 0.01, 1}}};
    std::string svg = svg_line_chart(s, {"t", "x", "y", 0, 1, 1e-4, 1, true});
    size_t start = svg.find("points=\"");
    size_t end = svg.find('"', start + 8);
    std::string points = svg.substr(start + 8, end - start - 8);
    EXPECT_EQ(std::count(points.begin(), points.end(), ','), 2);
    EXPECT_THROW(svg_line_chart(s, {"t", "x", "y", 0, 1, 0, 1, true}), ContractError);
}

TEST(report, write_errors_name_the_path) {
    try {
        write_text_file("/nonexistent-dir/x.csv", "a");
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/x.csv"), std::string::npos);
    }
}

// SPDX-License-Identifier: Apache-2.0
//
// acfenv: environment-dependent autocorrelation of mobile radio signals
// Copyright (C) 2026 The acfenv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ACFENV_IO_SVG_PLOT_HPP
#define ACFENV_IO_SVG_PLOT_HPP

#include <string>
#include <vector>

namespace acfenv::io
{

struct PlotSeries
{
    std::string label;
    std::vector<double> x;
    std::vector<double> y; // non-finite points are skipped
};

struct PlotSpec
{
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    double width = 720.0;
    double height = 480.0;
};

// Standalone SVG line chart: framed axes with linear ticks, one <polyline>
// per series, and a legend.
std::string render_svg(const PlotSpec &spec);

// Round tick positions covering [lo, hi], about `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

} // namespace acfenv::io

#endif

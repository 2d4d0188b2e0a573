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

#include <acfenv/io/svg_plot.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace acfenv::io
{

namespace
{

constexpr std::array<const char *, 8> palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string xml_escape(const std::string &s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s)
    {
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v)
{
    if (std::abs(v) < 1e-12)
        v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double nice_step(double raw)
{
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    if (norm <= 1.0)
        return mag;
    if (norm <= 2.0)
        return 2.0 * mag;
    if (norm <= 5.0)
        return 5.0 * mag;
    return 10.0 * mag;
}

} // namespace

std::vector<double> nice_ticks(double lo, double hi, int target)
{
    if (!(hi > lo) || target < 2)
        return {lo};
    const double step = nice_step((hi - lo) / (target - 1));
    std::vector<double> ticks;
    const double first = std::ceil(lo / step - 1e-9) * step;
    for (double t = first; t <= hi + step * 1e-9; t += step)
        ticks.push_back(t);
    return ticks;
}

std::string render_svg(const PlotSpec &spec)
{
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto &s : spec.series)
    {
        if (s.x.size() != s.y.size())
            throw std::invalid_argument("Plot series '" + s.label + "' has mismatched x/y lengths.");
        for (std::size_t i = 0; i < s.x.size(); ++i)
        {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!std::isfinite(xmin))
    {
        xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;
    if (ymax == ymin)
    {
        ymin -= 0.5;
        ymax += 0.5;
    }

    // Snap the data range outward to tick positions
    const auto yt = nice_ticks(ymin, ymax);
    const double ystep = yt.size() > 1 ? yt[1] - yt[0] : 1.0;
    ymin = std::floor(ymin / ystep + 1e-9) * ystep;
    ymax = std::ceil(ymax / ystep - 1e-9) * ystep;
    const auto xticks = nice_ticks(xmin, xmax);
    const auto yticks = nice_ticks(ymin, ymax);

    const double left = 70.0, right = 170.0, top = 40.0, bottom = 55.0;
    const double pw = spec.width - left - right;
    const double ph = spec.height - top - bottom;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(spec.width) + "\" height=\"" + num(spec.height) +
           "\" viewBox=\"0 0 " + num(spec.width) + " " + num(spec.height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(spec.width) + "\" height=\"" + num(spec.height) +
           "\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" + xml_escape(spec.title) + "</text>\n";

    // Grid and ticks
    out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (double t : xticks)
    {
        const std::string x = num(px(t));
        out += "<line x1=\"" + x + "\" y1=\"" + num(top) + "\" x2=\"" + x + "\" y2=\"" + num(top + ph) +
               "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + x + "\" y=\"" + num(top + ph + 16) + "\" text-anchor=\"middle\">" + tick_label(t) +
               "</text>\n";
    }
    for (double t : yticks)
    {
        const std::string y = num(py(t));
        out += "<line x1=\"" + num(left) + "\" y1=\"" + y + "\" x2=\"" + num(left + pw) + "\" y2=\"" + y +
               "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(t) + 4) + "\" text-anchor=\"end\">" +
               tick_label(t) + "</text>\n";
    }
    out += "</g>\n";
    out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
           "\" fill=\"none\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(spec.height - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + xml_escape(spec.x_label) +
           "</text>\n";
    out += "<text x=\"18\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 " + num(top + ph / 2) + ")\">" + xml_escape(spec.y_label) +
           "</text>\n";

    // One polyline per series; non-finite samples are skipped
    for (std::size_t k = 0; k < spec.series.size(); ++k)
    {
        const auto &s = spec.series[k];
        const char *color = palette[k % palette.size()];
        std::string points;
        for (std::size_t i = 0; i < s.x.size(); ++i)
        {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
                continue;
            if (!points.empty())
                points += ' ';
            points += num(px(s.x[i])) + "," + num(py(s.y[i]));
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" data-series=\"" +
               xml_escape(s.label) + "\" points=\"" + points + "\"/>\n";

        const double ly = top + 14.0 + 20.0 * static_cast<double>(k);
        const double lx = left + pw + 14.0;
        out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(s.label) + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace acfenv::io

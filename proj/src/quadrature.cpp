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

#include <acfenv/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace acfenv
{

namespace
{

// Abscissae of the 21-point Kronrod rule; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> xgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000};

constexpr std::array<double, 11> wgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};

constexpr std::array<double, 5> wg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697, 0.219086362515982043995534934228163,
    0.269266719309996355091226921569469, 0.295524224714752870173892994651338};

struct Panel
{
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel &other) const { return error < other.error; }
};

Panel gauss_kronrod_21(const std::function<double(double)> &f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double res_k = wgk[10] * fc;
    double res_g = 0.0;

    for (std::size_t j = 0; j < 10; ++j)
    {
        const double dx = half * xgk[j];
        const double pair = f(center - dx) + f(center + dx);
        res_k += wgk[j] * pair;
        if (j % 2 == 1)
            res_g += wg[j / 2] * pair;
    }

    return {a, b, res_k * half, std::abs((res_k - res_g) * half)};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)> &f, double a, double b, const QuadratureOptions &opts)
{
    if (!(opts.abs_tol > 0.0))
        throw std::invalid_argument("Quadrature tolerance must be positive.");
    if (opts.max_intervals == 0)
        throw std::invalid_argument("Quadrature needs at least one interval.");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("Quadrature limits must be finite.");

    // Max-heap on error estimate
    std::vector<Panel> panels;
    panels.reserve(opts.max_intervals);
    panels.push_back(gauss_kronrod_21(f, a, b));
    double total_error = panels.front().error;

    while (total_error > opts.abs_tol)
    {
        if (panels.size() >= opts.max_intervals)
        {
            double total = 0.0;
            for (const auto &p : panels)
                total += p.value;
            throw QuadratureError("Adaptive quadrature did not converge: error estimate " + std::to_string(total_error) +
                                      " exceeds tolerance after " + std::to_string(panels.size()) + " intervals.",
                                  total, total_error);
        }

        std::pop_heap(panels.begin(), panels.end());
        const Panel worst = panels.back();
        panels.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw QuadratureError("Adaptive quadrature reached machine resolution before tolerance.", worst.value,
                                  total_error);

        for (const Panel &child : {gauss_kronrod_21(f, worst.a, mid), gauss_kronrod_21(f, mid, worst.b)})
        {
            panels.push_back(child);
            std::push_heap(panels.begin(), panels.end());
        }

        // Re-sum rather than update incrementally; the estimate can be tiny
        // compared with the panels being replaced.
        total_error = 0.0;
        for (const auto &p : panels)
            total_error += p.error;
    }

    // Left-to-right summation makes the value independent of heap layout
    std::sort(panels.begin(), panels.end(), [](const Panel &x, const Panel &y) { return x.a < y.a; });
    QuadratureResult result;
    for (const auto &p : panels)
    {
        result.value += p.value;
        result.abs_error += p.error;
    }
    result.intervals = panels.size();
    return result;
}

QuadratureResult integrate_even_interval(const std::function<double(double)> &f, double half_width, bool even,
                                         const QuadratureOptions &opts)
{
    if (!(half_width > 0.0))
        throw std::invalid_argument("Half width must be positive.");

    if (!even)
        return integrate(f, -half_width, half_width, opts);

    QuadratureOptions half_opts = opts;
    half_opts.abs_tol = 0.5 * opts.abs_tol;
    QuadratureResult r = integrate(f, 0.0, half_width, half_opts);
    r.value *= 2.0;
    r.abs_error *= 2.0;
    return r;
}

} // namespace acfenv

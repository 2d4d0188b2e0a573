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

#include <acfenv/extrema.hpp>

#include <acfenv/quadrature.hpp>

#include <algorithm>
#include <cmath>

namespace acfenv
{

namespace
{

// Golden-section minimization of g on [a, b] until the bracket is narrower
// than width; returns the bracket midpoint.
template <typename G>
double golden_section_min(G &&g, double a, double b, double width)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = g(c);
    double gd = g(d);
    while (b - a > width)
    {
        if (gc <= gd)
        {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        }
        else
        {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    return 0.5 * (a + b);
}

void validate(const ExtremaOptions &opts)
{
    if (!(opts.search_limit > 0.0) || !std::isfinite(opts.search_limit))
        throw std::invalid_argument("Extrema search limit must be positive.");
    if (!(opts.scan_step > 0.0) || opts.scan_step >= opts.search_limit)
        throw std::invalid_argument("Extrema scan step must be positive and below the search limit.");
    if (!(opts.location_tol > 0.0))
        throw std::invalid_argument("Extrema location tolerance must be positive.");
    if (!(opts.acf_tol > 0.0))
        throw std::invalid_argument("ACF tolerance must be positive.");
}

} // namespace

ExtremaReport find_first_extrema(const AcfModel &model, const ExtremaOptions &opts)
{
    validate(opts);

    const auto grid = make_grid(0.0, opts.search_limit, opts.scan_step);
    const AcfCurve curve = acf_curve(model, grid, opts.acf_tol);
    std::vector<double> mod(curve.values.size());
    std::transform(curve.values.begin(), curve.values.end(), mod.begin(), [](const AcfValue &v) { return v.modulus(); });

    // Slope changes smaller than the quadrature noise floor do not count, so a
    // flat |r| ~ 1 curve cannot produce a spurious extremum.
    const double noise = std::max(10.0 * opts.acf_tol, 1e-13);
    const std::size_t n = mod.size();

    std::size_t lo = 0;
    bool found_min = false;
    std::size_t j = 1;
    for (; j < n; ++j)
    {
        if (mod[j] < mod[lo])
            lo = j;
        else if (mod[j] > mod[lo] + noise && mod[lo] < mod[0] - noise)
        {
            found_min = true;
            break;
        }
    }
    if (!found_min)
        throw ExtremumNotFound("No local minimum of |r| found within tau' <= " + std::to_string(opts.search_limit) + ".");

    std::size_t hi = lo;
    bool found_max = false;
    for (; j < n; ++j)
    {
        if (mod[j] > mod[hi])
            hi = j;
        else if (mod[j] < mod[hi] - noise)
        {
            found_max = true;
            break;
        }
    }
    if (!found_max)
        throw ExtremumNotFound("No local maximum of |r| after the first minimum within tau' <= " +
                               std::to_string(opts.search_limit) + ".");

    auto modulus_at = [&](double tau) { return acf_value(model, NormalizedTime(tau), opts.acf_tol).modulus(); };

    const auto bracket = [&](std::size_t i) {
        return std::pair{grid[i > 0 ? i - 1 : 0].value(), grid[std::min(i + 1, n - 1)].value()};
    };

    const auto [min_a, min_b] = bracket(lo);
    const double tau_min = golden_section_min(modulus_at, min_a, min_b, opts.location_tol);
    const auto [max_a, max_b] = bracket(hi);
    const double tau_max =
        golden_section_min([&](double tau) { return -modulus_at(tau); }, max_a, max_b, opts.location_tol);

    ExtremaReport report;
    report.tau_min = NormalizedTime(tau_min);
    report.val_min = modulus_at(tau_min);
    report.tau_max = NormalizedTime(tau_max);
    report.val_max = modulus_at(tau_max);
    report.delta_r = delta_r(report);
    return report;
}

double delta_r(const ExtremaReport &report) noexcept
{
    return report.val_max - report.val_min;
}

SweepResult sweep_sigma(std::span<const DelaySpread> sigma_grid, const ExtremaOptions &opts)
{
    for (std::size_t k = 1; k < sigma_grid.size(); ++k)
        if (!(sigma_grid[k - 1] < sigma_grid[k]))
            throw std::invalid_argument("Delay spread grid must be strictly increasing.");

    SweepResult result;
    result.entries.reserve(sigma_grid.size());
    for (const DelaySpread &sigma : sigma_grid)
    {
        SweepEntry entry{sigma, std::nullopt, {}};
        try
        {
            entry.report = find_first_extrema(make_laplacian(sigma), opts);
        }
        catch (const ExtremumNotFound &e)
        {
            entry.error = e.what();
        }
        catch (const QuadratureError &e)
        {
            entry.error = e.what();
        }
        result.entries.push_back(std::move(entry));
    }
    return result;
}

} // namespace acfenv

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

#include <acfenv/acf_analytic.hpp>

#include <acfenv/bessel.hpp>
#include <acfenv/quadrature.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace acfenv
{

NormalizedTime::NormalizedTime(double tau_prime) : tau_prime_(tau_prime)
{
    if (!std::isfinite(tau_prime) || tau_prime < 0.0)
        throw std::domain_error("Normalized time must be finite and non-negative.");
}

double AcfValue::modulus() const noexcept
{
    return std::hypot(r_i, r_q);
}

std::string model_label(const AcfModel &model)
{
    if (std::holds_alternative<ClarkeModel>(model))
        return "clarke";
    const auto &dist = std::get<AoaDistribution>(model);
    if (dist.kind() == AoaKind::Uniform)
        return "uniform";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "laplacian(lambda=%.6g)", dist.lambda());
    return buf;
}

std::vector<NormalizedTime> make_grid(double start, double stop, double step)
{
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw std::invalid_argument("Grid bounds must be finite.");
    if (start < 0.0)
        throw std::invalid_argument("Grid start must be non-negative.");
    if (!(step > 0.0))
        throw std::invalid_argument("Grid step must be positive.");
    if (!(stop > start))
        throw std::invalid_argument("Grid stop must exceed start.");

    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-3));
    std::vector<NormalizedTime> grid;
    grid.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        grid.emplace_back(start + static_cast<double>(k) * step);
    return grid;
}

void validate_grid(std::span<const NormalizedTime> grid)
{
    if (grid.empty())
        throw std::invalid_argument("Grid must not be empty.");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k - 1] < grid[k]))
            throw std::invalid_argument("Grid must be strictly increasing.");
}

namespace
{

// Integrates g(2 pi tau' cos phi) * f(phi) over [-pi, pi] using the even
// symmetry of both factors.
template <typename Trig>
double expectation(const AoaDistribution &dist, NormalizedTime t, double tol, Trig trig)
{
    const double omega = 2.0 * pi * t.value();
    QuadratureOptions opts;
    opts.abs_tol = tol;
    opts.max_intervals = intervals_per_unit_lag * static_cast<std::size_t>(std::max(1.0, std::ceil(t.value())));

    if (dist.kind() == AoaKind::Uniform)
    {
        auto integrand = [&](double phi) { return trig(omega * std::cos(phi)); };
        // Density 1/(2 pi) is factored out, so scale the tolerance accordingly
        opts.abs_tol = tol * 2.0 * pi;
        return integrate_even_interval(integrand, pi, true, opts).value / (2.0 * pi);
    }

    const double lambda = dist.lambda();
    const double scale = dist.norm_c() * 0.5 * lambda;
    auto integrand = [&](double phi) { return trig(omega * std::cos(phi)) * std::exp(-lambda * std::abs(phi)); };
    opts.abs_tol = tol / scale;
    return scale * integrate_even_interval(integrand, pi, true, opts).value;
}

} // namespace

double acf_inphase(const AoaDistribution &dist, NormalizedTime t, double tol)
{
    return expectation(dist, t, tol, [](double x) { return std::cos(x); });
}

double acf_quadrature_comp(const AoaDistribution &dist, NormalizedTime t, double tol)
{
    return expectation(dist, t, tol, [](double x) { return std::sin(x); });
}

AcfValue acf_value(const AoaDistribution &dist, NormalizedTime t, double tol)
{
    return {acf_inphase(dist, t, tol), acf_quadrature_comp(dist, t, tol)};
}

AcfValue clarke_acf(NormalizedTime t) noexcept
{
    return {bessel_j0(2.0 * pi * t.value()), 0.0};
}

AcfValue acf_value(const AcfModel &model, NormalizedTime t, double tol)
{
    if (const auto *dist = std::get_if<AoaDistribution>(&model))
        return acf_value(*dist, t, tol);
    return clarke_acf(t);
}

AcfCurve acf_curve(const AcfModel &model, std::span<const NormalizedTime> grid, double tol)
{
    validate_grid(grid);
    AcfCurve curve{model, std::nullopt, {grid.begin(), grid.end()}, std::vector<AcfValue>(grid.size())};
    detail::parallel_for(grid.size(), [&](std::size_t i) { curve.values[i] = acf_value(model, grid[i], tol); });
    return curve;
}

} // namespace acfenv

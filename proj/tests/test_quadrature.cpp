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

#include <catch2/catch_amalgamated.hpp>

#include <acfenv/angle_model.hpp>
#include <acfenv/quadrature.hpp>

#include <cmath>

using namespace acfenv;
using Catch::Matchers::WithinAbs;

TEST_CASE("Constant integrand")
{
    const auto r = integrate_even_interval([](double) { return 1.0; }, pi, true);
    CHECK_THAT(r.value, WithinAbs(2.0 * pi, 1e-9));
    const auto full = integrate_even_interval([](double) { return 1.0; }, pi, false);
    CHECK_THAT(full.value, WithinAbs(2.0 * pi, 1e-9));
}

TEST_CASE("Full-period cosine")
{
    const auto r = integrate_even_interval([](double x) { return std::cos(x); }, pi, true);
    CHECK_THAT(r.value, WithinAbs(0.0, 1e-9));
}

TEST_CASE("Laplacian kernel against its antiderivative")
{
    // (2 / 2.5) (1 - e^{-2.5 pi})
    const double exact = 0.799689437436858631393895275678;
    const auto even = integrate_even_interval([](double x) { return std::exp(-2.5 * std::abs(x)); }, pi, true);
    CHECK_THAT(even.value, WithinAbs(exact, 1e-9));
    const auto full = integrate_even_interval([](double x) { return std::exp(-2.5 * std::abs(x)); }, pi, false);
    CHECK_THAT(full.value, WithinAbs(exact, 1e-9));
}

TEST_CASE("Half-interval doubling equals the full-interval integral for the ACF integrands")
{
    for (double lambda : {2.5, 0.744, 0.1016})
        for (double tau : {0.1, 0.383, 0.61, 1.7, 3.0})
        {
            const double w = 2.0 * pi * tau;
            auto fi = [&](double phi) { return std::cos(w * std::cos(phi)) * std::exp(-lambda * std::abs(phi)); };
            auto fq = [&](double phi) { return std::sin(w * std::cos(phi)) * std::exp(-lambda * std::abs(phi)); };
            QuadratureOptions opts;
            opts.abs_tol = 1e-11;
            CHECK_THAT(integrate_even_interval(fi, pi, true, opts).value,
                       WithinAbs(integrate_even_interval(fi, pi, false, opts).value, 2e-11));
            CHECK_THAT(integrate_even_interval(fq, pi, true, opts).value,
                       WithinAbs(integrate_even_interval(fq, pi, false, opts).value, 2e-11));
        }
}

TEST_CASE("Error estimate respects the tolerance")
{
    const double exact = 2.0; // integral of sin on [0, pi]
    for (double tol : {1e-4, 1e-8, 1e-12})
    {
        QuadratureOptions opts;
        opts.abs_tol = tol;
        const auto r = integrate([](double x) { return std::sin(x); }, 0.0, pi, opts);
        CHECK(r.abs_error <= tol);
        CHECK_THAT(r.value, WithinAbs(exact, tol));
    }
}

TEST_CASE("Convergence failure is reported, not truncated")
{
    QuadratureOptions opts;
    opts.abs_tol = 1e-14;
    opts.max_intervals = 2;
    try
    {
        integrate([](double x) { return std::cos(200.0 * std::cos(x)); }, 0.0, pi, opts);
        FAIL("expected QuadratureError");
    }
    catch (const QuadratureError &e)
    {
        CHECK(e.error_estimate() > opts.abs_tol);
        CHECK(std::isfinite(e.estimate()));
    }
}

TEST_CASE("Invalid quadrature arguments")
{
    QuadratureOptions bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, bad), std::invalid_argument);
    CHECK_THROWS_AS(integrate_even_interval([](double) { return 1.0; }, -1.0, true), std::invalid_argument);
}

TEST_CASE("Oscillatory integrand: J0 by Bessel's integral")
{
    // J0(x) = (1/pi) * integral_0^pi cos(x cos phi) dphi
    for (double x : {0.5, 2.404825557695773, 10.0, 30.0})
    {
        QuadratureOptions opts;
        opts.abs_tol = 1e-12;
        opts.max_intervals = 1000;
        const auto r = integrate([&](double phi) { return std::cos(x * std::cos(phi)); }, 0.0, pi, opts);
        CHECK_THAT(r.value / pi, WithinAbs(std::cyl_bessel_j(0.0, x), 1e-11));
    }
}

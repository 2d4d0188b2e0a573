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

#include <acfenv/acf_analytic.hpp>
#include <acfenv/acf_estimator.hpp>
#include <acfenv/quadrature.hpp>

#include <algorithm>
#include <cmath>

using namespace acfenv;
using Catch::Matchers::WithinAbs;

namespace
{

// First zero of J0 divided by 2 pi (mpmath)
constexpr double clarke_first_zero = 0.382739874781006178;

double sup_distance_to_clarke(const AcfModel &model, double step = 0.005)
{
    const auto grid = make_grid(0.0, 2.0, step);
    const auto curve = acf_curve(model, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
        worst = std::max(worst, std::abs(curve.values[k].modulus() - std::abs(clarke_acf(grid[k]).r_i)));
    return worst;
}

} // namespace

TEST_CASE("NormalizedTime validation")
{
    CHECK_NOTHROW(NormalizedTime(0.0));
    CHECK_THROWS_AS(NormalizedTime(-0.1), std::domain_error);
    CHECK_THROWS_AS(NormalizedTime(std::nan("")), std::domain_error);
}

TEST_CASE("Grids")
{
    const auto g = make_grid(0.0, 2.0, 0.005);
    CHECK(g.size() == 401);
    CHECK(g.front().value() == 0.0);
    CHECK_THAT(g.back().value(), WithinAbs(2.0, 1e-12));
    CHECK(make_grid(0.0, 3.0, 0.01).size() == 301);
    CHECK_THROWS_AS(make_grid(-1.0, 2.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 0.1), std::invalid_argument);

    const std::vector<NormalizedTime> unsorted = {NormalizedTime(0.2), NormalizedTime(0.1)};
    CHECK_THROWS_AS(acf_curve(ClarkeModel{}, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(acf_curve(ClarkeModel{}, std::vector<NormalizedTime>{}), std::invalid_argument);
}

TEST_CASE("Value at zero lag")
{
    for (const auto &d : {AoaDistribution::uniform(), AoaDistribution::modified_laplacian(2.5),
                          make_laplacian(DelaySpread(1.0)), AoaDistribution::modified_laplacian(1e3)})
    {
        const auto v = acf_value(d, NormalizedTime(0.0));
        CHECK_THAT(v.r_i, WithinAbs(1.0, 2e-9));
        CHECK_THAT(v.r_q, WithinAbs(0.0, 2e-9));
    }
    const auto c = clarke_acf(NormalizedTime(0.0));
    CHECK(c.r_i == 1.0);
    CHECK(c.r_q == 0.0);

    const std::vector<NormalizedTime> zero = {NormalizedTime(0.0)};
    const auto curve = acf_curve(make_laplacian(DelaySpread(0.2)), zero);
    REQUIRE(curve.values.size() == 1);
    CHECK_THAT(curve.values[0].r_i, WithinAbs(1.0, 2e-9));
}

TEST_CASE("Clarke closed form")
{
    CHECK_THAT(clarke_acf(NormalizedTime(clarke_first_zero)).r_i, WithinAbs(0.0, 1e-12));
    CHECK_THAT(clarke_acf(NormalizedTime(0.609834945633252227)).r_i, WithinAbs(-0.402759395702553, 1e-12));
    CHECK_THAT(clarke_acf(NormalizedTime(0.38274)).r_i, WithinAbs(0.0, 2e-6));
}

TEST_CASE("Uniform distribution reproduces the Clarke model")
{
    const auto uni = AoaDistribution::uniform();
    CHECK_THAT(acf_inphase(uni, NormalizedTime(0.38274)), WithinAbs(0.0, 2e-6));
    // J0(0.2 pi), mpmath
    CHECK_THAT(acf_inphase(uni, NormalizedTime(0.1)), WithinAbs(0.903712642092466302, 1e-9));
    for (double t : {0.1, 0.5, 1.0})
        CHECK_THAT(acf_quadrature_comp(uni, NormalizedTime(t)), WithinAbs(0.0, default_acf_tol));

    const auto grid = make_grid(0.0, 3.0, 0.01);
    const auto curve = acf_curve(uni, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        CHECK_THAT(curve.values[k].r_i, WithinAbs(clarke_acf(grid[k]).r_i, 10 * default_acf_tol));
        CHECK_THAT(curve.values[k].r_q, WithinAbs(0.0, 10 * default_acf_tol));
    }
}

TEST_CASE("Laplacian ACF against independent adaptive quadrature")
{
    // scipy.integrate.quad at 1e-13, frozen
    const auto d1 = make_laplacian(DelaySpread(1.0));
    const auto v1 = acf_value(d1, NormalizedTime(0.2));
    CHECK_THAT(v1.r_i, WithinAbs(0.6416301958176296, 1e-9));
    CHECK_THAT(v1.r_q, WithinAbs(0.06561536748389932, 1e-9));

    const auto d01 = make_laplacian(DelaySpread(0.1));
    const auto v01 = acf_value(d01, NormalizedTime(0.3));
    CHECK_THAT(v01.r_i, WithinAbs(0.21301064677281148, 1e-9));
    CHECK_THAT(v01.r_q, WithinAbs(0.48763168236344473, 1e-9));
}

TEST_CASE("Laplacian in-phase component agrees with Monte Carlo")
{
    const auto d = make_laplacian(DelaySpread(1.0));
    EnsembleConfig cfg;
    cfg.seed = 99;
    const auto est = estimate_acf(d, NormalizedTime(0.2), cfg);
    const double analytic = acf_inphase(d, NormalizedTime(0.2));
    CHECK(std::abs(est.value.r_i - analytic) < 3.0 * est.std_error_i);
}

TEST_CASE("Concentrated distribution behaves like a single path")
{
    const auto delta = AoaDistribution::modified_laplacian(1e3);
    CHECK_THAT(acf_quadrature_comp(delta, NormalizedTime(0.25)), WithinAbs(1.0, 1e-3));
    for (double t : {0.1, 0.37, 0.9, 1.6})
        CHECK_THAT(acf_value(delta, NormalizedTime(t)).modulus(), WithinAbs(1.0, 1e-3));
}

TEST_CASE("Modulus never exceeds one")
{
    const auto grid = make_grid(0.0, 5.0, 0.01);
    for (const auto &d : {AoaDistribution::uniform(), AoaDistribution::modified_laplacian(2.5),
                          make_laplacian(DelaySpread(0.2)), AoaDistribution::modified_laplacian(1e3)})
        for (const auto &v : acf_curve(d, grid).values)
            CHECK(v.modulus() <= 1.0 + 1e-9);
}

TEST_CASE("Rural curve is more correlated than urban at the urban first minimum")
{
    const auto grid = make_grid(0.0, 2.0, 0.001);
    const auto urban = acf_curve(make_laplacian(DelaySpread(1.0)), grid);
    const auto rural = acf_curve(make_laplacian(DelaySpread(0.1)), grid);

    // Brute-force first local minimum of the urban modulus
    std::size_t k = 1;
    while (k + 1 < grid.size() && !(urban.values[k].modulus() < urban.values[k - 1].modulus() &&
                                     urban.values[k].modulus() <= urban.values[k + 1].modulus()))
        ++k;
    REQUIRE(k + 1 < grid.size());
    CHECK(urban.values[k].modulus() <= rural.values[k].modulus());
}

TEST_CASE("Laplacian curves approach Clarke as the concentration falls")
{
    const double d744 = sup_distance_to_clarke(AoaDistribution::modified_laplacian(0.744));
    const double d41 = sup_distance_to_clarke(AoaDistribution::modified_laplacian(0.41));
    const double d102 = sup_distance_to_clarke(AoaDistribution::modified_laplacian(0.102));
    CHECK(d744 > d41);
    CHECK(d41 > d102);
    // scipy quad on the same grid
    CHECK_THAT(d744, WithinAbs(0.4261914722274195, 1e-8));
    CHECK_THAT(d41, WithinAbs(0.245029697081529, 1e-8));
    CHECK_THAT(d102, WithinAbs(0.05740465382152737, 1e-8));
}

TEST_CASE("Halving the tolerance moves no value by more than the larger tolerance")
{
    const auto grid = make_grid(0.0, 3.0, 0.01);
    for (const AcfModel m : {AcfModel(make_laplacian(DelaySpread(0.1))), AcfModel(make_laplacian(DelaySpread(2.0))),
                             AcfModel(AoaDistribution::uniform())})
    {
        const auto a = acf_curve(m, grid, 1e-9);
        const auto b = acf_curve(m, grid, 5e-10);
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            CHECK_THAT(a.values[k].r_i, WithinAbs(b.values[k].r_i, 1e-9));
            CHECK_THAT(a.values[k].r_q, WithinAbs(b.values[k].r_q, 1e-9));
        }
    }
}

TEST_CASE("Parallel curve equals pointwise evaluation")
{
    const auto d = make_laplacian(DelaySpread(0.5));
    const auto grid = make_grid(0.0, 2.0, 0.05);
    const auto curve = acf_curve(d, grid);
    for (std::size_t k = 0; k < grid.size(); ++k)
    {
        const auto v = acf_value(d, grid[k]);
        CHECK(v.r_i == curve.values[k].r_i);
        CHECK(v.r_q == curve.values[k].r_q);
    }
}

TEST_CASE("Large lags still converge")
{
    // The subdivision budget grows with tau'
    const auto d = make_laplacian(DelaySpread(0.5));
    CHECK_NOTHROW(acf_value(d, NormalizedTime(25.0)));
    CHECK_THAT(acf_inphase(AoaDistribution::uniform(), NormalizedTime(4.0)),
               WithinAbs(std::cyl_bessel_j(0.0, 8.0 * pi), 1e-9));
}

TEST_CASE("Model labels")
{
    CHECK(model_label(ClarkeModel{}) == "clarke");
    CHECK(model_label(AoaDistribution::uniform()) == "uniform");
    CHECK(model_label(AoaDistribution::modified_laplacian(2.5)) == "laplacian(lambda=2.5)");
}

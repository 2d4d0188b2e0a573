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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

using namespace acfenv;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("DelaySpread rejects negative and non-finite values")
{
    CHECK_NOTHROW(DelaySpread(0.0));
    CHECK_THROWS_AS(DelaySpread(-1e-9), std::domain_error);
    CHECK_THROWS_AS(DelaySpread(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(DelaySpread(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("Concentration fit spot values")
{
    CHECK(lambda_from_delay_spread(DelaySpread(0.0)) == 2.5);
    CHECK_THAT(lambda_from_delay_spread(DelaySpread(0.1)), WithinAbs(1.0 / 1.344, 1e-15));
    CHECK_THAT(lambda_from_delay_spread(DelaySpread(0.1)), WithinAbs(0.744048, 1e-6));
    CHECK_THAT(lambda_from_delay_spread(DelaySpread(1.0)), WithinAbs(0.101626, 1e-6));
}

TEST_CASE("Concentration is strictly decreasing in delay spread and bounded by 2.5")
{
    double previous = std::numeric_limits<double>::infinity();
    for (double s = 0.0; s <= 20.0; s += 0.05)
    {
        const double l = lambda_from_delay_spread(DelaySpread(s));
        CHECK(l < previous);
        CHECK(l <= 2.5);
        CHECK(l > 0.0);
        previous = l;
    }
}

TEST_CASE("Laplacian normalization factor")
{
    const auto d0 = make_laplacian(DelaySpread(0.0));
    CHECK(d0.kind() == AoaKind::ModifiedLaplacian);
    CHECK(d0.lambda() == 2.5);
    // 1 / (1 - e^{-2.5 pi}), mpmath
    CHECK_THAT(d0.norm_c(), WithinAbs(1.0003883539641798, 1e-13));

    const auto d1 = make_laplacian(DelaySpread(1.0));
    CHECK_THAT(d1.norm_c(), WithinAbs(3.6587298189951656, 1e-12));

    for (double s : {0.0, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 100.0})
    {
        const auto d = make_laplacian(DelaySpread(s));
        CHECK_THAT(d.norm_c() * (1.0 - std::exp(-d.lambda() * pi)), WithinRel(1.0, 1e-12));
    }

    CHECK_THROWS_AS(AoaDistribution::modified_laplacian(0.0), std::domain_error);
    CHECK_THROWS_AS(AoaDistribution::modified_laplacian(-1.0), std::domain_error);
}

TEST_CASE("pdf values, symmetry and domain")
{
    const auto uni = AoaDistribution::uniform();
    CHECK_THAT(pdf(uni, 0.3), WithinAbs(0.159154943091895, 1e-14));
    CHECK_THAT(pdf(uni, -pi), WithinAbs(1.0 / (2.0 * pi), 1e-16));

    const auto lap = AoaDistribution::modified_laplacian(2.5);
    CHECK(pdf(lap, 0.0) == lap.norm_c() * lap.lambda() / 2.0);
    CHECK(pdf(lap, pi) == pdf(lap, -pi));

    for (double phi = 0.0; phi <= pi; phi += 0.01)
    {
        CHECK(pdf(lap, phi) == pdf(lap, -phi));
        CHECK(pdf(lap, phi) <= pdf(lap, 0.0));
    }

    CHECK_THROWS_AS(pdf(lap, 3.2), std::domain_error);
    CHECK_THROWS_AS(pdf(uni, -3.2), std::domain_error);
    CHECK_THROWS_AS(pdf(lap, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("pdf integrates to one")
{
    std::vector<AoaDistribution> dists = {AoaDistribution::uniform(), AoaDistribution::modified_laplacian(1e3),
                                          AoaDistribution::modified_laplacian(1e-4)};
    for (double s : {0.0, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0})
        dists.push_back(make_laplacian(DelaySpread(s)));

    QuadratureOptions opts;
    opts.abs_tol = 1e-12;
    for (const auto &d : dists)
    {
        const auto r = integrate([&](double phi) { return pdf(d, phi); }, -pi, pi, opts);
        CHECK_THAT(r.value, WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("Weak concentration approaches the uniform density")
{
    const auto lap = AoaDistribution::modified_laplacian(1e-4);
    double worst = 0.0;
    for (double phi = -pi; phi <= pi; phi += 0.001)
        worst = std::max(worst, std::abs(pdf(lap, phi) - 1.0 / (2.0 * pi)));
    CHECK(worst < 1e-3);
}

TEST_CASE("Inverse CDF edges")
{
    CHECK(laplacian_magnitude_quantile(2.5, 0.0) == 0.0);
    const double almost_one = std::nextafter(1.0, 0.0);
    CHECK_THAT(laplacian_magnitude_quantile(2.5, almost_one), WithinAbs(pi, 1e-6));
    CHECK(laplacian_magnitude_quantile(0.01, almost_one) <= pi);

    // Quantile inverts the CDF of |phi|
    const auto lap = AoaDistribution::modified_laplacian(0.7);
    for (double u : {0.1, 0.25, 0.5, 0.9})
    {
        const double m = laplacian_magnitude_quantile(0.7, u);
        CHECK_THAT(2.0 * (cdf(lap, m) - 0.5), WithinAbs(u, 1e-14));
    }
}

TEST_CASE("Sampler stays in range and is reproducible")
{
    for (const auto &d : {AoaDistribution::uniform(), AoaDistribution::modified_laplacian(2.5),
                          AoaDistribution::modified_laplacian(1e-3)})
    {
        Rng a(42), b(42);
        for (int i = 0; i < 20000; ++i)
        {
            const double x = sample_aoa(d, a);
            CHECK((x >= -pi && x <= pi));
            REQUIRE(x == sample_aoa(d, b));
        }
    }
}

TEST_CASE("Sampler matches the analytic CDF (Kolmogorov-Smirnov)")
{
    // 1.36 / sqrt(n) is the 95% critical value; n = 1e6 gives ~0.00136
    const std::size_t n = 1000000;
    for (const auto &d : {AoaDistribution::modified_laplacian(2.5), make_laplacian(DelaySpread(1.0)),
                          AoaDistribution::uniform()})
    {
        Rng rng(2018);
        std::vector<double> xs(n);
        for (auto &x : xs)
            x = sample_aoa(d, rng);
        std::sort(xs.begin(), xs.end());
        double ks = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double f = cdf(d, xs[i]);
            ks = std::max({ks, std::abs(f - static_cast<double>(i) / n), std::abs(f - static_cast<double>(i + 1) / n)});
        }
        CHECK(ks < 0.002);
    }
}

TEST_CASE("Independent streams differ")
{
    Rng a = Rng::stream(7, 0), b = Rng::stream(7, 1);
    int equal = 0;
    for (int i = 0; i < 100; ++i)
        equal += a() == b();
    CHECK(equal == 0);
    const double u = Rng(1).uniform();
    CHECK((u >= 0.0 && u < 1.0));
}

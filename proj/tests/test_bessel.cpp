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

#include <acfenv/bessel.hpp>

#include <cmath>

using namespace acfenv;
using Catch::Matchers::WithinAbs;

TEST_CASE("J0 reference values")
{
    CHECK(bessel_j0(0.0) == 1.0);
    // mpmath, 30 digits
    CHECK_THAT(bessel_j0(3.14159265358979323846), WithinAbs(-0.304242177644093864202034912818, 1e-14));
    CHECK_THAT(bessel_j0(0.2 * 3.14159265358979323846), WithinAbs(0.903712642092466301737420116916, 1e-14));
    CHECK_THAT(bessel_j0(2.404825557695772768621631879326), WithinAbs(0.0, 1e-14));
    CHECK_THAT(bessel_j0(3.831705970207512315614435886309), WithinAbs(-0.402759395702552972096002186427, 1e-14));
}

TEST_CASE("J0 is even")
{
    for (double x : {0.1, 1.0, 11.9, 12.1, 25.0})
        CHECK(bessel_j0(-x) == bessel_j0(x));
}

TEST_CASE("J0 agrees with the standard library over the lag range of interest")
{
    // tau' in [0, 5] maps to x = 2 pi tau' in [0, 31.4]
    double worst = 0.0;
    for (double x = 0.0; x <= 2.0 * 3.14159265358979323846 * 5.0; x += 0.0007)
        worst = std::max(worst, std::abs(bessel_j0(x) - std::cyl_bessel_j(0.0, x)));
    CHECK(worst <= 1e-10);
}

TEST_CASE("J0 is continuous across the series/asymptotic switch")
{
    const double below = bessel_j0(std::nextafter(12.0, 0.0));
    const double above = bessel_j0(12.0);
    CHECK_THAT(above, WithinAbs(below, 1e-11));
}

TEST_CASE("J0 far argument")
{
    for (double x : {50.0, 100.0, 1000.0})
        CHECK_THAT(bessel_j0(x), WithinAbs(std::cyl_bessel_j(0.0, x), 1e-12));
}

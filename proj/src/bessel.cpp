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

#include <acfenv/bessel.hpp>

#include <cmath>

namespace acfenv
{

namespace
{

constexpr double series_limit = 12.0;

// sum_k (-x^2/4)^k / (k!)^2; the largest term near |x| = 12 is ~4e3, so long
// double accumulation keeps the cancellation error well below 1e-12.
double j0_series(double x) noexcept
{
    const long double q = -0.25L * static_cast<long double>(x) * static_cast<long double>(x);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k)
    {
        term *= q / (static_cast<long double>(k) * static_cast<long double>(k));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-24L)
            break;
    }
    return static_cast<double>(sum);
}

// J0(x) ~ sqrt(2 / (pi x)) * (P(x) cos(x - pi/4) - Q(x) sin(x - pi/4)), with
// P, Q the Hankel series in 1/(8x). Truncated at the smallest term.
double j0_asymptotic(double x) noexcept
{
    const long double z = 8.0L * static_cast<long double>(x);
    long double p = 1.0L;
    long double q = 0.0L;
    // term_k = prod_{j<=k} (-(2j-1)^2) / (k! (8x)^k)
    long double term = 1.0L;
    long double last = 1.0L;
    for (int k = 1; k < 60; ++k)
    {
        const long double odd = 2.0L * k - 1.0L;
        term *= -odd * odd / (static_cast<long double>(k) * z);
        if (std::fabs(term) > std::fabs(last))
            break;
        last = term;
        // Even k feeds P with alternating sign, odd k feeds Q
        if (k % 2 == 0)
            p += (k % 4 == 0 ? 1.0L : -1.0L) * term;
        else
            q += (k % 4 == 1 ? 1.0L : -1.0L) * term;
        if (std::fabs(term) < 1e-22L)
            break;
    }
    const long double xl = static_cast<long double>(x);
    const long double pi_l = 3.141592653589793238462643383279502884L;
    const long double phase = xl - pi_l / 4.0L;
    const long double amp = std::sqrt(2.0L / (pi_l * xl));
    return static_cast<double>(amp * (p * std::cos(phase) - q * std::sin(phase)));
}

} // namespace

double bessel_j0(double x) noexcept
{
    const double ax = std::fabs(x);
    if (ax < series_limit)
        return j0_series(ax);
    return j0_asymptotic(ax);
}

} // namespace acfenv

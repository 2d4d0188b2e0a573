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

#ifndef ACFENV_ANGLE_MODEL_HPP
#define ACFENV_ANGLE_MODEL_HPP

#include <acfenv/rng.hpp>

namespace acfenv
{

inline constexpr double pi = 3.141592653589793238462643383279502884;

// RMS delay spread of the propagation environment, in MICROSECONDS.
// The delay-spread -> concentration fit below is only meaningful in this unit
// (rural ~0.1 us, typical urban ~1.0 us).
class DelaySpread
{
public:
    // Throws std::domain_error for negative, NaN or infinite values.
    explicit DelaySpread(double sigma_tau_us);

    double microseconds() const noexcept { return sigma_tau_us_; }

    friend bool operator==(const DelaySpread &, const DelaySpread &) = default;
    friend auto operator<=>(const DelaySpread &, const DelaySpread &) = default;

private:
    double sigma_tau_us_;
};

enum class AoaKind
{
    ModifiedLaplacian,
    Uniform
};

// Azimuthal angle-of-arrival density on [-pi, pi], measured from the receiver
// velocity vector. Immutable after construction.
//
//   ModifiedLaplacian: f(phi) = C * (lambda / 2) * exp(-lambda * |phi|),
//                      C = 1 / (1 - exp(-lambda * pi))
//   Uniform:           f(phi) = 1 / (2 pi)   (isotropic scattering)
class AoaDistribution
{
public:
    static AoaDistribution modified_laplacian(double lambda);
    static AoaDistribution uniform() noexcept { return AoaDistribution(AoaKind::Uniform, 0.0, 1.0); }

    AoaKind kind() const noexcept { return kind_; }
    double lambda() const noexcept { return lambda_; }
    double norm_c() const noexcept { return norm_c_; }

private:
    AoaDistribution(AoaKind kind, double lambda, double norm_c) noexcept
        : kind_(kind), lambda_(lambda), norm_c_(norm_c) {}

    AoaKind kind_;
    double lambda_; // 0 for Uniform
    double norm_c_; // 1 for Uniform
};

// lambda(sigma_tau) = 1 / (9.44 * sigma_tau + 0.40), sigma_tau in microseconds.
// Strictly decreasing, bounded above by 2.5. The fit is extrapolated for
// delay spreads outside the measured range.
double lambda_from_delay_spread(DelaySpread ds);

// Modified Laplacian adapted to the environment's delay spread.
AoaDistribution make_laplacian(DelaySpread ds);

// Throws std::domain_error when |phi| > pi.
double pdf(const AoaDistribution &dist, double phi);

// Cumulative distribution on [-pi, pi].
double cdf(const AoaDistribution &dist, double phi);

// Inverse CDF of |phi| for the modified Laplacian: u in [0, 1) maps to
// -ln(1 - u (1 - e^{-lambda pi})) / lambda in [0, pi).
double laplacian_magnitude_quantile(double lambda, double u);

// Exact inverse-CDF draw in [-pi, pi]. Consumes two uniforms for the modified
// Laplacian (sign, magnitude) and one for the uniform distribution.
double sample_aoa(const AoaDistribution &dist, Rng &rng);

} // namespace acfenv

#endif

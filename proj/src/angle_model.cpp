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

#include <acfenv/angle_model.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace acfenv
{

DelaySpread::DelaySpread(double sigma_tau_us) : sigma_tau_us_(sigma_tau_us)
{
    if (!std::isfinite(sigma_tau_us) || sigma_tau_us < 0.0)
        throw std::domain_error("Delay spread must be finite and non-negative, got " + std::to_string(sigma_tau_us) + " us.");
}

AoaDistribution AoaDistribution::modified_laplacian(double lambda)
{
    if (!std::isfinite(lambda) || lambda <= 0.0)
        throw std::domain_error("Laplacian concentration must be finite and positive.");
    // -expm1(-x) keeps C accurate when lambda * pi is small
    const double norm_c = 1.0 / -std::expm1(-lambda * pi);
    return AoaDistribution(AoaKind::ModifiedLaplacian, lambda, norm_c);
}

double lambda_from_delay_spread(DelaySpread ds)
{
    return 1.0 / (9.44 * ds.microseconds() + 0.40);
}

AoaDistribution make_laplacian(DelaySpread ds)
{
    return AoaDistribution::modified_laplacian(lambda_from_delay_spread(ds));
}

double pdf(const AoaDistribution &dist, double phi)
{
    if (!(std::abs(phi) <= pi))
        throw std::domain_error("Angle of arrival outside [-pi, pi].");
    if (dist.kind() == AoaKind::Uniform)
        return 1.0 / (2.0 * pi);
    return dist.norm_c() * 0.5 * dist.lambda() * std::exp(-dist.lambda() * std::abs(phi));
}

double cdf(const AoaDistribution &dist, double phi)
{
    if (!(std::abs(phi) <= pi))
        throw std::domain_error("Angle of arrival outside [-pi, pi].");
    if (dist.kind() == AoaKind::Uniform)
        return (phi + pi) / (2.0 * pi);

    // Mass of [0, |phi|] is C/2 * (1 - exp(-lambda |phi|))
    const double half = 0.5 * dist.norm_c() * -std::expm1(-dist.lambda() * std::abs(phi));
    return phi >= 0.0 ? 0.5 + half : 0.5 - half;
}

double laplacian_magnitude_quantile(double lambda, double u)
{
    const double magnitude = -std::log1p(u * std::expm1(-lambda * pi)) / lambda;
    return std::min(magnitude, pi);
}

double sample_aoa(const AoaDistribution &dist, Rng &rng)
{
    if (dist.kind() == AoaKind::Uniform)
        return 2.0 * pi * rng.uniform() - pi;

    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return sign * laplacian_magnitude_quantile(dist.lambda(), rng.uniform());
}

} // namespace acfenv

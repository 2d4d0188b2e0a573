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

#ifndef ACFENV_ACF_ANALYTIC_HPP
#define ACFENV_ACF_ANALYTIC_HPP

#include <acfenv/angle_model.hpp>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace acfenv
{

// Correlation lag normalized by the maximum Doppler shift, tau' = f_Dm * tau.
class NormalizedTime
{
public:
    // Throws std::domain_error for negative or non-finite values.
    explicit NormalizedTime(double tau_prime);

    double value() const noexcept { return tau_prime_; }

    friend bool operator==(const NormalizedTime &, const NormalizedTime &) = default;
    friend auto operator<=>(const NormalizedTime &, const NormalizedTime &) = default;

private:
    double tau_prime_;
};

// Normalized complex ACF sample r = r_i + j r_q.
struct AcfValue
{
    double r_i = 0.0;
    double r_q = 0.0;

    double modulus() const noexcept;
};

// Closed-form isotropic reference, r(tau') = J0(2 pi tau').
struct ClarkeModel
{
};

using AcfModel = std::variant<AoaDistribution, ClarkeModel>;

// Human-readable series label ("clarke", "uniform", "laplacian(lambda=...)").
std::string model_label(const AcfModel &model);

struct AcfCurve
{
    AcfModel model;
    std::optional<DelaySpread> sigma_tau; // set when the model was adapted from a delay spread
    std::vector<NormalizedTime> grid;
    std::vector<AcfValue> values;
};

inline constexpr double default_acf_tol = 1e-9;

// Quadrature panels allowed per unit of tau'; the integrands oscillate
// roughly tau' times over [0, pi].
inline constexpr std::size_t intervals_per_unit_lag = 100;

// tau' = start, start + step, ... up to stop (inclusive within step/1000).
// Throws std::invalid_argument unless start >= 0, step > 0, stop > start.
std::vector<NormalizedTime> make_grid(double start, double stop, double step);

// E{cos(2 pi tau' cos phi)} under dist, by adaptive quadrature on [0, pi]
// (the integrand is even in phi). Throws QuadratureError.
double acf_inphase(const AoaDistribution &dist, NormalizedTime t, double tol = default_acf_tol);

// E{sin(2 pi tau' cos phi)} under dist.
double acf_quadrature_comp(const AoaDistribution &dist, NormalizedTime t, double tol = default_acf_tol);

AcfValue acf_value(const AoaDistribution &dist, NormalizedTime t, double tol = default_acf_tol);

// (J0(2 pi tau'), 0).
AcfValue clarke_acf(NormalizedTime t) noexcept;

// Dispatch on the model; tol is ignored for ClarkeModel.
AcfValue acf_value(const AcfModel &model, NormalizedTime t, double tol = default_acf_tol);

// Pointwise evaluation over a strictly increasing, non-empty grid. Points are
// evaluated in parallel; each is independent so the result equals the
// sequential one bit for bit.
AcfCurve acf_curve(const AcfModel &model, std::span<const NormalizedTime> grid, double tol = default_acf_tol);

// Throws std::invalid_argument if the grid is empty or not strictly increasing.
void validate_grid(std::span<const NormalizedTime> grid);

} // namespace acfenv

#endif

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

#ifndef ACFENV_EXTREMA_HPP
#define ACFENV_EXTREMA_HPP

#include <acfenv/acf_analytic.hpp>
#include <acfenv/angle_model.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acfenv
{

// No first local minimum / following maximum of |r| inside the search range.
// Raised for near-delta angle distributions where |r| stays ~1.
class ExtremumNotFound : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// First local minimum of |r(tau')| beyond tau' = 0 and the first local
// maximum after it.
struct ExtremaReport
{
    NormalizedTime tau_min{0.0};
    double val_min = 0.0;
    NormalizedTime tau_max{0.0};
    double val_max = 0.0;
    double delta_r = 0.0; // val_max - val_min
};

struct ExtremaOptions
{
    double search_limit = 2.0; // tau'
    double scan_step = 0.002;  // coarse bracketing step in tau'
    double location_tol = 1e-6;  // final golden-section bracket width in tau'
    double acf_tol = default_acf_tol;
};

ExtremaReport find_first_extrema(const AcfModel &model, const ExtremaOptions &opts = {});

// val_max - val_min
double delta_r(const ExtremaReport &report) noexcept;

struct SweepEntry
{
    DelaySpread sigma_tau;
    std::optional<ExtremaReport> report; // empty when the point failed
    std::string error;
};

struct SweepResult
{
    std::vector<SweepEntry> entries; // in sigma order
};

// find_first_extrema on make_laplacian(sigma) for each sigma. The grid must
// be strictly increasing; an empty grid yields an empty result. Failures at
// individual points (extremum not found, quadrature) are recorded in the
// entry and the sweep continues.
SweepResult sweep_sigma(std::span<const DelaySpread> sigma_grid, const ExtremaOptions &opts = {});

} // namespace acfenv

#endif

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

#ifndef ACFENV_ACF_ESTIMATOR_HPP
#define ACFENV_ACF_ESTIMATOR_HPP

#include <acfenv/acf_analytic.hpp>
#include <acfenv/angle_model.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace acfenv
{

enum class AmplitudeModel
{
    UnitEqual,  // a_n = 1 / sqrt(N)
    RayleighIID // a_n i.i.d. Rayleigh
};

enum class EstimatorMode
{
    // Per realization: sum a_n^2 exp(j 2 pi tau' cos phi_n) / sum a_n^2, i.e.
    // the product x(t) x*(t - tau) with the random-phase cross terms averaged out.
    Reduced,
    // Per realization: x(t0) x*(t0 - tau') / sum a_n^2 with the multipath sum
    // synthesized explicitly (random phases, random t0). Same expectation,
    // larger variance.
    Literal
};

struct EnsembleConfig
{
    std::size_t n_paths = 64;
    std::size_t n_realizations = 100000;
    AmplitudeModel amplitude_model = AmplitudeModel::UnitEqual;
    std::uint64_t seed = 1;
    EstimatorMode mode = EstimatorMode::Reduced;

    // Throws std::invalid_argument unless n_paths >= 1 and n_realizations >= 1.
    void validate() const;
};

// Realizations are drawn in fixed-size batches, each from its own stream
// Rng::stream(seed, batch). Output does not depend on thread scheduling.
inline constexpr std::size_t realizations_per_batch = 1024;

// One propagation path of a realization of the multipath sum.
struct PathSample
{
    double cos_phi;   // cosine of the angle to the velocity vector
    double amplitude; // a_n
    double phase;     // gamma_n, radians
};

// Per-realization normalized statistic at lag tau'. Reduced ignores phase and
// t0; Literal evaluates x(t0) x*(t0 - tau') / sum a_n^2 with t0 in units of
// 1 / f_Dm.
AcfValue path_statistic(std::span<const PathSample> paths, NormalizedTime t, EstimatorMode mode, double t0 = 0.0);

struct AcfEstimate
{
    AcfValue value;
    double std_error_i = 0.0;
    double std_error_q = 0.0;
};

// Sample mean over realizations with component-wise standard errors. With a
// single realization the standard error is reported as 1, the largest
// possible spread of a component bounded by [-1, 1].
AcfEstimate estimate_acf(const AoaDistribution &dist, NormalizedTime t, const EnsembleConfig &cfg);

// Evaluates one sampled ensemble at every grid point.
std::vector<AcfEstimate> estimate_curve(const AoaDistribution &dist, std::span<const NormalizedTime> grid,
                                        const EnsembleConfig &cfg);

} // namespace acfenv

#endif

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

#include <acfenv/acf_estimator.hpp>

#include <acfenv/rng.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace acfenv
{

void EnsembleConfig::validate() const
{
    if (n_paths < 1)
        throw std::invalid_argument("Ensemble needs at least one propagation path.");
    if (n_realizations < 1)
        throw std::invalid_argument("Ensemble needs at least one realization.");
}

namespace
{

// Running mean and sum of squared deviations for one component.
struct Moments
{
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) noexcept
    {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    // Chan et al. pairwise combination
    void merge(const Moments &other) noexcept
    {
        if (other.count == 0.0)
            return;
        const double n = count + other.count;
        const double delta = other.mean - mean;
        mean += delta * (other.count / n);
        m2 += other.m2 + delta * delta * (count * other.count / n);
        count = n;
    }

    double std_error() const noexcept
    {
        if (count < 2.0)
            return 1.0;
        return std::sqrt(std::max(m2, 0.0) / (count - 1.0) / count);
    }
};

struct PointMoments
{
    Moments in_phase;
    Moments quadrature;
};

void draw_paths(const AoaDistribution &dist, const EnsembleConfig &cfg, Rng &rng, std::vector<PathSample> &paths)
{
    const double unit_amplitude = 1.0 / std::sqrt(static_cast<double>(cfg.n_paths));
    for (auto &p : paths)
    {
        p.cos_phi = std::cos(sample_aoa(dist, rng));
        if (cfg.amplitude_model == AmplitudeModel::UnitEqual)
            p.amplitude = unit_amplitude;
        else
            p.amplitude = std::sqrt(-std::log1p(-rng.uniform()));
        p.phase = 2.0 * pi * rng.uniform();
    }
}

void run_batch(const AoaDistribution &dist, std::span<const NormalizedTime> grid, const EnsembleConfig &cfg,
               std::size_t batch, std::vector<PointMoments> &out)
{
    Rng rng = Rng::stream(cfg.seed, batch);
    const std::size_t first = batch * realizations_per_batch;
    const std::size_t count = std::min(realizations_per_batch, cfg.n_realizations - first);

    std::vector<PathSample> paths(cfg.n_paths);
    for (std::size_t r = 0; r < count; ++r)
    {
        draw_paths(dist, cfg, rng, paths);
        const double t0 = rng.uniform();
        for (std::size_t g = 0; g < grid.size(); ++g)
        {
            const AcfValue v = path_statistic(paths, grid[g], cfg.mode, t0);
            out[g].in_phase.add(v.r_i);
            out[g].quadrature.add(v.r_q);
        }
    }
}

} // namespace

AcfValue path_statistic(std::span<const PathSample> paths, NormalizedTime t, EstimatorMode mode, double t0)
{
    const double omega = 2.0 * pi * t.value();
    double total_power = 0.0;
    for (const auto &p : paths)
        total_power += p.amplitude * p.amplitude;

    double re = 0.0;
    double im = 0.0;
    if (mode == EstimatorMode::Reduced)
    {
        for (const auto &p : paths)
        {
            const double power = p.amplitude * p.amplitude;
            re += power * std::cos(omega * p.cos_phi);
            im += power * std::sin(omega * p.cos_phi);
        }
    }
    else
    {
        // x(t) = sum a_n exp(j (2 pi t cos phi_n + gamma_n))
        double now_re = 0.0, now_im = 0.0, lag_re = 0.0, lag_im = 0.0;
        for (const auto &p : paths)
        {
            const double arg_now = 2.0 * pi * t0 * p.cos_phi + p.phase;
            const double arg_lag = arg_now - omega * p.cos_phi;
            now_re += p.amplitude * std::cos(arg_now);
            now_im += p.amplitude * std::sin(arg_now);
            lag_re += p.amplitude * std::cos(arg_lag);
            lag_im += p.amplitude * std::sin(arg_lag);
        }
        // x(t0) * conj(x(t0 - tau))
        re = now_re * lag_re + now_im * lag_im;
        im = now_im * lag_re - now_re * lag_im;
    }
    return {re / total_power, im / total_power};
}

std::vector<AcfEstimate> estimate_curve(const AoaDistribution &dist, std::span<const NormalizedTime> grid,
                                        const EnsembleConfig &cfg)
{
    cfg.validate();
    validate_grid(grid);

    const std::size_t batches = (cfg.n_realizations + realizations_per_batch - 1) / realizations_per_batch;
    std::vector<std::vector<PointMoments>> partial(batches, std::vector<PointMoments>(grid.size()));
    detail::parallel_for(batches, [&](std::size_t b) { run_batch(dist, grid, cfg, b, partial[b]); });

    // Fixed batch order
    std::vector<PointMoments> total(grid.size());
    for (const auto &batch : partial)
        for (std::size_t g = 0; g < grid.size(); ++g)
        {
            total[g].in_phase.merge(batch[g].in_phase);
            total[g].quadrature.merge(batch[g].quadrature);
        }

    std::vector<AcfEstimate> result(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g)
    {
        result[g].value = {total[g].in_phase.mean, total[g].quadrature.mean};
        result[g].std_error_i = total[g].in_phase.std_error();
        result[g].std_error_q = total[g].quadrature.std_error();
    }
    return result;
}

AcfEstimate estimate_acf(const AoaDistribution &dist, NormalizedTime t, const EnsembleConfig &cfg)
{
    const NormalizedTime grid[] = {t};
    return estimate_curve(dist, grid, cfg).front();
}

} // namespace acfenv

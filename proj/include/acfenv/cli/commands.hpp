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

#ifndef ACFENV_CLI_COMMANDS_HPP
#define ACFENV_CLI_COMMANDS_HPP

#include <acfenv/cli/run_config.hpp>

#include <filesystem>
#include <vector>

#include <json.hpp>

namespace acfenv::cli
{

enum ExitCode : int
{
    exit_success = 0,
    exit_usage = 1,
    exit_numerical = 2,
    exit_validation = 3
};

struct CommandOutcome
{
    int exit_code = exit_success;
    std::vector<std::filesystem::path> files; // in write order
    nlohmann::json summary = nlohmann::json::object();
};

// Each writes its files under cfg.output_path.
//
//   curve     curve_<series>.csv (tau_prime, r_i, r_q, modulus) or curve.json;
//             with plot: curve_r_i.svg, curve_r_q.svg, curve_modulus.svg
//   extrema   extrema.csv / extrema.json, one row per series (Clarke first)
//   sweep     sweep.csv / sweep.json; with plot: sweep_extrema.svg, sweep_delta_r.svg
//   simulate  simulate_<series>.csv or simulate.json; with plot: simulate_r_i.svg, simulate_r_q.svg
//   compare   compare.csv / compare.json; exit_validation when max |z| > threshold
//
// extrema and sweep record per-series failures in the status column, still
// write their files, and return exit_numerical.
//
// Series are named "clarke", "uniform" or "sigma_<us>".
CommandOutcome run_curve(const RunConfig &cfg);
CommandOutcome run_extrema(const RunConfig &cfg);
CommandOutcome run_sweep(const RunConfig &cfg);
CommandOutcome run_simulate(const RunConfig &cfg);
CommandOutcome run_compare(const RunConfig &cfg);

// Dispatches on cfg.command. Library exceptions propagate.
CommandOutcome run(const RunConfig &cfg);

// Full CLI entry point: parses, runs, maps exceptions to exit codes and
// reports errors on stderr.
int main_entry(int argc, const char *const *argv);

} // namespace acfenv::cli

#endif

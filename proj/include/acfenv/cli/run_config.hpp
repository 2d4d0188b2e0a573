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

#ifndef ACFENV_CLI_RUN_CONFIG_HPP
#define ACFENV_CLI_RUN_CONFIG_HPP

#include <acfenv/acf_estimator.hpp>
#include <acfenv/angle_model.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace acfenv::cli
{

enum class Command
{
    Curve,
    Extrema,
    Sweep,
    Simulate,
    Compare
};

enum class OutputFormat
{
    Csv,
    Json
};

// Angle model used by simulate/compare.
enum class ModelChoice
{
    Laplacian, // one modified Laplacian per --sigma value
    Uniform    // isotropic reference
};

struct GridSpec
{
    double start = 0.0;
    double stop = 2.0;
    double step = 0.005;
};

struct RunConfig
{
    Command command = Command::Curve;
    std::vector<DelaySpread> sigma_tau_list;
    GridSpec grid;
    double tol = 1e-9;
    EnsembleConfig ensemble;
    std::filesystem::path output_path = "results";
    OutputFormat format = OutputFormat::Csv;
    bool plot = false;
    std::optional<double> doppler_hz;
    ModelChoice model = ModelChoice::Laplacian;
    double search_limit = 2.0;
    double location_tol = 1e-6;
    double z_threshold = 4.0;
    // Added to every analytic value in `compare`; exercises the failure path.
    double corrupt_analytic = 0.0;

    // Throws std::invalid_argument on inconsistent settings.
    void validate() const;
};

std::string to_string(Command c);
Command command_from_string(const std::string &s);

// Grid "start:stop:step". Throws std::invalid_argument.
GridSpec parse_grid(const std::string &text);

// Comma-separated values and "start:stop:step" ranges, in microseconds.
// Throws std::invalid_argument / std::domain_error.
std::vector<DelaySpread> parse_sigma_list(const std::vector<std::string> &tokens);

// Effective configuration, echoed into every output file.
nlohmann::json to_json(const RunConfig &cfg);

// Parses argv into a RunConfig. Flags override values from --config (a JSON
// object using the long flag names as keys). Returns std::nullopt after
// printing help; throws CLI::ParseError / std::invalid_argument on bad input.
std::optional<RunConfig> parse_command_line(int argc, const char *const *argv);

} // namespace acfenv::cli

#endif

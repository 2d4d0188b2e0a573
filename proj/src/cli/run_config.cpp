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

#include <acfenv/cli/run_config.hpp>

#include <acfenv/acf_analytic.hpp>
#include <acfenv/io/table_writer.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace acfenv::cli
{

namespace
{

double parse_number(const std::string &text, const std::string &what)
{
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(text, &used);
    }
    catch (const std::exception &)
    {
        throw std::invalid_argument("Invalid " + what + ": '" + text + "'.");
    }
    if (used != text.size())
        throw std::invalid_argument("Invalid " + what + ": '" + text + "'.");
    return v;
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        parts.push_back(item);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

GridSpec default_grid(Command c)
{
    if (c == Command::Simulate || c == Command::Compare)
        return {0.0, 2.0, 0.1};
    return {0.0, 2.0, 0.005};
}

AmplitudeModel amplitude_from_string(const std::string &s)
{
    if (s == "unit")
        return AmplitudeModel::UnitEqual;
    if (s == "rayleigh")
        return AmplitudeModel::RayleighIID;
    throw std::invalid_argument("Unknown amplitude model '" + s + "' (expected unit|rayleigh).");
}

EstimatorMode mode_from_string(const std::string &s)
{
    if (s == "reduced")
        return EstimatorMode::Reduced;
    if (s == "literal")
        return EstimatorMode::Literal;
    throw std::invalid_argument("Unknown estimator mode '" + s + "' (expected reduced|literal).");
}

OutputFormat format_from_string(const std::string &s)
{
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("Unknown format '" + s + "' (expected csv|json).");
}

ModelChoice model_from_string(const std::string &s)
{
    if (s == "laplacian")
        return ModelChoice::Laplacian;
    if (s == "uniform")
        return ModelChoice::Uniform;
    throw std::invalid_argument("Unknown angle model '" + s + "' (expected laplacian|uniform).");
}

// Raw option values as given on the command line (strings where the parsed
// form needs validation).
struct RawOptions
{
    std::vector<std::string> sigma;
    std::string grid;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::size_t paths = 0;
    std::size_t realizations = 0;
    std::string amplitude;
    std::string mode;
    double doppler_hz = 0.0;
    std::string out;
    std::string format;
    bool plot = false;
    std::string config;
    std::string model;
    double search_limit = 0.0;
    double location_tol = 0.0;
    double z_threshold = 0.0;
    double corrupt_analytic = 0.0;
};

void add_common_options(CLI::App *sub, RawOptions &raw)
{
    sub->add_option("--sigma", raw.sigma, "RMS delay spreads in microseconds: list (0.1,0.2,1.0) or range (0.1:2:0.1)")
        ->delimiter(',');
    sub->add_option("--grid", raw.grid, "Normalized-time grid start:stop:step");
    sub->add_option("--tol", raw.tol, "Absolute quadrature tolerance");
    sub->add_option("--seed", raw.seed, "Monte Carlo seed");
    sub->add_option("--paths", raw.paths, "Propagation paths per realization");
    sub->add_option("--realizations", raw.realizations, "Monte Carlo realizations");
    sub->add_option("--amplitude", raw.amplitude, "Path amplitudes: unit|rayleigh");
    sub->add_option("--estimator", raw.mode, "Monte Carlo statistic: reduced|literal");
    sub->add_option("--doppler-hz", raw.doppler_hz, "Maximum Doppler shift for physical delay columns");
    sub->add_option("--out", raw.out, "Output directory");
    sub->add_option("--format", raw.format, "csv|json");
    sub->add_flag("--plot", raw.plot, "Also write SVG plots");
    sub->add_option("--config", raw.config, "JSON config file; flags override it");
    sub->add_option("--model", raw.model, "Angle model for simulate/compare: laplacian|uniform");
    sub->add_option("--search-limit", raw.search_limit, "Largest tau' searched for extrema");
    sub->add_option("--location-tol", raw.location_tol, "Extremum location tolerance in tau'");
    sub->add_option("--z-threshold", raw.z_threshold, "Maximum |z| accepted by compare");
    sub->add_option("--corrupt-analytic", raw.corrupt_analytic, "Offset added to analytic values (test hook)")
        ->group("");
}

std::vector<std::string> json_sigma_tokens(const nlohmann::json &j)
{
    std::vector<std::string> tokens;
    auto push = [&](const nlohmann::json &v) {
        if (v.is_number())
            tokens.push_back(io::format_shortest(v.get<double>()));
        else if (v.is_string())
            for (auto &t : split(v.get<std::string>(), ','))
                tokens.push_back(t);
        else
            throw std::invalid_argument("Config 'sigma' entries must be numbers or strings.");
    };
    if (j.is_array())
        for (const auto &v : j)
            push(v);
    else
        push(j);
    return tokens;
}

void apply_config_file(const std::filesystem::path &path, RunConfig &cfg)
{
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("Cannot read config file " + path.string() + ".");
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(f);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument("Config file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("Config file must contain a JSON object.");

    try
    {
        for (const auto &[key, value] : j.items())
        {
            if (key == "sigma")
                cfg.sigma_tau_list = parse_sigma_list(json_sigma_tokens(value));
            else if (key == "grid")
            {
                if (value.is_string())
                    cfg.grid = parse_grid(value.get<std::string>());
                else
                    cfg.grid = {value.at("start").get<double>(), value.at("stop").get<double>(),
                                value.at("step").get<double>()};
            }
            else if (key == "tol")
                cfg.tol = value.get<double>();
            else if (key == "seed")
                cfg.ensemble.seed = value.get<std::uint64_t>();
            else if (key == "paths")
                cfg.ensemble.n_paths = value.get<std::size_t>();
            else if (key == "realizations")
                cfg.ensemble.n_realizations = value.get<std::size_t>();
            else if (key == "amplitude")
                cfg.ensemble.amplitude_model = amplitude_from_string(value.get<std::string>());
            else if (key == "estimator")
                cfg.ensemble.mode = mode_from_string(value.get<std::string>());
            else if (key == "doppler-hz")
                cfg.doppler_hz = value.is_null() ? std::nullopt : std::optional<double>(value.get<double>());
            else if (key == "out")
                cfg.output_path = value.get<std::string>();
            else if (key == "format")
                cfg.format = format_from_string(value.get<std::string>());
            else if (key == "plot")
                cfg.plot = value.get<bool>();
            else if (key == "model")
                cfg.model = model_from_string(value.get<std::string>());
            else if (key == "search-limit")
                cfg.search_limit = value.get<double>();
            else if (key == "location-tol")
                cfg.location_tol = value.get<double>();
            else if (key == "z-threshold")
                cfg.z_threshold = value.get<double>();
            else if (key == "command")
                continue; // informational in echoed configs
            else
                throw std::invalid_argument("Unknown config key '" + key + "'.");
        }
    }
    catch (const nlohmann::json::exception &e)
    {
        throw std::invalid_argument("Bad value in config file: " + std::string(e.what()));
    }
}

} // namespace

void RunConfig::validate() const
{
    if (!std::isfinite(grid.start) || grid.start < 0.0 || !(grid.step > 0.0) || !(grid.stop > grid.start))
        throw std::invalid_argument("Grid must satisfy start >= 0, step > 0, stop > start.");
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("Tolerance must be positive.");
    if (doppler_hz && !(*doppler_hz > 0.0 && std::isfinite(*doppler_hz)))
        throw std::invalid_argument("Doppler frequency must be positive.");
    if (!(search_limit > 0.0))
        throw std::invalid_argument("Search limit must be positive.");
    if (!(location_tol > 0.0))
        throw std::invalid_argument("Location tolerance must be positive.");
    if (!(z_threshold > 0.0))
        throw std::invalid_argument("z threshold must be positive.");
    ensemble.validate();
}

std::string to_string(Command c)
{
    switch (c)
    {
    case Command::Curve: return "curve";
    case Command::Extrema: return "extrema";
    case Command::Sweep: return "sweep";
    case Command::Simulate: return "simulate";
    case Command::Compare: return "compare";
    }
    return "unknown";
}

Command command_from_string(const std::string &s)
{
    for (Command c : {Command::Curve, Command::Extrema, Command::Sweep, Command::Simulate, Command::Compare})
        if (to_string(c) == s)
            return c;
    throw std::invalid_argument("Unknown command '" + s + "'.");
}

GridSpec parse_grid(const std::string &text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("Grid must be start:stop:step, got '" + text + "'.");
    GridSpec g{parse_number(trim(parts[0]), "grid start"), parse_number(trim(parts[1]), "grid stop"),
               parse_number(trim(parts[2]), "grid step")};
    if (g.start < 0.0 || !(g.step > 0.0) || !(g.stop > g.start))
        throw std::invalid_argument("Grid must satisfy start >= 0, step > 0, stop > start.");
    return g;
}

std::vector<DelaySpread> parse_sigma_list(const std::vector<std::string> &tokens)
{
    std::vector<std::string> pieces;
    for (const auto &raw : tokens)
        for (auto &piece : split(raw, ','))
            pieces.push_back(std::move(piece));

    std::vector<DelaySpread> out;
    for (const auto &piece : pieces)
    {
        const std::string tok = trim(piece);
        if (tok.empty())
            continue;
        if (tok.find(':') == std::string::npos)
        {
            out.emplace_back(parse_number(tok, "delay spread"));
            continue;
        }
        const auto parts = split(tok, ':');
        if (parts.size() != 3)
            throw std::invalid_argument("Delay spread range must be start:stop:step, got '" + tok + "'.");
        const double a = parse_number(trim(parts[0]), "delay spread"), b = parse_number(trim(parts[1]), "delay spread"),
                     step = parse_number(trim(parts[2]), "delay spread step");
        if (!(step > 0.0) || !(b >= a))
            throw std::invalid_argument("Delay spread range needs step > 0 and stop >= start.");
        const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-3));
        for (std::size_t k = 0; k <= n; ++k)
            out.emplace_back(a + static_cast<double>(k) * step);
    }
    return out;
}

nlohmann::json to_json(const RunConfig &cfg)
{
    nlohmann::json j;
    j["command"] = to_string(cfg.command);
    j["sigma"] = nlohmann::json::array();
    for (const auto &s : cfg.sigma_tau_list)
        j["sigma"].push_back(s.microseconds());
    j["grid"] = {{"start", cfg.grid.start}, {"stop", cfg.grid.stop}, {"step", cfg.grid.step}};
    j["tol"] = cfg.tol;
    j["seed"] = cfg.ensemble.seed;
    j["paths"] = cfg.ensemble.n_paths;
    j["realizations"] = cfg.ensemble.n_realizations;
    j["amplitude"] = cfg.ensemble.amplitude_model == AmplitudeModel::UnitEqual ? "unit" : "rayleigh";
    j["estimator"] = cfg.ensemble.mode == EstimatorMode::Reduced ? "reduced" : "literal";
    j["doppler-hz"] = cfg.doppler_hz ? nlohmann::json(*cfg.doppler_hz) : nlohmann::json(nullptr);
    j["out"] = cfg.output_path.generic_string();
    j["format"] = cfg.format == OutputFormat::Csv ? "csv" : "json";
    j["plot"] = cfg.plot;
    j["model"] = cfg.model == ModelChoice::Laplacian ? "laplacian" : "uniform";
    j["search-limit"] = cfg.search_limit;
    j["location-tol"] = cfg.location_tol;
    j["z-threshold"] = cfg.z_threshold;
    return j;
}

std::optional<RunConfig> parse_command_line(int argc, const char *const *argv)
{
    CLI::App app{"Autocorrelation of the received signal at a mobile terminal under a delay-spread-adapted "
                 "modified Laplacian angle-of-arrival model."};
    app.require_subcommand(1);

    RawOptions raw;
    const std::vector<std::pair<Command, std::string>> commands = {
        {Command::Curve, "r_I, r_Q and |r| over a tau' grid for each delay spread plus the Clarke reference"},
        {Command::Extrema, "First local minimum/maximum of |r| for the Clarke model and each delay spread"},
        {Command::Sweep, "Extrema and delta_r as a function of delay spread"},
        {Command::Simulate, "Monte Carlo estimate of the ACF from a synthesized multipath ensemble"},
        {Command::Compare, "Analytic ACF versus Monte Carlo estimate with z-scores"}};
    std::vector<CLI::App *> subs;
    for (const auto &[cmd, help] : commands)
    {
        CLI::App *sub = app.add_subcommand(to_string(cmd), help);
        add_common_options(sub, raw);
        subs.push_back(sub);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        std::cout << app.help();
        return std::nullopt;
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
        {
            std::cout << app.help();
            return std::nullopt;
        }
        throw std::invalid_argument(e.what());
    }

    CLI::App *sub = nullptr;
    RunConfig cfg;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed())
        {
            sub = subs[i];
            cfg.command = commands[i].first;
        }

    cfg.grid = default_grid(cfg.command);
    cfg.sigma_tau_list = {DelaySpread(0.1), DelaySpread(0.2), DelaySpread(1.0)};

    auto given = [&](const char *name) { return sub->count(name) > 0; };

    if (given("--config"))
        apply_config_file(raw.config, cfg);

    if (given("--sigma"))
        cfg.sigma_tau_list = parse_sigma_list(raw.sigma);
    if (given("--grid"))
        cfg.grid = parse_grid(raw.grid);
    if (given("--tol"))
        cfg.tol = raw.tol;
    if (given("--seed"))
        cfg.ensemble.seed = raw.seed;
    if (given("--paths"))
        cfg.ensemble.n_paths = raw.paths;
    if (given("--realizations"))
        cfg.ensemble.n_realizations = raw.realizations;
    if (given("--amplitude"))
        cfg.ensemble.amplitude_model = amplitude_from_string(raw.amplitude);
    if (given("--estimator"))
        cfg.ensemble.mode = mode_from_string(raw.mode);
    if (given("--doppler-hz"))
        cfg.doppler_hz = raw.doppler_hz;
    if (given("--out"))
        cfg.output_path = raw.out;
    if (given("--format"))
        cfg.format = format_from_string(raw.format);
    if (given("--plot"))
        cfg.plot = raw.plot;
    if (given("--model"))
        cfg.model = model_from_string(raw.model);
    if (given("--search-limit"))
        cfg.search_limit = raw.search_limit;
    if (given("--location-tol"))
        cfg.location_tol = raw.location_tol;
    if (given("--z-threshold"))
        cfg.z_threshold = raw.z_threshold;
    if (given("--corrupt-analytic"))
        cfg.corrupt_analytic = raw.corrupt_analytic;

    cfg.validate();
    return cfg;
}

} // namespace acfenv::cli

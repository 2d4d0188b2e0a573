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

#include <acfenv/cli/commands.hpp>

#include <acfenv/acf_analytic.hpp>
#include <acfenv/acf_estimator.hpp>
#include <acfenv/extrema.hpp>
#include <acfenv/io/svg_plot.hpp>
#include <acfenv/io/table_writer.hpp>
#include <acfenv/quadrature.hpp>

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace acfenv::cli
{

namespace
{

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct NamedModel
{
    std::string label;
    AcfModel model;
    std::optional<DelaySpread> sigma;
};

std::string sigma_label(DelaySpread s)
{
    return "sigma_" + io::format_shortest(s.microseconds());
}

std::vector<NamedModel> laplacian_models(const RunConfig &cfg)
{
    std::vector<NamedModel> out;
    for (const auto &s : cfg.sigma_tau_list)
        out.push_back({sigma_label(s), make_laplacian(s), s});
    return out;
}

// Laplacian per sigma, or the single uniform distribution.
std::vector<NamedModel> estimator_models(const RunConfig &cfg)
{
    if (cfg.model == ModelChoice::Uniform)
        return {{"uniform", AoaDistribution::uniform(), std::nullopt}};
    auto models = laplacian_models(cfg);
    if (models.empty())
        throw std::invalid_argument("No delay spreads given.");
    return models;
}

nlohmann::json series_meta(const NamedModel &m)
{
    nlohmann::json j;
    j["label"] = m.label;
    j["sigma_tau"] = m.sigma ? nlohmann::json(m.sigma->microseconds()) : nlohmann::json(nullptr);
    if (const auto *d = std::get_if<AoaDistribution>(&m.model); d && d->kind() == AoaKind::ModifiedLaplacian)
    {
        j["lambda"] = d->lambda();
        j["norm_c"] = d->norm_c();
    }
    return j;
}

std::string series_comment(const NamedModel &m)
{
    std::string c = "series: " + m.label + " (" + model_label(m.model);
    if (m.sigma)
        c += ", sigma_tau=" + io::format_shortest(m.sigma->microseconds()) + " us";
    return c + ")";
}

std::vector<std::string> header_comments(const RunConfig &cfg)
{
    return {"acfenv " + to_string(cfg.command), "config: " + to_json(cfg).dump()};
}

class OutputSink
{
public:
    explicit OutputSink(const RunConfig &cfg, CommandOutcome &outcome) : cfg_(cfg), outcome_(outcome) {}

    void write(const std::string &name, const std::string &contents)
    {
        const auto path = cfg_.output_path / name;
        io::write_file_atomic(path, contents);
        outcome_.files.push_back(path);
    }

    void write_csv(const std::string &name, const io::Table &table, std::vector<std::string> extra = {},
                   const std::vector<std::string> &trailer = {})
    {
        auto comments = header_comments(cfg_);
        comments.insert(comments.end(), extra.begin(), extra.end());
        write(name, io::render_csv(table, comments, trailer));
    }

    void write_json(const std::string &name, const char *body_key, nlohmann::json body, nlohmann::json summary)
    {
        nlohmann::json doc;
        doc["config"] = to_json(cfg_);
        doc[body_key] = std::move(body);
        doc["summary"] = std::move(summary);
        write(name, doc.dump(2) + "\n");
    }

    void write_plot(const std::string &name, io::PlotSpec spec)
    {
        write(name, io::render_svg(spec));
    }

private:
    const RunConfig &cfg_;
    CommandOutcome &outcome_;
};

std::vector<NormalizedTime> config_grid(const RunConfig &cfg)
{
    return make_grid(cfg.grid.start, cfg.grid.stop, cfg.grid.step);
}

ExtremaOptions extrema_options(const RunConfig &cfg)
{
    ExtremaOptions opts;
    opts.search_limit = cfg.search_limit;
    opts.location_tol = cfg.location_tol;
    opts.acf_tol = cfg.tol;
    return opts;
}

// Shared row layout of extrema and sweep outputs.
std::vector<std::string> extrema_columns(const RunConfig &cfg)
{
    std::vector<std::string> cols = {"tau_min", "val_min", "tau_max", "val_max", "delta_r"};
    if (cfg.doppler_hz)
    {
        cols.push_back("delay_min_s");
        cols.push_back("delay_max_s");
    }
    cols.push_back("status");
    return cols;
}

std::vector<io::Cell> extrema_cells(const RunConfig &cfg, const std::optional<ExtremaReport> &r, const std::string &error)
{
    std::vector<io::Cell> cells;
    if (r)
        cells = {r->tau_min.value(), r->val_min, r->tau_max.value(), r->val_max, r->delta_r};
    else
        cells = {nan, nan, nan, nan, nan};
    if (cfg.doppler_hz)
    {
        // tau = tau' / f_Dm
        cells.emplace_back(r ? r->tau_min.value() / *cfg.doppler_hz : nan);
        cells.emplace_back(r ? r->tau_max.value() / *cfg.doppler_hz : nan);
    }
    cells.emplace_back(r ? std::string("ok") : "error: " + error);
    return cells;
}

} // namespace

CommandOutcome run_curve(const RunConfig &cfg)
{
    cfg.validate();
    CommandOutcome outcome;
    OutputSink sink(cfg, outcome);
    const auto grid = config_grid(cfg);

    auto models = laplacian_models(cfg);
    models.push_back({"clarke", ClarkeModel{}, std::nullopt});

    const std::vector<std::string> columns = {"tau_prime", "r_i", "r_q", "modulus"};
    nlohmann::json series = nlohmann::json::array();
    std::vector<io::PlotSeries> plot_i, plot_q, plot_mod;

    for (const auto &m : models)
    {
        const AcfCurve curve = acf_curve(m.model, grid, cfg.tol);
        io::Table table{columns, {}};
        io::PlotSeries pi_{m.label, {}, {}}, pq{m.label, {}, {}}, pm{m.label, {}, {}};
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            const double t = grid[k].value();
            const AcfValue &v = curve.values[k];
            table.rows.push_back({t, v.r_i, v.r_q, v.modulus()});
            pi_.x.push_back(t), pi_.y.push_back(v.r_i);
            pq.x.push_back(t), pq.y.push_back(v.r_q);
            pm.x.push_back(t), pm.y.push_back(v.modulus());
        }
        plot_i.push_back(std::move(pi_));
        plot_q.push_back(std::move(pq));
        plot_mod.push_back(std::move(pm));

        if (cfg.format == OutputFormat::Csv)
            sink.write_csv("curve_" + m.label + ".csv", table, {series_comment(m)});
        else
        {
            auto meta = series_meta(m);
            meta["rows"] = io::table_to_json(table);
            series.push_back(std::move(meta));
        }
    }

    outcome.summary = {{"series", models.size()}, {"points", grid.size()}};
    if (cfg.format == OutputFormat::Json)
        sink.write_json("curve.json", "series", std::move(series), outcome.summary);

    if (cfg.plot)
    {
        sink.write_plot("curve_r_i.svg", {"In-phase component of the ACF", "normalized time tau'", "r_I", plot_i});
        sink.write_plot("curve_r_q.svg", {"Quadrature component of the ACF", "normalized time tau'", "r_Q", plot_q});
        sink.write_plot("curve_modulus.svg", {"Modulus of the ACF", "normalized time tau'", "|r|", plot_mod});
    }
    return outcome;
}

CommandOutcome run_extrema(const RunConfig &cfg)
{
    cfg.validate();
    CommandOutcome outcome;
    OutputSink sink(cfg, outcome);
    const auto opts = extrema_options(cfg);

    std::vector<NamedModel> models = {{"clarke", ClarkeModel{}, std::nullopt}};
    for (auto &m : laplacian_models(cfg))
        models.push_back(std::move(m));

    io::Table table{{"series", "sigma_tau"}, {}};
    for (const auto &c : extrema_columns(cfg))
        table.columns.push_back(c);

    std::size_t failures = 0;
    for (const auto &m : models)
    {
        std::optional<ExtremaReport> report;
        std::string error;
        try
        {
            report = find_first_extrema(m.model, opts);
        }
        catch (const ExtremumNotFound &e)
        {
            error = e.what();
        }
        catch (const QuadratureError &e)
        {
            error = e.what();
        }
        if (!report)
            ++failures;

        std::vector<io::Cell> row = {m.label, m.sigma ? m.sigma->microseconds() : nan};
        for (auto &c : extrema_cells(cfg, report, error))
            row.push_back(std::move(c));
        table.rows.push_back(std::move(row));
    }

    outcome.summary = {{"series", models.size()}, {"failures", failures}};
    if (cfg.format == OutputFormat::Csv)
        sink.write_csv("extrema.csv", table);
    else
        sink.write_json("extrema.json", "rows", io::table_to_json(table), outcome.summary);

    outcome.exit_code = failures ? exit_numerical : exit_success;
    return outcome;
}

CommandOutcome run_sweep(const RunConfig &cfg)
{
    cfg.validate();
    if (cfg.sigma_tau_list.empty())
        throw std::invalid_argument("empty sweep");

    CommandOutcome outcome;
    OutputSink sink(cfg, outcome);
    const SweepResult sweep = sweep_sigma(cfg.sigma_tau_list, extrema_options(cfg));

    io::Table table{{"sigma_tau"}, {}};
    for (const auto &c : extrema_columns(cfg))
        table.columns.push_back(c);

    io::PlotSeries pmin{"first local min", {}, {}}, pmax{"first local max", {}, {}}, pdelta{"delta_r", {}, {}};
    std::size_t failures = 0;
    for (const auto &e : sweep.entries)
    {
        std::vector<io::Cell> row = {e.sigma_tau.microseconds()};
        for (auto &c : extrema_cells(cfg, e.report, e.error))
            row.push_back(std::move(c));
        table.rows.push_back(std::move(row));

        const double s = e.sigma_tau.microseconds();
        pmin.x.push_back(s), pmin.y.push_back(e.report ? e.report->val_min : nan);
        pmax.x.push_back(s), pmax.y.push_back(e.report ? e.report->val_max : nan);
        pdelta.x.push_back(s), pdelta.y.push_back(e.report ? e.report->delta_r : nan);
        if (!e.report)
            ++failures;
    }

    outcome.summary = {{"points", sweep.entries.size()}, {"failures", failures}};
    if (cfg.format == OutputFormat::Csv)
        sink.write_csv("sweep.csv", table);
    else
        sink.write_json("sweep.json", "rows", io::table_to_json(table), outcome.summary);

    if (cfg.plot)
    {
        sink.write_plot("sweep_extrema.svg",
                        {"First local extrema of |r|", "delay spread sigma_tau [us]", "|r|", {pmin, pmax}});
        sink.write_plot("sweep_delta_r.svg",
                        {"Difference of first local maximum and minimum", "delay spread sigma_tau [us]", "delta_r",
                         {pdelta}});
    }
    // Partial results are still written; the status column marks failed points
    outcome.exit_code = failures ? exit_numerical : exit_success;
    return outcome;
}

CommandOutcome run_simulate(const RunConfig &cfg)
{
    cfg.validate();
    CommandOutcome outcome;
    OutputSink sink(cfg, outcome);
    const auto grid = config_grid(cfg);
    const auto models = estimator_models(cfg);

    nlohmann::json series = nlohmann::json::array();
    std::vector<io::PlotSeries> plot_i, plot_q;
    for (const auto &m : models)
    {
        const auto estimates = estimate_curve(std::get<AoaDistribution>(m.model), grid, cfg.ensemble);
        io::Table table{{"tau_prime", "r_i", "r_q", "std_error_i", "std_error_q"}, {}};
        io::PlotSeries pi_{m.label, {}, {}}, pq{m.label, {}, {}};
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            const auto &e = estimates[k];
            table.rows.push_back({grid[k].value(), e.value.r_i, e.value.r_q, e.std_error_i, e.std_error_q});
            pi_.x.push_back(grid[k].value()), pi_.y.push_back(e.value.r_i);
            pq.x.push_back(grid[k].value()), pq.y.push_back(e.value.r_q);
        }
        plot_i.push_back(std::move(pi_));
        plot_q.push_back(std::move(pq));

        if (cfg.format == OutputFormat::Csv)
            sink.write_csv("simulate_" + m.label + ".csv", table, {series_comment(m)});
        else
        {
            auto meta = series_meta(m);
            meta["rows"] = io::table_to_json(table);
            series.push_back(std::move(meta));
        }
    }

    outcome.summary = {{"series", models.size()}, {"points", grid.size()}};
    if (cfg.format == OutputFormat::Json)
        sink.write_json("simulate.json", "series", std::move(series), outcome.summary);
    if (cfg.plot)
    {
        sink.write_plot("simulate_r_i.svg", {"Monte Carlo in-phase ACF", "normalized time tau'", "r_I", plot_i});
        sink.write_plot("simulate_r_q.svg", {"Monte Carlo quadrature ACF", "normalized time tau'", "r_Q", plot_q});
    }
    return outcome;
}

CommandOutcome run_compare(const RunConfig &cfg)
{
    cfg.validate();
    CommandOutcome outcome;
    OutputSink sink(cfg, outcome);
    const auto grid = config_grid(cfg);
    const auto models = estimator_models(cfg);

    io::Table table{{"series", "tau_prime", "analytic_i", "analytic_q", "estimate_i", "estimate_q", "std_error_i",
                     "std_error_q", "z_i", "z_q"},
                    {}};

    // The analytic side carries up to cfg.tol of quadrature error, which
    // matters where the estimator is exact (tau' = 0 with the reduced statistic).
    auto z_score = [&](double diff, double se) { return diff / std::hypot(se, cfg.tol); };

    double max_abs_z = 0.0;
    double max_abs_dev = 0.0;
    std::size_t points = 0;
    for (const auto &m : models)
    {
        const auto &dist = std::get<AoaDistribution>(m.model);
        const AcfCurve analytic = acf_curve(dist, grid, cfg.tol);
        const auto estimates = estimate_curve(dist, grid, cfg.ensemble);
        for (std::size_t k = 0; k < grid.size(); ++k)
        {
            const double ai = analytic.values[k].r_i + cfg.corrupt_analytic;
            const double aq = analytic.values[k].r_q + cfg.corrupt_analytic;
            const auto &e = estimates[k];
            const double zi = z_score(e.value.r_i - ai, e.std_error_i);
            const double zq = z_score(e.value.r_q - aq, e.std_error_q);
            max_abs_z = std::max({max_abs_z, std::abs(zi), std::abs(zq)});
            max_abs_dev = std::max({max_abs_dev, std::abs(e.value.r_i - ai), std::abs(e.value.r_q - aq)});
            table.rows.push_back(
                {m.label, grid[k].value(), ai, aq, e.value.r_i, e.value.r_q, e.std_error_i, e.std_error_q, zi, zq});
            ++points;
        }
    }

    const bool passed = max_abs_z <= cfg.z_threshold;
    outcome.summary = {{"max_abs_z", max_abs_z},
                       {"max_abs_deviation", max_abs_dev},
                       {"points", points},
                       {"z_threshold", cfg.z_threshold},
                       {"passed", passed}};

    if (cfg.format == OutputFormat::Csv)
        sink.write_csv("compare.csv", table, {},
                       {"summary: max_abs_z=" + io::format_cell(max_abs_z) +
                        " max_abs_deviation=" + io::format_cell(max_abs_dev) + " points=" + std::to_string(points) +
                        " z_threshold=" + io::format_cell(cfg.z_threshold) + " passed=" + (passed ? "true" : "false")});
    else
        sink.write_json("compare.json", "rows", io::table_to_json(table), outcome.summary);

    outcome.exit_code = passed ? exit_success : exit_validation;
    return outcome;
}

CommandOutcome run(const RunConfig &cfg)
{
    switch (cfg.command)
    {
    case Command::Curve: return run_curve(cfg);
    case Command::Extrema: return run_extrema(cfg);
    case Command::Sweep: return run_sweep(cfg);
    case Command::Simulate: return run_simulate(cfg);
    case Command::Compare: return run_compare(cfg);
    }
    throw std::logic_error("Unhandled command.");
}

int main_entry(int argc, const char *const *argv)
{
    try
    {
        const auto cfg = parse_command_line(argc, argv);
        if (!cfg)
            return exit_success;
        const CommandOutcome outcome = run(*cfg);
        for (const auto &f : outcome.files)
            std::cout << f.generic_string() << "\n";
        std::cout << "summary: " << outcome.summary.dump() << "\n";
        if (outcome.exit_code == exit_validation)
            std::cerr << "validation failed: max |z| above threshold\n";
        return outcome.exit_code;
    }
    catch (const QuadratureError &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (const ExtremumNotFound &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace acfenv::cli

// SPDX-License-Identifier: Apache-2.0
//
// risq - beam-squint aware phase design for RIS-aided wideband mmWave links
// Copyright (C) 2026 The risq authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace risq::cli
{

namespace
{

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

std::vector<double> parse_number_list(const std::string &s, const std::string &flag)
{
    std::vector<double> out;
    for (const auto &item : split_list(s))
    {
        double v = 0.0;
        const char *first = item.data();
        const char *last = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw UsageError(flag + ": malformed number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError(flag + ": expected a comma-separated list of numbers");
    return out;
}

Scenario parse_scenario(const std::string &s)
{
    std::string key = s;
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
    if (key == "los")
        return Scenario::LoS;
    if (key == "nlos")
        return Scenario::NLoS;
    throw UsageError("--scenario: expected 'los' or 'nlos', got '" + s + "'");
}

GainMode parse_gain_mode(const std::string &s)
{
    if (s == "unit")
        return GainMode::Unit;
    if (s == "random")
        return GainMode::Random;
    throw UsageError("--gain-mode: expected 'unit' or 'random', got '" + s + "'");
}

std::vector<Scheme> default_schemes(Scenario scenario)
{
    if (scenario == Scenario::LoS)
        return {Scheme::Ideal, Scheme::Central, Scheme::RandomIndex, Scheme::SideIndex, Scheme::Random};
    return {Scheme::Ideal, Scheme::Mccm, Scheme::CentralCov, Scheme::RandomIndexCov, Scheme::SideIndexCov,
            Scheme::Random};
}

std::vector<double> default_values(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::SnrDb: return default_snr_grid_db;
    case SweepVariable::BandwidthHz: return default_bandwidth_grid_hz;
    case SweepVariable::Elements: return default_elements_grid;
    }
    return {};
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

CliConfig parse_args(const std::vector<std::string> &argv)
{
    const ScenarioConfig defaults;

    CLI::App app{"Beam-squint aware RIS phase design: Monte Carlo achievable-rate sweeps", "risq"};
    app.require_subcommand(1);

    int figure_id = 2;
    std::size_t trials = defaults.trials;
    std::uint64_t seed = defaults.seed;
    std::string gain_mode = std::string(to_string(defaults.gain_mode));
    std::string output;

    std::string scenario = "los";
    std::string schemes;
    std::string variable = "snr_db";
    std::string values;
    double carrier = defaults.carrier_hz;
    double bandwidth = defaults.bandwidth_hz;
    std::size_t K = defaults.num_subcarriers, N = defaults.num_bs_antennas, M = defaults.num_ris_elements,
                L = defaults.num_paths;
    std::string snr_db = "10";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--trials", trials, "Monte Carlo trials per sweep point")->capture_default_str();
        sub->add_option("--seed", seed, "Base seed of all random substreams")->capture_default_str();
        sub->add_option("--gain-mode", gain_mode, "Path gains: random (CN(0,1)) or unit")->capture_default_str();
        sub->add_option("-o,--output", output, "CSV output file (default: stdout)");
    };

    CLI::App *fig = app.add_subcommand("figure", "Reproduce one reference comparison (2-6)");
    fig->add_option("--id", figure_id,
                    "2: LoS vs SNR, 3: LoS vs bandwidth, 4: LoS vs M, 5: NLoS vs SNR, 6: NLoS vs bandwidth")
        ->required();
    add_common(fig);

    CLI::App *sweep = app.add_subcommand("sweep", "Custom sweep over SNR, bandwidth or RIS size");
    sweep->add_option("--scenario", scenario, "RIS-user link: los or nlos")->capture_default_str();
    sweep->add_option("--schemes", schemes,
                      "Comma-separated schemes: ideal, central, random, random-index, side-index, mccm, "
                      "central-cov, random-index-cov, side-index-cov (default: all supported by the scenario)");
    sweep->add_option("--var", variable, "Sweep variable: snr_db, bandwidth_hz or M")->capture_default_str();
    sweep->add_option("--values", values, "Comma-separated sweep values (default: built-in grid for --var)");
    sweep->add_option("--carrier", carrier, "Carrier frequency in Hz")->capture_default_str();
    sweep->add_option("--bandwidth", bandwidth, "Bandwidth in Hz")->capture_default_str();
    sweep->add_option("--K", K, "Number of subcarriers")->capture_default_str();
    sweep->add_option("--N", N, "BS antennas")->capture_default_str();
    sweep->add_option("--M", M, "RIS elements")->capture_default_str();
    sweep->add_option("--L", L, "RIS-user paths (NLoS)")->capture_default_str();
    sweep->add_option("--snr-db", snr_db, "SNR in dB when not sweeping SNR")->capture_default_str();
    add_common(sweep);

    CLI::App *self = app.add_subcommand("selftest", "Run the built-in closed-form and invariant checks");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try
    {
        app.parse(args);
    }
    catch (const CLI::CallForHelp &)
    {
        const CLI::App *target = &app;
        for (const CLI::App *s : app.get_subcommands())
            target = s;
        throw HelpRequested(target->help());
    }
    catch (const CLI::CallForAllHelp &)
    {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    }
    catch (const CLI::ParseError &e)
    {
        throw UsageError(e.what());
    }

    CliConfig cfg;
    if (self->parsed())
    {
        cfg.command = Command::Selftest;
        return cfg;
    }

    if (trials == 0)
        throw UsageError("--trials: must be at least 1");
    cfg.scenario.trials = trials;
    cfg.scenario.seed = seed;
    cfg.scenario.gain_mode = parse_gain_mode(gain_mode);
    if (!output.empty())
        cfg.output_path = output;

    if (fig->parsed())
    {
        cfg.command = Command::Figure;
        if (figure_id < 2 || figure_id > 6)
            throw UsageError("--id: figure id must be between 2 and 6, got " + std::to_string(figure_id));
        cfg.figure_id = figure_id;
        const FigurePreset preset = figure_preset(figure_id, trials, seed);
        ScenarioConfig sc = preset.config;
        sc.gain_mode = cfg.scenario.gain_mode;
        cfg.scenario = sc;
        cfg.schemes = preset.schemes;
        cfg.variable = preset.variable;
        cfg.values = preset.values;
        return cfg;
    }

    cfg.command = Command::Sweep;
    cfg.scenario.scenario = parse_scenario(scenario);
    cfg.scenario.carrier_hz = carrier;
    cfg.scenario.bandwidth_hz = bandwidth;
    cfg.scenario.num_subcarriers = K;
    cfg.scenario.num_bs_antennas = N;
    cfg.scenario.num_ris_elements = M;
    cfg.scenario.num_paths = L;
    cfg.scenario.snr_db = parse_number_list(snr_db, "--snr-db");

    try
    {
        cfg.variable = parse_sweep_variable(variable);
    }
    catch (const std::invalid_argument &)
    {
        throw UsageError("--var: expected snr_db, bandwidth_hz or M, got '" + variable + "'");
    }

    if (schemes.empty())
    {
        cfg.schemes = default_schemes(cfg.scenario.scenario);
    }
    else
    {
        for (const auto &name : split_list(schemes))
        {
            Scheme s;
            try
            {
                s = parse_scheme(name);
            }
            catch (const std::invalid_argument &)
            {
                throw UsageError("--schemes: unknown scheme '" + name + "'");
            }
            if (!scheme_supports(s, cfg.scenario.scenario))
                throw UsageError("--schemes: scheme '" + name + "' requires --scenario los (incompatible with " +
                                 std::string(to_string(cfg.scenario.scenario)) + ")");
            cfg.schemes.push_back(s);
        }
        if (cfg.schemes.empty())
            throw UsageError("--schemes: expected at least one scheme");
    }

    if (!values.empty())
        cfg.values = parse_number_list(values, "--values");
    else if (cfg.variable == SweepVariable::SnrDb && sweep->count("--snr-db") > 0)
        cfg.values = cfg.scenario.snr_db;
    else
        cfg.values = default_values(cfg.variable);

    if (cfg.variable != SweepVariable::SnrDb && cfg.scenario.snr_db.size() != 1)
        throw UsageError("--snr-db: a single value is required unless --var snr_db");

    for (double v : cfg.values)
    {
        try
        {
            cfg.scenario.with({cfg.variable, v}).validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw UsageError(std::string("--values: ") + e.what());
        }
    }
    try
    {
        cfg.scenario.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw UsageError(e.what());
    }
    return cfg;
}

std::string format_csv(const SweepResult &result)
{
    std::string out = csv_header;
    out += '\n';
    for (const auto &r : result.rows)
    {
        out += to_string(r.scenario);
        out += ',';
        out += to_string(r.scheme);
        out += ',';
        out += to_string(r.sweep_variable);
        out += ',';
        out += format_number(r.sweep_value);
        out += ',';
        out += format_number(r.mean_rate_bits);
        out += ',';
        out += format_number(r.std_error_bits);
        out += ',';
        out += std::to_string(r.trials);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult &result, const std::string &path)
{
    const std::filesystem::path p(path);
    if (p.has_parent_path() && !std::filesystem::is_directory(p.parent_path()))
        throw std::runtime_error("cannot write '" + path + "': parent directory does not exist");
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::string text = format_csv(result);
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    f.close();
    if (!f)
        throw std::runtime_error("failed writing '" + path + "'");
}

void print_summary(const SweepResult &result, std::ostream &os)
{
    if (result.rows.empty())
    {
        os << "(no rows)\n";
        return;
    }
    const auto &first = result.rows.front();
    os << "scenario " << to_string(first.scenario) << ", " << first.trials << " trials, seed " << first.seed
       << "; mean rate (bits/s/Hz) +- std error\n";
    os << std::left << std::setw(18) << to_string(first.sweep_variable) << std::setw(18) << "scheme"
       << "mean rate\n";
    for (const auto &r : result.rows)
    {
        os << std::left << std::setw(18) << format_number(r.sweep_value) << std::setw(18) << to_string(r.scheme)
           << std::fixed << std::setprecision(4) << r.mean_rate_bits << " +- " << r.std_error_bits << '\n'
           << std::defaultfloat;
    }
}

ExitCode selftest(std::ostream &os)
{
    const auto checks = run_selftest();
    std::size_t failed = 0;
    for (const auto &c : checks)
    {
        os << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name << " measured "
           << std::scientific << std::setprecision(3) << c.measured << " (limit " << c.threshold << ")\n"
           << std::defaultfloat;
        if (!c.passed)
            ++failed;
    }
    if (failed)
    {
        os << failed << " check(s) failed:";
        for (const auto &c : checks)
            if (!c.passed)
                os << ' ' << c.name;
        os << '\n';
        return ExitCode::Runtime;
    }
    os << "all " << checks.size() << " checks passed\n";
    return ExitCode::Success;
}

int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err)
{
    CliConfig cfg;
    try
    {
        cfg = parse_args(argv);
    }
    catch (const HelpRequested &h)
    {
        out << h.what();
        return static_cast<int>(ExitCode::Success);
    }
    catch (const UsageError &e)
    {
        err << "risq: " << e.what() << "\nRun with --help for usage.\n";
        return static_cast<int>(ExitCode::Usage);
    }

    try
    {
        if (cfg.command == Command::Selftest)
            return static_cast<int>(selftest(out));

        const auto start = std::chrono::steady_clock::now();
        const SweepResult result = run_sweep(cfg.scenario, cfg.schemes, cfg.variable, cfg.values);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::ostream &summary = cfg.output_path ? out : err;
        if (cfg.output_path)
            emit_csv(result, *cfg.output_path);
        else
            out << format_csv(result);
        print_summary(result, summary);
        summary << "elapsed " << std::fixed << std::setprecision(2) << seconds << " s\n" << std::defaultfloat;
        return static_cast<int>(ExitCode::Success);
    }
    catch (const std::exception &e)
    {
        err << "risq: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Runtime);
    }
}

} // namespace risq::cli

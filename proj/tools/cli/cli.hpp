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

#pragma once

#include "risq/experiments.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace risq::cli
{

enum class ExitCode : int
{
    Success = 0,
    Usage = 1,
    Runtime = 2
};

/// Bad command line. The message names the offending flag.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() is the help text.
class HelpRequested : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Command
{
    Figure,
    Sweep,
    Selftest
};

struct CliConfig
{
    Command command = Command::Figure;
    int figure_id = 2;
    ScenarioConfig scenario;
    std::vector<Scheme> schemes;
    SweepVariable variable = SweepVariable::SnrDb;
    std::vector<double> values;
    std::optional<std::string> output_path;
};

/// argv excludes the program name. Throws UsageError or HelpRequested.
CliConfig parse_args(const std::vector<std::string> &argv);

/// Header plus one row per entry, numbers with 10 significant digits.
std::string format_csv(const SweepResult &result);

/// Writes format_csv(result) to path. Throws std::runtime_error if the file
/// cannot be written.
void emit_csv(const SweepResult &result, const std::string &path);

inline constexpr const char *csv_header =
    "scenario,scheme,sweep_variable,sweep_value,mean_rate_bits,std_error_bits,trials,seed";

/// Aligned table of the result for a terminal.
void print_summary(const SweepResult &result, std::ostream &os);

struct CheckResult
{
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

/// Closed-form and invariant checks at small sizes (M <= 8, K <= 8).
std::vector<CheckResult> run_selftest();

/// Prints every check; returns Success iff all pass.
ExitCode selftest(std::ostream &os);

/// Full command-line entry point.
int run(const std::vector<std::string> &argv, std::ostream &out, std::ostream &err);

} // namespace risq::cli

// SPDX-License-Identifier: Apache-2.0
//
// a2a-pathloss: low-altitude air-to-air mmWave path loss modelling
// Copyright (C) 2026 The a2a-pathloss authors
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

#include "a2a/cli/commands.hpp"
#include "a2a/cli/scenario.hpp"
#include "a2a/cli/table.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace a2a::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_validation_failed = 1,
    exit_usage = 2
};

namespace detail
{
inline int emit(const Scenario &sc, std::ostream &out, std::ostream &err, const std::string &text)
{
    if (sc.out_path.empty())
    {
        out << text;
        return exit_ok;
    }
    std::ofstream file(sc.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush())
    {
        err << "error: cannot write '" << sc.out_path << "'\n";
        return exit_usage;
    }
    return exit_ok;
}
} // namespace detail

/*!
 * Command-line entry point. `args` excludes the program name. Output goes to
 * `out` (or --out), diagnostics to `err`.
 *
 * Exit status: 0 success, 1 a validation check failed, 2 usage, scenario or
 * I/O error.
 */
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Air-to-air mmWave path loss model: LOS probability, path loss, beam-misalignment "
                 "fluctuation and oracle validation.",
                 "a2a"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string preset;
    unsigned threads = 0;

    auto add_common = [&](CLI::App *sub)
    {
        sub->add_option("--scenario", scenario_path, "Scenario file (JSON)");
        sub->add_option("--out", out_path, "Write output here instead of standard output");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "Monte Carlo seed (u64)");
        sub->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
        sub->add_option("--preset", preset, "Environment preset")
            ->check(CLI::IsMember({"suburban", "urban", "dense-urban"}));
        sub->add_option("--threads", threads, "Worker threads (0 = all cores); results do not depend on it");
    };

    auto *plos_cmd = app.add_subcommand("plos", "LOS probability sweep");
    auto *pathloss_cmd = app.add_subcommand("pathloss", "Path loss sweep with free-space and LOS-only references");
    auto *plf_cmd = app.add_subcommand("plf", "Path-loss fluctuation CDF and sigma_f per wobble level");
    auto *validate_cmd = app.add_subcommand("validate", "Closed forms against Monte Carlo oracles");
    for (auto *sub : {plos_cmd, pathloss_cmd, plf_cmd, validate_cmd})
        add_common(sub);

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    CLI::App *cmd = app.get_subcommands().front();
    Scenario sc;
    try
    {
        if (!scenario_path.empty())
            sc = load_scenario(scenario_path);
        Overrides ov;
        if (cmd->count("--out"))
            ov.out_path = out_path;
        if (cmd->count("--format"))
            ov.format = parse_output_format(format);
        if (cmd->count("--seed"))
            ov.seed = seed;
        if (cmd->count("--trials"))
            ov.trials = trials;
        if (cmd->count("--preset"))
            ov.preset = preset;
        if (cmd->count("--threads"))
            ov.threads = threads;
        apply_overrides(sc, ov);
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    std::ostringstream text;
    int status = exit_ok;
    try
    {
        if (cmd == plos_cmd)
            write_table(text, "plos", run_plos_sweep(sc), sc.format);
        else if (cmd == pathloss_cmd)
            write_table(text, "pathloss", run_pathloss_sweep(sc), sc.format);
        else if (cmd == plf_cmd)
            write_table(text, "plf", run_plf(sc), sc.format);
        else
        {
            const auto rep = run_validate(sc);
            write_table(text, "validate", validation_table(rep), sc.format, validation_summary(rep));
            if (!rep.passed())
            {
                for (const auto &c : rep.checks)
                    if (c.status == CheckStatus::fail)
                        err << "validation failed: " << c.name << " (delta " << format_number(c.delta) << " > band "
                            << format_number(c.band) << ")\n";
                status = exit_validation_failed;
            }
            else if (rep.precision_limited)
                err << "note: fewer than " << min_validation_trials
                    << " trials; Monte Carlo checks report insufficient precision\n";
        }
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const int write_status = detail::emit(sc, out, err, text.str());
    return write_status != exit_ok ? write_status : status;
}

} // namespace a2a::cli

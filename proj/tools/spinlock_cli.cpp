// Copyright 2026 The spinlock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinlock/cli.hpp"

namespace {

using spinlock::Settings;

struct FlagBinding {
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
};

void apply_flags(const std::vector<FlagBinding>& bindings, Settings& s) {
    for (const auto& b : bindings)
        if (b.option && b.option->count() > 0) s.set(b.key, b.value);
}

int run_eval(const Settings& settings) {
    const auto spec = spinlock::build_eval_spec(settings);
    const auto report = spinlock::run_sweep(spec);
    const auto& row = report.rows.front();
    if (!row.error.empty()) {
        std::cerr << "error: " << row.error << "\n";
        return 2;
    }
    spinlock::write_csv(std::cout, report);
    return 0;
}

int run_sweep_command(const Settings& settings, const std::string& out) {
    const auto spec = spinlock::build_spec(settings);
    const auto start = std::chrono::steady_clock::now();
    const auto report = spinlock::run_sweep(spec);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::ofstream csv(out, std::ios::binary);
    if (!csv) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return 2;
    }
    spinlock::write_csv(csv, report);
    csv.close();
    std::ofstream meta(out + ".meta.json", std::ios::binary);
    meta << spinlock::metadata_json(report).dump(2) << "\n";

    char line[160];
    std::snprintf(line, sizeof line, "%zu rows (%zu with errors) written to %s in %.3f s\n", report.rows.size(),
                  report.error_count(), out.c_str(), seconds);
    std::cerr << line;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-spin multiple-pulse spin-locking simulator: concurrence and quantum discord"};
    app.require_subcommand(1);

    // String-valued flags mirror config keys; values keep their text so forms
    // like "pi/4" work on the command line as in config files.
    std::vector<FlagBinding> eval_flags;
    eval_flags.reserve(32);
    auto* eval = app.add_subcommand("eval", "Evaluate observables at one point and print a CSV row");
    std::string eval_config;
    eval->add_option("--config", eval_config, "key=value file; flags override its values");
    auto add = [&](std::vector<FlagBinding>& list, CLI::App* cmd, const std::string& flag, const std::string& key,
                   const std::string& help) {
        auto& b = list.emplace_back();
        b.key = key;
        b.option = cmd->add_option(flag, b.value, help);
    };
    add(eval_flags, eval, "--scheme", "scheme", "Pulse scheme: A or B");
    add(eval_flags, eval, "--a", "a", "Scheme A delay ratio (middle window a*tau)");
    add(eval_flags, eval, "--phi", "phi", "Scheme B pulse angle in radians (pi/4 style accepted)");
    add(eval_flags, eval, "--phi-deg", "phi_deg", "Scheme B pulse angle in degrees");
    add(eval_flags, eval, "--tbar", "tbar", "Dimensionless delay d*tau");
    add(eval_flags, eval, "--beta", "beta", "Inverse spin temperature in units of hbar*omega0/kB");
    add(eval_flags, eval, "--periods", "periods", "Number of sequence periods M");
    add(eval_flags, eval, "--theta", "theta", "Measurement polar angle for conditional_entropy_curve");
    add(eval_flags, eval, "--observables", "observables",
        "Comma list of magnetization, concurrence_oracle, concurrence_closed, discord_exact, "
        "discord_optimized, conditional_entropy_curve");
    add(eval_flags, eval, "--population", "population", "Optimizer population size");
    add(eval_flags, eval, "--generations", "generations", "Optimizer generations");
    add(eval_flags, eval, "--sigma0", "sigma0", "Initial mutation width (rad)");
    add(eval_flags, eval, "--decay", "decay", "Mutation width decay per generation");
    add(eval_flags, eval, "--elitism", "elitism", "Individuals kept unchanged per generation");
    add(eval_flags, eval, "--seed", "seed", "Random seed");
    add(eval_flags, eval, "--phi-grid", "phi_grid", "Azimuthal grid size for the discord search (0: Phi = 0)");

    std::vector<FlagBinding> sweep_flags;
    sweep_flags.reserve(8);
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write a CSV file");
    std::string spec_path, out_path;
    sweep->add_option("--spec", spec_path, "Sweep config file (key = value, axis.<name> = ...)");
    add(sweep_flags, sweep, "--preset", "preset", "Figure preset: fig3, fig4, fig5a, fig5b");
    sweep->add_option("--out", out_path, "Output CSV path")->required();
    add(sweep_flags, sweep, "--threads", "threads", "Worker threads (0: all cores)");
    add(sweep_flags, sweep, "--seed", "seed", "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Settings settings;
        if (eval->parsed()) {
            if (!eval_config.empty()) settings = spinlock::load_config(eval_config);
            apply_flags(eval_flags, settings);
            return run_eval(settings);
        }
        if (spec_path.empty() && sweep_flags[0].option->count() == 0) {
            std::cerr << "error: sweep needs --spec or --preset\n";
            return 2;
        }
        if (!spec_path.empty()) settings = spinlock::load_config(spec_path);
        apply_flags(sweep_flags, settings);
        return run_sweep_command(settings, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

// Copyright 2026 The ccr-lab authors
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

// ccr-lab: batch runner and verifier for the complementarity-relation
// studies. Exit codes: 0 success (and, for `verify`, all relations hold at
// tolerance), 1 relation violations found, 2 usage or configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccrlab/experiments.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ccrlab::ConfigError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ccrlab::Mode parse_mode(const std::string& mode) {
    if (mode == "exact") return ccrlab::Mode::exact;
    if (mode == "sampled") return ccrlab::Mode::sampled;
    throw ccrlab::ConfigError("mode must be 'exact' or 'sampled', got '" + mode + "'");
}

ccrlab::NoiseParams parse_noise(const std::string& noise) {
    if (noise == "off") return ccrlab::NoiseParams::off();
    if (noise == "default") return ccrlab::NoiseParams::preset_default();
    return ccrlab::noise_from_json(read_file(noise));
}

// Shared flags of the two runner subcommands. Values set on the command
// line override values from --config.
struct RunnerFlags {
    std::string config_path;
    std::string mode;
    std::string noise;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::string out;
};

void add_runner_flags(CLI::App& cmd, RunnerFlags& f) {
    cmd.add_option("--config", f.config_path, "JSON config file; flags override its values");
    cmd.add_option("--mode", f.mode, "exact | sampled");
    cmd.add_option("--shots", f.shots, "shots per tomography setting");
    cmd.add_option("--seed", f.seed, "RNG seed");
    cmd.add_option("--noise", f.noise, "off | default | path to noise JSON");
    cmd.add_option("--out", f.out, "output CSV path")->required();
}

ccrlab::RunConfig build_config(const CLI::App& cmd, const RunnerFlags& f,
                               ccrlab::Experiment experiment) {
    ccrlab::RunConfig cfg;
    if (cmd.count("--config") > 0) cfg = ccrlab::config_from_json(read_file(f.config_path));
    cfg.experiment = experiment;
    if (cmd.count("--mode") > 0) cfg.mode = parse_mode(f.mode);
    if (cmd.count("--shots") > 0) cfg.shots = f.shots;
    if (cmd.count("--seed") > 0) cfg.seed = f.seed;
    if (cmd.count("--noise") > 0) cfg.noise = parse_noise(f.noise);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ccr-lab: complementarity-relation simulations and checks"};
    app.require_subcommand(1);

    // --- werner ---
    CLI::App* werner = app.add_subcommand("werner", "Werner-family (x, w) sweep");
    RunnerFlags werner_flags;
    int grid = 0;
    std::string surfaces;
    werner->add_option("--grid", grid, "grid points per axis (>= 2)");
    add_runner_flags(*werner, werner_flags);
    werner->add_option("--surfaces", surfaces,
                       "also write gnuplot surface files with this path prefix");

    // --- random ---
    CLI::App* random = app.add_subcommand("random", "random-state dimension study");
    RunnerFlags random_flags;
    int dim = 0, states = 0, gates = 0;
    random->add_option("--dim", dim, "quanton dimension: 2, 4, or 8");
    random->add_option("--states", states, "number of random states (default per dimension)");
    random->add_option("--gates", gates, "gates per random circuit (default per dimension)");
    add_runner_flags(*random, random_flags);

    // --- verify ---
    CLI::App* verify_cmd = app.add_subcommand("verify", "grade a dataset's relation columns");
    std::string verify_in;
    double tol = 1e-9;
    verify_cmd->add_option("--in", verify_in, "CSV dataset to check")->required();
    verify_cmd->add_option("--tol", tol, "violation tolerance (default 1e-9)");

    // --- reconstruct ---
    CLI::App* reconstruct_cmd =
        app.add_subcommand("reconstruct", "tomography reconstruction from a counts file");
    std::string counts_in, state_out;
    bool print_report = false;
    reconstruct_cmd->add_option("--in", counts_in, "counts file (one JSON record per line)")
        ->required();
    reconstruct_cmd->add_option("--out", state_out, "output density-matrix JSON")->required();
    reconstruct_cmd->add_flag("--report", print_report, "also print the measure CSV row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*werner) {
            ccrlab::RunConfig cfg =
                build_config(*werner, werner_flags, ccrlab::Experiment::werner_sweep);
            if (werner->count("--grid") > 0) cfg.grid = grid;
            const ccrlab::Dataset ds = ccrlab::run_werner_sweep(cfg);
            ccrlab::write_csv(ds, werner_flags.out);
            std::cout << "wrote " << werner_flags.out << " (" << ds.rows.size() << " rows)\n";
            if (!surfaces.empty())
                for (const std::string& path : ccrlab::write_gnuplot_surfaces(ds, surfaces))
                    std::cout << "wrote " << path << '\n';
        } else if (*random) {
            ccrlab::RunConfig cfg =
                build_config(*random, random_flags, ccrlab::Experiment::random_states);
            if (random->count("--dim") > 0) cfg.dimension = dim;
            if (random->count("--states") > 0) cfg.num_states = states;
            if (random->count("--gates") > 0) cfg.num_gates = gates;
            const ccrlab::Dataset ds = ccrlab::run_random_states(cfg);
            ccrlab::write_csv(ds, random_flags.out);
            std::cout << "wrote " << random_flags.out << " (" << ds.rows.size() << " rows)\n";
        } else if (*verify_cmd) {
            const ccrlab::VerifySummary s = ccrlab::verify(ccrlab::load_dataset(verify_in), tol);
            std::cout << ccrlab::summary_to_text(s);
            return s.pass ? 0 : 1;
        } else if (*reconstruct_cmd) {
            const ccrlab::TomographyRecord rec =
                ccrlab::reconstruct(ccrlab::load_counts(counts_in));
            ccrlab::save_density(rec.physical_estimate, state_out);
            std::cout << "wrote " << state_out
                      << " (negativity_clipped=" << rec.negativity_clipped << ")\n";
            if (print_report) {
                std::cout << ccrlab::measure_csv_header() << '\n'
                          << ccrlab::measure_csv_row(ccrlab::report(rec.physical_estimate))
                          << '\n';
            }
        }
    } catch (const ccrlab::Error& e) {
        std::cerr << "ccr-lab: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

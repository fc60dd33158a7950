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

#ifndef CCRLAB_EXPERIMENTS_HPP_
#define CCRLAB_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ccrlab/measures.hpp"
#include "ccrlab/noise_tomography.hpp"

namespace ccrlab {

// The two batch studies the toolkit ships, their CSV datasets, and the
// relation verifier that grades a dataset after the fact.

enum class Experiment { werner_sweep, random_states };
enum class Mode { exact, sampled };

/// Parameters of one batch run. Defaults reproduce the standard studies;
/// num_states / num_gates of 0 select the per-dimension defaults
/// (d = 2: 100 states / 5 gates, d = 4: 150 / 4, d = 8: 200 / 4).
struct RunConfig {
    Experiment experiment = Experiment::werner_sweep;
    Mode mode = Mode::exact;
    int grid = 21;             // werner sweep: grid x grid points over [0,1]^2
    int dimension = 2;         // random states: quanton dimension, 2 / 4 / 8
    int num_states = 0;        // random states: 0 = per-dimension default
    int num_gates = 0;         // random states: 0 = per-dimension default
    std::int64_t shots = 8192;
    std::uint64_t seed = 42;
    NoiseParams noise;         // default off
};

/// Fills in per-dimension defaults and checks the invariants (grid >= 2,
/// dimension in {2, 4, 8}, num_states >= 1, shots >= 1). Throws
/// ConfigError.
RunConfig resolve_config(const RunConfig& cfg);

/// Reads a RunConfig from JSON. Recognized fields: "experiment"
/// ("werner" | "random"), "mode" ("exact" | "sampled"), "grid", "dim",
/// "states", "gates", "shots", "seed", and "noise" ("off" | "default" |
/// inline noise object). Missing fields keep their defaults. Throws
/// MalformedDataset on bad JSON, ConfigError on bad values.
RunConfig config_from_json(const std::string& text);

/// In-memory CSV dataset: one header, numeric rows, and '#' comment lines
/// that carry provenance (head) and batch summaries (tail).
struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments_head;
    std::vector<std::string> comments_tail;

    /// Index of a named column; throws MalformedDataset when absent.
    std::size_t column(const std::string& name) const;
};

/// Doubles print as %.17g, so written datasets round-trip exactly and a
/// fixed config yields a byte-identical file.
std::string dataset_to_csv(const Dataset& ds);
void write_csv(const Dataset& ds, const std::string& path);
Dataset dataset_from_csv(const std::string& text);
Dataset load_dataset(const std::string& path);

/// The Werner-family sweep: for every grid point (x, w) the theory columns
/// hold the measures of the closed-form state and the _exp columns hold the
/// pipeline result — the two-qubit preparation circuit run under the noise
/// model, tomographed in sampled mode, and reduced to the quanton by
/// tracing out qubit 1. Residual/slack columns grade the _exp state.
Dataset run_werner_sweep(const RunConfig& cfg);

/// The random-state dimension study: per state a random circuit on n + 1
/// qubits is applied to |0...0> and the last qubit is traced out; theory
/// columns grade that exact reduced state, _exp columns the noisy (and in
/// sampled mode, tomographed) pipeline. A per-run summary lands in the
/// dataset's tail comments.
Dataset run_random_states(const RunConfig& cfg);

/// Verdict for one relation over a whole dataset.
struct RelationVerdict {
    std::string name;        // e.g. "ccr_l1" or "icr_vn"
    long violations = 0;     // rows beyond tolerance
    double worst = 0.0;      // most extreme value seen (signed)
};

struct VerifySummary {
    double tolerance = 0.0;
    long rows = 0;
    bool pass = false;
    std::vector<RelationVerdict> relations;
};

/// Grades a dataset produced by either runner: a CCR column violates at
/// |value| > tolerance, an ICR column at value < -tolerance. Throws
/// MalformedDataset when the eight relation columns are missing.
VerifySummary verify(const Dataset& ds, double tolerance);

/// One line per relation plus a final PASS/FAIL line.
std::string summary_to_text(const VerifySummary& s);

/// Writes gnuplot splot-ready surface files "<prefix>_<measure>.dat"
/// (columns: x w theory exp, blank line between x-blocks) for every
/// <measure>_theory / <measure>_exp pair in a sweep dataset. Returns the
/// paths written. Throws ConfigError when the dataset has no x/w columns.
std::vector<std::string> write_gnuplot_surfaces(const Dataset& ds, const std::string& prefix);

}  // namespace ccrlab

#endif  // CCRLAB_EXPERIMENTS_HPP_

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

#include "ccrlab/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ccrlab/circuits.hpp"
#include "ccrlab/linalg.hpp"
#include "ccrlab/rng.hpp"

namespace ccrlab {

namespace {

const std::vector<std::string>& measure_names() {
    static const std::vector<std::string> names = {
        "C_l1", "C_wy", "C_hs", "C_re", "P_l1", "P_hs", "P_vn", "W_l1",
        "W_wy", "S_l",  "S_vn", "purity_hs", "purity_vn", "purity_l1", "purity_wy"};
    return names;
}

const std::vector<std::string>& relation_names() {
    static const std::vector<std::string> names = {"ccr_l1", "ccr_wy", "ccr_hs", "ccr_vn",
                                                   "icr_l1", "icr_wy", "icr_hs", "icr_vn"};
    return names;
}

std::array<double, 15> report_values(const MeasureReport& r) {
    return {r.C_l1, r.C_wy, r.C_hs, r.C_re, r.P_l1, r.P_hs, r.P_vn, r.W_l1,
            r.W_wy, r.S_l,  r.S_vn, r.purity_hs, r.purity_vn, r.purity_l1, r.purity_wy};
}

void append_measure_columns(std::vector<std::string>& columns) {
    for (const std::string& m : measure_names()) {
        columns.push_back(m + "_theory");
        columns.push_back(m + "_exp");
    }
    for (const std::string& r : relation_names()) columns.push_back(r);
}

void append_measure_values(std::vector<double>& row, const MeasureReport& theory,
                           const MeasureReport& exp) {
    const std::array<double, 15> t = report_values(theory);
    const std::array<double, 15> e = report_values(exp);
    for (std::size_t i = 0; i < t.size(); ++i) {
        row.push_back(t[i]);
        row.push_back(e[i]);
    }
    for (double v : exp.ccr_residuals) row.push_back(v);
    for (double v : exp.icr_slacks) row.push_back(v);
}

DensityMatrix reduce_to_quanton(const ComplexMatrix& m, int total_qubits) {
    const std::vector<int> dims(static_cast<std::size_t>(total_qubits), 2);
    std::vector<int> keep;
    for (int q = 0; q < total_qubits - 1; ++q) keep.push_back(q);
    ComplexMatrix reduced = partial_trace(m, dims, keep);
    reduced = (reduced + reduced.adjoint().eval()) / 2.0;
    return DensityMatrix(reduced);
}

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "sampled"; }

std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void track_relations(const MeasureReport& r, double& max_abs_ccr, double& min_icr_slack) {
    for (double v : r.ccr_residuals) max_abs_ccr = std::max(max_abs_ccr, std::abs(v));
    for (double v : r.icr_slacks) min_icr_slack = std::min(min_icr_slack, v);
}

}  // namespace

RunConfig resolve_config(const RunConfig& cfg) {
    RunConfig c = cfg;
    if (c.grid < 2) throw ConfigError("resolve_config: grid must be >= 2");
    if (c.shots < 1) throw ConfigError("resolve_config: shots must be >= 1");
    if (c.experiment == Experiment::random_states) {
        switch (c.dimension) {
            case 2:
                if (c.num_states == 0) c.num_states = 100;
                if (c.num_gates == 0) c.num_gates = 5;
                break;
            case 4:
                if (c.num_states == 0) c.num_states = 150;
                if (c.num_gates == 0) c.num_gates = 4;
                break;
            case 8:
                if (c.num_states == 0) c.num_states = 200;
                if (c.num_gates == 0) c.num_gates = 4;
                break;
            default:
                throw ConfigError("resolve_config: dimension must be 2, 4, or 8");
        }
        if (c.num_states < 1) throw ConfigError("resolve_config: num_states must be >= 1");
        if (c.num_gates < 1) throw ConfigError("resolve_config: num_gates must be >= 1");
    }
    return c;
}

RunConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDataset(std::string("config_from_json: ") + e.what());
    }
    RunConfig c;
    if (j.contains("experiment")) {
        const std::string e = j["experiment"].get<std::string>();
        if (e == "werner" || e == "werner_sweep") c.experiment = Experiment::werner_sweep;
        else if (e == "random" || e == "random_states") c.experiment = Experiment::random_states;
        else throw ConfigError("config_from_json: experiment '" + e + "'");
    }
    if (j.contains("mode")) {
        const std::string m = j["mode"].get<std::string>();
        if (m == "exact") c.mode = Mode::exact;
        else if (m == "sampled") c.mode = Mode::sampled;
        else throw ConfigError("config_from_json: mode '" + m + "'");
    }
    c.grid = j.value("grid", c.grid);
    c.dimension = j.value("dim", c.dimension);
    c.num_states = j.value("states", c.num_states);
    c.num_gates = j.value("gates", c.num_gates);
    c.shots = j.value("shots", c.shots);
    c.seed = j.value("seed", c.seed);
    if (j.contains("noise")) {
        if (j["noise"].is_string()) {
            const std::string n = j["noise"].get<std::string>();
            if (n == "off") c.noise = NoiseParams::off();
            else if (n == "default") c.noise = NoiseParams::preset_default();
            else throw ConfigError("config_from_json: noise preset '" + n + "'");
        } else {
            c.noise = noise_from_json(j["noise"].dump());
        }
    }
    return c;
}

std::size_t Dataset::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw MalformedDataset("dataset: no column named " + name);
}

std::string dataset_to_csv(const Dataset& ds) {
    std::ostringstream out;
    for (const std::string& c : ds.comments_head) out << "# " << c << '\n';
    for (std::size_t i = 0; i < ds.columns.size(); ++i)
        out << (i ? "," : "") << ds.columns[i];
    out << '\n';
    for (const std::vector<double>& row : ds.rows) {
        if (row.size() != ds.columns.size())
            throw MalformedDataset("dataset_to_csv: row width mismatch");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_g17(row[i]);
        out << '\n';
    }
    for (const std::string& c : ds.comments_tail) out << "# " << c << '\n';
    return out.str();
}

void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("write_csv: cannot open " + path);
    out << dataset_to_csv(ds);
}

Dataset dataset_from_csv(const std::string& text) {
    Dataset ds;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
            (have_header ? ds.comments_tail : ds.comments_head).push_back(body);
            continue;
        }
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!have_header) {
            ds.columns = cells;
            have_header = true;
            continue;
        }
        if (cells.size() != ds.columns.size())
            throw MalformedDataset("dataset_from_csv: row has " + std::to_string(cells.size()) +
                                   " cells, header has " + std::to_string(ds.columns.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& cell : cells) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size())
                throw MalformedDataset("dataset_from_csv: non-numeric cell '" + cell + "'");
            row.push_back(v);
        }
        ds.rows.push_back(std::move(row));
    }
    if (!have_header) throw MalformedDataset("dataset_from_csv: no header line");
    return ds;
}

Dataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedDataset("load_dataset: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return dataset_from_csv(buf.str());
}

Dataset run_werner_sweep(const RunConfig& cfg) {
    RunConfig c = resolve_config(cfg);
    c.experiment = Experiment::werner_sweep;

    Dataset ds;
    ds.columns = {"x", "w"};
    append_measure_columns(ds.columns);
    ds.comments_head = {"ccr-lab werner sweep",
                        std::string("mode=") + mode_name(c.mode) + " grid=" +
                            std::to_string(c.grid) + " shots=" + std::to_string(c.shots) +
                            " seed=" + std::to_string(c.seed),
                        "noise=" + noise_to_json(c.noise)};

    double max_abs_ccr = 0.0;
    double min_icr_slack = std::numeric_limits<double>::infinity();
    const double step = 1.0 / static_cast<double>(c.grid - 1);
    for (int ix = 0; ix < c.grid; ++ix) {
        const double x = static_cast<double>(ix) * step;
        for (int iw = 0; iw < c.grid; ++iw) {
            const double w = static_cast<double>(iw) * step;
            const WernerParams p(w, x);
            const MeasureReport theory = report(werner_state(p));

            const Circuit prep = werner_preparation_circuit(p);
            const DensityMatrix pair = run_with_noise(prep, c.noise);
            const std::uint64_t point_seed =
                derive_seed(c.seed, static_cast<std::uint64_t>(ix * c.grid + iw));
            const DensityMatrix quanton =
                c.mode == Mode::sampled
                    ? reduce_to_quanton(
                          tomograph(pair, c.shots, c.noise, point_seed).physical_estimate.matrix(),
                          2)
                    : reduce_to_quanton(pair.matrix(), 2);
            const MeasureReport exp = report(quanton);
            track_relations(exp, max_abs_ccr, min_icr_slack);

            std::vector<double> row = {x, w};
            append_measure_values(row, theory, exp);
            ds.rows.push_back(std::move(row));
        }
    }
    ds.comments_tail = {"max_abs_ccr=" + format_g17(max_abs_ccr),
                        "min_icr_slack=" + format_g17(min_icr_slack)};
    return ds;
}

Dataset run_random_states(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.experiment = Experiment::random_states;
    c = resolve_config(c);
    const int quanton_qubits = std::countr_zero(static_cast<unsigned>(c.dimension));
    const int total_qubits = quanton_qubits + 1;

    Dataset ds;
    ds.columns = {"state", "d_A"};
    append_measure_columns(ds.columns);
    ds.comments_head = {"ccr-lab random states",
                        std::string("mode=") + mode_name(c.mode) + " dim=" +
                            std::to_string(c.dimension) + " states=" +
                            std::to_string(c.num_states) + " gates=" +
                            std::to_string(c.num_gates) + " shots=" + std::to_string(c.shots) +
                            " seed=" + std::to_string(c.seed),
                        "noise=" + noise_to_json(c.noise)};

    double max_abs_ccr = 0.0;
    double min_icr_slack = std::numeric_limits<double>::infinity();
    double mean_theory_pc = 0.0, mean_exp_pc = 0.0;
    double mean_theory_w = 0.0, mean_exp_w = 0.0;

    ComplexVector zero_state = ComplexVector::Zero(1L << total_qubits);
    zero_state(0) = 1.0;
    for (int s = 0; s < c.num_states; ++s) {
        const Circuit circuit = random_circuit(
            total_qubits, c.num_gates, derive_seed(c.seed, 2 * static_cast<std::uint64_t>(s)));

        const StateVector psi = apply(circuit, StateVector(zero_state));
        const MeasureReport theory =
            report(reduce_to_quanton(psi.to_density().matrix(), total_qubits));

        const DensityMatrix noisy = run_with_noise(circuit, c.noise);
        const std::uint64_t tomo_seed = derive_seed(c.seed, 2 * static_cast<std::uint64_t>(s) + 1);
        const DensityMatrix quanton =
            c.mode == Mode::sampled
                ? reduce_to_quanton(
                      tomograph(noisy, c.shots, c.noise, tomo_seed).physical_estimate.matrix(),
                      total_qubits)
                : reduce_to_quanton(noisy.matrix(), total_qubits);
        const MeasureReport exp = report(quanton);
        track_relations(exp, max_abs_ccr, min_icr_slack);

        mean_theory_pc += theory.C_l1 + theory.P_l1;
        mean_exp_pc += exp.C_l1 + exp.P_l1;
        mean_theory_w += theory.W_l1;
        mean_exp_w += exp.W_l1;

        std::vector<double> row = {static_cast<double>(s), static_cast<double>(c.dimension)};
        append_measure_values(row, theory, exp);
        ds.rows.push_back(std::move(row));
    }
    const double inv_n = 1.0 / static_cast<double>(c.num_states);
    ds.comments_tail = {
        "summary d_A=" + std::to_string(c.dimension) +
            " bound=" + format_g17(static_cast<double>(c.dimension - 1)) +
            " states=" + std::to_string(c.num_states),
        "mean_C_l1_plus_P_l1 theory=" + format_g17(mean_theory_pc * inv_n) +
            " exp=" + format_g17(mean_exp_pc * inv_n),
        "mean_W_l1 theory=" + format_g17(mean_theory_w * inv_n) +
            " exp=" + format_g17(mean_exp_w * inv_n),
        "max_abs_ccr=" + format_g17(max_abs_ccr),
        "min_icr_slack=" + format_g17(min_icr_slack)};
    return ds;
}

VerifySummary verify(const Dataset& ds, double tolerance) {
    VerifySummary s;
    s.tolerance = tolerance;
    s.rows = static_cast<long>(ds.rows.size());
    bool any_violation = false;
    for (const std::string& name : relation_names()) {
        const std::size_t col = ds.column(name);
        const bool is_ccr = name.rfind("ccr_", 0) == 0;
        RelationVerdict v;
        v.name = name;
        bool first = true;
        for (const std::vector<double>& row : ds.rows) {
            const double value = row[col];
            if (is_ccr) {
                if (std::abs(value) > tolerance) ++v.violations;
                if (first || std::abs(value) > std::abs(v.worst)) v.worst = value;
            } else {
                if (value < -tolerance) ++v.violations;
                if (first || value < v.worst) v.worst = value;
            }
            first = false;
        }
        any_violation = any_violation || v.violations > 0;
        s.relations.push_back(std::move(v));
    }
    s.pass = !any_violation;
    return s;
}

std::string summary_to_text(const VerifySummary& s) {
    std::ostringstream out;
    out << "verify: tolerance=" << format_g17(s.tolerance) << " rows=" << s.rows << '\n';
    for (const RelationVerdict& v : s.relations) {
        const bool is_ccr = v.name.rfind("ccr_", 0) == 0;
        out << "  " << v.name << ": violations=" << v.violations << ' '
            << (is_ccr ? "worst_residual=" : "min_slack=") << format_g17(v.worst) << '\n';
    }
    out << (s.pass ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::vector<std::string> write_gnuplot_surfaces(const Dataset& ds, const std::string& prefix) {
    std::size_t col_x = 0, col_w = 0;
    try {
        col_x = ds.column("x");
        col_w = ds.column("w");
    } catch (const MalformedDataset&) {
        throw ConfigError("write_gnuplot_surfaces: dataset has no x/w grid columns");
    }
    std::vector<std::string> written;
    for (const std::string& name : ds.columns) {
        const std::string suffix = "_theory";
        if (name.size() <= suffix.size() ||
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
            continue;
        const std::string base = name.substr(0, name.size() - suffix.size());
        std::size_t col_theory = 0, col_exp = 0;
        try {
            col_theory = ds.column(base + "_theory");
            col_exp = ds.column(base + "_exp");
        } catch (const MalformedDataset&) {
            continue;
        }
        const std::string path = prefix + "_" + base + ".dat";
        std::ofstream out(path);
        if (!out) throw ConfigError("write_gnuplot_surfaces: cannot open " + path);
        out << "# x w " << base << "_theory " << base << "_exp\n";
        bool first = true;
        double prev_x = 0.0;
        for (const std::vector<double>& row : ds.rows) {
            if (!first && row[col_x] != prev_x) out << '\n';
            prev_x = row[col_x];
            first = false;
            out << format_g17(row[col_x]) << ' ' << format_g17(row[col_w]) << ' '
                << format_g17(row[col_theory]) << ' ' << format_g17(row[col_exp]) << '\n';
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace ccrlab

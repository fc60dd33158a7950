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

#include "ccrlab/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ccrlab/rng.hpp"

namespace ccrlab {

namespace {

constexpr double kPi = std::numbers::pi;

const Complex kI(0.0, 1.0);

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

ComplexMatrix u3_matrix(double theta, double lambda, double phi) {
    const double ct = std::cos(theta / 2.0), st = std::sin(theta / 2.0);
    return mat2(ct, -std::exp(kI * lambda) * st, std::exp(kI * phi) * st,
                std::exp(kI * (lambda + phi)) * ct);
}

ComplexMatrix single_qubit_matrix(GateKind kind, const std::vector<double>& params) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    switch (kind) {
        case GateKind::I: return mat2(1, 0, 0, 1);
        case GateKind::X: return mat2(0, 1, 1, 0);
        case GateKind::Y: return mat2(0, -kI, kI, 0);
        case GateKind::Z: return mat2(1, 0, 0, -1);
        case GateKind::H: return mat2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
        case GateKind::S: return mat2(1, 0, 0, kI);
        case GateKind::Sdg: return mat2(1, 0, 0, -kI);
        case GateKind::T: return mat2(1, 0, 0, std::exp(kI * (kPi / 4.0)));
        case GateKind::Tdg: return mat2(1, 0, 0, std::exp(-kI * (kPi / 4.0)));
        case GateKind::RX: {
            const double c = std::cos(params[0] / 2.0), s = std::sin(params[0] / 2.0);
            return mat2(c, -kI * s, -kI * s, c);
        }
        case GateKind::RY: {
            const double c = std::cos(params[0] / 2.0), s = std::sin(params[0] / 2.0);
            return mat2(c, -s, s, c);
        }
        case GateKind::RZ:
            return mat2(std::exp(-kI * (params[0] / 2.0)), 0, 0, std::exp(kI * (params[0] / 2.0)));
        case GateKind::U1: return mat2(1, 0, 0, std::exp(kI * params[0]));
        case GateKind::U2: return u3_matrix(kPi / 2.0, params[0], params[1]);
        case GateKind::U3: return u3_matrix(params[0], params[1], params[2]);
        default: throw ConfigError("single_qubit_matrix: not a single-qubit kind");
    }
}

}  // namespace

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::Swap:
        case GateKind::Controlled: return 2;
        case GateKind::Toffoli: return 3;
        default: return 1;
    }
}

int gate_param_count(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::U1: return 1;
        case GateKind::U2: return 2;
        case GateKind::U3: return 3;
        default: return 0;
    }
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::I: return "I";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::T: return "T";
        case GateKind::Tdg: return "Tdg";
        case GateKind::RX: return "RX";
        case GateKind::RY: return "RY";
        case GateKind::RZ: return "RZ";
        case GateKind::U1: return "U1";
        case GateKind::U2: return "U2";
        case GateKind::U3: return "U3";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::Swap: return "SWAP";
        case GateKind::Toffoli: return "TOFFOLI";
        case GateKind::Controlled: return "CONTROLLED";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    static const std::vector<GateKind> all = {
        GateKind::I,  GateKind::X,  GateKind::Y,  GateKind::Z,       GateKind::H,
        GateKind::S,  GateKind::Sdg, GateKind::T, GateKind::Tdg,     GateKind::RX,
        GateKind::RY, GateKind::RZ, GateKind::U1, GateKind::U2,      GateKind::U3,
        GateKind::CX, GateKind::CZ, GateKind::Swap, GateKind::Toffoli,
        GateKind::Controlled};
    for (GateKind k : all)
        if (name == gate_name(k)) return k;
    throw ConfigError("unknown gate kind: " + name);
}

Gate make_gate(GateKind kind, std::vector<int> wires, std::vector<double> params,
               GateKind base) {
    Gate g;
    g.kind = kind;
    g.wires = std::move(wires);
    g.params = std::move(params);
    g.base = base;
    int expected_params = gate_param_count(kind);
    if (kind == GateKind::Controlled) {
        if (gate_arity(base) != 1 || base == GateKind::Controlled)
            throw ConfigError("make_gate: Controlled base must be a single-qubit kind");
        expected_params = gate_param_count(base);
    }
    if (static_cast<int>(g.wires.size()) != gate_arity(kind))
        throw ConfigError(std::string("make_gate: ") + gate_name(kind) + " expects " +
                          std::to_string(gate_arity(kind)) + " wires");
    if (static_cast<int>(g.params.size()) != expected_params)
        throw ConfigError(std::string("make_gate: ") + gate_name(kind) + " expects " +
                          std::to_string(expected_params) + " params");
    for (std::size_t i = 0; i < g.wires.size(); ++i) {
        if (g.wires[i] < 0) throw ConfigError("make_gate: negative wire index");
        for (std::size_t j = i + 1; j < g.wires.size(); ++j)
            if (g.wires[i] == g.wires[j]) throw ConfigError("make_gate: repeated wire index");
    }
    return g;
}

void Circuit::add(const Gate& g) {
    for (int w : g.wires)
        if (w >= num_qubits)
            throw ConfigError("Circuit::add: wire " + std::to_string(w) + " >= num_qubits");
    gates.push_back(g);
}

ComplexMatrix gate_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::CX:
        case GateKind::Controlled: {
            // local bit 0 = control, bit 1 = target
            const ComplexMatrix u = g.kind == GateKind::CX
                                        ? single_qubit_matrix(GateKind::X, {})
                                        : single_qubit_matrix(g.base, g.params);
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = 1.0;
            m(2, 2) = 1.0;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) m(2 * r + 1, 2 * c + 1) = u(r, c);
            return m;
        }
        case GateKind::CZ: {
            ComplexMatrix m = ComplexMatrix::Identity(4, 4);
            m(3, 3) = -1.0;
            return m;
        }
        case GateKind::Swap: {
            ComplexMatrix m = ComplexMatrix::Zero(4, 4);
            m(0, 0) = m(3, 3) = 1.0;
            m(1, 2) = m(2, 1) = 1.0;
            return m;
        }
        case GateKind::Toffoli: {
            // local bits 0,1 = controls, bit 2 = target
            ComplexMatrix m = ComplexMatrix::Identity(8, 8);
            m(3, 3) = m(7, 7) = 0.0;
            m(3, 7) = m(7, 3) = 1.0;
            return m;
        }
        default: return single_qubit_matrix(g.kind, g.params);
    }
}

namespace {

// scatter local index bits onto the gate's wires
long scatter_local(long local, const std::vector<int>& wires) {
    long full = 0;
    for (std::size_t p = 0; p < wires.size(); ++p)
        full |= ((local >> p) & 1L) << wires[p];
    return full;
}

long wire_mask(const std::vector<int>& wires) {
    long mask = 0;
    for (int w : wires) mask |= 1L << w;
    return mask;
}

}  // namespace

ComplexMatrix embed_gate(const Gate& g, int num_qubits) {
    for (int w : g.wires)
        if (w >= num_qubits) throw DimensionMismatch("embed_gate: wire out of range");
    const ComplexMatrix u = gate_matrix(g);
    const long dim = 1L << num_qubits;
    const long k = 1L << g.wires.size();
    const long mask = wire_mask(g.wires);
    ComplexMatrix full = ComplexMatrix::Zero(dim, dim);
    for (long rest = 0; rest < dim; ++rest) {
        if (rest & mask) continue;
        for (long lr = 0; lr < k; ++lr)
            for (long lc = 0; lc < k; ++lc)
                full(rest | scatter_local(lr, g.wires), rest | scatter_local(lc, g.wires)) =
                    u(lr, lc);
    }
    return full;
}

StateVector apply(const Circuit& c, const StateVector& input) {
    if (input.num_qubits() != c.num_qubits)
        throw DimensionMismatch("apply: state has " + std::to_string(input.num_qubits()) +
                                " qubits, circuit has " + std::to_string(c.num_qubits));
    ComplexVector amps = input.amplitudes();
    const long dim = amps.size();
    for (const Gate& g : c.gates) {
        const ComplexMatrix u = gate_matrix(g);
        const long k = 1L << g.wires.size();
        const long mask = wire_mask(g.wires);
        ComplexVector scratch(k);
        for (long rest = 0; rest < dim; ++rest) {
            if (rest & mask) continue;
            for (long l = 0; l < k; ++l) scratch(l) = amps(rest | scatter_local(l, g.wires));
            scratch = (u * scratch).eval();
            for (long l = 0; l < k; ++l) amps(rest | scatter_local(l, g.wires)) = scratch(l);
        }
    }
    amps /= amps.norm();  // scrub accumulated rounding, output stays unit
    return StateVector(amps);
}

DensityMatrix apply_density(const Circuit& c, const DensityMatrix& input) {
    if (input.num_qubits() != c.num_qubits)
        throw DimensionMismatch("apply_density: qubit count mismatch");
    const ComplexMatrix u = circuit_unitary(c);
    ComplexMatrix m = u * input.matrix() * u.adjoint();
    m = (m + m.adjoint().eval()) / 2.0;
    return DensityMatrix(m);
}

ComplexMatrix circuit_unitary(const Circuit& c) {
    if (c.num_qubits > 10)
        throw DimensionMismatch("circuit_unitary: supported up to 10 qubits");
    const long dim = 1L << c.num_qubits;
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const Gate& g : c.gates) u = embed_gate(g, c.num_qubits) * u;
    return u;
}

std::vector<GateKind> random_gate_catalog(int num_qubits) {
    std::vector<GateKind> catalog = {GateKind::I,  GateKind::X,   GateKind::Y,  GateKind::Z,
                                     GateKind::H,  GateKind::S,   GateKind::Sdg, GateKind::T,
                                     GateKind::Tdg, GateKind::RX, GateKind::RY, GateKind::RZ,
                                     GateKind::U1, GateKind::U2,  GateKind::U3};
    if (num_qubits >= 2) {
        catalog.push_back(GateKind::CX);
        catalog.push_back(GateKind::CZ);
        catalog.push_back(GateKind::Swap);
    }
    if (num_qubits >= 3) catalog.push_back(GateKind::Toffoli);
    return catalog;
}

Circuit random_circuit(int num_qubits, int num_gates, std::uint64_t rng_seed) {
    if (num_qubits < 1) throw ConfigError("random_circuit: num_qubits < 1");
    if (num_gates < 0) throw ConfigError("random_circuit: num_gates < 0");
    const std::vector<GateKind> catalog = random_gate_catalog(num_qubits);
    Rng rng(rng_seed);
    Circuit c(num_qubits);
    for (int i = 0; i < num_gates; ++i) {
        const GateKind kind = catalog[rng.integer(catalog.size())];
        std::vector<int> wires;
        std::vector<int> pool(num_qubits);
        for (int q = 0; q < num_qubits; ++q) pool[q] = q;
        for (int w = 0; w < gate_arity(kind); ++w) {
            const std::size_t pick = rng.integer(pool.size());
            wires.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<long>(pick));
        }
        std::vector<double> params;
        for (int p = 0; p < gate_param_count(kind); ++p)
            params.push_back(rng.uniform(0.0, 2.0 * kPi));
        c.add(make_gate(kind, std::move(wires), std::move(params)));
    }
    return c;
}

Circuit werner_preparation_circuit(const WernerParams& p) {
    const double alpha = 2.0 * std::asin(std::sqrt(p.x));
    const double theta = std::acos(-p.w);
    Circuit c(2);
    c.add(make_gate(GateKind::U3, {0}, {alpha, 0.0, 0.0}));
    c.add(make_gate(GateKind::U3, {1}, {theta, 0.0, 0.0}));
    c.add(make_gate(GateKind::CX, {1, 0}));
    c.add(make_gate(GateKind::CZ, {1, 0}));
    c.add(make_gate(GateKind::RZ, {0}, {kPi}));
    c.add(make_gate(GateKind::RZ, {1}, {kPi}));
    return c;
}

std::string circuit_to_json_lines(const Circuit& c) {
    std::ostringstream out;
    out << nlohmann::json{{"num_qubits", c.num_qubits}}.dump() << '\n';
    for (const Gate& g : c.gates) {
        nlohmann::json j{{"kind", gate_name(g.kind)}, {"params", g.params}, {"wires", g.wires}};
        if (g.kind == GateKind::Controlled) j["base"] = gate_name(g.base);
        out << j.dump() << '\n';
    }
    return out.str();
}

Circuit circuit_from_json_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Circuit c;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw MalformedDataset(std::string("circuit_from_json_lines: ") + e.what());
        }
        if (!have_header) {
            if (!j.contains("num_qubits"))
                throw MalformedDataset("circuit_from_json_lines: first line must carry num_qubits");
            c.num_qubits = j["num_qubits"].get<int>();
            have_header = true;
            continue;
        }
        const std::string name = j.at("kind").get<std::string>();
        if (name == "barrier" || name == "measure") continue;  // unitary no-ops
        const GateKind kind = gate_kind_from_name(name);
        GateKind base = GateKind::I;
        if (kind == GateKind::Controlled) base = gate_kind_from_name(j.at("base").get<std::string>());
        c.add(make_gate(kind, j.at("wires").get<std::vector<int>>(),
                        j.value("params", std::vector<double>{}), base));
    }
    if (!have_header) throw MalformedDataset("circuit_from_json_lines: empty input");
    return c;
}

}  // namespace ccrlab

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

#ifndef CCRLAB_CIRCUITS_HPP
#define CCRLAB_CIRCUITS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccrlab/states.hpp"

namespace ccrlab {

enum class GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    RX,
    RY,
    RZ,
    U1,
    U2,
    U3,
    CX,
    CZ,
    Swap,
    Toffoli,
    /// Controlled version of any single-qubit kind (held in Gate::base);
    /// wires = [control, target].
    Controlled,
};

/// Wires of controlled gates list the control(s) first:
/// CX/CZ/Controlled = [control, target], Toffoli = [control, control, target].
///
/// gate_matrix lays the gate's own wire list out little-endian: wires[0] is
/// the least significant bit of the local basis index.
struct Gate {
    GateKind kind = GateKind::I;
    std::vector<double> params;
    std::vector<int> wires;
    /// Wrapped single-qubit kind; meaningful only when kind == Controlled.
    GateKind base = GateKind::I;
};

/// Wire count for a kind (1, 2, or 3).
int gate_arity(GateKind kind);

/// Angle parameter count for a kind (0-3).
int gate_param_count(GateKind kind);

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

/// Validated gate constructor; throws ConfigError on arity/param mismatch,
/// repeated wires, or a non-single-qubit base for Controlled.
Gate make_gate(GateKind kind, std::vector<int> wires, std::vector<double> params = {},
               GateKind base = GateKind::I);

struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(int n) : num_qubits(n) {}

    /// Validates wire indices against num_qubits before appending.
    void add(const Gate& g);
};

/// Matrix of a gate in its own wire space (dimension 2^arity), with
/// wires[0] as the least significant local bit. U3(theta, lambda, phi) =
/// [[cos t/2, -e^{i lambda} sin t/2], [e^{i phi} sin t/2, e^{i(lambda+phi)}
/// cos t/2]]; U2(lambda, phi) = U3(pi/2, lambda, phi); U1(lambda) =
/// diag(1, e^{i lambda}).
ComplexMatrix gate_matrix(const Gate& g);

/// The gate's unitary embedded into the full 2^num_qubits space.
ComplexMatrix embed_gate(const Gate& g, int num_qubits);

/// Sequential application of the circuit's gates to a state vector.
/// Throws DimensionMismatch if the input size differs from the circuit's.
StateVector apply(const Circuit& c, const StateVector& input);

/// Conjugation of a density matrix by the circuit unitary.
DensityMatrix apply_density(const Circuit& c, const DensityMatrix& input);

/// Ordered product of the embedded gate matrices (last gate leftmost).
ComplexMatrix circuit_unitary(const Circuit& c);

/// The gate kinds random_circuit samples from for a given qubit count:
/// every concrete kind whose arity fits (Toffoli needs >= 3 qubits).
/// Controlled is a constructor wrapper, not a catalog entry, and
/// barrier/measurement furniture is not modeled as gates at all.
std::vector<GateKind> random_gate_catalog(int num_qubits);

/// num_gates gates with kinds drawn uniformly from the catalog, wires drawn
/// uniformly without replacement, and angles uniform in [0, 2pi).
/// Deterministic per seed.
Circuit random_circuit(int num_qubits, int num_gates, std::uint64_t rng_seed);

/// Preparation circuit for the two-qubit purification of the one-qubit
/// (w, x) family: U3(alpha,0,0) on qubit 0, U3(theta,0,0) on qubit 1,
/// CX(1 -> 0), CZ(1 -> 0), with alpha = 2 arcsin(sqrt(x)) and
/// theta = arccos(-w), then RZ(pi) on both wires. The trailing RZ pair
/// applies -(Z x Z), which fixes the relative phases so the output matches
/// werner_purification amplitude-for-amplitude; without it the state
/// differs by that diagonal phase, which no measure detects but
/// amplitude-level checks do.
Circuit werner_preparation_circuit(const WernerParams& p);

/// One JSON object per line: {"kind": "U3", "params": [...], "wires": [...]}
/// (plus "base" for Controlled). Lines with kind "barrier" or "measure" are
/// accepted on input and dropped: they are no-ops for unitary evolution.
std::string circuit_to_json_lines(const Circuit& c);
Circuit circuit_from_json_lines(const std::string& text);

}  // namespace ccrlab

#endif

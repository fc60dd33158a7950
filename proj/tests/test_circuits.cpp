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

#include <cmath>
#include <numbers>

#include <doctest.h>

#include "ccrlab/circuits.hpp"
#include "ccrlab/linalg.hpp"

using namespace ccrlab;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector basis_state(int num_qubits, long index) {
    ComplexVector v = ComplexVector::Zero(1L << num_qubits);
    v(index) = 1.0;
    return StateVector(v);
}

bool is_unitary(const ComplexMatrix& u, double tol = 1e-12) {
    return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()))
               .cwiseAbs()
               .maxCoeff() < tol;
}

}  // namespace

TEST_SUITE("circuits") {

TEST_CASE("fixed single-qubit gate matrices match their textbook forms") {
    const double s = 1.0 / std::numbers::sqrt2;
    const ComplexMatrix h = gate_matrix(make_gate(GateKind::H, {0}));
    CHECK(std::abs(h(0, 0) - Complex(s, 0)) < 1e-15);
    CHECK(std::abs(h(1, 1) - Complex(-s, 0)) < 1e-15);

    const ComplexMatrix y = gate_matrix(make_gate(GateKind::Y, {0}));
    CHECK(std::abs(y(0, 1) - Complex(0, -1)) < 1e-15);
    CHECK(std::abs(y(1, 0) - Complex(0, 1)) < 1e-15);

    const ComplexMatrix t = gate_matrix(make_gate(GateKind::T, {0}));
    CHECK(std::abs(t(1, 1) - std::exp(Complex(0, kPi / 4.0))) < 1e-15);

    const ComplexMatrix sdg = gate_matrix(make_gate(GateKind::Sdg, {0}));
    const ComplexMatrix sg = gate_matrix(make_gate(GateKind::S, {0}));
    CHECK((sg * sdg - ComplexMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("parameterized gates follow their defining formulas") {
    const double theta = 0.7, lambda = 0.3, phi = 1.1;
    const ComplexMatrix u3 = gate_matrix(make_gate(GateKind::U3, {0}, {theta, lambda, phi}));
    CHECK(std::abs(u3(0, 0) - Complex(std::cos(theta / 2.0), 0)) < 1e-15);
    CHECK(std::abs(u3(0, 1) + std::exp(Complex(0, lambda)) * std::sin(theta / 2.0)) < 1e-15);
    CHECK(std::abs(u3(1, 0) - std::exp(Complex(0, phi)) * std::sin(theta / 2.0)) < 1e-15);
    CHECK(std::abs(u3(1, 1) - std::exp(Complex(0, lambda + phi)) * std::cos(theta / 2.0)) <
          1e-15);

    // U2(lambda, phi) = U3(pi/2, lambda, phi), normalization included
    const ComplexMatrix u2 = gate_matrix(make_gate(GateKind::U2, {0}, {lambda, phi}));
    const ComplexMatrix u3_half =
        gate_matrix(make_gate(GateKind::U3, {0}, {kPi / 2.0, lambda, phi}));
    CHECK((u2 - u3_half).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(std::abs(u2(0, 0)) - 1.0 / std::numbers::sqrt2) < 1e-15);

    const ComplexMatrix u1 = gate_matrix(make_gate(GateKind::U1, {0}, {lambda}));
    CHECK(std::abs(u1(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(u1(1, 1) - std::exp(Complex(0, lambda))) < 1e-15);

    const ComplexMatrix rz = gate_matrix(make_gate(GateKind::RZ, {0}, {theta}));
    CHECK(std::abs(rz(0, 0) - std::exp(Complex(0, -theta / 2.0))) < 1e-15);
    CHECK(std::abs(rz(1, 1) - std::exp(Complex(0, theta / 2.0))) < 1e-15);

    const ComplexMatrix rx = gate_matrix(make_gate(GateKind::RX, {0}, {theta}));
    CHECK(std::abs(rx(0, 1) - Complex(0, -std::sin(theta / 2.0))) < 1e-15);
    const ComplexMatrix ry = gate_matrix(make_gate(GateKind::RY, {0}, {theta}));
    CHECK(std::abs(ry(0, 1) + std::sin(theta / 2.0)) < 1e-15);
}

TEST_CASE("every catalog gate is unitary") {
    for (GateKind kind : random_gate_catalog(3)) {
        std::vector<int> wires;
        for (int w = 0; w < gate_arity(kind); ++w) wires.push_back(w);
        std::vector<double> params;
        for (int p = 0; p < gate_param_count(kind); ++p)
            params.push_back(0.37 * (p + 1));
        CHECK(is_unitary(gate_matrix(make_gate(kind, wires, params))));
    }
    CHECK(is_unitary(gate_matrix(make_gate(GateKind::Controlled, {0, 1}, {0.3}, GateKind::RY))));
}

TEST_CASE("two-qubit gate matrices use wires[0] as local least significant bit") {
    // wires {control, target}: basis order |target control> locally
    const ComplexMatrix cx = gate_matrix(make_gate(GateKind::CX, {0, 1}));
    ComplexMatrix expect_cx(4, 4);
    expect_cx << 1, 0, 0, 0,
                 0, 0, 0, 1,
                 0, 0, 1, 0,
                 0, 1, 0, 0;
    CHECK((cx - expect_cx).cwiseAbs().maxCoeff() == 0.0);

    const ComplexMatrix cz = gate_matrix(make_gate(GateKind::CZ, {0, 1}));
    ComplexMatrix expect_cz = ComplexMatrix::Identity(4, 4);
    expect_cz(3, 3) = -1.0;
    CHECK((cz - expect_cz).cwiseAbs().maxCoeff() == 0.0);

    const ComplexMatrix swap = gate_matrix(make_gate(GateKind::Swap, {0, 1}));
    CHECK(std::abs(swap(1, 2) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(swap(2, 1) - Complex(1, 0)) < 1e-15);

    // Toffoli: both controls (local bits 0, 1) set flips the target (bit 2)
    const ComplexMatrix tof = gate_matrix(make_gate(GateKind::Toffoli, {0, 1, 2}));
    CHECK(std::abs(tof(3, 7) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(tof(7, 3) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(tof(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(tof(3, 3)) < 1e-15);

    // Controlled(U) applies U on the target block where the control is 1
    const ComplexMatrix cs =
        gate_matrix(make_gate(GateKind::Controlled, {0, 1}, {}, GateKind::S));
    CHECK(std::abs(cs(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(cs(2, 2) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(cs(1, 1) - Complex(1, 0)) < 1e-15);  // control 1, target 0
    CHECK(std::abs(cs(3, 3) - Complex(0, 1)) < 1e-15);  // control 1, target 1 -> i
}

TEST_CASE("make_gate validates arity, parameters, and wires") {
    CHECK_THROWS_AS(make_gate(GateKind::H, {0, 1}), ConfigError);
    CHECK_THROWS_AS(make_gate(GateKind::CX, {0}), ConfigError);
    CHECK_THROWS_AS(make_gate(GateKind::RX, {0}), ConfigError);          // missing angle
    CHECK_THROWS_AS(make_gate(GateKind::H, {0}, {1.0}), ConfigError);    // extra angle
    CHECK_THROWS_AS(make_gate(GateKind::CX, {1, 1}), ConfigError);       // repeated wire
    CHECK_THROWS_AS(make_gate(GateKind::H, {-1}), ConfigError);
    CHECK_THROWS_AS(make_gate(GateKind::Controlled, {0, 1}, {}, GateKind::CX), ConfigError);
}

TEST_CASE("Circuit::add rejects wires beyond the register") {
    Circuit c(2);
    CHECK_THROWS_AS(c.add(make_gate(GateKind::H, {2})), ConfigError);
    CHECK_NOTHROW(c.add(make_gate(GateKind::H, {1})));
}

TEST_CASE("apply moves basis states the way little-endian wiring demands") {
    Circuit x_on_0(2);
    x_on_0.add(make_gate(GateKind::X, {0}));
    CHECK(std::abs(apply(x_on_0, basis_state(2, 0)).amplitudes()(1) - Complex(1, 0)) < 1e-15);

    Circuit x_on_1(2);
    x_on_1.add(make_gate(GateKind::X, {1}));
    CHECK(std::abs(apply(x_on_1, basis_state(2, 0)).amplitudes()(2) - Complex(1, 0)) < 1e-15);

    // CX with control qubit 0: |01> (qubit 0 set) -> |11>
    Circuit cx(2);
    cx.add(make_gate(GateKind::CX, {0, 1}));
    CHECK(std::abs(apply(cx, basis_state(2, 1)).amplitudes()(3) - Complex(1, 0)) < 1e-15);
    // control clear: |10> stays |10>
    CHECK(std::abs(apply(cx, basis_state(2, 2)).amplitudes()(2) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("apply and circuit_unitary agree on a random circuit") {
    const Circuit c = random_circuit(3, 12, 905);
    const StateVector in = basis_state(3, 5);
    const ComplexVector via_apply = apply(c, in).amplitudes();
    const ComplexVector via_unitary = circuit_unitary(c) * in.amplitudes();
    CHECK((via_apply - via_unitary).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(is_unitary(circuit_unitary(c)));
}

TEST_CASE("apply_density conjugates by the circuit unitary") {
    const Circuit c = random_circuit(2, 6, 31);
    const ComplexMatrix u = circuit_unitary(c);
    const DensityMatrix rho(ComplexMatrix::Identity(4, 4) / 4.0);
    const DensityMatrix out = apply_density(c, rho);
    const ComplexMatrix expect = u * rho.matrix() * u.adjoint();
    CHECK((out.matrix() - expect).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(apply_density(c, DensityMatrix(ComplexMatrix::Identity(2, 2) / 2.0)),
                    DimensionMismatch);
}

TEST_CASE("embed_gate places a local gate on the right wire") {
    const ComplexMatrix full = embed_gate(make_gate(GateKind::X, {1}), 2);
    // X on qubit 1: index 0 <-> 2, 1 <-> 3
    CHECK(std::abs(full(2, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(full(3, 1) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(full(0, 0)) < 1e-15);
    CHECK_THROWS_AS(embed_gate(make_gate(GateKind::X, {3}), 2), DimensionMismatch);
}

TEST_CASE("embed_gate equals the kron construction for a wire-ordered pair") {
    // gate on wires {0, 1} with wires[0] local LSB == kron(I_rest absent) layout
    const Gate g = make_gate(GateKind::CZ, {0, 1});
    const ComplexMatrix embedded = embed_gate(g, 2);
    CHECK((embedded - gate_matrix(g)).cwiseAbs().maxCoeff() == 0.0);

    // same gate on a 3-qubit register acts as identity on qubit 2
    const ComplexMatrix wide = embed_gate(g, 3);
    const ComplexMatrix expect = kron(ComplexMatrix::Identity(2, 2), gate_matrix(g));
    CHECK((wide - expect).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random_circuit is seeded, well formed, and respects the register") {
    const Circuit a = random_circuit(3, 20, 1234);
    const Circuit b = random_circuit(3, 20, 1234);
    const Circuit c = random_circuit(3, 20, 4321);
    CHECK(circuit_to_json_lines(a) == circuit_to_json_lines(b));
    CHECK(circuit_to_json_lines(a) != circuit_to_json_lines(c));
    CHECK(a.gates.size() == 20);
    for (const Gate& g : a.gates) {
        CHECK(static_cast<int>(g.wires.size()) == gate_arity(g.kind));
        for (int w : g.wires) CHECK(w < 3);
    }
}

TEST_CASE("random_circuit catalog shrinks with the register") {
    for (GateKind kind : random_gate_catalog(1)) CHECK(gate_arity(kind) == 1);
    bool has_toffoli = false;
    for (GateKind kind : random_gate_catalog(2)) has_toffoli |= kind == GateKind::Toffoli;
    CHECK(!has_toffoli);
    has_toffoli = false;
    for (GateKind kind : random_gate_catalog(3)) has_toffoli |= kind == GateKind::Toffoli;
    CHECK(has_toffoli);
}

TEST_CASE("werner_preparation_circuit reproduces the purification amplitudes") {
    for (const auto& [w, x] : std::initializer_list<std::pair<double, double>>{
             {0.5, 0.5}, {0.8, 0.3}, {0.2, 0.9}, {1.0, 0.5}, {0.0, 0.5}, {0.7, 0.0}}) {
        const Circuit prep = werner_preparation_circuit(WernerParams(w, x));
        const ComplexVector got = apply(prep, basis_state(2, 0)).amplitudes();

        // oracle: amplitudes written out directly, qubit 0 the quanton
        const double c = std::sqrt((1.0 - w) / 2.0);
        const double s = std::sqrt((1.0 + w) / 2.0);
        ComplexVector expect(4);
        expect << -std::sqrt(1.0 - x) * c, std::sqrt(x) * c, std::sqrt(x) * s,
            std::sqrt(1.0 - x) * s;
        CHECK((got - expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("circuit json lines round trip preserves the unitary") {
    const Circuit c = random_circuit(3, 15, 777);
    const Circuit back = circuit_from_json_lines(circuit_to_json_lines(c));
    CHECK(back.num_qubits == c.num_qubits);
    CHECK((circuit_unitary(back) - circuit_unitary(c)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("circuit json loader drops barrier/measure furniture and validates") {
    const std::string text =
        "{\"num_qubits\": 2}\n"
        "{\"kind\": \"H\", \"wires\": [0], \"params\": []}\n"
        "{\"kind\": \"barrier\", \"wires\": [0, 1], \"params\": []}\n"
        "{\"kind\": \"measure\", \"wires\": [0], \"params\": []}\n"
        "{\"kind\": \"CX\", \"wires\": [0, 1], \"params\": []}\n";
    const Circuit c = circuit_from_json_lines(text);
    CHECK(c.gates.size() == 2);
    CHECK(c.gates[0].kind == GateKind::H);
    CHECK(c.gates[1].kind == GateKind::CX);

    CHECK_THROWS_AS(circuit_from_json_lines("{\"kind\": \"H\", \"wires\": [0]}"),
                    MalformedDataset);
    CHECK_THROWS_AS(circuit_from_json_lines("not json"), MalformedDataset);
    CHECK_THROWS_AS(circuit_from_json_lines(""), MalformedDataset);
}

TEST_CASE("controlled gates serialize with their base kind") {
    Circuit c(2);
    c.add(make_gate(GateKind::Controlled, {0, 1}, {0.4}, GateKind::RX));
    const Circuit back = circuit_from_json_lines(circuit_to_json_lines(c));
    REQUIRE(back.gates.size() == 1);
    CHECK(back.gates[0].base == GateKind::RX);
    CHECK((circuit_unitary(back) - circuit_unitary(c)).cwiseAbs().maxCoeff() == 0.0);
}

}  // TEST_SUITE("circuits")

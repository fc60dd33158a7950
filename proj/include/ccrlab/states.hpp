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

#ifndef CCRLAB_STATES_HPP
#define CCRLAB_STATES_HPP

#include <cstdint>
#include <string>

#include "ccrlab/linalg.hpp"

namespace ccrlab {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

/// A validated quantum state: Hermitian (1e-10), unit trace (1e-10),
/// eigenvalues >= -1e-9. Dimension must be a power of two.
class DensityMatrix {
  public:
    /// Validates and wraps `m`. Throws NotHermitian, TraceNotOne, NotPSD, or
    /// DimensionMismatch (non-power-of-two dimension), naming the violated
    /// property.
    explicit DensityMatrix(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return mat_; }
    int num_qubits() const { return num_qubits_; }
    long dim() const { return mat_.rows(); }

  private:
    ComplexMatrix mat_;
    int num_qubits_;
};

/// Normalized pure state of num_qubits qubits, amplitudes indexed
/// little-endian (qubit 0 = least significant bit).
class StateVector {
  public:
    /// Throws DimensionMismatch for a non-power-of-two length and Error when
    /// the squared norm differs from 1 by more than 1e-12.
    explicit StateVector(const ComplexVector& amplitudes);

    const ComplexVector& amplitudes() const { return amps_; }
    int num_qubits() const { return num_qubits_; }
    long dim() const { return amps_.size(); }

    /// |psi><psi| as a validated density matrix.
    DensityMatrix to_density() const;

  private:
    ComplexVector amps_;
    int num_qubits_;
};

/// Parameters of the one-qubit family w|psi><psi| + (1-w)/2 I with
/// |psi> = sqrt(x)|0> + sqrt(1-x)|1>. Both parameters must lie in [0,1].
struct WernerParams {
    double w;
    double x;

    WernerParams(double w_, double x_);
};

/// Validates a raw matrix as a density matrix (see DensityMatrix ctor).
DensityMatrix validate(const ComplexMatrix& m);

/// The one-qubit mixed state for the given parameters, built entrywise:
/// rho_00 = w x + (1-w)/2, rho_01 = rho_10 = w sqrt(x(1-x)).
DensityMatrix werner_state(const WernerParams& p);

/// Two-qubit purification of werner_state(p), with the quanton on qubit 0
/// and the purifying qubit on qubit 1. Amplitudes (index = a + 2b for
/// |a>_0 |b>_1):
///   [ -sqrt(1-x) c,  sqrt(x) c,  sqrt(x) s,  sqrt(1-x) s ]
/// with c = sqrt((1-w)/2), s = sqrt((1+w)/2). Tracing out qubit 1
/// reproduces werner_state(p).
StateVector werner_purification(const WernerParams& p);

/// Hilbert-Schmidt-like random mixed state: G^dagger G normalized by its
/// trace, with G entries independent standard complex Gaussians.
/// Deterministic per seed.
DensityMatrix random_density_matrix(int num_qubits, std::uint64_t rng_seed);

/// Haar-like random pure state (normalized complex Gaussian vector).
/// Deterministic per seed. Test-harness companion to random_density_matrix.
StateVector random_state_vector(int num_qubits, std::uint64_t rng_seed);

/// JSON import/export, schema {"num_qubits": n, "re": [[...]], "im": [[...]]}
/// with row-major entries.
std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);
void save_density(const DensityMatrix& rho, const std::string& path);
DensityMatrix load_density(const std::string& path);

}  // namespace ccrlab

#endif

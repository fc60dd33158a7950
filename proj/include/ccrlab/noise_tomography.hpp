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

#ifndef CCRLAB_NOISE_TOMOGRAPHY_HPP_
#define CCRLAB_NOISE_TOMOGRAPHY_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ccrlab/circuits.hpp"
#include "ccrlab/states.hpp"

namespace ccrlab {

// Shot-based measurement simulation and Pauli-basis state tomography.
//
// String conventions match bitstrings elsewhere in the library: in a basis
// setting such as "XZ" and in an outcome bitstring such as "10", the
// rightmost character belongs to qubit 0.

/// Classical readout flip probabilities for one qubit: eps01 is the chance
/// a true 0 is read as 1, eps10 the chance a true 1 is read as 0.
struct ReadoutError {
    double eps01 = 0.0;
    double eps10 = 0.0;
};

/// Noise model knobs for a simulated run.
///
/// depolarizing_p acts once on the fully prepared state (state-preparation
/// imperfection); gate_depolarizing_p acts on each gate's wires right after
/// the gate; readout flips act on sampled bitstrings. An empty readout list
/// means ideal readout, a single entry broadcasts to every qubit, and a
/// longer list is indexed per qubit.
struct NoiseParams {
    double depolarizing_p = 0.0;
    double gate_depolarizing_p = 0.0;
    std::vector<ReadoutError> readout;

    /// All channels disabled; sampled runs then differ from exact ones by
    /// shot noise only.
    static NoiseParams off();

    /// Device-like preset: depolarizing_p = 0.02, gate_depolarizing_p =
    /// 0.002, readout (0.03, 0.03) on every qubit.
    static NoiseParams preset_default();

    /// Readout error for one qubit under the broadcast rule above. Throws
    /// ConfigError when the list is shorter than qubit + 1 (and not a
    /// broadcastable size).
    ReadoutError readout_for(int qubit) const;
};

/// Parses {"depolarizing_p": .., "gate_depolarizing_p": ..,
/// "readout": [[eps01, eps10], ...]} ("readout" may also be a single
/// [eps01, eps10] pair). Missing fields default to zero / empty. Throws
/// ConfigError on out-of-range probabilities, MalformedDataset on bad JSON.
NoiseParams noise_from_json(const std::string& text);
std::string noise_to_json(const NoiseParams& noise);

/// Depolarizing channel (1 - p) rho + p I/d. Throws ConfigError unless
/// p is in [0, 1].
DensityMatrix depolarize(const DensityMatrix& rho, double p);

/// Depolarizing channel acting only on the given wires: with probability p
/// those qubits are replaced by the maximally mixed state, leaving their
/// correlations with the rest erased.
DensityMatrix depolarize_on(const DensityMatrix& rho, const std::vector<int>& wires, double p);

/// Evolves |0...0><0...0| through the circuit with the noise model applied:
/// a gate_depolarizing_p kick on each gate's wires after the gate, then a
/// single global depolarizing_p on the prepared state. Readout error does
/// not act here (it belongs to measurement).
DensityMatrix run_with_noise(const Circuit& c, const NoiseParams& noise);

/// All 3^n Pauli basis settings over {X, Y, Z}, in lexicographic order
/// ("XX", "XY", "XZ", "YX", ... for two qubits).
std::vector<std::string> all_settings(int num_qubits);

/// Outcome distribution for measuring rho in the given setting: the state
/// is rotated per qubit (H for X, H S-dagger for Y, identity for Z) and the
/// diagonal is read out. Index bit q of the result is qubit q's outcome.
std::vector<double> setting_probabilities(const DensityMatrix& rho, const std::string& setting);

/// Shot counts for one basis setting.
struct SettingCounts {
    std::string setting;
    std::map<std::string, std::int64_t> counts;
    std::int64_t shots = 0;
};

/// Samples `shots` bitstrings from setting_probabilities(rho, setting),
/// then applies per-qubit readout flips from `noise`. The depolarizing
/// fields of `noise` are ignored here — apply them during preparation.
/// Deterministic for a fixed seed.
SettingCounts sample_measurement(const DensityMatrix& rho, const std::string& setting,
                                 std::int64_t shots, const NoiseParams& noise,
                                 std::uint64_t rng_seed);

/// Normalized outcome probabilities (index bit q = qubit q's outcome).
/// Throws MalformedDataset on malformed bitstring keys or counts that do
/// not sum to `shots`.
std::vector<double> probabilities_from_counts(const SettingCounts& counts);

/// Expectation value of a Pauli string ("IZX"; identities allowed) under
/// outcome probabilities taken in `setting`. Every non-identity character
/// must match the setting at that position (throws ConfigError otherwise) —
/// identity positions are marginalized out.
double pauli_expectation(const std::vector<double>& probabilities, const std::string& setting,
                         const std::string& pauli);

/// Column-stochastic confusion matrix of a readout error:
/// [[1-eps01, eps10], [eps01, 1-eps10]] mapping true to observed.
Eigen::Matrix2d confusion_matrix(const ReadoutError& e);

/// Applies the inverse confusion matrix of each qubit to an outcome
/// probability vector, undoing independent readout flips in expectation.
/// The result may contain small negative entries; expectation values taken
/// from it are unbiased. Throws SingularConfusionMatrix when a matrix is
/// not invertible, DimensionMismatch when sizes disagree.
std::vector<double> readout_mitigation(const std::vector<double>& probabilities,
                                       const std::vector<Eigen::Matrix2d>& confusion);

/// Linear-inversion estimate (1/2^n) sum_P <P> P over all 4^n Pauli
/// strings, with identity-padded expectations read from the setting that
/// replaces I by Z. Keys of the map are the 3^n settings; values are their
/// outcome probability vectors. Throws IncompleteSettings if any setting is
/// missing or malformed.
ComplexMatrix linear_inversion(const std::map<std::string, std::vector<double>>& probs_by_setting);

/// Projects a unit-trace Hermitian estimate onto the physical set: negative
/// eigenvalues are zeroed from the smallest up and the deficit is spread
/// over the remaining ones (standard clip-and-redistribute). If
/// negativity_clipped is non-null it receives the summed magnitude of the
/// negative eigenvalues.
DensityMatrix project_to_physical(const ComplexMatrix& raw, double* negativity_clipped = nullptr);

/// One complete tomography experiment: the per-setting counts plus both
/// estimates derived from them.
struct TomographyRecord {
    std::vector<SettingCounts> settings;
    std::int64_t shots_per_setting = 0;
    ComplexMatrix raw_estimate;
    DensityMatrix physical_estimate;
    double negativity_clipped = 0.0;
};

/// Completes a tomography experiment from counts covering all 3^n settings
/// with equal shot budgets. Throws IncompleteSettings on missing/duplicate
/// settings or unequal shots, MalformedDataset on corrupt counts.
TomographyRecord reconstruct(std::vector<SettingCounts> records);

/// Full driver: samples every setting (seed stream derived per setting
/// index) and reconstructs. Only the readout part of `noise` acts, matching
/// sample_measurement.
TomographyRecord tomograph(const DensityMatrix& rho, std::int64_t shots,
                           const NoiseParams& noise, std::uint64_t rng_seed);

/// One counts record per line: {"setting": "XZ", "counts": {"01": 17, ...},
/// "shots": 8192}. Loaders accept blank lines.
std::string counts_to_json(const SettingCounts& counts);
SettingCounts counts_from_json(const std::string& text);
void save_counts(const std::vector<SettingCounts>& records, const std::string& path);
std::vector<SettingCounts> load_counts(const std::string& path);

}  // namespace ccrlab

#endif  // CCRLAB_NOISE_TOMOGRAPHY_HPP_

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

#include "ccrlab/noise_tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ccrlab/linalg.hpp"
#include "ccrlab/rng.hpp"

namespace ccrlab {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(what) + " must be in [0, 1]");
}

long wire_mask(const std::vector<int>& wires) {
    long mask = 0;
    for (int w : wires) mask |= 1L << w;
    return mask;
}

long scatter_local(long local, const std::vector<int>& wires) {
    long full = 0;
    for (std::size_t p = 0; p < wires.size(); ++p)
        full |= ((local >> p) & 1L) << wires[p];
    return full;
}

ComplexMatrix depolarize_mat(const ComplexMatrix& m, double p) {
    const double d = static_cast<double>(m.rows());
    return (1.0 - p) * m +
           (p / d) * ComplexMatrix::Identity(m.rows(), m.cols());
}

// With probability p the wires are replaced by the maximally mixed state:
// (1-p) rho + p * (Tr_wires rho) tensor I/2^k, laid back on the original
// index positions.
ComplexMatrix depolarize_on_mat(const ComplexMatrix& m, const std::vector<int>& wires,
                                double p) {
    if (p == 0.0 || wires.empty()) return m;
    const long dim = m.rows();
    const long k = 1L << wires.size();
    const long mask = wire_mask(wires);
    ComplexMatrix mixed = ComplexMatrix::Zero(dim, dim);
    for (long rest_r = 0; rest_r < dim; ++rest_r) {
        if (rest_r & mask) continue;
        for (long rest_c = 0; rest_c < dim; ++rest_c) {
            if (rest_c & mask) continue;
            Complex t(0.0, 0.0);
            for (long l = 0; l < k; ++l) {
                const long s = scatter_local(l, wires);
                t += m(rest_r | s, rest_c | s);
            }
            t /= static_cast<double>(k);
            for (long l = 0; l < k; ++l) {
                const long s = scatter_local(l, wires);
                mixed(rest_r | s, rest_c | s) = t;
            }
        }
    }
    return (1.0 - p) * m + p * mixed;
}

int qubits_from_label_string(const std::string& s, const char* what) {
    if (s.empty()) throw ConfigError(std::string(what) + ": empty setting");
    return static_cast<int>(s.size());
}

// Character at string position i addresses qubit n-1-i (rightmost = qubit 0).
char label_for_qubit(const std::string& s, int qubit) {
    return s[s.size() - 1 - static_cast<std::size_t>(qubit)];
}

std::string bitstring_of(long outcome, int num_qubits) {
    std::string s(static_cast<std::size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; ++q)
        if ((outcome >> q) & 1L) s[s.size() - 1 - static_cast<std::size_t>(q)] = '1';
    return s;
}

long outcome_of(const std::string& bits, const char* what) {
    long outcome = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c != '0' && c != '1')
            throw MalformedDataset(std::string(what) + ": bitstring character '" + c + "'");
        if (c == '1') outcome |= 1L << (bits.size() - 1 - i);
    }
    return outcome;
}

const ComplexMatrix& pauli_2x2(int which) {
    static const std::array<ComplexMatrix, 4> paulis = [] {
        std::array<ComplexMatrix, 4> p;
        const Complex i(0.0, 1.0);
        p[0] = ComplexMatrix::Identity(2, 2);
        p[1] = ComplexMatrix(2, 2);
        p[1] << 0, 1, 1, 0;
        p[2] = ComplexMatrix(2, 2);
        p[2] << 0, -i, i, 0;
        p[3] = ComplexMatrix(2, 2);
        p[3] << 1, 0, 0, -1;
        return p;
    }();
    return paulis[static_cast<std::size_t>(which)];
}

}  // namespace

NoiseParams NoiseParams::off() { return NoiseParams{}; }

NoiseParams NoiseParams::preset_default() {
    NoiseParams n;
    n.depolarizing_p = 0.02;
    n.gate_depolarizing_p = 0.002;
    n.readout = {ReadoutError{0.03, 0.03}};
    return n;
}

ReadoutError NoiseParams::readout_for(int qubit) const {
    if (readout.empty()) return ReadoutError{};
    if (readout.size() == 1) return readout.front();
    if (qubit < 0 || static_cast<std::size_t>(qubit) >= readout.size())
        throw ConfigError("NoiseParams: no readout entry for qubit " + std::to_string(qubit));
    return readout[static_cast<std::size_t>(qubit)];
}

NoiseParams noise_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDataset(std::string("noise_from_json: ") + e.what());
    }
    NoiseParams n;
    n.depolarizing_p = j.value("depolarizing_p", 0.0);
    n.gate_depolarizing_p = j.value("gate_depolarizing_p", 0.0);
    check_probability(n.depolarizing_p, "depolarizing_p");
    check_probability(n.gate_depolarizing_p, "gate_depolarizing_p");
    if (j.contains("readout")) {
        nlohmann::json r = j["readout"];
        if (r.is_array() && r.size() == 2 && r[0].is_number())
            r = nlohmann::json::array({r});  // single pair shorthand
        for (const auto& pair : r) {
            if (!pair.is_array() || pair.size() != 2)
                throw MalformedDataset("noise_from_json: readout entries are [eps01, eps10]");
            ReadoutError e{pair[0].get<double>(), pair[1].get<double>()};
            check_probability(e.eps01, "readout eps01");
            check_probability(e.eps10, "readout eps10");
            n.readout.push_back(e);
        }
    }
    return n;
}

std::string noise_to_json(const NoiseParams& noise) {
    nlohmann::json r = nlohmann::json::array();
    for (const ReadoutError& e : noise.readout) r.push_back({e.eps01, e.eps10});
    return nlohmann::json{{"depolarizing_p", noise.depolarizing_p},
                          {"gate_depolarizing_p", noise.gate_depolarizing_p},
                          {"readout", r}}
        .dump();
}

DensityMatrix depolarize(const DensityMatrix& rho, double p) {
    check_probability(p, "depolarize: p");
    return DensityMatrix(depolarize_mat(rho.matrix(), p));
}

DensityMatrix depolarize_on(const DensityMatrix& rho, const std::vector<int>& wires, double p) {
    check_probability(p, "depolarize_on: p");
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if (wires[i] < 0 || wires[i] >= rho.num_qubits())
            throw DimensionMismatch("depolarize_on: wire out of range");
        for (std::size_t j = i + 1; j < wires.size(); ++j)
            if (wires[i] == wires[j]) throw ConfigError("depolarize_on: repeated wire index");
    }
    ComplexMatrix m = depolarize_on_mat(rho.matrix(), wires, p);
    m = (m + m.adjoint().eval()) / 2.0;
    return DensityMatrix(m);
}

DensityMatrix run_with_noise(const Circuit& c, const NoiseParams& noise) {
    check_probability(noise.depolarizing_p, "depolarizing_p");
    check_probability(noise.gate_depolarizing_p, "gate_depolarizing_p");
    const long dim = 1L << c.num_qubits;
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(0, 0) = 1.0;
    for (const Gate& g : c.gates) {
        const ComplexMatrix u = embed_gate(g, c.num_qubits);
        m = u * m * u.adjoint();
        if (noise.gate_depolarizing_p > 0.0)
            m = depolarize_on_mat(m, g.wires, noise.gate_depolarizing_p);
    }
    if (noise.depolarizing_p > 0.0) m = depolarize_mat(m, noise.depolarizing_p);
    m = (m + m.adjoint().eval()) / 2.0;
    return DensityMatrix(m);
}

std::vector<std::string> all_settings(int num_qubits) {
    if (num_qubits < 1) throw ConfigError("all_settings: num_qubits < 1");
    std::vector<std::string> out;
    std::string s(static_cast<std::size_t>(num_qubits), 'X');
    const std::string labels = "XYZ";
    long total = 1;
    for (int q = 0; q < num_qubits; ++q) total *= 3;
    for (long idx = 0; idx < total; ++idx) {
        long v = idx;
        for (int pos = num_qubits - 1; pos >= 0; --pos) {
            s[static_cast<std::size_t>(pos)] = labels[static_cast<std::size_t>(v % 3)];
            v /= 3;
        }
        out.push_back(s);
    }
    return out;
}

std::vector<double> setting_probabilities(const DensityMatrix& rho, const std::string& setting) {
    const int n = qubits_from_label_string(setting, "setting_probabilities");
    if (n != rho.num_qubits())
        throw DimensionMismatch("setting_probabilities: setting is " + std::to_string(n) +
                                " qubits, state is " + std::to_string(rho.num_qubits()));
    Circuit rot(n);
    for (int q = 0; q < n; ++q) {
        switch (label_for_qubit(setting, q)) {
            case 'X': rot.add(make_gate(GateKind::H, {q})); break;
            case 'Y':
                rot.add(make_gate(GateKind::Sdg, {q}));
                rot.add(make_gate(GateKind::H, {q}));
                break;
            case 'Z': break;
            default:
                throw ConfigError(std::string("setting_probabilities: label '") +
                                  label_for_qubit(setting, q) + "'");
        }
    }
    const ComplexMatrix u = circuit_unitary(rot);
    const ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    std::vector<double> probs(static_cast<std::size_t>(rho.dim()));
    double total = 0.0;
    for (long o = 0; o < rho.dim(); ++o) {
        probs[static_cast<std::size_t>(o)] = std::max(0.0, rotated(o, o).real());
        total += probs[static_cast<std::size_t>(o)];
    }
    for (double& p : probs) p /= total;
    return probs;
}

SettingCounts sample_measurement(const DensityMatrix& rho, const std::string& setting,
                                 std::int64_t shots, const NoiseParams& noise,
                                 std::uint64_t rng_seed) {
    if (shots < 1) throw ConfigError("sample_measurement: shots < 1");
    const int n = rho.num_qubits();
    const std::vector<double> probs = setting_probabilities(rho, setting);
    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());
    cdf.back() = 1.0;

    std::vector<ReadoutError> readout(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) readout[static_cast<std::size_t>(q)] = noise.readout_for(q);

    Rng rng(rng_seed);
    std::vector<std::int64_t> tally(probs.size(), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        long outcome = static_cast<long>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (outcome >= static_cast<long>(probs.size())) outcome = static_cast<long>(probs.size()) - 1;
        for (int q = 0; q < n; ++q) {
            const ReadoutError& e = readout[static_cast<std::size_t>(q)];
            const double v = rng.uniform();
            const bool bit = (outcome >> q) & 1L;
            if (!bit && v < e.eps01) outcome |= 1L << q;
            else if (bit && v < e.eps10) outcome &= ~(1L << q);
        }
        ++tally[static_cast<std::size_t>(outcome)];
    }

    SettingCounts out;
    out.setting = setting;
    out.shots = shots;
    for (std::size_t o = 0; o < tally.size(); ++o)
        if (tally[o] > 0) out.counts[bitstring_of(static_cast<long>(o), n)] = tally[o];
    return out;
}

std::vector<double> probabilities_from_counts(const SettingCounts& counts) {
    const int n = qubits_from_label_string(counts.setting, "probabilities_from_counts");
    if (counts.shots < 1) throw MalformedDataset("probabilities_from_counts: shots < 1");
    std::vector<double> probs(std::size_t{1} << n, 0.0);
    std::int64_t total = 0;
    for (const auto& [bits, c] : counts.counts) {
        if (static_cast<int>(bits.size()) != n)
            throw MalformedDataset("probabilities_from_counts: bitstring '" + bits +
                                   "' does not match setting width");
        if (c < 0) throw MalformedDataset("probabilities_from_counts: negative count");
        probs[static_cast<std::size_t>(outcome_of(bits, "probabilities_from_counts"))] +=
            static_cast<double>(c) / static_cast<double>(counts.shots);
        total += c;
    }
    if (total != counts.shots)
        throw MalformedDataset("probabilities_from_counts: counts sum to " +
                               std::to_string(total) + ", expected " +
                               std::to_string(counts.shots));
    return probs;
}

double pauli_expectation(const std::vector<double>& probabilities, const std::string& setting,
                         const std::string& pauli) {
    const int n = qubits_from_label_string(setting, "pauli_expectation");
    if (pauli.size() != setting.size())
        throw DimensionMismatch("pauli_expectation: pauli/setting length mismatch");
    if (probabilities.size() != (std::size_t{1} << n))
        throw DimensionMismatch("pauli_expectation: probability vector size");
    long mask = 0;
    for (int q = 0; q < n; ++q) {
        const char p = label_for_qubit(pauli, q);
        if (p == 'I') continue;
        if (p != 'X' && p != 'Y' && p != 'Z')
            throw ConfigError(std::string("pauli_expectation: label '") + p + "'");
        if (p != label_for_qubit(setting, q))
            throw ConfigError("pauli_expectation: pauli " + pauli + " not measurable in " +
                              setting);
        mask |= 1L << q;
    }
    double e = 0.0;
    for (std::size_t o = 0; o < probabilities.size(); ++o) {
        const int parity = std::popcount(static_cast<unsigned long>(static_cast<long>(o) & mask)) & 1;
        e += (parity ? -1.0 : 1.0) * probabilities[o];
    }
    return e;
}

Eigen::Matrix2d confusion_matrix(const ReadoutError& e) {
    Eigen::Matrix2d m;
    m << 1.0 - e.eps01, e.eps10, e.eps01, 1.0 - e.eps10;
    return m;
}

std::vector<double> readout_mitigation(const std::vector<double>& probabilities,
                                       const std::vector<Eigen::Matrix2d>& confusion) {
    if (!std::has_single_bit(probabilities.size()))
        throw DimensionMismatch("readout_mitigation: probability vector size not a power of 2");
    const int n = std::countr_zero(probabilities.size());
    if (static_cast<int>(confusion.size()) != n)
        throw DimensionMismatch("readout_mitigation: expected one confusion matrix per qubit");
    std::vector<double> p = probabilities;
    for (int q = 0; q < n; ++q) {
        const Eigen::Matrix2d& m = confusion[static_cast<std::size_t>(q)];
        const double det = m.determinant();
        if (std::abs(det) < 1e-12)
            throw SingularConfusionMatrix("readout_mitigation: qubit " + std::to_string(q));
        const Eigen::Matrix2d inv = m.inverse();
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t o = 0; o < p.size(); ++o) {
            if (o & bit) continue;
            const double p0 = p[o], p1 = p[o | bit];
            p[o] = inv(0, 0) * p0 + inv(0, 1) * p1;
            p[o | bit] = inv(1, 0) * p0 + inv(1, 1) * p1;
        }
    }
    return p;
}

ComplexMatrix linear_inversion(
    const std::map<std::string, std::vector<double>>& probs_by_setting) {
    if (probs_by_setting.empty()) throw IncompleteSettings("linear_inversion: no settings");
    const int n = static_cast<int>(probs_by_setting.begin()->first.size());
    for (const std::string& s : all_settings(n)) {
        const auto it = probs_by_setting.find(s);
        if (it == probs_by_setting.end())
            throw IncompleteSettings("linear_inversion: setting " + s + " missing");
        if (it->second.size() != (std::size_t{1} << n))
            throw IncompleteSettings("linear_inversion: probability vector for " + s);
    }
    const long dim = 1L << n;
    ComplexMatrix estimate = ComplexMatrix::Zero(dim, dim);
    const long num_paulis = 1L << (2 * n);
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (long t = 0; t < num_paulis; ++t) {
        std::string pauli(static_cast<std::size_t>(n), 'I');
        std::string source(static_cast<std::size_t>(n), 'Z');
        for (int q = 0; q < n; ++q) {
            const int dig = static_cast<int>((t >> (2 * q)) & 3L);
            const std::size_t pos = static_cast<std::size_t>(n - 1 - q);
            pauli[pos] = letters[dig];
            if (dig != 0) source[pos] = letters[dig];
        }
        const double expectation =
            pauli_expectation(probs_by_setting.at(source), source, pauli);
        ComplexMatrix mat = pauli_2x2(static_cast<int>((t >> (2 * (n - 1))) & 3L));
        for (int q = n - 2; q >= 0; --q) mat = kron(mat, pauli_2x2(static_cast<int>((t >> (2 * q)) & 3L)));
        estimate += expectation * mat;
    }
    return estimate / static_cast<double>(dim);
}

DensityMatrix project_to_physical(const ComplexMatrix& raw, double* negativity_clipped) {
    if (raw.rows() != raw.cols()) throw DimensionMismatch("project_to_physical: not square");
    ComplexMatrix m = (raw + raw.adjoint().eval()) / 2.0;
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > 1e-6)
        throw TraceNotOne("project_to_physical: trace " + std::to_string(tr));
    m /= tr;

    EigenDecomposition eig = eig_hermitian(m);  // ascending eigenvalues
    const long d = eig.eigenvalues.size();
    double negativity = 0.0;
    for (long i = 0; i < d; ++i)
        if (eig.eigenvalues(i) < 0.0) negativity += -eig.eigenvalues(i);

    RealVector lambda = eig.eigenvalues;
    double deficit = 0.0;
    long i = 0;
    while (i < d && lambda(i) + deficit / static_cast<double>(d - i) < 0.0) {
        deficit += lambda(i);
        lambda(i) = 0.0;
        ++i;
    }
    if (i == d) throw NotPSD("project_to_physical: estimate has no positive mass");
    const double share = deficit / static_cast<double>(d - i);
    for (long j = i; j < d; ++j) lambda(j) += share;

    ComplexMatrix physical =
        eig.eigenvectors * lambda.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
    physical = (physical + physical.adjoint().eval()) / 2.0;
    if (negativity_clipped != nullptr) *negativity_clipped = negativity;
    return DensityMatrix(physical);
}

TomographyRecord reconstruct(std::vector<SettingCounts> records) {
    if (records.empty()) throw IncompleteSettings("reconstruct: no settings");
    const int n = qubits_from_label_string(records.front().setting, "reconstruct");
    const std::int64_t shots = records.front().shots;
    std::map<std::string, std::vector<double>> probs_by_setting;
    for (const SettingCounts& r : records) {
        if (static_cast<int>(r.setting.size()) != n)
            throw IncompleteSettings("reconstruct: setting width mismatch at " + r.setting);
        if (r.shots != shots)
            throw IncompleteSettings("reconstruct: unequal shot budgets (" + r.setting + ")");
        if (!probs_by_setting.emplace(r.setting, probabilities_from_counts(r)).second)
            throw IncompleteSettings("reconstruct: duplicate setting " + r.setting);
    }
    const ComplexMatrix raw = linear_inversion(probs_by_setting);
    double negativity = 0.0;
    DensityMatrix physical = project_to_physical(raw, &negativity);
    return TomographyRecord{std::move(records), shots, raw, std::move(physical), negativity};
}

TomographyRecord tomograph(const DensityMatrix& rho, std::int64_t shots,
                           const NoiseParams& noise, std::uint64_t rng_seed) {
    const std::vector<std::string> settings = all_settings(rho.num_qubits());
    std::vector<SettingCounts> records;
    records.reserve(settings.size());
    for (std::size_t i = 0; i < settings.size(); ++i)
        records.push_back(
            sample_measurement(rho, settings[i], shots, noise, derive_seed(rng_seed, i)));
    return reconstruct(std::move(records));
}

std::string counts_to_json(const SettingCounts& counts) {
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [bits, v] : counts.counts) c[bits] = v;
    return nlohmann::json{{"setting", counts.setting}, {"counts", c}, {"shots", counts.shots}}
        .dump();
}

SettingCounts counts_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDataset(std::string("counts_from_json: ") + e.what());
    }
    try {
        SettingCounts out;
        out.setting = j.at("setting").get<std::string>();
        out.shots = j.at("shots").get<std::int64_t>();
        for (const auto& [bits, v] : j.at("counts").items())
            out.counts[bits] = v.get<std::int64_t>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDataset(std::string("counts_from_json: ") + e.what());
    }
}

void save_counts(const std::vector<SettingCounts>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("save_counts: cannot open " + path);
    for (const SettingCounts& r : records) out << counts_to_json(r) << '\n';
}

std::vector<SettingCounts> load_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedDataset("load_counts: cannot open " + path);
    std::vector<SettingCounts> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(counts_from_json(line));
    }
    return records;
}

}  // namespace ccrlab

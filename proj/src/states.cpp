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

#include "ccrlab/states.hpp"

#include <bit>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "ccrlab/rng.hpp"

namespace ccrlab {

namespace {

int qubits_for_dim(long dim, const char* what) {
    if (dim < 1 || !std::has_single_bit(static_cast<unsigned long>(dim)))
        throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(dim) +
                                " is not a power of two");
    return std::countr_zero(static_cast<unsigned long>(dim));
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : mat_(m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("DensityMatrix: matrix is not square");
    num_qubits_ = qubits_for_dim(m.rows(), "DensityMatrix");
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol)
        throw NotHermitian("DensityMatrix: max|m - m^dagger| = " + std::to_string(defect));
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw TraceNotOne("DensityMatrix: trace = " + std::to_string(tr));
    const EigenDecomposition ed = eig_hermitian(m);
    const double min_eig = ed.eigenvalues.minCoeff();
    if (min_eig < -kPsdTol)
        throw NotPSD("DensityMatrix: eigenvalue " + std::to_string(min_eig));
}

StateVector::StateVector(const ComplexVector& amplitudes) : amps_(amplitudes) {
    num_qubits_ = qubits_for_dim(amplitudes.size(), "StateVector");
    const double norm_sq = amps_.squaredNorm();
    if (std::abs(norm_sq - 1.0) > kNormTol)
        throw Error("StateVector: squared norm = " + std::to_string(norm_sq));
}

DensityMatrix StateVector::to_density() const {
    return DensityMatrix(amps_ * amps_.adjoint());
}

WernerParams::WernerParams(double w_, double x_) : w(w_), x(x_) {
    if (!(w >= 0.0 && w <= 1.0))
        throw ConfigError("WernerParams: w = " + std::to_string(w) + " outside [0,1]");
    if (!(x >= 0.0 && x <= 1.0))
        throw ConfigError("WernerParams: x = " + std::to_string(x) + " outside [0,1]");
}

DensityMatrix validate(const ComplexMatrix& m) { return DensityMatrix(m); }

DensityMatrix werner_state(const WernerParams& p) {
    const double off = p.w * std::sqrt(p.x * (1.0 - p.x));
    ComplexMatrix m(2, 2);
    m(0, 0) = p.w * p.x + (1.0 - p.w) / 2.0;
    m(1, 1) = p.w * (1.0 - p.x) + (1.0 - p.w) / 2.0;
    m(0, 1) = off;
    m(1, 0) = off;
    return DensityMatrix(m);
}

StateVector werner_purification(const WernerParams& p) {
    const double c = std::sqrt((1.0 - p.w) / 2.0);
    const double s = std::sqrt((1.0 + p.w) / 2.0);
    const double rx = std::sqrt(p.x);
    const double rx1 = std::sqrt(1.0 - p.x);
    ComplexVector v(4);
    v(0) = -rx1 * c;
    v(1) = rx * c;
    v(2) = rx * s;
    v(3) = rx1 * s;
    return StateVector(v);
}

DensityMatrix random_density_matrix(int num_qubits, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    const long d = 1L << num_qubits;
    ComplexMatrix g(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    ComplexMatrix m = g.adjoint() * g;
    m /= m.trace().real();
    m = (m + m.adjoint().eval()) / 2.0;  // scrub accumulation noise
    return DensityMatrix(m);
}

StateVector random_state_vector(int num_qubits, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    const long d = 1L << num_qubits;
    ComplexVector v(d);
    for (long i = 0; i < d; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
    v /= v.norm();
    return StateVector(v);
}

std::string density_to_json(const DensityMatrix& rho) {
    nlohmann::json j;
    j["num_qubits"] = rho.num_qubits();
    const ComplexMatrix& m = rho.matrix();
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (long r = 0; r < m.rows(); ++r) {
        nlohmann::json re_row = nlohmann::json::array(), im_row = nlohmann::json::array();
        for (long c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    j["re"] = re;
    j["im"] = im;
    return j.dump();
}

DensityMatrix density_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDataset(std::string("density_from_json: ") + e.what());
    }
    if (!j.contains("num_qubits") || !j.contains("re") || !j.contains("im"))
        throw MalformedDataset("density_from_json: missing num_qubits/re/im");
    const int n = j["num_qubits"].get<int>();
    const long d = 1L << n;
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (static_cast<long>(re.size()) != d || static_cast<long>(im.size()) != d)
        throw MalformedDataset("density_from_json: row count != 2^num_qubits");
    ComplexMatrix m(d, d);
    for (long r = 0; r < d; ++r) {
        if (static_cast<long>(re[r].size()) != d || static_cast<long>(im[r].size()) != d)
            throw MalformedDataset("density_from_json: ragged rows");
        for (long c = 0; c < d; ++c)
            m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
    return DensityMatrix(m);
}

void save_density(const DensityMatrix& rho, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("save_density: cannot open " + path);
    out << density_to_json(rho) << '\n';
}

DensityMatrix load_density(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("load_density: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return density_from_json(text);
}

}  // namespace ccrlab

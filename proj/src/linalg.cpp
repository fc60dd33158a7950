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

#include "ccrlab/linalg.hpp"

#include <string>

namespace ccrlab {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index da = a.rows(), db = b.rows();
    ComplexMatrix out(da * db, a.cols() * b.cols());
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * db, j * b.cols(), db, b.cols()) = a(i, j) * b;
    return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("eig_hermitian: matrix is not square");
    const double defect = hermiticity_defect(m);
    if (defect > kHermitianTol)
        throw NotHermitian("eig_hermitian: max|m - m^dagger| = " + std::to_string(defect));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw Error("eig_hermitian: eigensolver failed to converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
    EigenDecomposition ed = eig_hermitian(m);
    RealVector lam = ed.eigenvalues;
    // Rank-deficient inputs come back with tiny spurious eigenvalues of
    // either sign; sqrt would blow those up from O(eps) to O(sqrt(eps)),
    // so anything within dust range of the largest eigenvalue is treated
    // as an exact zero.
    const double dust = lam.size() > 0 ? 1e-13 * std::max(lam.maxCoeff(), 0.0) : 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) < -kPsdTol)
            throw NotPSD("mat_sqrt_psd: eigenvalue " + std::to_string(lam(i)));
        lam(i) = lam(i) <= dust ? 0.0 : std::sqrt(lam(i));
    }
    return ed.eigenvectors * lam.asDiagonal() * ed.eigenvectors.adjoint();
}

namespace {

// strides[i] = product of dims[j] for j < i; subsystem 0 is the fastest index
std::vector<long> subsystem_strides(const std::vector<int>& dims) {
    std::vector<long> strides(dims.size());
    long acc = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        strides[i] = acc;
        acc *= dims[i];
    }
    return strides;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("partial_trace: matrix is not square");
    long total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionMismatch("partial_trace: subsystem dimension < 1");
        total *= d;
    }
    if (total != m.rows())
        throw DimensionMismatch("partial_trace: dims product != matrix dimension");
    if (keep.empty())
        throw DimensionMismatch("partial_trace: keep set is empty");

    std::vector<bool> kept(dims.size(), false);
    for (int k : keep) {
        if (k < 0 || k >= static_cast<int>(dims.size()))
            throw DimensionMismatch("partial_trace: keep index out of range");
        if (kept[k]) throw DimensionMismatch("partial_trace: duplicate keep index");
        kept[k] = true;
    }

    const std::vector<long> strides = subsystem_strides(dims);
    std::vector<int> keep_sorted, traced;
    for (std::size_t i = 0; i < dims.size(); ++i)
        (kept[i] ? keep_sorted : traced).push_back(static_cast<int>(i));

    long keep_dim = 1, traced_dim = 1;
    for (int k : keep_sorted) keep_dim *= dims[k];
    for (int t : traced) traced_dim *= dims[t];

    // expand a compressed kept (resp. traced) index into a full basis index
    auto expand = [&](long compressed, const std::vector<int>& subs) {
        long full = 0;
        for (int s : subs) {
            full += (compressed % dims[s]) * strides[s];
            compressed /= dims[s];
        }
        return full;
    };

    ComplexMatrix out = ComplexMatrix::Zero(keep_dim, keep_dim);
    for (long r = 0; r < keep_dim; ++r) {
        const long rk = expand(r, keep_sorted);
        for (long c = 0; c < keep_dim; ++c) {
            const long ck = expand(c, keep_sorted);
            Complex sum = 0.0;
            for (long t = 0; t < traced_dim; ++t) {
                const long tt = expand(t, traced);
                sum += m(rk + tt, ck + tt);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

double norm_l1_offdiag(const ComplexMatrix& m) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            if (j != k) sum += std::abs(m(j, k));
    return sum;
}

double norm_hs_sq_offdiag(const ComplexMatrix& m) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            if (j != k) sum += std::norm(m(j, k));
    return sum;
}

Complex trace(const ComplexMatrix& m) { return m.trace(); }

Complex frobenius_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("frobenius_product: shape mismatch");
    return (a.adjoint() * b).trace();
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("trace_distance: shape mismatch");
    const RealVector ev = eig_hermitian(((a - b) + (a - b).adjoint().eval()) / 2.0).eigenvalues;
    return ev.cwiseAbs().sum() / 2.0;
}

}  // namespace ccrlab

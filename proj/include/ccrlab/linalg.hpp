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

#ifndef CCRLAB_LINALG_HPP
#define CCRLAB_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ccrlab/errors.hpp"

namespace ccrlab {

using Complex = std::complex<double>;

/// Dense square complex matrix. The whole library works at small fixed
/// dimensions (<= 2^10), so no sparsity or blocking is attempted.
///
/// Index conventions used everywhere:
///  - basis index b of an n-qubit space is read little-endian: qubit 0 is
///    the least significant bit of b;
///  - composite spaces are laid out so that subsystem 0 varies fastest,
///    i.e. kron(a, b) puts a on the slow (most significant) index.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hermiticity check tolerance (max entrywise |m - m^dagger|).
inline constexpr double kHermitianTol = 1e-10;
/// Eigenvalues in [-kPsdTol, 0) are treated as numerical noise and clipped
/// to zero before square roots and entropies; anything more negative is an
/// error.
inline constexpr double kPsdTol = 1e-9;

/// Result of a Hermitian eigendecomposition: eigenvalues ascending, the
/// columns of eigenvectors are the matching orthonormal eigenvectors. No
/// ordering is guaranteed inside a degenerate cluster.
struct EigenDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Kronecker product with a's index as the slow index:
/// result[i*db + k, j*db + l] = a(i, j) * b(k, l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Throws NotHermitian if max|m - m^dagger| exceeds kHermitianTol.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues within
/// kPsdTol below zero are clipped to zero; anything lower throws NotPSD.
ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m);

/// Partial trace over the subsystems not listed in `keep`.
///
/// dims[i] is the dimension of subsystem i, with subsystem 0 the fastest
/// index (for qubit systems, subsystem i = qubit i). Kept subsystems retain
/// their relative order in the result. Throws DimensionMismatch when the
/// dims do not multiply to the matrix dimension or keep is empty/invalid.
ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& keep);

/// Sum of |m_jk| over j != k.
double norm_l1_offdiag(const ComplexMatrix& m);

/// Sum of |m_jk|^2 over j != k.
double norm_hs_sq_offdiag(const ComplexMatrix& m);

Complex trace(const ComplexMatrix& m);

/// Tr(a^dagger b).
Complex frobenius_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max entrywise |m - m^dagger|; 0 for an exactly Hermitian matrix.
double hermiticity_defect(const ComplexMatrix& m);

/// Trace distance (1/2)||a - b||_1 between Hermitian matrices, via the
/// eigenvalues of the difference.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ccrlab

#endif

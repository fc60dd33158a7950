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

#ifndef CCRLAB_MEASURES_HPP_
#define CCRLAB_MEASURES_HPP_

#include <array>
#include <string>

#include "ccrlab/states.hpp"

namespace ccrlab {

// Complementarity quantifiers of a quanton state relative to the
// computational (reference) basis, plus the complete and incomplete
// complementarity relation checks built from them.
//
// Every quantity below is basis-dependent by construction: coherence C is
// measured against the computational basis, predictability P against its
// populations, and the correlation/mixedness terms W close the respective
// relation
//
//     P_l1 + C_l1 + W_l1  = d - 1
//     P_hs + C_wy + W_wy  = (d - 1)/d
//     P_hs + C_hs + S_l   = (d - 1)/d
//     P_vn + C_re + S_vn  = log2 d
//
// which hold with equality whenever the quanton is the reduced state of a
// pure global state (and, numerically, for every valid density matrix).
// Dropping the W term leaves the incomplete relations P + C <= bound.
// All entropies are base 2 with the convention 0 * log 0 = 0.

/// l1-norm coherence: sum of |rho_jk| over j != k.
double coherence_l1(const DensityMatrix& rho);

/// Wigner-Yanase coherence: sum of |<j|sqrt(rho)|k>|^2 over j != k.
double coherence_wy(const DensityMatrix& rho);

/// Hilbert-Schmidt coherence: sum of |rho_jk|^2 over j != k.
double coherence_hs(const DensityMatrix& rho);

/// Relative-entropy coherence: S_vn(diag(rho)) - S_vn(rho), in bits.
double coherence_re(const DensityMatrix& rho);

/// l1 predictability: (d - 1) - sum_{j != k} sqrt(rho_jj rho_kk).
double predictability_l1(const DensityMatrix& rho);

/// Hilbert-Schmidt predictability: sum_j rho_jj^2 - 1/d.
/// For d = 2 this equals (rho_00 - rho_11)^2 / 2.
double predictability_hs(const DensityMatrix& rho);

/// von Neumann predictability: log2 d + sum_j rho_jj log2 rho_jj,
/// i.e. log2 d minus the Shannon entropy of the populations.
double predictability_vn(const DensityMatrix& rho);

/// l1 correlation term: sum_{j != k} (sqrt(rho_jj rho_kk) - |rho_jk|).
/// Vanishes on every pure state.
double correlation_w_l1(const DensityMatrix& rho);

/// Wigner-Yanase correlation term:
/// sum_j (<j|sqrt(rho)|j>^2 - <j|rho|j>^2).
double correlation_w_wy(const DensityMatrix& rho);

/// Linear entropy 1 - Tr(rho^2).
double linear_entropy(const DensityMatrix& rho);

/// von Neumann entropy -Tr(rho log2 rho) via the eigenvalues.
/// Eigenvalues in [-1e-9, 0) are clipped to zero before the logarithm.
double vn_entropy(const DensityMatrix& rho);

/// The four purity quantifiers. Each one is the matching relation's bound
/// minus its correlation term, so hs = Tr(rho^2), vn = log2 d - S_vn,
/// l1 = (d - 1) - W_l1, and wy = (d - 1)/d - W_wy. The identities
/// hs = P_hs + C_hs + 1/d and vn = P_vn + C_re follow algebraically.
struct PurityMeasures {
    double hs = 0.0;
    double vn = 0.0;
    double l1 = 0.0;
    double wy = 0.0;
};

PurityMeasures purity_measures(const DensityMatrix& rho);

/// Everything the toolkit knows about one state, in one record.
///
/// ccr_residuals holds (P + C + W) - bound per relation, in the fixed order
/// {l1, wy, hs, vn}; a residual is signed, and zero up to rounding for any
/// valid density matrix. icr_slacks holds bound - (P + C) in the same
/// order; a slack is nonnegative up to rounding because it equals the
/// residual plus the (nonnegative) correlation term.
struct MeasureReport {
    int d_A = 0;

    double C_l1 = 0.0, C_wy = 0.0, C_hs = 0.0, C_re = 0.0;
    double P_l1 = 0.0, P_hs = 0.0, P_vn = 0.0;
    double W_l1 = 0.0, W_wy = 0.0, S_l = 0.0, S_vn = 0.0;

    double purity_hs = 0.0, purity_vn = 0.0, purity_l1 = 0.0, purity_wy = 0.0;

    std::array<double, 4> ccr_residuals{};  // order: l1, wy, hs, vn
    std::array<double, 4> icr_slacks{};     // order: l1, wy, hs, vn
};

/// Number of relations checked per report.
inline constexpr int kNumRelations = 4;

/// CCR bounds for dimension d, in residual order {l1, wy, hs, vn}:
/// d - 1, (d - 1)/d, (d - 1)/d, log2 d.
std::array<double, 4> ccr_bounds(int d);

/// Computes all measures, purities, residuals, and slacks for one state.
///
/// `tolerance` bounds the floating-point dust tolerated in the slacks: a
/// slack in [-tolerance, 0) is snapped to exactly 0, while anything more
/// negative is kept as-is so a genuine inequality violation stays visible.
/// Residuals are always reported raw.
MeasureReport report(const DensityMatrix& rho, double tolerance = 1e-12);

/// Scaled d = 2 duality check 2 * (P_hs + C_hs), which is <= 1 with
/// equality exactly on pure states. Throws DimensionMismatch for d != 2.
double duality_sum_d2(const DensityMatrix& rho);

/// Stable CSV schema for MeasureReport rows:
/// d_A, the eleven measures (C_l1, C_wy, C_hs, C_re, P_l1, P_hs, P_vn,
/// W_l1, W_wy, S_l, S_vn), four purities (hs, vn, l1, wy), four
/// ccr residuals, four icr slacks — 24 columns total.
std::string measure_csv_header();

/// One CSV row matching measure_csv_header(); doubles are printed with
/// %.17g so a round trip through text is exact.
std::string measure_csv_row(const MeasureReport& r);

}  // namespace ccrlab

#endif  // CCRLAB_MEASURES_HPP_

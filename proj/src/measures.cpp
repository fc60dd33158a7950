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

#include "ccrlab/measures.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "ccrlab/linalg.hpp"

namespace ccrlab {

namespace {

// Population (diagonal) vector, with rounding dust below zero clipped.
std::vector<double> populations(const ComplexMatrix& m) {
    std::vector<double> p(static_cast<std::size_t>(m.rows()));
    for (long j = 0; j < m.rows(); ++j) p[static_cast<std::size_t>(j)] = std::max(0.0, m(j, j).real());
    return p;
}

// Shannon entropy in bits with 0 * log 0 = 0; inputs may carry clipped
// eigenvalue dust, so values <= 0 contribute nothing.
double shannon_bits(const std::vector<double>& p) {
    double s = 0.0;
    for (double v : p)
        if (v > 0.0) s -= v * std::log2(v);
    return s;
}

std::vector<double> clipped_spectrum(const DensityMatrix& rho) {
    const RealVector ev = eig_hermitian(rho.matrix()).eigenvalues;
    std::vector<double> p(static_cast<std::size_t>(ev.size()));
    for (long j = 0; j < ev.size(); ++j) p[static_cast<std::size_t>(j)] = std::max(0.0, ev(j));
    return p;
}

}  // namespace

double coherence_l1(const DensityMatrix& rho) { return norm_l1_offdiag(rho.matrix()); }

double coherence_wy(const DensityMatrix& rho) {
    return norm_hs_sq_offdiag(mat_sqrt_psd(rho.matrix()));
}

double coherence_hs(const DensityMatrix& rho) { return norm_hs_sq_offdiag(rho.matrix()); }

double coherence_re(const DensityMatrix& rho) {
    return shannon_bits(populations(rho.matrix())) - vn_entropy(rho);
}

double predictability_l1(const DensityMatrix& rho) {
    const std::vector<double> p = populations(rho.matrix());
    double cross = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = 0; k < p.size(); ++k)
            if (j != k) cross += std::sqrt(p[j] * p[k]);
    return static_cast<double>(rho.dim()) - 1.0 - cross;
}

double predictability_hs(const DensityMatrix& rho) {
    const std::vector<double> p = populations(rho.matrix());
    double sum_sq = 0.0;
    for (double v : p) sum_sq += v * v;
    return sum_sq - 1.0 / static_cast<double>(rho.dim());
}

double predictability_vn(const DensityMatrix& rho) {
    return std::log2(static_cast<double>(rho.dim())) - shannon_bits(populations(rho.matrix()));
}

double correlation_w_l1(const DensityMatrix& rho) {
    const ComplexMatrix& m = rho.matrix();
    const std::vector<double> p = populations(m);
    double sum = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = 0; k < p.size(); ++k)
            if (j != k)
                sum += std::sqrt(p[j] * p[k]) -
                       std::abs(m(static_cast<long>(j), static_cast<long>(k)));
    return sum;
}

double correlation_w_wy(const DensityMatrix& rho) {
    const ComplexMatrix s = mat_sqrt_psd(rho.matrix());
    const ComplexMatrix& m = rho.matrix();
    double sum = 0.0;
    for (long j = 0; j < m.rows(); ++j) {
        const double sd = s(j, j).real(), rd = m(j, j).real();
        sum += sd * sd - rd * rd;
    }
    return sum;
}

double linear_entropy(const DensityMatrix& rho) {
    // Tr(rho^2) = ||rho||_F^2 for Hermitian rho.
    return 1.0 - rho.matrix().squaredNorm();
}

double vn_entropy(const DensityMatrix& rho) { return shannon_bits(clipped_spectrum(rho)); }

PurityMeasures purity_measures(const DensityMatrix& rho) {
    const double d = static_cast<double>(rho.dim());
    PurityMeasures p;
    p.hs = rho.matrix().squaredNorm();
    p.vn = std::log2(d) - vn_entropy(rho);
    p.l1 = (d - 1.0) - correlation_w_l1(rho);
    p.wy = (d - 1.0) / d - correlation_w_wy(rho);
    return p;
}

std::array<double, 4> ccr_bounds(int d) {
    const double dd = static_cast<double>(d);
    return {dd - 1.0, (dd - 1.0) / dd, (dd - 1.0) / dd, std::log2(dd)};
}

MeasureReport report(const DensityMatrix& rho, double tolerance) {
    MeasureReport r;
    r.d_A = static_cast<int>(rho.dim());

    r.C_l1 = coherence_l1(rho);
    r.C_wy = coherence_wy(rho);
    r.C_hs = coherence_hs(rho);
    r.C_re = coherence_re(rho);
    r.P_l1 = predictability_l1(rho);
    r.P_hs = predictability_hs(rho);
    r.P_vn = predictability_vn(rho);
    r.W_l1 = correlation_w_l1(rho);
    r.W_wy = correlation_w_wy(rho);
    r.S_l = linear_entropy(rho);
    r.S_vn = vn_entropy(rho);

    const PurityMeasures p = purity_measures(rho);
    r.purity_hs = p.hs;
    r.purity_vn = p.vn;
    r.purity_l1 = p.l1;
    r.purity_wy = p.wy;

    const std::array<double, 4> bounds = ccr_bounds(r.d_A);
    const std::array<double, 4> p_terms = {r.P_l1, r.P_hs, r.P_hs, r.P_vn};
    const std::array<double, 4> c_terms = {r.C_l1, r.C_wy, r.C_hs, r.C_re};
    const std::array<double, 4> w_terms = {r.W_l1, r.W_wy, r.S_l, r.S_vn};
    for (int i = 0; i < kNumRelations; ++i) {
        r.ccr_residuals[static_cast<std::size_t>(i)] =
            p_terms[static_cast<std::size_t>(i)] + c_terms[static_cast<std::size_t>(i)] +
            w_terms[static_cast<std::size_t>(i)] - bounds[static_cast<std::size_t>(i)];
        double slack = bounds[static_cast<std::size_t>(i)] -
                       (p_terms[static_cast<std::size_t>(i)] + c_terms[static_cast<std::size_t>(i)]);
        // Rounding dust only; a slack below -tolerance is a real violation
        // and must survive into the report.
        if (slack < 0.0 && slack >= -tolerance) slack = 0.0;
        r.icr_slacks[static_cast<std::size_t>(i)] = slack;
    }
    return r;
}

double duality_sum_d2(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw DimensionMismatch("duality_sum_d2: defined for d = 2 only");
    return 2.0 * (predictability_hs(rho) + coherence_hs(rho));
}

namespace {

void append_g17(std::ostringstream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << ',' << buf;
}

}  // namespace

std::string measure_csv_header() {
    return "d_A,C_l1,C_wy,C_hs,C_re,P_l1,P_hs,P_vn,W_l1,W_wy,S_l,S_vn,"
           "purity_hs,purity_vn,purity_l1,purity_wy,"
           "ccr_l1,ccr_wy,ccr_hs,ccr_vn,icr_l1,icr_wy,icr_hs,icr_vn";
}

std::string measure_csv_row(const MeasureReport& r) {
    std::ostringstream out;
    out << r.d_A;
    for (double v : {r.C_l1, r.C_wy, r.C_hs, r.C_re, r.P_l1, r.P_hs, r.P_vn, r.W_l1, r.W_wy,
                     r.S_l, r.S_vn, r.purity_hs, r.purity_vn, r.purity_l1, r.purity_wy})
        append_g17(out, v);
    for (double v : r.ccr_residuals) append_g17(out, v);
    for (double v : r.icr_slacks) append_g17(out, v);
    return out.str();
}

}  // namespace ccrlab

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

#include <doctest.h>

#include "ccrlab/linalg.hpp"
#include "ccrlab/rng.hpp"

using namespace ccrlab;

namespace {

ComplexMatrix random_hermitian(int dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return (g + g.adjoint().eval()) / 2.0;
}

ComplexMatrix random_psd(int dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return g.adjoint() * g;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("kron of two 2x2 matrices matches the block layout") {
    ComplexMatrix a(2, 2), b(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    b << 0.0, 5.0, 6.0, 7.0;
    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    // a is on the slow (high-bit) index: k = [[a00 b, a01 b], [a10 b, a11 b]]
    CHECK(k(0, 1) == Complex(5.0, 0.0));   // a00 * b01
    CHECK(k(1, 0) == Complex(6.0, 0.0));   // a00 * b10
    CHECK(k(0, 3) == Complex(10.0, 0.0));  // a01 * b01
    CHECK(k(3, 3) == Complex(28.0, 0.0));  // a11 * b11
    CHECK(k(3, 0) == Complex(18.0, 0.0));  // a10 * b10
}

TEST_CASE("kron of vectors puts the first factor on the high bits") {
    ComplexVector a(2), b(2);
    a << 1.0, 2.0;
    b << 3.0, 4.0;
    const ComplexVector k = kron(a, b);
    REQUIRE(k.size() == 4);
    CHECK(k(0) == Complex(3.0, 0.0));
    CHECK(k(1) == Complex(4.0, 0.0));
    CHECK(k(2) == Complex(6.0, 0.0));
    CHECK(k(3) == Complex(8.0, 0.0));
}

TEST_CASE("kron is associative up to exact arithmetic on integers") {
    ComplexMatrix a(2, 2), b(2, 2), c(2, 2);
    a << 1, 0, 0, 2;
    b << 0, 1, 1, 0;
    c << 3, 0, 0, 4;
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("eig_hermitian returns ascending eigenvalues that reconstruct the input") {
    ComplexMatrix m(2, 2);
    m << Complex(1, 0), Complex(0, 1), Complex(0, -1), Complex(1, 0);
    const EigenDecomposition ed = eig_hermitian(m);
    CHECK(ed.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ed.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-12));

    const ComplexMatrix rebuilt = ed.eigenvectors *
                                  ed.eigenvalues.cast<Complex>().asDiagonal() *
                                  ed.eigenvectors.adjoint();
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eig_hermitian sorts a random spectrum ascending") {
    const EigenDecomposition ed = eig_hermitian(random_hermitian(8, 11));
    for (long i = 1; i < ed.eigenvalues.size(); ++i)
        CHECK(ed.eigenvalues(i - 1) <= ed.eigenvalues(i));
}

TEST_CASE("eig_hermitian rejects non-Hermitian and non-square input") {
    ComplexMatrix bad(2, 2);
    bad << 1.0, 2.0, 3.0, 4.0;
    CHECK_THROWS_AS(eig_hermitian(bad), NotHermitian);
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), DimensionMismatch);
}

TEST_CASE("mat_sqrt_psd of a diagonal matrix takes entrywise square roots") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 4.0;
    m(1, 1) = 9.0;
    const ComplexMatrix s = mat_sqrt_psd(m);
    CHECK(std::abs(s(0, 0) - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(s(1, 1) - Complex(3.0, 0.0)) < 1e-12);
    CHECK(std::abs(s(0, 1)) < 1e-12);
}

TEST_CASE("mat_sqrt_psd squares back to the input") {
    const ComplexMatrix m = random_psd(4, 23);
    const ComplexMatrix s = mat_sqrt_psd(m);
    CHECK((s * s - m).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(hermiticity_defect(s) < 1e-12);
}

TEST_CASE("mat_sqrt_psd clips eigenvalue dust but rejects real negativity") {
    ComplexMatrix dusty = ComplexMatrix::Zero(2, 2);
    dusty(0, 0) = 1.0;
    dusty(1, 1) = -1e-10;  // within the clipping band
    CHECK(std::abs(mat_sqrt_psd(dusty)(1, 1)) < 1e-12);

    ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
    negative(0, 0) = 1.0;
    negative(1, 1) = -1.0;
    CHECK_THROWS_AS(mat_sqrt_psd(negative), NotPSD);
}

TEST_CASE("partial_trace of a Bell pair leaves the maximally mixed qubit") {
    ComplexVector bell = ComplexVector::Zero(4);
    bell(0) = 1.0 / std::sqrt(2.0);
    bell(3) = 1.0 / std::sqrt(2.0);
    const ComplexMatrix rho = bell * bell.adjoint();
    for (int keep : {0, 1}) {
        const ComplexMatrix reduced = partial_trace(rho, {2, 2}, {keep});
        CHECK((reduced - ComplexMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("partial_trace factors a product state") {
    Rng rng(5);
    ComplexVector a(2), b(2);
    for (int i = 0; i < 2; ++i) {
        a(i) = Complex(rng.gaussian(), rng.gaussian());
        b(i) = Complex(rng.gaussian(), rng.gaussian());
    }
    a /= a.norm();
    b /= b.norm();
    // kron(b, a): b on the slow index, i.e. subsystem 1; a is subsystem 0.
    const ComplexVector joint = kron(b, a);
    const ComplexMatrix rho = joint * joint.adjoint();
    CHECK((partial_trace(rho, {2, 2}, {0}) - a * a.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((partial_trace(rho, {2, 2}, {1}) - b * b.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial_trace keeps subsystems in their relative order") {
    // Three qubits: put distinct pure states on each wire.
    ComplexVector s0(2), s1(2), s2(2);
    s0 << 1.0, 0.0;
    s1 << 0.0, 1.0;
    s2 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const ComplexVector joint = kron(s2, kron(s1, s0));
    const ComplexMatrix rho = joint * joint.adjoint();
    const ComplexMatrix kept = partial_trace(rho, {2, 2, 2}, {0, 2});
    const ComplexVector expect = kron(s2, s0);  // subsystem 0 stays fastest
    CHECK((kept - expect * expect.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial_trace validates its arguments") {
    const ComplexMatrix rho = ComplexMatrix::Identity(4, 4) / 4.0;
    CHECK_THROWS_AS(partial_trace(rho, {2, 3}, {0}), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {0, 0}), DimensionMismatch);
}

TEST_CASE("offdiagonal norms ignore the diagonal") {
    ComplexMatrix m(2, 2);
    m << Complex(7, 0), Complex(3, 4), Complex(3, -4), Complex(-2, 0);
    CHECK(norm_l1_offdiag(m) == doctest::Approx(10.0));     // 2 * |3+4i|
    CHECK(norm_hs_sq_offdiag(m) == doctest::Approx(50.0));  // 2 * 25
    CHECK(norm_l1_offdiag(ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("trace and frobenius_product agree with hand values") {
    ComplexMatrix a(2, 2), b(2, 2);
    a << Complex(1, 1), 0, 0, Complex(2, -1);
    b << Complex(3, 0), 0, 0, Complex(0, 1);
    CHECK(std::abs(trace(a) - Complex(3, 0)) < 1e-15);
    // Tr(a^dagger b) = conj(1+i)*3 + conj(2-i)*i = (3-3i) + (-1+2i) = 2 - i
    CHECK(std::abs(frobenius_product(a, b) - Complex(2, -1)) < 1e-15);
    CHECK_THROWS_AS(frobenius_product(a, ComplexMatrix::Zero(3, 3)), DimensionMismatch);
}

TEST_CASE("hermiticity_defect is zero exactly for Hermitian matrices") {
    CHECK(hermiticity_defect(random_hermitian(4, 3)) == 0.0);
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = Complex(0.0, 1.0);
    m(1, 0) = Complex(0.0, 1.0);  // should be -i for Hermitian
    CHECK(hermiticity_defect(m) == doctest::Approx(2.0));
}

TEST_CASE("trace_distance separates orthogonal states and vanishes on equals") {
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2), one = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    one(1, 1) = 1.0;
    CHECK(trace_distance(zero, one) == doctest::Approx(1.0));
    CHECK(trace_distance(zero, zero) == doctest::Approx(0.0));
    const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
    CHECK(trace_distance(zero, half) == doctest::Approx(0.5));
}

}  // TEST_SUITE("linalg")

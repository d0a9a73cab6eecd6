#include "fcqec/gates.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "fcqec/encoder.hpp"
#include "fcqec/errors.hpp"
#include "test_util.hpp"

namespace fcqec {
namespace {

using namespace std::complex_literals;
using testing::column_image;

TEST(Pauli, MatchesPrintedMatrices) {
  EXPECT_EQ(pauli(Axis::X), (ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}));
  EXPECT_EQ(pauli(Axis::Y), (ComplexMatrix{{0.0, -1.0i}, {1.0i, 0.0}}));
  EXPECT_EQ(pauli(Axis::Z), (ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}));
}

TEST(Hadamard, InvolutionAndBasisChange) {
  const auto h = hadamard();
  EXPECT_LT(frobenius_distance(matmul(h, h), ComplexMatrix::identity(2)), 1e-15);
  EXPECT_LT(frobenius_distance(matmul(matmul(h, pauli(Axis::X)), h), pauli(Axis::Z)), 1e-15);
  for (const auto& x : h.entries()) EXPECT_NEAR(std::abs(x), 1.0 / std::sqrt(2.0), 1e-16);
}

// Pins the global index convention: qubit 0 is the least significant bit.
TEST(CnotMatrix, C02ColumnListing) {
  const auto c02 = cnot_matrix(3, 0, 2);
  const long expected[] = {0b000, 0b101, 0b010, 0b111, 0b100, 0b001, 0b110, 0b011};
  for (std::size_t s = 0; s < 8; ++s) EXPECT_EQ(column_image(c02, s), expected[s]) << "column " << s;
  EXPECT_TRUE(is_exact_permutation(c02));
}

TEST(CnotMatrix, C01ColumnListing) {
  const auto c01 = cnot_matrix(2, 0, 1);
  const long expected[] = {0b00, 0b11, 0b10, 0b01};
  for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(column_image(c01, s), expected[s]);
}

TEST(CnotMatrix, InvolutionAndChangedColumns) {
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned c = 0; c < n; ++c) {
      for (unsigned t = 0; t < n; ++t) {
        if (c == t) continue;
        const auto m = cnot_matrix(n, c, t);
        EXPECT_EQ(matmul(m, m), ComplexMatrix::identity(std::size_t{1} << n));
        std::size_t changed = 0;
        for (std::size_t s = 0; s < m.dim(); ++s)
          if (column_image(m, s) != static_cast<long>(s)) ++changed;
        EXPECT_EQ(changed, std::size_t{1} << (n - 1));
      }
    }
  }
}

TEST(CnotMatrix, BadIndicesThrow) {
  EXPECT_THROW(cnot_matrix(3, 1, 1), BadQubitIndex);
  EXPECT_THROW(cnot_matrix(3, 0, 3), BadQubitIndex);
  EXPECT_THROW(Circuit(2, {Hadamard{2}}), BadQubitIndex);
}

TEST(CorrelatedError, ZTwoIsDiagonal) {
  const std::array<cplx, 4> d{1.0, -1.0, -1.0, 1.0};
  EXPECT_EQ(correlated_error(Axis::Z, 2), ComplexMatrix::diagonal(d));
}

TEST(CorrelatedError, XIsIndexComplement) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto x = correlated_error(Axis::X, n);
    const std::size_t mask = x.dim() - 1;
    for (std::size_t s = 0; s < x.dim(); ++s) EXPECT_EQ(column_image(x, s), static_cast<long>(s ^ mask));
    EXPECT_TRUE(is_exact_permutation(x));
  }
}

TEST(CorrelatedError, YTwoIsReal) {
  const auto y2 = correlated_error(Axis::Y, 2);
  for (const auto& x : y2.entries()) EXPECT_EQ(x.imag(), 0.0);
}

TEST(CorrelatedError, XnYnEqualsIPowerZn) {
  cplx ipow = 1.0;
  for (unsigned n = 1; n <= 6; ++n) {
    ipow *= 1.0i;
    const auto xy = matmul(correlated_error(Axis::X, n), correlated_error(Axis::Y, n));
    EXPECT_EQ(xy, ipow * correlated_error(Axis::Z, n)) << "n=" << n;
  }
}

TEST(CorrelatedError, MonomialFormMatchesKroneckerPower) {
  for (unsigned n = 1; n <= 6; ++n)
    for (Axis a : {Axis::X, Axis::Y, Axis::Z})
      EXPECT_EQ(correlated_error_monomial(a, n)->to_dense(), correlated_error(a, n));
}

TEST(Monomial, ProductsMatchDenseOracle) {
  const auto a = testing::random_matrix(8, 77);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const auto m = correlated_error_monomial(axis, 3);
    const auto dense = m->to_dense();
    EXPECT_LT(frobenius_distance(monomial_left(*m, a), testing::naive_product(dense, a)), 1e-14);
    EXPECT_LT(frobenius_distance(monomial_right_dagger(a, *m), testing::naive_product(a, dagger(dense))),
              1e-14);
    EXPECT_LT(frobenius_distance(monomial_conjugate(*m, a), testing::dense_sandwich(dense, a)), 1e-14);
  }
}

TEST(Realize, EmptyCircuitIsIdentity) {
  EXPECT_EQ(realize(Circuit(3)), ComplexMatrix::identity(8));
}

TEST(Realize, MatchesGateMatrixProducts) {
  const Circuit c(3, {Cnot{0, 1}, Hadamard{2}, Cnot{2, 0}, Hadamard{0}, Cnot{1, 2}});
  ComplexMatrix expected = ComplexMatrix::identity(8);
  for (const auto& op : c.ops()) expected = testing::naive_product(gate_matrix(op, 3), expected);
  EXPECT_LT(frobenius_distance(realize(c), expected), 1e-14);
  EXPECT_LT(unitarity_defect(realize(c)), 1e-13);
}

TEST(Realize, HadamardEmbeddingConvention) {
  // H on qubit q is I_{2^{n-1-q}} (x) H (x) I_{2^q}.
  const auto h1 = realize(Circuit(3, {Hadamard{1}}));
  const auto expected =
      kron(kron(ComplexMatrix::identity(2), hadamard()), ComplexMatrix::identity(2));
  EXPECT_EQ(h1, expected);
}

TEST(Realize, P2ConjugatesX2ToDX) {
  const Circuit c(2, {Cnot{0, 1}, Hadamard{0}, Cnot{0, 1}});
  const auto p = realize(c);
  const auto conj = matmul(matmul(dagger(p), correlated_error(Axis::X, 2)), p);
  EXPECT_LT(frobenius_distance(conj, diag_x()), 1e-15);
}

TEST(Realize, P3ColumnListing) {
  const Circuit c(3, {Cnot{2, 1}, Cnot{0, 2}, Cnot{1, 0}});
  const auto p = realize(c);
  const long expected[] = {0b000, 0b101, 0b011, 0b110, 0b111, 0b010, 0b100, 0b001};
  for (std::size_t s = 0; s < 8; ++s) EXPECT_EQ(column_image(p, s), expected[s]);
  EXPECT_TRUE(is_exact_permutation(p));
}

TEST(Invert, InvolutionAndSelfInverseGate) {
  const Circuit c(3, {Cnot{2, 1}, Hadamard{0}, Cnot{1, 0}});
  EXPECT_EQ(invert(invert(c)), c);
  const Circuit single(2, {Cnot{0, 1}});
  EXPECT_EQ(invert(single), single);
  EXPECT_LT(frobenius_distance(matmul(realize(invert(c)), realize(c)), ComplexMatrix::identity(8)),
            1e-13);
}

TEST(Invert, P3InverseIsTranspose) {
  const Circuit p3(3, {Cnot{2, 1}, Cnot{0, 2}, Cnot{1, 0}});
  const auto m = realize(p3);
  ComplexMatrix transposed(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) transposed(i, j) = m(j, i);
  EXPECT_EQ(realize(invert(p3)), transposed);
}

TEST(Conjugate, ForwardAndBackwardMatchDenseProducts) {
  const Circuit c(3, {Cnot{0, 2}, Hadamard{1}, Cnot{1, 0}, Hadamard{2}});
  const auto p = realize(c);
  const auto a = testing::random_matrix(8, 5);
  EXPECT_LT(frobenius_distance(conjugate_forward(c, a), testing::dense_sandwich(p, a)), 1e-13);
  EXPECT_LT(frobenius_distance(conjugate_backward(c, a), testing::dense_sandwich(dagger(p), a)), 1e-13);
}

TEST(Circuit, CountsAndAppendOffset) {
  Circuit c(5);
  c.append(Circuit(2, {Cnot{0, 1}, Hadamard{0}, Cnot{0, 1}}), 3);
  EXPECT_EQ(c.cnot_count(), 2u);
  EXPECT_EQ(c.h_count(), 1u);
  EXPECT_EQ(c.ops()[0], GateOp(Cnot{3, 4}));
  EXPECT_EQ(c.ops()[1], GateOp(Hadamard{3}));
  EXPECT_THROW(c.append(Circuit(2, {Cnot{0, 1}}), 4), BadQubitIndex);
  EXPECT_THROW(Circuit(0), BadQubitCount);
}

}  // namespace
}  // namespace fcqec

#pragma once

#include <cstdint>

#include "fcqec/matrix.hpp"

namespace fcqec::testing {

/// Arbitrary (non-Hermitian) complex matrix with entries in [-1, 1)^2.
inline ComplexMatrix random_matrix(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix m(dim);
  for (auto& x : m.entries()) {
    const double re = 2.0 * rng.uniform() - 1.0;
    const double im = 2.0 * rng.uniform() - 1.0;
    x = {re, im};
  }
  return m;
}

/// Naive triple-loop product, kept separate from the library's matmul.
inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      cplx s{};
      for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

/// A rho A^dagger with dense products.
inline ComplexMatrix dense_sandwich(const ComplexMatrix& a, const ComplexMatrix& rho) {
  return naive_product(naive_product(a, rho), dagger(a));
}

/// Basis vector index of column `col` when m is a permutation matrix, or -1.
inline long column_image(const ComplexMatrix& m, std::size_t col) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    if (m(r, col) == cplx{1.0, 0.0}) return static_cast<long>(r);
  return -1;
}

}  // namespace fcqec::testing

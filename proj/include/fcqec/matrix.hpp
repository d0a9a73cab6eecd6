#pragma once

// Dense complex linear algebra used by every other module.
//
// Index convention (used everywhere in the library): the computational basis
// vector |q_{n-1} ... q_1 q_0> has index sum_r q_r * 2^r, so qubit 0 is the
// least significant bit. In kron(A, B) the left factor A acts on the
// higher-significance qubits. The column listing of C_02 in the gates tests
// pins this convention.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fcqec {

using cplx = std::complex<double>;

/// Square dense complex matrix, row-major.
class ComplexMatrix {
 public:
  /// dim x dim zero matrix. Throws InvalidArgument if dim == 0.
  explicit ComplexMatrix(std::size_t dim);
  /// Throws DimensionMismatch if entries.size() != dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  /// Row-by-row literal; rows must form a square.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  cplx& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  const cplx& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  [[nodiscard]] std::span<cplx> row(std::size_t r) noexcept {
    return {data_.data() + r * dim_, dim_};
  }
  [[nodiscard]] std::span<const cplx> row(std::size_t r) const noexcept {
    return {data_.data() + r * dim_, dim_};
  }

  [[nodiscard]] std::span<const cplx> entries() const noexcept { return data_; }
  [[nodiscard]] std::span<cplx> entries() noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);
/// Matrix product; same as matmul.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
/// Throws DimensionMismatch if a.dim() != b.dim().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& a) noexcept;

/// Traces out the leading (most significant) factor of dimension d_lead.
/// result[k,l] = sum_i t[i*d_rest + k, i*d_rest + l].
ComplexMatrix partial_trace_leading(const ComplexMatrix& t, std::size_t d_lead);
/// Traces out the trailing (least significant) factor of dimension d_trail.
ComplexMatrix partial_trace_trailing(const ComplexMatrix& t, std::size_t d_trail);

double frobenius_norm(const ComplexMatrix& a) noexcept;
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - a^dagger||_F
double hermiticity_defect(const ComplexMatrix& a) noexcept;
/// Smallest eigenvalue of the Hermitian part of a.
double min_eigenvalue(const ComplexMatrix& a);
/// ||a^dagger a - I||_F
double unitarity_defect(const ComplexMatrix& a);

/// True when every entry is exactly 0.0 or 1.0 with exactly one 1 per row and
/// per column.
bool is_exact_permutation(const ComplexMatrix& a) noexcept;

bool is_power_of_two(std::size_t v) noexcept;
/// log2 of a power of two.
unsigned log2_exact(std::size_t v);

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
}  // namespace tolerance

/// A validated quantum state: Hermitian, unit trace, positive semidefinite,
/// dimension a power of two. The 1x1 state [1] is the trivial state of an
/// empty register.
class DensityMatrix {
 public:
  /// Validates all invariants. Throws InvalidState on failure.
  explicit DensityMatrix(ComplexMatrix mat);

  /// Wraps a matrix produced by a validity-preserving map (unitary
  /// conjugation, trace-preserving Kraus sums, G G^dagger / tr). Only the
  /// power-of-two dimension is checked.
  static DensityMatrix trusted(ComplexMatrix mat);

  /// |index><index| on dim basis states.
  static DensityMatrix basis_projector(std::size_t dim, std::size_t index);
  /// I / dim.
  static DensityMatrix maximally_mixed(std::size_t dim);
  /// The 1x1 state of zero qubits.
  static DensityMatrix trivial();

  [[nodiscard]] const ComplexMatrix& mat() const noexcept { return mat_; }
  [[nodiscard]] std::size_t dim() const noexcept { return mat_.dim(); }
  [[nodiscard]] unsigned qubits() const { return log2_exact(mat_.dim()); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix mat, Unchecked);

  ComplexMatrix mat_;
};

/// Runs the full DensityMatrix checks without throwing; returns an empty
/// string when valid, otherwise a description of the first failure.
std::string density_violation(const ComplexMatrix& mat);

/// Seeded uniform source over std::mt19937_64 with a portable
/// 64-bit-to-double conversion.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform on [0, 1).
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Deterministic random state G G^dagger / tr(G G^dagger) where every entry of
/// G is u + i v with u, v uniform on [0, 1). Entries are drawn row-major from
/// a std::mt19937_64 seeded with `seed`, converting each 64-bit output to a
/// double as (x >> 11) * 2^-53 so the stream is identical on every platform.
DensityMatrix random_density(std::size_t dim, std::uint64_t seed);

/// SplitMix64 finaliser; derives independent child seeds from a base seed.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) noexcept;

}  // namespace fcqec

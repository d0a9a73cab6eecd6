#include "fcqec/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "fcqec/errors.hpp"

namespace fcqec {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << what << ": dimension " << a.dim() << " vs " << b.dim();
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw InvalidArgument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw InvalidArgument("ComplexMatrix: dimension must be positive");
  if (data_.size() != dim * dim) {
    throw DimensionMismatch("ComplexMatrix: expected " + std::to_string(dim * dim) +
                            " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0) throw InvalidArgument("ComplexMatrix: dimension must be positive");
  data_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw DimensionMismatch("ComplexMatrix: literal is not square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) noexcept {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < db; ++k) {
        const auto brow = b.row(k);
        cplx* dst = &out(i * db + k, j * db);
        for (std::size_t l = 0; l < db; ++l) dst[l] = aij * brow[l];
      }
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  // i-k-j order keeps the inner loop contiguous; exact zeros in `a` (common
  // for gate and permutation matrices) are skipped.
  for (std::size_t i = 0; i < n; ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

cplx trace(const ComplexMatrix& a) noexcept {
  cplx t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix partial_trace_leading(const ComplexMatrix& t, std::size_t d_lead) {
  if (d_lead == 0 || t.dim() % d_lead != 0) {
    throw DimensionMismatch("partial_trace_leading: " + std::to_string(d_lead) +
                            " does not divide " + std::to_string(t.dim()));
  }
  const std::size_t d_rest = t.dim() / d_lead;
  ComplexMatrix out(d_rest);
  for (std::size_t i = 0; i < d_lead; ++i)
    for (std::size_t k = 0; k < d_rest; ++k)
      for (std::size_t l = 0; l < d_rest; ++l) out(k, l) += t(i * d_rest + k, i * d_rest + l);
  return out;
}

ComplexMatrix partial_trace_trailing(const ComplexMatrix& t, std::size_t d_trail) {
  if (d_trail == 0 || t.dim() % d_trail != 0) {
    throw DimensionMismatch("partial_trace_trailing: " + std::to_string(d_trail) +
                            " does not divide " + std::to_string(t.dim()));
  }
  const std::size_t d_keep = t.dim() / d_trail;
  ComplexMatrix out(d_keep);
  for (std::size_t i = 0; i < d_keep; ++i)
    for (std::size_t j = 0; j < d_keep; ++j)
      for (std::size_t k = 0; k < d_trail; ++k) out(i, j) += t(i * d_trail + k, j * d_trail + k);
  return out;
}

double frobenius_norm(const ComplexMatrix& a) noexcept {
  double s = 0.0;
  for (const auto& x : a.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "frobenius_distance");
  const auto ea = a.entries();
  const auto eb = b.entries();
  double s = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::norm(ea[i] - eb[i]);
  return std::sqrt(s);
}

double max_abs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_distance");
  const auto ea = a.entries();
  const auto eb = b.entries();
  double m = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

double hermiticity_defect(const ComplexMatrix& a) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

double min_eigenvalue(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      m(i, j) = 0.5 * (a(ui, uj) + std::conj(a(uj, ui)));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double unitarity_defect(const ComplexMatrix& a) {
  return frobenius_distance(matmul(dagger(a), a), ComplexMatrix::identity(a.dim()));
}

bool is_exact_permutation(const ComplexMatrix& a) noexcept {
  const std::size_t n = a.dim();
  std::vector<int> col_ones(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int row_ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx x = a(i, j);
      if (x == cplx{1.0, 0.0}) {
        ++row_ones;
        ++col_ones[j];
      } else if (x != cplx{}) {
        return false;
      }
    }
    if (row_ones != 1) return false;
  }
  return std::all_of(col_ones.begin(), col_ones.end(), [](int c) { return c == 1; });
}

bool is_power_of_two(std::size_t v) noexcept { return std::has_single_bit(v); }

unsigned log2_exact(std::size_t v) {
  if (!is_power_of_two(v)) {
    throw DimensionMismatch(std::to_string(v) + " is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(v));
}

std::string density_violation(const ComplexMatrix& mat) {
  std::ostringstream msg;
  if (!is_power_of_two(mat.dim())) {
    msg << "dimension " << mat.dim() << " is not a power of two";
    return msg.str();
  }
  if (const double h = hermiticity_defect(mat); !(h <= tolerance::kHermitian)) {
    msg << "not Hermitian (||A - A^dagger||_F = " << h << ")";
    return msg.str();
  }
  if (const cplx t = trace(mat); !(std::abs(t - 1.0) <= tolerance::kTrace)) {
    msg << "trace " << t.real() << (t.imag() < 0 ? "-" : "+") << std::abs(t.imag())
        << "i is not 1";
    return msg.str();
  }
  if (const double e = min_eigenvalue(mat); !(e >= tolerance::kEigenvalueFloor)) {
    msg << "not positive semidefinite (min eigenvalue " << e << ")";
    return msg.str();
  }
  return {};
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (auto why = density_violation(mat_); !why.empty()) throw InvalidState(why);
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, Unchecked) : mat_(std::move(mat)) {
  if (!is_power_of_two(mat_.dim())) {
    throw InvalidState("dimension " + std::to_string(mat_.dim()) + " is not a power of two");
  }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix mat) {
  return DensityMatrix(std::move(mat), Unchecked{});
}

DensityMatrix DensityMatrix::basis_projector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidArgument("basis_projector: index out of range");
  ComplexMatrix m(dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::trivial() { return DensityMatrix(ComplexMatrix{{1.0}}, Unchecked{}); }

DensityMatrix random_density(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(dim);
  for (auto& x : g.entries()) {
    const double re = rng.uniform();
    const double im = rng.uniform();
    x = {re, im};
  }
  // G G^dagger, filled on and above the diagonal then mirrored so the result
  // is exactly Hermitian.
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto gi = g.row(i);
    for (std::size_t j = i; j < dim; ++j) {
      const auto gj = g.row(j);
      cplx s{};
      for (std::size_t k = 0; k < dim; ++k) s += gi[k] * std::conj(gj[k]);
      if (i == j) s = {s.real(), 0.0};
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  }
  out *= 1.0 / trace(out).real();
  return DensityMatrix::trusted(std::move(out));
}

std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace fcqec

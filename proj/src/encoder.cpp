#include "fcqec/encoder.hpp"

#include <array>
#include <cmath>

#include "fcqec/errors.hpp"

namespace fcqec {

namespace {

int sign_for(unsigned k) noexcept { return (k % 2 == 0) ? 1 : -1; }

// Frobenius residual of `actual` against expected = kron(head, I) without
// materialising the expected matrix.
double residual_vs_head(const ComplexMatrix& actual, const ComplexMatrix& head, double scale) {
  const std::size_t tail = actual.dim() / head.dim();
  double s = 0.0;
  for (std::size_t i = 0; i < actual.dim(); ++i) {
    const auto row = actual.row(i);
    const std::size_t hi = i / tail;
    const std::size_t ti = i % tail;
    for (std::size_t j = 0; j < actual.dim(); ++j) {
      const cplx expected = (j % tail == ti) ? scale * head(hi, j / tail) : cplx{};
      s += std::norm(row[j] - expected);
    }
  }
  return std::sqrt(s);
}

}  // namespace

EncoderSpec build_p2() {
  Circuit c(2, {Cnot{0, 1}, Hadamard{0}, Cnot{0, 1}});
  return EncoderSpec{2, Parity::Even, 0, std::move(c), 1};
}

EncoderSpec build_p3() {
  Circuit c(3, {Cnot{2, 1}, Cnot{0, 2}, Cnot{1, 0}});
  return EncoderSpec{3, Parity::Odd, 1, std::move(c), -1};
}

EncoderSpec build_pn(unsigned n) {
  if (n < 2) throw BadQubitCount("encoder needs at least 2 qubits, got " + std::to_string(n));
  if (n == 2) return build_p2();
  if (n == 3) return build_p3();

  Circuit c(n);
  if (n % 2 == 1) {
    const unsigned k = (n - 1) / 2;
    c.append(build_p3().circuit, n - 3);
    c.append(build_pn(n - 2).circuit, 0);
    return EncoderSpec{n, Parity::Odd, k, std::move(c), sign_for(k)};
  }
  const unsigned k = (n - 2) / 2;
  c.append(build_p2().circuit, n - 2);
  c.append(build_pn(n - 1).circuit, 0);
  return EncoderSpec{n, Parity::Even, k, std::move(c), sign_for(k)};
}

ComplexMatrix diag_x() {
  const std::array<cplx, 4> d{1.0, -1.0, 1.0, -1.0};
  return ComplexMatrix::diagonal(d);
}

ComplexMatrix diag_y() {
  const std::array<cplx, 4> d{-1.0, -1.0, 1.0, 1.0};
  return ComplexMatrix::diagonal(d);
}

ComplexMatrix diag_z() {
  const std::array<cplx, 4> d{1.0, -1.0, -1.0, 1.0};
  return ComplexMatrix::diagonal(d);
}

ComplexMatrix ancilla_image(Parity parity, Axis axis) {
  if (parity == Parity::Odd) return pauli(axis);
  switch (axis) {
    case Axis::X: return diag_x();
    case Axis::Y: return diag_y();
    case Axis::Z: return diag_z();
  }
  throw InvalidArgument("ancilla_image: unknown axis");
}

ComplexMatrix expected_conjugate(const EncoderSpec& spec, Axis axis) {
  ComplexMatrix head = ancilla_image(spec.parity, axis);
  if (axis == Axis::Y) head *= static_cast<double>(spec.sign);
  return kron(head, ComplexMatrix::identity(spec.data_dim()));
}

ConjugationResiduals conjugation_report(const EncoderSpec& spec) {
  std::array<double, 3> out{};
  const std::array<Axis, 3> axes{Axis::X, Axis::Y, Axis::Z};
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const ComplexMatrix conj = conjugate_backward(spec.circuit, correlated_error(axes[a], spec.n));
    const double scale = axes[a] == Axis::Y ? static_cast<double>(spec.sign) : 1.0;
    out[a] = residual_vs_head(conj, ancilla_image(spec.parity, axes[a]), scale);
  }
  return {out[0], out[1], out[2]};
}

ComplexMatrix recursion_matrix(unsigned n) {
  if (n < 4) throw BadQubitCount("recursion_matrix needs n >= 4");
  if (n % 2 == 1) {
    const ComplexMatrix inner = realize(build_pn(n - 2).circuit);
    const ComplexMatrix head = realize(build_p3().circuit);
    return matmul(kron(ComplexMatrix::identity(4), inner),
                  kron(head, ComplexMatrix::identity(std::size_t{1} << (n - 3))));
  }
  const ComplexMatrix inner = realize(build_pn(n - 1).circuit);
  const ComplexMatrix head = realize(build_p2().circuit);
  return matmul(kron(ComplexMatrix::identity(2), inner),
                kron(head, ComplexMatrix::identity(std::size_t{1} << (n - 2))));
}

}  // namespace fcqec

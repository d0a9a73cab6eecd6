#include "fcqec/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "fcqec/errors.hpp"

namespace fcqec {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_register(unsigned n) {
  if (n == 0) throw BadQubitCount("register must have at least one qubit");
  if (n >= 8 * sizeof(std::size_t) - 1) throw BadQubitCount("register too large");
}

// i^e for integer e, exact.
cplx i_power(unsigned e) {
  switch (e % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

char axis_name(Axis axis) noexcept {
  switch (axis) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

ComplexMatrix pauli(Axis axis) {
  using namespace std::complex_literals;
  switch (axis) {
    case Axis::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case Axis::Y: return {{0.0, -1.0i}, {1.0i, 0.0}};
    case Axis::Z: return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw InvalidArgument("pauli: unknown axis");
}

ComplexMatrix hadamard() {
  return {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
}

ComplexMatrix cnot_matrix(unsigned n, unsigned control, unsigned target) {
  Circuit c(n, {Cnot{control, target}});
  return gate_matrix(c.ops().front(), n);
}

ComplexMatrix correlated_error(Axis axis, unsigned n) {
  if (n == 0) throw BadQubitCount("correlated_error: n must be at least 1");
  const ComplexMatrix p = pauli(axis);
  ComplexMatrix out = p;
  for (unsigned r = 1; r < n; ++r) out = kron(p, out);
  return out;
}

ComplexMatrix MonomialOperator::to_dense() const {
  ComplexMatrix out(dim());
  for (std::size_t s = 0; s < dim(); ++s) out(image[s], s) = phase[s];
  return out;
}

std::shared_ptr<const MonomialOperator> correlated_error_monomial(Axis axis, unsigned n) {
  check_register(n);
  static std::mutex mutex;
  static std::map<std::pair<Axis, unsigned>, std::shared_ptr<const MonomialOperator>> cache;

  const std::lock_guard lock(mutex);
  auto& slot = cache[{axis, n}];
  if (slot) return slot;

  const std::size_t dim = std::size_t{1} << n;
  const std::size_t all_ones = dim - 1;
  auto op = std::make_shared<MonomialOperator>();
  op->image.resize(dim);
  op->phase.resize(dim);
  // sigma_x e_b = e_{1-b}; sigma_y e_0 = i e_1, sigma_y e_1 = -i e_0;
  // sigma_z e_b = (-1)^b e_b. Tensor powers multiply per-qubit factors.
  const cplx y_global = i_power(n);
  for (std::size_t s = 0; s < dim; ++s) {
    const double parity = (std::popcount(s) % 2 == 0) ? 1.0 : -1.0;
    switch (axis) {
      case Axis::X:
        op->image[s] = s ^ all_ones;
        op->phase[s] = 1.0;
        break;
      case Axis::Y:
        op->image[s] = s ^ all_ones;
        op->phase[s] = parity * y_global;
        break;
      case Axis::Z:
        op->image[s] = s;
        op->phase[s] = parity;
        break;
    }
  }
  slot = std::move(op);
  return slot;
}

ComplexMatrix monomial_left(const MonomialOperator& m, const ComplexMatrix& a) {
  if (m.dim() != a.dim()) throw DimensionMismatch("monomial_left: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t s = 0; s < m.dim(); ++s) {
    const auto src = a.row(s);
    auto dst = out.row(m.image[s]);
    const cplx ph = m.phase[s];
    for (std::size_t j = 0; j < src.size(); ++j) dst[j] = ph * src[j];
  }
  return out;
}

ComplexMatrix monomial_right_dagger(const ComplexMatrix& a, const MonomialOperator& m) {
  if (m.dim() != a.dim()) throw DimensionMismatch("monomial_right_dagger: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto src = a.row(r);
    auto dst = out.row(r);
    for (std::size_t s = 0; s < m.dim(); ++s) dst[m.image[s]] = src[s] * std::conj(m.phase[s]);
  }
  return out;
}

ComplexMatrix monomial_conjugate(const MonomialOperator& m, const ComplexMatrix& a) {
  if (m.dim() != a.dim()) throw DimensionMismatch("monomial_conjugate: dimension mismatch");
  ComplexMatrix out(a.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    const auto src = a.row(r);
    auto dst = out.row(m.image[r]);
    const cplx pr = m.phase[r];
    for (std::size_t c = 0; c < a.dim(); ++c) dst[m.image[c]] = pr * src[c] * std::conj(m.phase[c]);
  }
  return out;
}

std::string to_string(const GateOp& op) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cnot>) {
          return "CNOT(" + std::to_string(g.control) + "," + std::to_string(g.target) + ")";
        } else {
          return "H(" + std::to_string(g.qubit) + ")";
        }
      },
      op);
}

Circuit::Circuit(unsigned n_qubits) : n_qubits_(n_qubits) { check_register(n_qubits); }

Circuit::Circuit(unsigned n_qubits, std::vector<GateOp> ops) : Circuit(n_qubits) {
  for (const auto& op : ops) check(op);
  ops_ = std::move(ops);
}

void Circuit::check(const GateOp& op) const {
  std::visit(
      [this](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cnot>) {
          if (g.control >= n_qubits_ || g.target >= n_qubits_ || g.control == g.target) {
            throw BadQubitIndex("invalid CNOT(" + std::to_string(g.control) + "," +
                                std::to_string(g.target) + ") on " + std::to_string(n_qubits_) +
                                " qubits");
          }
        } else {
          if (g.qubit >= n_qubits_) {
            throw BadQubitIndex("invalid H(" + std::to_string(g.qubit) + ") on " +
                                std::to_string(n_qubits_) + " qubits");
          }
        }
      },
      op);
}

Circuit& Circuit::push(GateOp op) {
  check(op);
  ops_.push_back(op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other, unsigned offset) {
  for (const auto& op : other.ops()) {
    push(std::visit(
        [offset](const auto& g) -> GateOp {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, Cnot>) {
            return Cnot{g.control + offset, g.target + offset};
          } else {
            return Hadamard{g.qubit + offset};
          }
        },
        op));
  }
  return *this;
}

std::size_t Circuit::cnot_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      ops_.begin(), ops_.end(), [](const GateOp& op) { return std::holds_alternative<Cnot>(op); }));
}

std::size_t Circuit::h_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), [](const GateOp& op) {
    return std::holds_alternative<Hadamard>(op);
  }));
}

ComplexMatrix gate_matrix(const GateOp& op, unsigned n) {
  static_cast<void>(Circuit(n, {op}));  // validates indices
  if (const auto* h = std::get_if<Hadamard>(&op)) {
    const std::size_t high = std::size_t{1} << (n - 1 - h->qubit);
    const std::size_t low = std::size_t{1} << h->qubit;
    return kron(kron(ComplexMatrix::identity(high), hadamard()), ComplexMatrix::identity(low));
  }
  const auto& cx = std::get<Cnot>(op);
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t cbit = std::size_t{1} << cx.control;
  const std::size_t tbit = std::size_t{1} << cx.target;
  ComplexMatrix out(dim);
  for (std::size_t s = 0; s < dim; ++s) out((s & cbit) ? (s ^ tbit) : s, s) = 1.0;
  return out;
}

ComplexMatrix realize(const Circuit& c) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.n_qubits());
  for (const auto& op : c.ops()) apply_gate_left(op, u);
  return u;
}

Circuit invert(const Circuit& c) {
  std::vector<GateOp> ops(c.ops().rbegin(), c.ops().rend());
  return Circuit(c.n_qubits(), std::move(ops));
}

void apply_gate_left(const GateOp& op, ComplexMatrix& a) {
  const std::size_t dim = a.dim();
  if (const auto* cx = std::get_if<Cnot>(&op)) {
    const std::size_t cbit = std::size_t{1} << cx->control;
    const std::size_t tbit = std::size_t{1} << cx->target;
    if ((cbit | tbit) >= dim) throw BadQubitIndex("apply_gate_left: gate outside register");
    for (std::size_t s = 0; s < dim; ++s) {
      if ((s & cbit) && !(s & tbit)) {
        auto r0 = a.row(s);
        auto r1 = a.row(s | tbit);
        std::swap_ranges(r0.begin(), r0.end(), r1.begin());
      }
    }
    return;
  }
  const std::size_t bit = std::size_t{1} << std::get<Hadamard>(op).qubit;
  if (bit >= dim) throw BadQubitIndex("apply_gate_left: gate outside register");
  for (std::size_t s = 0; s < dim; ++s) {
    if (s & bit) continue;
    auto r0 = a.row(s);
    auto r1 = a.row(s | bit);
    for (std::size_t j = 0; j < dim; ++j) {
      const cplx u = r0[j];
      const cplx v = r1[j];
      r0[j] = (u + v) * kInvSqrt2;
      r1[j] = (u - v) * kInvSqrt2;
    }
  }
}

void apply_gate_right_dagger(const GateOp& op, ComplexMatrix& a) {
  const std::size_t dim = a.dim();
  if (const auto* cx = std::get_if<Cnot>(&op)) {
    const std::size_t cbit = std::size_t{1} << cx->control;
    const std::size_t tbit = std::size_t{1} << cx->target;
    if ((cbit | tbit) >= dim) throw BadQubitIndex("apply_gate_right_dagger: gate outside register");
    for (std::size_t r = 0; r < dim; ++r) {
      auto row = a.row(r);
      for (std::size_t s = 0; s < dim; ++s)
        if ((s & cbit) && !(s & tbit)) std::swap(row[s], row[s | tbit]);
    }
    return;
  }
  const std::size_t bit = std::size_t{1} << std::get<Hadamard>(op).qubit;
  if (bit >= dim) throw BadQubitIndex("apply_gate_right_dagger: gate outside register");
  for (std::size_t r = 0; r < dim; ++r) {
    auto row = a.row(r);
    for (std::size_t s = 0; s < dim; ++s) {
      if (s & bit) continue;
      const cplx u = row[s];
      const cplx v = row[s | bit];
      row[s] = (u + v) * kInvSqrt2;
      row[s | bit] = (u - v) * kInvSqrt2;
    }
  }
}

ComplexMatrix conjugate_forward(const Circuit& c, ComplexMatrix a) {
  if (a.dim() != (std::size_t{1} << c.n_qubits())) {
    throw DimensionMismatch("conjugate_forward: matrix does not match circuit register");
  }
  for (const auto& op : c.ops()) {
    apply_gate_left(op, a);
    apply_gate_right_dagger(op, a);
  }
  return a;
}

ComplexMatrix conjugate_backward(const Circuit& c, ComplexMatrix a) {
  // Gates are Hermitian, so G^dagger A G is the same row/column update as
  // G A G^dagger; only the order reverses.
  return conjugate_forward(invert(c), std::move(a));
}

}  // namespace fcqec

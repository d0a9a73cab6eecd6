#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fcqec/matrix.hpp"

namespace fcqec {

enum class Axis { X, Y, Z };

char axis_name(Axis axis) noexcept;

/// sigma_x, sigma_y or sigma_z.
ComplexMatrix pauli(Axis axis);
/// (1/sqrt 2) [[1, 1], [1, -1]]
ComplexMatrix hadamard();

/// C_{control,target} on n qubits: column s is basis vector s with bit
/// `target` flipped when bit `control` of s is set. Built by index
/// permutation, so every entry is exactly 0.0 or 1.0.
ComplexMatrix cnot_matrix(unsigned n, unsigned control, unsigned target);

/// n-fold Kronecker power of a Pauli matrix (X_n, Y_n, Z_n).
ComplexMatrix correlated_error(Axis axis, unsigned n);

/// Matrix with exactly one nonzero per column: M e_s = phase[s] e_{image[s]}.
/// Compact form of X_n, Y_n, Z_n; applying one to a dense matrix is O(N^2).
struct MonomialOperator {
  std::vector<std::size_t> image;
  std::vector<cplx> phase;

  [[nodiscard]] std::size_t dim() const noexcept { return image.size(); }
  [[nodiscard]] ComplexMatrix to_dense() const;
};

/// Cached compact X_n / Y_n / Z_n. Safe to call concurrently.
std::shared_ptr<const MonomialOperator> correlated_error_monomial(Axis axis, unsigned n);

/// M A
ComplexMatrix monomial_left(const MonomialOperator& m, const ComplexMatrix& a);
/// A M^dagger
ComplexMatrix monomial_right_dagger(const ComplexMatrix& a, const MonomialOperator& m);
/// M A M^dagger
ComplexMatrix monomial_conjugate(const MonomialOperator& m, const ComplexMatrix& a);

struct Cnot {
  unsigned control;
  unsigned target;
  friend bool operator==(const Cnot&, const Cnot&) = default;
};

struct Hadamard {
  unsigned qubit;
  friend bool operator==(const Hadamard&, const Hadamard&) = default;
};

using GateOp = std::variant<Cnot, Hadamard>;

std::string to_string(const GateOp& op);

/// Ordered gate list on an n-qubit register. The first op acts first on the
/// state (left-to-right in a circuit diagram).
class Circuit {
 public:
  /// Throws BadQubitCount if n_qubits == 0.
  explicit Circuit(unsigned n_qubits);
  /// Throws BadQubitIndex if any op is out of range or a CNOT has
  /// control == target.
  Circuit(unsigned n_qubits, std::vector<GateOp> ops);

  [[nodiscard]] unsigned n_qubits() const noexcept { return n_qubits_; }
  [[nodiscard]] const std::vector<GateOp>& ops() const noexcept { return ops_; }

  Circuit& push(GateOp op);
  /// Appends `other` with every qubit index shifted by `offset`.
  Circuit& append(const Circuit& other, unsigned offset = 0);

  [[nodiscard]] std::size_t cnot_count() const noexcept;
  [[nodiscard]] std::size_t h_count() const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check(const GateOp& op) const;

  unsigned n_qubits_;
  std::vector<GateOp> ops_;
};

/// Dense 2^n x 2^n matrix of a single gate, with H on qubit q embedded as
/// I_{2^{n-1-q}} (x) H (x) I_{2^q}.
ComplexMatrix gate_matrix(const GateOp& op, unsigned n);

/// realize([g1, ..., gm]) = G_m ... G_1. CNOT-only circuits give exact 0/1
/// permutation matrices.
ComplexMatrix realize(const Circuit& c);

/// Reversed gate list; every gate here is self-inverse.
Circuit invert(const Circuit& c);

/// In place A <- G A.
void apply_gate_left(const GateOp& op, ComplexMatrix& a);
/// In place A <- A G^dagger. (CNOT and H are real symmetric, so this equals
/// A G.)
void apply_gate_right_dagger(const GateOp& op, ComplexMatrix& a);

/// realize(c) A realize(c)^dagger, computed gate by gate in O(m N^2).
ComplexMatrix conjugate_forward(const Circuit& c, ComplexMatrix a);
/// realize(c)^dagger A realize(c).
ComplexMatrix conjugate_backward(const Circuit& c, ComplexMatrix a);

}  // namespace fcqec

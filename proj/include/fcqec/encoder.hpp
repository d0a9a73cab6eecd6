#pragma once

#include "fcqec/gates.hpp"
#include "fcqec/matrix.hpp"

namespace fcqec {

enum class Parity { Odd, Even };

/// Encoding circuit P_n together with its recursion parameters.
///
/// Odd n = 2k+1: P_n is a CNOT-only circuit of 3k gates and
///   P^dagger X_n P = X (x) I,  P^dagger Y_n P = (-1)^k Y (x) I,
///   P^dagger Z_n P = Z (x) I.
/// Even n = 2k+2: P_n has 3k+2 CNOTs and one Hadamard and
///   P^dagger X_n P = D_X (x) I,  P^dagger Y_n P = (-1)^k D_Y (x) I,
///   P^dagger Z_n P = D_Z (x) I,
/// with D_X = diag(1,-1,1,-1), D_Y = diag(-1,-1,1,1), D_Z = diag(1,-1,-1,1).
struct EncoderSpec {
  unsigned n;
  Parity parity;
  unsigned k;
  Circuit circuit;
  int sign;  // (-1)^k, the factor on the Y conjugation

  /// Ancilla dimension: 2 for odd n, 4 for even n.
  [[nodiscard]] std::size_t ancilla_dim() const noexcept { return parity == Parity::Odd ? 2 : 4; }
  /// Data register dimension 2^(n-1) or 2^(n-2).
  [[nodiscard]] std::size_t data_dim() const noexcept {
    return (std::size_t{1} << n) / ancilla_dim();
  }
};

/// [CNOT(0,1), H(0), CNOT(0,1)], i.e. C_01 (I (x) H) C_01.
EncoderSpec build_p2();
/// [CNOT(2,1), CNOT(0,2), CNOT(1,0)], i.e. the matrix product C_10 C_02 C_21.
EncoderSpec build_p3();

/// Recursive encoder for n >= 2. Odd n applies P_3 on the top three qubits
/// (n-1, n-2, n-3) and then P_{n-2} on qubits 0..n-3. Even n applies P_2 on
/// qubits (n-1, n-2) and then the odd P_{n-1} on qubits 0..n-2.
/// Throws BadQubitCount for n < 2.
EncoderSpec build_pn(unsigned n);

/// D_X, D_Y, D_Z as 4x4 matrices.
ComplexMatrix diag_x();
ComplexMatrix diag_y();
ComplexMatrix diag_z();

/// The single-qubit (odd) or two-qubit diagonal (even) ancilla operator that
/// `axis` conjugates to, without the sign factor.
ComplexMatrix ancilla_image(Parity parity, Axis axis);

/// Expected P^dagger E_n P for E_n = X_n, Y_n or Z_n, sign included.
ComplexMatrix expected_conjugate(const EncoderSpec& spec, Axis axis);

struct ConjugationResiduals {
  double x;
  double y;
  double z;
};

/// Frobenius residuals ||P^dagger E_n P - expected||_F for X, Y, Z.
ConjugationResiduals conjugation_report(const EncoderSpec& spec);

/// Matrix-level recursion used as an independent check on the circuit
/// recursion: kron(I_4, P_{n-2}) * kron(P_3, I) for odd n and
/// kron(I_2, P_{n-1}) * kron(P_2, I) for even n, built from dense matrix
/// products rather than gate application. n must be >= 4.
ComplexMatrix recursion_matrix(unsigned n);

}  // namespace fcqec

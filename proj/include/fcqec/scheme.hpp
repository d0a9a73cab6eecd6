#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fcqec/channel.hpp"
#include "fcqec/encoder.hpp"
#include "fcqec/matrix.hpp"

namespace fcqec {

/// Classical two-bit ancilla |ij><ij|; i sits on the higher qubit.
struct ClassicalBits {
  unsigned i;
  unsigned j;
  friend bool operator==(const ClassicalBits&, const ClassicalBits&) = default;
};

/// Throws InvalidArgument unless i, j are 0 or 1.
DensityMatrix classical_ancilla(ClassicalBits bits);

/// The bits of sigma when it is exactly a 4x4 computational-basis projector.
std::optional<ClassicalBits> as_classical(const DensityMatrix& sigma);

/// P_n (sigma (x) rho) P_n^dagger. Throws AncillaSizeError if sigma is not
/// 2x2 (odd n) or 4x4 (even n), DimensionMismatch if rho does not fill the
/// rest of the register.
DensityMatrix encode(const EncoderSpec& spec, const DensityMatrix& sigma, const DensityMatrix& rho);

/// P_n^dagger tau P_n.
DensityMatrix decode(const EncoderSpec& spec, const DensityMatrix& tau);

/// Ancilla after one Pauli channel:
///   odd:  p0 s + p1 X s X + p2 Y s Y + p3 Z s Z
///   even: p0 s + p1 D_X s D_X + p2 D_Y s D_Y + p3 D_Z s D_Z
/// The (-1)^k sign cancels in each conjugation, so k is accepted for symmetry
/// with the encoder but does not change the result.
DensityMatrix predicted_ancilla(const DensityMatrix& sigma, const PauliProbs& probs, Parity parity,
                                unsigned k);

/// Ancilla after a channel sequence. Each Kraus operator
/// a I + b X_n + c Y_n + d Z_n decodes to (a I + b A_X + c s A_Y + d A_Z) (x) I
/// with s = (-1)^k and A the odd/even ancilla images, so the ancilla evolves
/// under the induced Kraus map while the data register is untouched.
DensityMatrix predicted_ancilla(const EncoderSpec& spec, const DensityMatrix& sigma,
                                std::span<const Channel> channels, unsigned repeats);

namespace tolerance {
/// Decoded state must equal sigma (x) rho this closely for hybrid_exact.
inline constexpr double kHybridExact = 1e-11;
}  // namespace tolerance

struct SchemeOutcome {
  DensityMatrix recovered_rho;
  DensityMatrix ancilla_out;
  DensityMatrix predicted_ancilla;
  double rho_residual;      // ||recovered - rho||_F
  double ancilla_residual;  // ||ancilla_out - predicted||_F
  double product_residual;  // ||decoded - ancilla_out (x) recovered||_F
  /// ||decoded - sigma (x) rho||_F; set only for even n with classical sigma.
  std::optional<double> hybrid_residual;
  /// hybrid_residual <= kHybridExact; set only for even n with classical sigma.
  std::optional<bool> hybrid_exact;
};

/// Encode, run the channels (whole list `repeats` times), decode, and split
/// the decoded state back into ancilla and data.
SchemeOutcome run_trial(unsigned n, const DensityMatrix& sigma, const DensityMatrix& rho,
                        std::span<const Channel> channels, unsigned repeats = 1);

/// run_trial with sigma = |00>, |01>, |10>, |11> under one Pauli channel.
/// Throws BadQubitCount for odd n.
std::vector<SchemeOutcome> hybrid_sweep(unsigned n, const DensityMatrix& rho,
                                        const PauliProbs& probs);

}  // namespace fcqec

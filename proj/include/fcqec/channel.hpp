#pragma once

#include <array>
#include <span>
#include <variant>
#include <vector>

#include "fcqec/matrix.hpp"

namespace fcqec {

/// p0..p3 for the error operators I, X_n, Y_n, Z_n.
using PauliProbs = std::array<double, 4>;

/// Fully correlated channel
///   E(rho) = p0 rho + p1 X_n rho X_n^dagger + p2 Y_n rho Y_n^dagger
///          + p3 Z_n rho Z_n^dagger.
class PauliChannel {
 public:
  /// Probabilities must be finite, nonnegative and sum to 1 within 1e-9; they
  /// are then rescaled to sum to 1. Throws InvalidProbabilities otherwise.
  PauliChannel(unsigned n, PauliProbs probs);

  [[nodiscard]] unsigned n() const noexcept { return n_; }
  [[nodiscard]] const PauliProbs& probs() const noexcept { return probs_; }

 private:
  unsigned n_;
  PauliProbs probs_;
};

/// Validates and rescales a probability vector as PauliChannel does.
PauliProbs normalize_probs(PauliProbs probs);

/// Coefficients (alpha, beta, gamma, delta) of one Kraus operator
/// F = alpha I + beta X_n + gamma Y_n + delta Z_n.
using KrausCoeffs = std::array<cplx, 4>;

/// Channel whose Kraus operators lie in span{I, X_n, Y_n, Z_n}.
class SpanChannel {
 public:
  /// Throws NotTracePreserving unless sum_j F_j^dagger F_j = I within 1e-10.
  SpanChannel(unsigned n, std::vector<KrausCoeffs> kraus);

  static SpanChannel from_pauli(const PauliChannel& ch);

  [[nodiscard]] unsigned n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<KrausCoeffs>& kraus() const noexcept { return kraus_; }

 private:
  unsigned n_;
  std::vector<KrausCoeffs> kraus_;
};

using Channel = std::variant<PauliChannel, SpanChannel>;

unsigned channel_qubits(const Channel& ch) noexcept;

/// Product of two correlated Pauli operators: E_a E_b = phase * E_c, with
/// index 0..3 standing for I, X_n, Y_n, Z_n.
struct CorrelatedProduct {
  cplx phase;
  int index;
};
CorrelatedProduct correlated_product(int a, int b, unsigned n);

/// Coefficients of sum_j F_j^dagger F_j in the basis {I, X_n, Y_n, Z_n}.
std::array<cplx, 4> kraus_gram(std::span<const KrausCoeffs> kraus, unsigned n);

/// Dense F = alpha I + beta X_n + gamma Y_n + delta Z_n.
ComplexMatrix kraus_matrix(const KrausCoeffs& coeffs, unsigned n);

/// Throws DimensionMismatch if rho.dim() != 2^n.
DensityMatrix apply_pauli_channel(const PauliChannel& ch, const DensityMatrix& rho);
DensityMatrix apply_span_channel(const SpanChannel& ch, const DensityMatrix& rho);
DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho);

/// Applies the whole list in order, `repeats` times over. Throws
/// DimensionMismatch if the channels disagree on n or rho has the wrong size,
/// InvalidArgument if repeats == 0.
DensityMatrix apply_sequence(std::span<const Channel> channels, const DensityMatrix& rho,
                             unsigned repeats);

}  // namespace fcqec

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcqec/channel.hpp"
#include "fcqec/matrix.hpp"
#include "fcqec/optimality.hpp"
#include "fcqec/scheme.hpp"

namespace fcqec {

namespace tolerance {
/// Pass threshold for even-n conjugation residuals and every trial residual.
inline constexpr double kReport = 1e-11;
}  // namespace tolerance

struct TrialRecord {
  std::uint64_t seed;
  std::string sigma;  // "random" or "classical:ij"
  double rho_residual;
  double ancilla_residual;
  double product_residual;
  std::optional<bool> hybrid_exact;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct VerificationReport {
  unsigned n;
  std::string parity;  // "odd" or "even"
  std::size_t cnot_count;
  std::size_t h_count;
  std::array<double, 3> conjugation_residuals;
  std::vector<TrialRecord> trials;
  bool pass;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Gate counts the encoder must have: 3k CNOTs (odd) or 3k+2 CNOTs and one
/// Hadamard (even).
std::size_t expected_cnot_count(unsigned n);
std::size_t expected_h_count(unsigned n);

/// Random probability vector (four uniforms, normalised).
PauliProbs random_probs(std::uint64_t seed);

/// Builds P_n, checks gate counts and conjugation identities, and runs
/// `trials` randomised encode/channel/decode trials. Trial t uses seed
/// split_seed(seed, t). For even n each trial also sweeps the four classical
/// ancillas. Odd-n conjugation residuals must be exactly 0; everything else
/// must be at most kReport. Throws BadQubitCount unless 2 <= n <= 12.
VerificationReport run_verification(unsigned n, unsigned trials, std::uint64_t seed);

/// Recomputes `pass` from the stored fields.
bool report_passes(const VerificationReport& report);

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(std::string_view text);
std::string render_table(const VerificationReport& report);

/// Optimality report for P_3: mismatch count, counting bound, exhaustive
/// search up to length 2 and the shortest witness.
struct OptimalityReport {
  std::size_t mismatch;
  std::size_t lower_bound;
  std::size_t words_up_to_two;
  bool found_up_to_two;
  std::vector<Cnot> witness;
  bool witness_realizes_p3;
};

OptimalityReport run_optimality();
std::string render_optimality(const OptimalityReport& report);

/// Matrix JSON: {"dim": d, "entries": [[re, im], ...]} in row-major order.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(std::string_view text);

/// Channel list JSON: an array of {"pauli": [p0, p1, p2, p3]} or
/// {"span": [[are, aim, bre, bim, gre, gim, dre, dim], ...]} objects.
std::vector<Channel> channels_from_json(std::string_view text, unsigned n);

/// Single-trial JSON with every residual and both ancilla matrices.
std::string outcome_to_json(const SchemeOutcome& outcome, unsigned n, std::string_view sigma_mode,
                            std::optional<std::uint64_t> seed);

}  // namespace fcqec

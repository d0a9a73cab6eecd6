#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fcqec/gates.hpp"
#include "fcqec/matrix.hpp"

namespace fcqec {

/// Permutation matrix in column form: column s is basis vector perm[s].
class PermutationTable {
 public:
  /// Throws InvalidArgument unless perm is a bijection on {0, ..., 2^n - 1}.
  PermutationTable(unsigned n, std::vector<std::size_t> perm);

  static PermutationTable identity(unsigned n);
  static PermutationTable from_cnot(unsigned n, Cnot gate);
  /// Composition of a CNOT-only circuit. Throws InvalidArgument if the
  /// circuit contains a Hadamard.
  static PermutationTable from_circuit(const Circuit& c);
  /// Throws InvalidArgument unless m is an exact 0/1 permutation matrix.
  static PermutationTable from_matrix(const ComplexMatrix& m);

  [[nodiscard]] unsigned n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  [[nodiscard]] std::size_t operator[](std::size_t s) const noexcept { return perm_[s]; }

  [[nodiscard]] ComplexMatrix to_matrix() const;

  friend bool operator==(const PermutationTable&, const PermutationTable&) = default;

 private:
  unsigned n_;
  std::vector<std::size_t> perm_;
};

/// after o before: the matrix product (after)(before), i.e. `before` acts
/// first. Throws DimensionMismatch on differing n.
PermutationTable compose(const PermutationTable& after, const PermutationTable& before);

/// Total differing binary digits across all columns.
std::size_t mismatch_count(const PermutationTable& a, const PermutationTable& b);

/// All n(n-1) ordered CNOTs, ordered by control then target.
std::vector<Cnot> cnot_alphabet(unsigned n);
/// Tables for cnot_alphabet(n), same order.
std::vector<PermutationTable> all_cnots(unsigned n);

struct SearchResult {
  /// Alphabet indices in application order (first entry acts first).
  std::optional<std::vector<std::size_t>> witness;
  /// Nonempty words compared against the target.
  std::size_t words_examined;
};

/// Shortest CNOT word of length <= max_len composing to target, searching
/// lengths 0, 1, ... in order and words lexicographically within a length.
/// Throws InvalidArgument if max_len > 4.
SearchResult exhaustive_search(const PermutationTable& target, std::size_t max_len);

/// Circuit for a search witness.
Circuit witness_circuit(unsigned n, const std::vector<std::size_t>& witness);

/// ceil(mismatch_count(I, target) / 2^(n-1)). Composing one more CNOT flips
/// the target bit in exactly the 2^(n-1) columns whose control bit is set, so
/// no word shorter than this reaches target. For n = 3 the divisor is 4.
std::size_t counting_lower_bound(const PermutationTable& target);

}  // namespace fcqec

#include "fcqec/optimality.hpp"

#include <algorithm>
#include <bit>

#include "fcqec/errors.hpp"

namespace fcqec {

namespace {

constexpr std::size_t kMaxSearchLength = 4;

// Odometer increment, last letter fastest. False once every word is done.
bool next_word(std::vector<std::size_t>& word, std::size_t base) {
  for (std::size_t pos = word.size(); pos-- > 0;) {
    if (++word[pos] < base) return true;
    word[pos] = 0;
  }
  return false;
}

}  // namespace

PermutationTable::PermutationTable(unsigned n, std::vector<std::size_t> perm)
    : n_(n), perm_(std::move(perm)) {
  if (n == 0 || n > 20) throw InvalidArgument("PermutationTable: unsupported qubit count");
  const std::size_t dim = std::size_t{1} << n;
  if (perm_.size() != dim) throw InvalidArgument("PermutationTable: expected 2^n images");
  std::vector<bool> seen(dim, false);
  for (std::size_t v : perm_) {
    if (v >= dim || seen[v]) throw InvalidArgument("PermutationTable: not a bijection");
    seen[v] = true;
  }
}

PermutationTable PermutationTable::identity(unsigned n) {
  std::vector<std::size_t> perm(std::size_t{1} << n);
  for (std::size_t s = 0; s < perm.size(); ++s) perm[s] = s;
  return PermutationTable(n, std::move(perm));
}

PermutationTable PermutationTable::from_cnot(unsigned n, Cnot gate) {
  static_cast<void>(Circuit(n, {gate}));  // validates indices
  const std::size_t cbit = std::size_t{1} << gate.control;
  const std::size_t tbit = std::size_t{1} << gate.target;
  std::vector<std::size_t> perm(std::size_t{1} << n);
  for (std::size_t s = 0; s < perm.size(); ++s) perm[s] = (s & cbit) ? (s ^ tbit) : s;
  return PermutationTable(n, std::move(perm));
}

PermutationTable PermutationTable::from_circuit(const Circuit& c) {
  PermutationTable out = identity(c.n_qubits());
  for (const auto& op : c.ops()) {
    const auto* cx = std::get_if<Cnot>(&op);
    if (!cx) throw InvalidArgument("from_circuit: circuit contains a non-CNOT gate");
    out = compose(from_cnot(c.n_qubits(), *cx), out);
  }
  return out;
}

PermutationTable PermutationTable::from_matrix(const ComplexMatrix& m) {
  if (!is_power_of_two(m.dim()) || m.dim() < 2 || !is_exact_permutation(m)) {
    throw InvalidArgument("from_matrix: not an exact 0/1 permutation matrix");
  }
  std::vector<std::size_t> perm(m.dim());
  for (std::size_t col = 0; col < m.dim(); ++col)
    for (std::size_t row = 0; row < m.dim(); ++row)
      if (m(row, col) == cplx{1.0, 0.0}) perm[col] = row;
  return PermutationTable(log2_exact(m.dim()), std::move(perm));
}

ComplexMatrix PermutationTable::to_matrix() const {
  ComplexMatrix m(perm_.size());
  for (std::size_t s = 0; s < perm_.size(); ++s) m(perm_[s], s) = 1.0;
  return m;
}

PermutationTable compose(const PermutationTable& after, const PermutationTable& before) {
  if (after.n() != before.n()) throw DimensionMismatch("compose: qubit counts differ");
  std::vector<std::size_t> perm(before.perm().size());
  for (std::size_t s = 0; s < perm.size(); ++s) perm[s] = after[before[s]];
  return PermutationTable(after.n(), std::move(perm));
}

std::size_t mismatch_count(const PermutationTable& a, const PermutationTable& b) {
  if (a.n() != b.n()) throw DimensionMismatch("mismatch_count: qubit counts differ");
  std::size_t total = 0;
  for (std::size_t s = 0; s < a.perm().size(); ++s)
    total += static_cast<std::size_t>(std::popcount(a[s] ^ b[s]));
  return total;
}

std::vector<Cnot> cnot_alphabet(unsigned n) {
  if (n < 2) throw BadQubitCount("CNOT alphabet needs n >= 2");
  std::vector<Cnot> out;
  for (unsigned c = 0; c < n; ++c)
    for (unsigned t = 0; t < n; ++t)
      if (c != t) out.push_back({c, t});
  return out;
}

std::vector<PermutationTable> all_cnots(unsigned n) {
  std::vector<PermutationTable> out;
  for (const Cnot& g : cnot_alphabet(n)) out.push_back(PermutationTable::from_cnot(n, g));
  return out;
}

SearchResult exhaustive_search(const PermutationTable& target, std::size_t max_len) {
  if (max_len > kMaxSearchLength) {
    throw InvalidArgument("exhaustive_search: max_len above " + std::to_string(kMaxSearchLength));
  }
  SearchResult result{std::nullopt, 0};
  const unsigned n = target.n();
  if (target == PermutationTable::identity(n)) {
    result.witness = std::vector<std::size_t>{};
    return result;
  }
  if (n < 2) return result;

  const auto alphabet = all_cnots(n);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> word(len, 0);
    do {
      PermutationTable acc = PermutationTable::identity(n);
      for (std::size_t letter : word) acc = compose(alphabet[letter], acc);
      ++result.words_examined;
      if (acc == target) {
        result.witness = word;
        return result;
      }
    } while (next_word(word, alphabet.size()));
  }
  return result;
}

Circuit witness_circuit(unsigned n, const std::vector<std::size_t>& witness) {
  const auto alphabet = cnot_alphabet(n);
  Circuit c(n);
  for (std::size_t letter : witness) {
    if (letter >= alphabet.size()) throw InvalidArgument("witness_circuit: letter out of range");
    c.push(alphabet[letter]);
  }
  return c;
}

std::size_t counting_lower_bound(const PermutationTable& target) {
  const std::size_t per_gate = std::size_t{1} << (target.n() - 1);
  const std::size_t m = mismatch_count(PermutationTable::identity(target.n()), target);
  return (m + per_gate - 1) / per_gate;
}

}  // namespace fcqec

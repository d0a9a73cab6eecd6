#include "fcqec/channel.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "fcqec/errors.hpp"
#include "fcqec/gates.hpp"

namespace fcqec {

namespace {

constexpr double kProbSumTolerance = 1e-9;
constexpr double kTracePreservingTolerance = 1e-10;

constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

void require_state_size(unsigned n, const DensityMatrix& rho, const char* what) {
  if (n >= 8 * sizeof(std::size_t) - 1 || rho.dim() != (std::size_t{1} << n)) {
    std::ostringstream msg;
    msg << what << ": state of dimension " << rho.dim() << " on a " << n << "-qubit channel";
    throw DimensionMismatch(msg.str());
  }
}

cplx cpow_int(cplx base, unsigned e) {
  cplx out{1.0, 0.0};
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

PauliProbs normalize_probs(PauliProbs probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidProbabilities("probabilities must be finite and nonnegative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTolerance) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum << ", expected 1";
    throw InvalidProbabilities(msg.str());
  }
  for (double& p : probs) p /= sum;
  return probs;
}

PauliChannel::PauliChannel(unsigned n, PauliProbs probs) : n_(n), probs_(normalize_probs(probs)) {
  if (n == 0) throw BadQubitCount("channel needs at least one qubit");
}

CorrelatedProduct correlated_product(int a, int b, unsigned n) {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw InvalidArgument("correlated_product: index 0..3");
  if (a == 0) return {1.0, b};
  if (b == 0) return {1.0, a};
  if (a == b) return {1.0, 0};
  // sigma_a sigma_b = i eps_abc sigma_c; the n-fold power carries (i eps)^n.
  const int c = 6 - a - b;
  const bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
  const cplx single = cyclic ? cplx{0.0, 1.0} : cplx{0.0, -1.0};
  return {cpow_int(single, n), c};
}

std::array<cplx, 4> kraus_gram(std::span<const KrausCoeffs> kraus, unsigned n) {
  // Every E_a is Hermitian, so F^dagger = sum_a conj(c_a) E_a.
  std::array<cplx, 4> out{};
  for (const auto& f : kraus) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const auto prod = correlated_product(a, b, n);
        out[static_cast<std::size_t>(prod.index)] +=
            std::conj(f[static_cast<std::size_t>(a)]) * f[static_cast<std::size_t>(b)] * prod.phase;
      }
    }
  }
  return out;
}

ComplexMatrix kraus_matrix(const KrausCoeffs& coeffs, unsigned n) {
  ComplexMatrix f = ComplexMatrix::identity(std::size_t{1} << n);
  f *= coeffs[0];
  for (std::size_t a = 0; a < 3; ++a) f += coeffs[a + 1] * correlated_error(kAxes[a], n);
  return f;
}

SpanChannel::SpanChannel(unsigned n, std::vector<KrausCoeffs> kraus)
    : n_(n), kraus_(std::move(kraus)) {
  if (n == 0) throw BadQubitCount("channel needs at least one qubit");
  if (kraus_.empty()) throw NotTracePreserving("span channel has no Kraus operators");
  const auto gram = kraus_gram(kraus_, n_);
  const std::array<cplx, 4> target{1.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(std::abs(gram[i] - target[i]) <= kTracePreservingTolerance)) {
      std::ostringstream msg;
      msg << "sum F^dagger F differs from I (coefficient " << i << " = " << gram[i].real()
          << (gram[i].imag() < 0 ? "-" : "+") << std::abs(gram[i].imag()) << "i)";
      throw NotTracePreserving(msg.str());
    }
  }
}

SpanChannel SpanChannel::from_pauli(const PauliChannel& ch) {
  std::vector<KrausCoeffs> kraus;
  for (std::size_t a = 0; a < 4; ++a) {
    KrausCoeffs f{};
    f[a] = std::sqrt(ch.probs()[a]);
    kraus.push_back(f);
  }
  return SpanChannel(ch.n(), std::move(kraus));
}

unsigned channel_qubits(const Channel& ch) noexcept {
  return std::visit([](const auto& c) { return c.n(); }, ch);
}

DensityMatrix apply_pauli_channel(const PauliChannel& ch, const DensityMatrix& rho) {
  require_state_size(ch.n(), rho, "apply_pauli_channel");
  ComplexMatrix out = rho.mat();
  out *= ch.probs()[0];
  for (std::size_t a = 0; a < 3; ++a) {
    const double p = ch.probs()[a + 1];
    if (p == 0.0) continue;
    const auto op = correlated_error_monomial(kAxes[a], ch.n());
    out += p * monomial_conjugate(*op, rho.mat());
  }
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix apply_span_channel(const SpanChannel& ch, const DensityMatrix& rho) {
  require_state_size(ch.n(), rho, "apply_span_channel");
  const std::size_t dim = rho.dim();
  std::array<std::shared_ptr<const MonomialOperator>, 3> ops;
  for (std::size_t a = 0; a < 3; ++a) ops[a] = correlated_error_monomial(kAxes[a], ch.n());

  ComplexMatrix out(dim);
  for (const auto& f : ch.kraus()) {
    // F rho, then (F rho) F^dagger, each as a sum of monomial products.
    ComplexMatrix f_rho = rho.mat();
    f_rho *= f[0];
    for (std::size_t a = 0; a < 3; ++a)
      if (f[a + 1] != cplx{}) f_rho += f[a + 1] * monomial_left(*ops[a], rho.mat());

    ComplexMatrix term = f_rho;
    term *= std::conj(f[0]);
    for (std::size_t a = 0; a < 3; ++a)
      if (f[a + 1] != cplx{}) term += std::conj(f[a + 1]) * monomial_right_dagger(f_rho, *ops[a]);
    out += term;
  }
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho) {
  return std::visit(
      [&rho](const auto& c) -> DensityMatrix {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PauliChannel>) {
          return apply_pauli_channel(c, rho);
        } else {
          return apply_span_channel(c, rho);
        }
      },
      ch);
}

DensityMatrix apply_sequence(std::span<const Channel> channels, const DensityMatrix& rho,
                             unsigned repeats) {
  if (repeats == 0) throw InvalidArgument("apply_sequence: repeats must be positive");
  for (const auto& ch : channels) require_state_size(channel_qubits(ch), rho, "apply_sequence");
  DensityMatrix state = rho;
  for (unsigned r = 0; r < repeats; ++r)
    for (const auto& ch : channels) state = apply_channel(ch, state);
  return state;
}

}  // namespace fcqec

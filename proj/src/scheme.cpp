#include "fcqec/scheme.hpp"

#include <array>

#include "fcqec/errors.hpp"

namespace fcqec {

namespace {

constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

std::size_t ancilla_dim_for(Parity parity) { return parity == Parity::Odd ? 2 : 4; }

void require_ancilla(const DensityMatrix& sigma, Parity parity) {
  if (sigma.dim() != ancilla_dim_for(parity)) {
    throw AncillaSizeError("ancilla must be " + std::to_string(ancilla_dim_for(parity)) + "x" +
                           std::to_string(ancilla_dim_for(parity)) + " for " +
                           (parity == Parity::Odd ? "odd" : "even") + " n, got " +
                           std::to_string(sigma.dim()));
  }
}

ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& s) {
  return matmul(matmul(a, s), dagger(a));
}

}  // namespace

DensityMatrix classical_ancilla(ClassicalBits bits) {
  if (bits.i > 1 || bits.j > 1) throw InvalidArgument("classical bits must be 0 or 1");
  return DensityMatrix::basis_projector(4, 2 * bits.i + bits.j);
}

std::optional<ClassicalBits> as_classical(const DensityMatrix& sigma) {
  if (sigma.dim() != 4) return std::nullopt;
  for (std::size_t idx = 0; idx < 4; ++idx) {
    if (sigma == classical_ancilla({static_cast<unsigned>(idx / 2), static_cast<unsigned>(idx % 2)})) {
      return ClassicalBits{static_cast<unsigned>(idx / 2), static_cast<unsigned>(idx % 2)};
    }
  }
  return std::nullopt;
}

DensityMatrix encode(const EncoderSpec& spec, const DensityMatrix& sigma, const DensityMatrix& rho) {
  require_ancilla(sigma, spec.parity);
  if (rho.dim() != spec.data_dim()) {
    throw DimensionMismatch("data state must be " + std::to_string(spec.data_dim()) +
                            "-dimensional, got " + std::to_string(rho.dim()));
  }
  return DensityMatrix::trusted(conjugate_forward(spec.circuit, kron(sigma.mat(), rho.mat())));
}

DensityMatrix decode(const EncoderSpec& spec, const DensityMatrix& tau) {
  if (tau.dim() != (std::size_t{1} << spec.n)) {
    throw DimensionMismatch("decode: state dimension " + std::to_string(tau.dim()) + " on " +
                            std::to_string(spec.n) + " qubits");
  }
  return DensityMatrix::trusted(conjugate_backward(spec.circuit, tau.mat()));
}

DensityMatrix predicted_ancilla(const DensityMatrix& sigma, const PauliProbs& probs, Parity parity,
                                unsigned /*k*/) {
  if (sigma.dim() != ancilla_dim_for(parity)) {
    throw DimensionMismatch("predicted_ancilla: ancilla dimension does not match parity");
  }
  const PauliProbs p = normalize_probs(probs);
  ComplexMatrix out = sigma.mat();
  out *= p[0];
  for (std::size_t a = 0; a < 3; ++a) {
    if (p[a + 1] == 0.0) continue;
    out += p[a + 1] * sandwich(ancilla_image(parity, kAxes[a]), sigma.mat());
  }
  return DensityMatrix::trusted(std::move(out));
}

DensityMatrix predicted_ancilla(const EncoderSpec& spec, const DensityMatrix& sigma,
                                std::span<const Channel> channels, unsigned repeats) {
  require_ancilla(sigma, spec.parity);
  if (repeats == 0) throw InvalidArgument("predicted_ancilla: repeats must be positive");

  const std::size_t d = spec.ancilla_dim();
  const std::array<ComplexMatrix, 4> images{
      ComplexMatrix::identity(d), ancilla_image(spec.parity, Axis::X),
      static_cast<double>(spec.sign) * ancilla_image(spec.parity, Axis::Y),
      ancilla_image(spec.parity, Axis::Z)};

  auto induced = [&images, d](const KrausCoeffs& f) {
    ComplexMatrix m(d);
    for (std::size_t a = 0; a < 4; ++a) m += f[a] * images[a];
    return m;
  };

  ComplexMatrix state = sigma.mat();
  for (unsigned r = 0; r < repeats; ++r) {
    for (const auto& ch : channels) {
      if (channel_qubits(ch) != spec.n) {
        throw DimensionMismatch("predicted_ancilla: channel register does not match encoder");
      }
      const SpanChannel span = std::holds_alternative<PauliChannel>(ch)
                                   ? SpanChannel::from_pauli(std::get<PauliChannel>(ch))
                                   : std::get<SpanChannel>(ch);
      ComplexMatrix next(d);
      for (const auto& f : span.kraus()) next += sandwich(induced(f), state);
      state = std::move(next);
    }
  }
  return DensityMatrix::trusted(std::move(state));
}

SchemeOutcome run_trial(unsigned n, const DensityMatrix& sigma, const DensityMatrix& rho,
                        std::span<const Channel> channels, unsigned repeats) {
  const EncoderSpec spec = build_pn(n);
  const DensityMatrix encoded = encode(spec, sigma, rho);
  const DensityMatrix received =
      channels.empty() ? encoded : apply_sequence(channels, encoded, repeats);
  const DensityMatrix decoded = decode(spec, received);

  DensityMatrix recovered =
      DensityMatrix::trusted(partial_trace_leading(decoded.mat(), spec.ancilla_dim()));
  DensityMatrix ancilla = DensityMatrix::trusted(partial_trace_trailing(decoded.mat(), spec.data_dim()));
  DensityMatrix predicted = predicted_ancilla(spec, sigma, channels, repeats);

  const double rho_residual = frobenius_distance(recovered.mat(), rho.mat());
  const double ancilla_residual = frobenius_distance(ancilla.mat(), predicted.mat());
  const double product_residual =
      frobenius_distance(decoded.mat(), kron(ancilla.mat(), recovered.mat()));

  std::optional<double> hybrid_residual;
  std::optional<bool> hybrid_exact;
  if (spec.parity == Parity::Even && as_classical(sigma)) {
    hybrid_residual = frobenius_distance(decoded.mat(), kron(sigma.mat(), rho.mat()));
    hybrid_exact = *hybrid_residual <= tolerance::kHybridExact;
  }

  return SchemeOutcome{std::move(recovered), std::move(ancilla), std::move(predicted),
                       rho_residual,         ancilla_residual,   product_residual,
                       hybrid_residual,      hybrid_exact};
}

std::vector<SchemeOutcome> hybrid_sweep(unsigned n, const DensityMatrix& rho,
                                        const PauliProbs& probs) {
  if (n < 2 || n % 2 != 0) throw BadQubitCount("hybrid_sweep needs an even n >= 2");
  const std::vector<Channel> channels{PauliChannel(n, probs)};
  std::vector<SchemeOutcome> out;
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j)
      out.push_back(run_trial(n, classical_ancilla({i, j}), rho, channels));
  return out;
}

}  // namespace fcqec

#include "fcqec/report.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>

#include "fcqec/encoder.hpp"
#include "fcqec/errors.hpp"

namespace fcqec {

using nlohmann::json;

namespace {

constexpr unsigned kMinQubits = 2;
constexpr unsigned kMaxQubits = 12;

json matrix_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const auto& x : m.entries()) entries.push_back({x.real(), x.imag()});
  return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from(const json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != dim * dim) {
    throw InvalidArgument("matrix JSON: expected dim*dim entries");
  }
  std::vector<cplx> data;
  data.reserve(dim * dim);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("matrix JSON: entries are [re, im]");
    data.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return ComplexMatrix(dim, std::move(data));
}

json parse_or_throw(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

std::string classical_label(unsigned i, unsigned j) {
  return "classical:" + std::to_string(i) + std::to_string(j);
}

TrialRecord record_from(std::uint64_t seed, std::string sigma, const SchemeOutcome& o) {
  return TrialRecord{seed,          std::move(sigma),   o.rho_residual,
                     o.ancilla_residual, o.product_residual, o.hybrid_exact};
}

}  // namespace

std::size_t expected_cnot_count(unsigned n) {
  if (n < 2) throw BadQubitCount("encoder needs n >= 2");
  return n % 2 == 1 ? 3 * ((n - 1) / 2) : 3 * ((n - 2) / 2) + 2;
}

std::size_t expected_h_count(unsigned n) {
  if (n < 2) throw BadQubitCount("encoder needs n >= 2");
  return n % 2 == 1 ? 0 : 1;
}

PauliProbs random_probs(std::uint64_t seed) {
  Rng rng(seed);
  PauliProbs p{};
  double sum = 0.0;
  for (double& x : p) {
    x = rng.uniform();
    sum += x;
  }
  for (double& x : p) x /= sum;
  return p;
}

bool report_passes(const VerificationReport& r) {
  if (r.cnot_count != expected_cnot_count(r.n) || r.h_count != expected_h_count(r.n)) return false;
  for (double c : r.conjugation_residuals) {
    if (r.parity == "odd" ? c != 0.0 : !(c <= tolerance::kReport)) return false;
  }
  for (const auto& t : r.trials) {
    if (!(t.rho_residual <= tolerance::kReport) || !(t.ancilla_residual <= tolerance::kReport) ||
        !(t.product_residual <= tolerance::kReport)) {
      return false;
    }
    if (t.hybrid_exact && !*t.hybrid_exact) return false;
  }
  return true;
}

VerificationReport run_verification(unsigned n, unsigned trials, std::uint64_t seed) {
  if (n < kMinQubits || n > kMaxQubits) {
    throw BadQubitCount("verify supports 2 <= n <= 12, got " + std::to_string(n));
  }
  const EncoderSpec spec = build_pn(n);
  const auto res = conjugation_report(spec);

  VerificationReport report{n,
                            spec.parity == Parity::Odd ? "odd" : "even",
                            spec.circuit.cnot_count(),
                            spec.circuit.h_count(),
                            {res.x, res.y, res.z},
                            {},
                            false};

  for (unsigned t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = split_seed(seed, t);
    const DensityMatrix sigma = random_density(spec.ancilla_dim(), split_seed(trial_seed, 0));
    const DensityMatrix rho = spec.data_dim() == 1
                                  ? DensityMatrix::trivial()
                                  : random_density(spec.data_dim(), split_seed(trial_seed, 1));
    const PauliProbs probs = random_probs(split_seed(trial_seed, 2));
    const std::vector<Channel> channels{PauliChannel(n, probs)};

    report.trials.push_back(record_from(trial_seed, "random", run_trial(n, sigma, rho, channels)));
    if (spec.parity == Parity::Even) {
      const auto sweep = hybrid_sweep(n, rho, probs);
      for (std::size_t b = 0; b < sweep.size(); ++b) {
        report.trials.push_back(record_from(
            trial_seed, classical_label(static_cast<unsigned>(b / 2), static_cast<unsigned>(b % 2)),
            sweep[b]));
      }
    }
  }
  report.pass = report_passes(report);
  return report;
}

std::string report_to_json(const VerificationReport& r) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"seed", t.seed},
                      {"sigma", t.sigma},
                      {"rho_residual", t.rho_residual},
                      {"ancilla_residual", t.ancilla_residual},
                      {"product_residual", t.product_residual},
                      {"hybrid_exact", optional_bool(t.hybrid_exact)}});
  }
  const json j{{"n", r.n},
               {"parity", r.parity},
               {"cnot_count", r.cnot_count},
               {"h_count", r.h_count},
               {"conjugation_residuals", r.conjugation_residuals},
               {"trials", std::move(trials)},
               {"pass", r.pass}};
  return j.dump(2);
}

VerificationReport report_from_json(std::string_view text) {
  const json j = parse_or_throw(text, "report JSON");
  try {
    VerificationReport r{j.at("n").get<unsigned>(),
                         j.at("parity").get<std::string>(),
                         j.at("cnot_count").get<std::size_t>(),
                         j.at("h_count").get<std::size_t>(),
                         j.at("conjugation_residuals").get<std::array<double, 3>>(),
                         {},
                         j.at("pass").get<bool>()};
    for (const auto& t : j.at("trials")) {
      const auto& he = t.at("hybrid_exact");
      r.trials.push_back(TrialRecord{t.at("seed").get<std::uint64_t>(),
                                     t.at("sigma").get<std::string>(),
                                     t.at("rho_residual").get<double>(),
                                     t.at("ancilla_residual").get<double>(),
                                     t.at("product_residual").get<double>(),
                                     he.is_null() ? std::nullopt
                                                  : std::optional<bool>(he.get<bool>())});
    }
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("report JSON: ") + e.what());
  }
}

std::string render_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "P_" << r.n << " (" << r.parity << ")\n";
  out << "  CNOT gates: " << r.cnot_count << " (expected " << expected_cnot_count(r.n) << ")\n";
  out << "  H gates:    " << r.h_count << " (expected " << expected_h_count(r.n) << ")\n";
  out << std::scientific << std::setprecision(3);
  out << "  conjugation residuals X/Y/Z: " << r.conjugation_residuals[0] << "  "
      << r.conjugation_residuals[1] << "  " << r.conjugation_residuals[2] << "\n";
  if (!r.trials.empty()) {
    out << "  " << std::left << std::setw(22) << "seed" << std::setw(14) << "sigma"
        << std::setw(12) << "rho" << std::setw(12) << "ancilla" << std::setw(12) << "product"
        << "hybrid\n";
    for (const auto& t : r.trials) {
      out << "  " << std::setw(22) << t.seed << std::setw(14) << t.sigma << std::setw(12)
          << t.rho_residual << std::setw(12) << t.ancilla_residual << std::setw(12)
          << t.product_residual << (t.hybrid_exact ? (*t.hybrid_exact ? "exact" : "FAILED") : "-")
          << "\n";
    }
  }
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

OptimalityReport run_optimality() {
  const EncoderSpec p3 = build_p3();
  const PermutationTable target = PermutationTable::from_circuit(p3.circuit);
  const PermutationTable id = PermutationTable::identity(3);

  OptimalityReport r{};
  r.mismatch = mismatch_count(id, target);
  r.lower_bound = counting_lower_bound(target);
  const SearchResult short_search = exhaustive_search(target, 2);
  r.words_up_to_two = short_search.words_examined;
  r.found_up_to_two = short_search.witness.has_value();

  const SearchResult full = exhaustive_search(target, 3);
  if (full.witness) {
    const Circuit c = witness_circuit(3, *full.witness);
    for (const auto& op : c.ops()) r.witness.push_back(std::get<Cnot>(op));
    r.witness_realizes_p3 = realize(c) == realize(p3.circuit);
  }
  return r;
}

std::string render_optimality(const OptimalityReport& r) {
  std::ostringstream out;
  out << "mismatch_count(I_8, P_3) = " << r.mismatch << "\n";
  out << "counting lower bound     = " << r.lower_bound << "\n";
  out << "exhaustive search        : " << r.words_up_to_two << " words of length 1..2 checked, "
      << (r.found_up_to_two ? "FOUND a length-2 decomposition" : "no length-2 decomposition")
      << "\n";
  if (r.witness.empty()) {
    out << "length-3 witness         : none\n";
  } else {
    out << "length-3 witness         :";
    for (const auto& g : r.witness) out << " " << to_string(GateOp{g});
    out << " (application order; realizes P_3 " << (r.witness_realizes_p3 ? "exactly" : "NOT")
        << ")\n";
  }
  return out.str();
}

std::string matrix_to_json(const ComplexMatrix& m) { return matrix_json(m).dump(); }

ComplexMatrix matrix_from_json(std::string_view text) {
  const json j = parse_or_throw(text, "matrix JSON");
  try {
    return matrix_from(j);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("matrix JSON: ") + e.what());
  }
}

std::vector<Channel> channels_from_json(std::string_view text, unsigned n) {
  const json j = parse_or_throw(text, "channels JSON");
  if (!j.is_array()) throw InvalidArgument("channels JSON: top level must be an array");
  std::vector<Channel> out;
  try {
    for (const auto& item : j) {
      if (item.contains("pauli")) {
        out.emplace_back(PauliChannel(n, item.at("pauli").get<PauliProbs>()));
      } else if (item.contains("span")) {
        std::vector<KrausCoeffs> kraus;
        for (const auto& row : item.at("span")) {
          const auto v = row.get<std::array<double, 8>>();
          kraus.push_back({cplx{v[0], v[1]}, cplx{v[2], v[3]}, cplx{v[4], v[5]}, cplx{v[6], v[7]}});
        }
        out.emplace_back(SpanChannel(n, std::move(kraus)));
      } else {
        throw InvalidArgument("channels JSON: each entry needs a \"pauli\" or \"span\" key");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("channels JSON: ") + e.what());
  }
  return out;
}

std::string outcome_to_json(const SchemeOutcome& o, unsigned n, std::string_view sigma_mode,
                            std::optional<std::uint64_t> seed) {
  json j{{"n", n},
         {"sigma_mode", sigma_mode},
         {"seed", seed ? json(*seed) : json(nullptr)},
         {"rho_residual", o.rho_residual},
         {"ancilla_residual", o.ancilla_residual},
         {"product_residual", o.product_residual},
         {"hybrid_residual", o.hybrid_residual ? json(*o.hybrid_residual) : json(nullptr)},
         {"hybrid_exact", optional_bool(o.hybrid_exact)},
         {"ancilla_out", matrix_json(o.ancilla_out.mat())},
         {"predicted_ancilla", matrix_json(o.predicted_ancilla.mat())}};
  return j.dump(2);
}

}  // namespace fcqec

// fcqec: encoders and error-correction checks for fully correlated Pauli
// channels.
//
//   fcqec verify --n N [--trials T] [--seed S] [--json PATH]
//   fcqec trial --n N --probs p0,p1,p2,p3 [--classical ij | --sigma FILE | --seed S]
//               [--channels FILE] [--repeats R] [--json PATH]
//   fcqec export-qasm --n N --which encode|decode|roundtrip [--error X|Y|Z|I] --out PATH
//   fcqec optimality

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fcqec/errors.hpp"
#include "fcqec/qasm.hpp"
#include "fcqec/report.hpp"
#include "fcqec/scheme.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fcqec::InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw fcqec::InvalidArgument("cannot write " + path);
  out << text;
}

struct VerifyArgs {
  unsigned n = 0;
  unsigned trials = 5;
  std::uint64_t seed = 42;
  std::string json_path;
};

int run_verify(const VerifyArgs& a) {
  const auto report = fcqec::run_verification(a.n, a.trials, a.seed);
  std::cout << fcqec::render_table(report);
  if (!a.json_path.empty()) write_output(a.json_path, fcqec::report_to_json(report) + "\n");
  return report.pass ? 0 : 1;
}

struct TrialArgs {
  unsigned n = 0;
  std::vector<double> probs;
  std::string classical;
  std::string sigma_file;
  std::optional<std::uint64_t> seed;
  std::string channels_file;
  unsigned repeats = 1;
  std::string json_path = "-";
};

int run_trial_cmd(const TrialArgs& a) {
  using namespace fcqec;
  if (a.n < 2) throw BadQubitCount("trial needs n >= 2");
  const std::uint64_t seed = a.seed.value_or(42);
  const std::size_t ancilla_dim = a.n % 2 == 1 ? 2 : 4;
  const std::size_t data_dim = (std::size_t{1} << a.n) / ancilla_dim;

  std::string mode = "random";
  std::optional<DensityMatrix> sigma;
  if (!a.classical.empty()) {
    if (a.n % 2 == 1) throw AncillaSizeError("classical ancilla needs an even n");
    if (a.classical.size() != 2 || (a.classical[0] != '0' && a.classical[0] != '1') ||
        (a.classical[1] != '0' && a.classical[1] != '1')) {
      throw InvalidArgument("--classical expects two bits, e.g. 10");
    }
    sigma = classical_ancilla(
        {static_cast<unsigned>(a.classical[0] - '0'), static_cast<unsigned>(a.classical[1] - '0')});
    mode = "classical:" + a.classical;
  } else if (!a.sigma_file.empty()) {
    sigma = DensityMatrix(matrix_from_json(read_file(a.sigma_file)));
    mode = "file";
  } else {
    sigma = random_density(ancilla_dim, split_seed(seed, 0));
  }
  const DensityMatrix rho =
      data_dim == 1 ? DensityMatrix::trivial() : random_density(data_dim, split_seed(seed, 1));

  std::vector<Channel> channels;
  if (!a.channels_file.empty()) {
    channels = channels_from_json(read_file(a.channels_file), a.n);
  } else {
    if (a.probs.size() != 4) throw InvalidProbabilities("--probs needs four values");
    channels.emplace_back(PauliChannel(a.n, {a.probs[0], a.probs[1], a.probs[2], a.probs[3]}));
  }

  const auto outcome = run_trial(a.n, *sigma, rho, channels, a.repeats);
  write_output(a.json_path, outcome_to_json(outcome, a.n, mode, seed) + "\n");
  return 0;
}

struct QasmArgs {
  unsigned n = 0;
  std::string which;
  std::string error;
  std::string out;
};

int run_export(const QasmArgs& a) {
  using namespace fcqec;
  std::optional<ErrorInsert> error;
  if (!a.error.empty()) error = parse_error_insert(a.error);
  write_output(a.out, export_qasm(a.n, parse_qasm_program(a.which), error));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encoding circuits and error-correction checks for fully correlated Pauli channels"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check gate counts, conjugation identities and random trials");
  verify_cmd->add_option("--n", verify.n, "Qubit count (2..12)")->required();
  verify_cmd->add_option("--trials", verify.trials, "Random trials")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--json", verify.json_path, "Write the JSON report here ('-' for stdout)");

  TrialArgs trial;
  auto* trial_cmd = app.add_subcommand("trial", "Run one encode/channel/decode trial, print JSON");
  trial_cmd->add_option("--n", trial.n, "Qubit count")->required();
  auto* probs_opt = trial_cmd->add_option("--probs", trial.probs, "p0,p1,p2,p3")->delimiter(',');
  auto* classical_opt = trial_cmd->add_option("--classical", trial.classical, "Classical ancilla bits ij (even n)");
  auto* sigma_opt = trial_cmd->add_option("--sigma", trial.sigma_file, "Ancilla state JSON file");
  classical_opt->excludes(sigma_opt);
  trial_cmd->add_option("--seed", trial.seed, "Seed for random states (default 42)");
  auto* channels_opt = trial_cmd->add_option("--channels", trial.channels_file, "Channel list JSON file");
  trial_cmd->add_option("--repeats", trial.repeats, "Passes through the channel list")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  trial_cmd->add_option("--json", trial.json_path, "Output path ('-' for stdout)")->capture_default_str();
  probs_opt->excludes(channels_opt);

  QasmArgs qasm;
  auto* qasm_cmd = app.add_subcommand("export-qasm", "Write the encoder as OpenQASM 2.0");
  qasm_cmd->add_option("--n", qasm.n, "Qubit count (2..12)")->required();
  qasm_cmd->add_option("--which", qasm.which, "encode|decode|roundtrip")->required();
  qasm_cmd->add_option("--error", qasm.error, "Error layer for roundtrip: X|Y|Z|I");
  qasm_cmd->add_option("--out", qasm.out, "Output path ('-' for stdout)")->required();

  auto* opt_cmd = app.add_subcommand("optimality", "Show that P_3 needs three CNOT gates");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify_cmd->parsed()) return run_verify(verify);
    if (trial_cmd->parsed()) {
      if (!*probs_opt && !*channels_opt) throw fcqec::InvalidArgument("trial needs --probs or --channels");
      return run_trial_cmd(trial);
    }
    if (qasm_cmd->parsed()) return run_export(qasm);
    if (opt_cmd->parsed()) {
      const auto report = fcqec::run_optimality();
      std::cout << fcqec::render_optimality(report);
      const bool ok = report.mismatch == 12 && report.lower_bound == 3 && !report.found_up_to_two &&
                      report.witness.size() == 3 && report.witness_realizes_p3;
      return ok ? 0 : 1;
    }
  } catch (const fcqec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

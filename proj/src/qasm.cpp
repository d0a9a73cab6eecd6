#include "fcqec/qasm.hpp"

#include <sstream>

#include "fcqec/encoder.hpp"
#include "fcqec/errors.hpp"

namespace fcqec {

namespace {

constexpr unsigned kMinQubits = 2;
constexpr unsigned kMaxQubits = 12;

}  // namespace

QasmProgram parse_qasm_program(std::string_view name) {
  if (name == "encode") return QasmProgram::Encode;
  if (name == "decode") return QasmProgram::Decode;
  if (name == "roundtrip") return QasmProgram::Roundtrip;
  throw InvalidArgument("unknown program '" + std::string(name) + "' (encode|decode|roundtrip)");
}

ErrorInsert parse_error_insert(std::string_view name) {
  if (name == "I" || name == "i") return ErrorInsert::I;
  if (name == "X" || name == "x") return ErrorInsert::X;
  if (name == "Y" || name == "y") return ErrorInsert::Y;
  if (name == "Z" || name == "z") return ErrorInsert::Z;
  throw InvalidArgument("unknown error '" + std::string(name) + "' (X|Y|Z|I)");
}

std::string qasm_gate_lines(const Circuit& c) {
  std::ostringstream out;
  for (const auto& op : c.ops()) {
    if (const auto* cx = std::get_if<Cnot>(&op)) {
      out << "cx q[" << cx->control << "],q[" << cx->target << "];\n";
    } else {
      out << "h q[" << std::get<Hadamard>(op).qubit << "];\n";
    }
  }
  return out.str();
}

std::string export_qasm(unsigned n, QasmProgram which, std::optional<ErrorInsert> error) {
  if (n < kMinQubits || n > kMaxQubits) {
    throw BadQubitCount("export_qasm supports 2 <= n <= 12, got " + std::to_string(n));
  }
  if (error && which != QasmProgram::Roundtrip) {
    throw InvalidArgument("an error layer can only be inserted into a roundtrip program");
  }
  const EncoderSpec spec = build_pn(n);

  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << n << "];\n"
      << "creg c[" << n << "];\n";

  switch (which) {
    case QasmProgram::Encode:
      out << qasm_gate_lines(spec.circuit);
      break;
    case QasmProgram::Decode:
      out << qasm_gate_lines(invert(spec.circuit));
      break;
    case QasmProgram::Roundtrip: {
      out << qasm_gate_lines(spec.circuit);
      const ErrorInsert e = error.value_or(ErrorInsert::I);
      if (e != ErrorInsert::I) {
        const char* gate = e == ErrorInsert::X ? "x" : e == ErrorInsert::Y ? "y" : "z";
        for (unsigned q = 0; q < n; ++q) out << gate << " q[" << q << "];\n";
      }
      out << qasm_gate_lines(invert(spec.circuit));
      for (unsigned q = 0; q < n; ++q) out << "measure q[" << q << "] -> c[" << q << "];\n";
      break;
    }
  }
  return out.str();
}

}  // namespace fcqec

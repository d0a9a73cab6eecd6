#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fcqec/gates.hpp"

namespace fcqec {

enum class QasmProgram { Encode, Decode, Roundtrip };

/// Correlated error layer inserted between encode and decode in a roundtrip
/// program. I inserts nothing.
enum class ErrorInsert { I, X, Y, Z };

QasmProgram parse_qasm_program(std::string_view name);
ErrorInsert parse_error_insert(std::string_view name);

/// Gate lines only, one per op, in application order: `cx q[c],q[t];` or
/// `h q[i];`.
std::string qasm_gate_lines(const Circuit& c);

/// OpenQASM 2.0 program for the P_n encoder of an n-qubit register:
///   OPENQASM 2.0; include "qelib1.inc"; qreg q[n]; creg c[n];
/// followed by the encoder gates (Encode), the reversed encoder (Decode), or
/// encoder, optional x/y/z on every qubit, decoder, and a measurement of every
/// qubit into c (Roundtrip). Throws BadQubitCount unless 2 <= n <= 12 and
/// InvalidArgument if an error layer is requested outside Roundtrip.
std::string export_qasm(unsigned n, QasmProgram which,
                        std::optional<ErrorInsert> error = std::nullopt);

}  // namespace fcqec

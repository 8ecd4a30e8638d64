#pragma once

#include <string>
#include <string_view>

#include "qsp/types.hpp"

namespace qsp::io {

// Circuit text format
// -------------------
//   qubits N
//   GATE q0 q1 ... [angle]
//
// one instruction per line, '#' starts a comment.  Supported kinds: X, SX,
// H, S, SDG, RZ, RY, CX, CZ, SWAP, CSWAP (angle-less kinds take no angle;
// RZ/RY take one trailing angle in radians) and GLOBAL_PHASE with an angle
// and no qubits.  UNITARY and CONTROLLED instructions are not representable;
// flatten a circuit before writing it.

std::string write_circuit(const Circuit& circuit);

Circuit parse_circuit(std::string_view text);

}  // namespace qsp::io

#pragma once

#include <array>

#include "qsp/types.hpp"

namespace qsp::synth {

/// Hardware basis targeted by the transpiler.
inline constexpr std::array<GateKind, 4> kBasisGates = {GateKind::Cz, GateKind::Rz, GateKind::Sx,
                                                        GateKind::X};

inline constexpr bool is_basis_gate(GateKind kind) {
  return kind == GateKind::Cz || kind == GateKind::Rz || kind == GateKind::Sx ||
         kind == GateKind::X;
}

/// Lowers a circuit to {CZ, RZ, SX, X} plus a single trailing GLOBAL_PHASE
/// bookkeeping entry.  The output unitary equals the input unitary exactly
/// (phase included).  Consecutive RZ on the same wire are merged and
/// rotations below kAngleTolerance are dropped.
Circuit transpile(const Circuit& circuit);

/// Number of layers under the partial order "gates sharing a wire run
/// sequentially"; GLOBAL_PHASE entries cost nothing.
int depth(const Circuit& circuit);

}  // namespace qsp::synth

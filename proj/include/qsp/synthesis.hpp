#pragma once

#include <cstdint>
#include <span>

#include "qsp/statevector.hpp"
#include "qsp/types.hpp"

namespace qsp::synth {

/// A preparation circuit together with the phase it introduces:
/// applying `circuit` to |0...0> yields e^{i global_phase} * target.
struct SynthesizedPrep {
  Circuit circuit;
  double global_phase = 0.0;
};

/// Separable target built from `block_count` copies of one seeded random
/// block of `block_qubits` wires (block 0 on the least significant qubits).
struct SeparablePrepSpec {
  int block_qubits = 1;
  int block_count = 1;
  uint64_t block_seed = 0;
};

/// Synthesises a preparation circuit for an arbitrary normalised target by
/// disentangling one qubit at a time with multiplexed RY/RZ cascades.  The
/// output uses only RY, RZ and CX.
SynthesizedPrep prepare_state(const StateVector& target);

/// The block prep stamped block_count times on consecutive registers.
SynthesizedPrep prepare_separable(const SeparablePrepSpec& spec);

/// Same, for an explicit block target instead of a seeded random one.
SynthesizedPrep prepare_separable(const StateVector& block, int block_count);

/// Exact controlled version of the prep circuit on 1 + n wires, control on
/// the top wire (index n).  Every one-qubit gate is lowered through the
/// two-CX ABC construction, CX becomes a six-CX Toffoli, and any phase the
/// payload carries is promoted to an RZ on the control so the block action
/// is exact.  OnZero controls are realised by X-conjugating the control.
Circuit controlled(const SynthesizedPrep& prep, ControlPolarity polarity);

/// Same lowering for a raw payload placed at explicit wire indices.
Circuit controlled_onto(const Circuit& body, int control, std::span<const int> targets,
                        ControlPolarity polarity, int num_qubits);

/// Six-CX Toffoli on (control0, control1, target).
Circuit decompose_toffoli(int control0, int control1, int target);

/// CSWAP as a CX pair conjugating a Toffoli: exactly 8 CX plus one-qubit
/// gates.
Circuit decompose_cswap(int control, int a, int b);

/// Per-pair CSWAP decompositions for two equal-length registers (8 CX per
/// swapped qubit pair).
Circuit decompose_registers_cswap(int control, std::span<const int> reg_a,
                                  std::span<const int> reg_b);

/// Rewrites CONTROLLED payloads and multi-qubit primitives into elementary
/// gates (one-qubit kinds, CX, CZ, SWAP, CSWAP, GLOBAL_PHASE) without
/// changing the circuit's unitary.
Circuit flatten(const Circuit& circuit);

}  // namespace qsp::synth

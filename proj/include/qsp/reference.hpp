#pragma once

#include "qsp/statevector.hpp"
#include "qsp/types.hpp"

namespace qsp::ref {

// Serial reference simulator.  Every gate is expanded to its dense matrix
// and applied with one generic scatter/gather loop; no bit tricks, no
// per-kind shortcuts, no threading.  It shares no kernel code with the fast
// path, which makes it a genuine cross-check (and the baseline in the
// kernel benchmark).

void apply_gate(StateVector& state, const Gate& gate);

void apply_circuit(StateVector& state, const Circuit& circuit);

}  // namespace qsp::ref

#include "qsp/reference.hpp"

#include <vector>

namespace qsp::ref {

namespace {

void apply_dense_serial(StateVector& state, const std::vector<int>& targets,
                        const CMatrix& m) {
  const int k = static_cast<int>(targets.size());
  const uint64_t sub = uint64_t{1} << k;
  uint64_t tmask = 0;
  for (int q : targets) tmask |= uint64_t{1} << q;

  std::vector<cplx> in(sub);
  std::vector<uint64_t> idx(sub);
  for (uint64_t i = 0; i < state.size(); ++i) {
    if (i & tmask) continue;  // visit each group at its all-zero member
    for (uint64_t j = 0; j < sub; ++j) {
      uint64_t full = i;
      for (int b = 0; b < k; ++b) {
        if (j & (uint64_t{1} << b)) full |= uint64_t{1} << targets[b];
      }
      idx[j] = full;
      in[j] = state[full];
    }
    for (uint64_t r = 0; r < sub; ++r) {
      cplx acc{0.0, 0.0};
      for (uint64_t c = 0; c < sub; ++c) acc += m.at(static_cast<int>(r), static_cast<int>(c)) * in[c];
      state[idx[r]] = acc;
    }
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
  if (gate.kind == GateKind::GlobalPhase) {
    const cplx factor = std::polar(1.0, gate.angle);
    for (uint64_t i = 0; i < state.size(); ++i) state[i] *= factor;
    return;
  }
  apply_dense_serial(state, gate.qubits, gate_matrix(gate));
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.num_qubits != state.num_qubits()) {
    throw std::invalid_argument("circuit and state widths differ");
  }
  for (const Gate& g : circuit.instructions) ref::apply_gate(state, g);
}

}  // namespace qsp::ref

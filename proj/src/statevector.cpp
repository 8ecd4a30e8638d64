#include "qsp/statevector.hpp"

#include <cmath>

#include "qsp/kernels.hpp"
#include "qsp/rng.hpp"

namespace qsp {

namespace {

// Recursive dispatch carrying an accumulated control condition, so that
// CONTROLLED payloads (and nested ones) apply exactly without expansion.
void apply_masked(StateVector& state, const Gate& g, uint64_t cmask, uint64_t cval) {
  auto amps = state.amplitudes();
  switch (g.kind) {
    case GateKind::X:
      kernels::apply_x(amps, g.qubits[0], cmask, cval);
      return;
    case GateKind::Sx:
    case GateKind::H:
    case GateKind::Ry: {
      const CMatrix m = one_qubit_matrix(g.kind, g.angle);
      kernels::apply_1q(amps, g.qubits[0], m.data.data(), cmask, cval);
      return;
    }
    case GateKind::S:
      kernels::apply_diag1(amps, g.qubits[0], 1.0, cplx{0.0, 1.0}, cmask, cval);
      return;
    case GateKind::Sdg:
      kernels::apply_diag1(amps, g.qubits[0], 1.0, cplx{0.0, -1.0}, cmask, cval);
      return;
    case GateKind::Rz:
      kernels::apply_diag1(amps, g.qubits[0], std::polar(1.0, -g.angle / 2.0),
                           std::polar(1.0, g.angle / 2.0), cmask, cval);
      return;
    case GateKind::Cx:
      kernels::apply_x(amps, g.qubits[1], cmask | (uint64_t{1} << g.qubits[0]),
                       cval | (uint64_t{1} << g.qubits[0]));
      return;
    case GateKind::Cz:
      kernels::apply_phase(amps, cplx{-1.0, 0.0},
                           cmask | (uint64_t{1} << g.qubits[0]) | (uint64_t{1} << g.qubits[1]),
                           cval | (uint64_t{1} << g.qubits[0]) | (uint64_t{1} << g.qubits[1]));
      return;
    case GateKind::Swap:
      kernels::apply_swap(amps, g.qubits[0], g.qubits[1], cmask, cval);
      return;
    case GateKind::Cswap:
      kernels::apply_swap(amps, g.qubits[1], g.qubits[2], cmask | (uint64_t{1} << g.qubits[0]),
                          cval | (uint64_t{1} << g.qubits[0]));
      return;
    case GateKind::Unitary:
      kernels::apply_dense(amps, g.qubits, g.matrix, cmask, cval);
      return;
    case GateKind::GlobalPhase:
      kernels::apply_phase(amps, std::polar(1.0, g.angle), cmask, cval);
      return;
    case GateKind::Controlled: {
      const uint64_t bit = uint64_t{1} << g.qubits[0];
      const uint64_t inner_mask = cmask | bit;
      const uint64_t inner_val = cval | (g.polarity == ControlPolarity::OnOne ? bit : 0);
      for (const Gate& inner_gate : g.inner->instructions) {
        Gate mapped = inner_gate;
        for (int& q : mapped.qubits) q = g.qubits[1 + q];
        apply_masked(state, mapped, inner_mask, inner_val);
      }
      return;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxSimQubits) {
    throw std::invalid_argument("statevector width must be in [1, " +
                                std::to_string(kMaxSimQubits) + "]");
  }
  amps_.assign(size_t{1} << num_qubits, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

double StateVector::norm_squared() const {
  return kernels::norm_squared_where(amps_, 0, 0);
}

StateVector zero_state(int num_qubits) { return StateVector(num_qubits); }

StateVector random_state(int num_qubits, uint64_t seed) {
  StateVector state(num_qubits);
  Rng rng(seed);
  auto amps = state.amplitudes();
  for (auto& a : amps) a = cplx{rng.normal(), rng.normal()};
  const double norm = std::sqrt(kernels::norm_squared_where(amps, 0, 0));
  for (auto& a : amps) a /= norm;
  return state;
}

void apply_gate(StateVector& state, const Gate& gate) {
  for (int q : gate.qubits) {
    if (q < 0 || q >= state.num_qubits()) {
      throw std::invalid_argument("gate qubit index out of range for state width");
    }
  }
  apply_masked(state, gate, 0, 0);
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.num_qubits != state.num_qubits()) {
    throw std::invalid_argument("circuit and state widths differ");
  }
  for (const Gate& g : circuit.instructions) apply_gate(state, g);
}

cplx inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.num_qubits() != ket.num_qubits()) {
    throw std::invalid_argument("inner product widths differ");
  }
  // Chunked fixed-order summation, same scheme as norm_squared_where.
  constexpr size_t kChunk = 4096;
  const auto a = bra.amplitudes();
  const auto b = ket.amplitudes();
  cplx total{0.0, 0.0};
  for (size_t begin = 0; begin < a.size(); begin += kChunk) {
    const size_t end = std::min(begin + kChunk, a.size());
    cplx s{0.0, 0.0};
    for (size_t i = begin; i < end; ++i) s += std::conj(a[i]) * b[i];
    total += s;
  }
  return total;
}

cplx basis_coefficient(const StateVector& state, std::string_view bitstring) {
  const int n = state.num_qubits();
  if (static_cast<int>(bitstring.size()) != n) {
    throw std::invalid_argument("bitstring length must equal the qubit count");
  }
  uint64_t index = 0;
  for (int q = 0; q < n; ++q) {
    const char c = bitstring[n - 1 - q];
    if (c == '1') {
      index |= uint64_t{1} << q;
    } else if (c != '0') {
      throw std::invalid_argument("bitstring may contain only '0' and '1'");
    }
  }
  return state[index];
}

std::pair<double, double> ancilla_outcome_probabilities(const StateVector& state,
                                                        int ancilla_index) {
  if (ancilla_index < 0 || ancilla_index >= state.num_qubits()) {
    throw std::invalid_argument("ancilla index out of range");
  }
  const uint64_t bit = uint64_t{1} << ancilla_index;
  const double p0 = kernels::norm_squared_where(state.amplitudes(), bit, 0);
  const double p1 = kernels::norm_squared_where(state.amplitudes(), bit, bit);
  return {p0, p1};
}

std::pair<long long, long long> sample_ancilla(const StateVector& state, int ancilla_index,
                                               long long shots, uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const auto [p0, p1] = ancilla_outcome_probabilities(state, ancilla_index);
  (void)p1;
  Rng rng(seed);
  long long n0 = 0;
  for (long long s = 0; s < shots; ++s) {
    if (rng.uniform() < p0) ++n0;
  }
  return {n0, shots - n0};
}

CMatrix circuit_unitary(const Circuit& circuit) {
  const int n = circuit.num_qubits;
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("circuit too wide to densify");
  }
  const int dim = 1 << n;
  CMatrix u(dim);
  for (int col = 0; col < dim; ++col) {
    StateVector basis(n);
    basis[0] = 0.0;
    basis[static_cast<size_t>(col)] = 1.0;
    apply_circuit(basis, circuit);
    for (int row = 0; row < dim; ++row) u.at(row, col) = basis[static_cast<size_t>(row)];
  }
  return u;
}

}  // namespace qsp

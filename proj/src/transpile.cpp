#include "qsp/transpile.hpp"

#include <cmath>
#include <vector>

#include "euler.hpp"
#include "qsp/synthesis.hpp"

namespace qsp::synth {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

// Stage-two emitter: collects RZ angles per wire and flushes a wire's
// pending rotation just before any other gate touches it.  Merged angles
// are reduced to (-pi, pi], trading 2pi turns for a phase flip.
class BasisEmitter {
 public:
  explicit BasisEmitter(int num_qubits) : out_(num_qubits), pending_rz_(num_qubits, 0.0) {}

  void rz(double angle, int qubit) { pending_rz_[qubit] += angle; }

  void phase(double phi) { phase_ += phi; }

  void gate(Gate g) {
    for (int q : g.qubits) flush(q);
    out_.push(std::move(g));
  }

  Circuit finish() {
    for (int q = 0; q < out_.num_qubits; ++q) flush(q);
    const double wrapped = std::remainder(phase_, 2.0 * kPi);
    if (std::abs(wrapped) >= kAngleTolerance) out_.push(Gate::global_phase(wrapped));
    return std::move(out_);
  }

 private:
  void flush(int qubit) {
    double angle = pending_rz_[qubit];
    pending_rz_[qubit] = 0.0;
    const double reduced = std::remainder(angle, 2.0 * kPi);
    const long long turns = std::llround((angle - reduced) / (2.0 * kPi));
    if (turns % 2 != 0) phase_ += kPi;  // RZ(a + 2pi) = -RZ(a)
    if (std::abs(reduced) >= kAngleTolerance) out_.push(Gate::rz(reduced, qubit));
  }

  Circuit out_;
  std::vector<double> pending_rz_;
  double phase_ = 0.0;
};

// H up to phase: H = e^{i pi/4} RZ(pi/2) SX RZ(pi/2).
void emit_h(BasisEmitter& em, int q) {
  em.rz(kHalfPi, q);
  em.gate(Gate::sx(q));
  em.rz(kHalfPi, q);
  em.phase(kPi / 4.0);
}

// Arbitrary one-qubit unitary through its ZYZ angles.  A gamma of pi/2
// needs a single SX; anything else uses the two-SX form
// RZ(delta) SX RZ(gamma - pi) SX RZ(beta + pi) with phase alpha - pi/2.
void emit_1q(BasisEmitter& em, const CMatrix& u, int q) {
  const Zyz z = zyz_decompose(u);
  if (std::abs(z.gamma) < kAngleTolerance) {
    em.rz(z.beta + z.delta, q);
    em.phase(z.alpha);
    return;
  }
  if (std::abs(z.gamma - kHalfPi) < kAngleTolerance) {
    em.rz(z.delta - kHalfPi, q);
    em.gate(Gate::sx(q));
    em.rz(z.beta + kHalfPi, q);
    em.phase(z.alpha - kPi / 4.0);
    return;
  }
  em.rz(z.delta, q);
  em.gate(Gate::sx(q));
  em.rz(z.gamma - kPi, q);
  em.gate(Gate::sx(q));
  em.rz(z.beta + kPi, q);
  em.phase(z.alpha - kHalfPi);
}

void emit_cx(BasisEmitter& em, int control, int target) {
  emit_h(em, target);
  em.gate(Gate::cz(control, target));
  emit_h(em, target);
}

}  // namespace

Circuit transpile(const Circuit& circuit) {
  // Stage one: strip structural gates down to elementary ones.
  Circuit flat(circuit.num_qubits);
  for (const Gate& g : flatten(circuit).instructions) {
    switch (g.kind) {
      case GateKind::Cswap:
        flat.append(decompose_cswap(g.qubits[0], g.qubits[1], g.qubits[2]));
        break;
      case GateKind::Swap:
        flat.push(Gate::cx(g.qubits[0], g.qubits[1]));
        flat.push(Gate::cx(g.qubits[1], g.qubits[0]));
        flat.push(Gate::cx(g.qubits[0], g.qubits[1]));
        break;
      default:
        flat.push(g);
    }
  }

  // Stage two: rewrite into the hardware basis.
  BasisEmitter em(circuit.num_qubits);
  for (const Gate& g : flat.instructions) {
    switch (g.kind) {
      case GateKind::X:
        em.gate(Gate::x(g.qubits[0]));
        break;
      case GateKind::Sx:
        em.gate(Gate::sx(g.qubits[0]));
        break;
      case GateKind::Cz:
        em.gate(Gate::cz(g.qubits[0], g.qubits[1]));
        break;
      case GateKind::Rz:
        em.rz(g.angle, g.qubits[0]);
        break;
      case GateKind::Cx:
        emit_cx(em, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::H:
        emit_h(em, g.qubits[0]);
        break;
      case GateKind::S:
        em.rz(kHalfPi, g.qubits[0]);
        em.phase(kPi / 4.0);
        break;
      case GateKind::Sdg:
        em.rz(-kHalfPi, g.qubits[0]);
        em.phase(-kPi / 4.0);
        break;
      case GateKind::Ry:
      case GateKind::Unitary:
        emit_1q(em, gate_matrix(g), g.qubits[0]);
        break;
      case GateKind::GlobalPhase:
        em.phase(g.angle);
        break;
      case GateKind::Swap:
      case GateKind::Cswap:
      case GateKind::Controlled:
        throw std::logic_error("structural gate survived stage one");
    }
  }
  return em.finish();
}

int depth(const Circuit& circuit) {
  std::vector<int> frontier(circuit.num_qubits, 0);
  int result = 0;
  for (const Gate& g : circuit.instructions) {
    if (g.kind == GateKind::GlobalPhase) continue;
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, frontier[q]);
    ++layer;
    for (int q : g.qubits) frontier[q] = layer;
    result = std::max(result, layer);
  }
  return result;
}

}  // namespace qsp::synth

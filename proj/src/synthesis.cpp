#include "qsp/synthesis.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <vector>

#include "euler.hpp"

namespace qsp::synth {

namespace {

constexpr double kQuarterPi = 0.78539816339744830962;

void push_rotation(Circuit& circ, GateKind axis, double angle, int qubit) {
  if (std::abs(angle) < kAngleTolerance) return;
  circ.push(Gate{axis, {qubit}, angle});
}

// In-place Walsh-Hadamard transform (unnormalised).
void fwht(std::vector<double>& v) {
  for (size_t len = 1; len < v.size(); len <<= 1) {
    for (size_t i = 0; i < v.size(); i += len << 1) {
      for (size_t j = i; j < i + len; ++j) {
        const double x = v[j];
        const double y = v[j + len];
        v[j] = x + y;
        v[j + len] = x - y;
      }
    }
  }
}

// Pushes a CX, cancelling it against an identical trailing CX.  The Gray
// walk below emits back-to-back pairs whenever the intervening rotation
// vanished.
void push_cx_cancelling(Circuit& circ, int control, int target) {
  if (!circ.instructions.empty()) {
    const Gate& last = circ.instructions.back();
    if (last.kind == GateKind::Cx && last.qubits[0] == control && last.qubits[1] == target) {
      circ.instructions.pop_back();
      return;
    }
  }
  circ.push(Gate::cx(control, target));
}

// Multiplexed rotation: applies R_axis(angles[c]) to `target` for every
// control pattern c (bit j of c = state of controls[j]).  Realised as the
// standard Gray-code walk of 2^k rotations interleaved with 2^k CX.
void append_ucr(Circuit& circ, GateKind axis, std::span<const int> controls, int target,
                std::span<const double> angles) {
  const size_t k = controls.size();
  if (k == 0) {
    push_rotation(circ, axis, angles[0], target);
    return;
  }
  bool all_zero = true;
  for (double a : angles) {
    if (std::abs(a) >= kAngleTolerance) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return;

  const size_t n = size_t{1} << k;
  // Rotation i in the walk sees the X-conjugation parity <c, gray(i)>, so
  // the per-step angles are the Gray-permuted Walsh transform of `angles`.
  std::vector<double> w(angles.begin(), angles.end());
  fwht(w);
  for (size_t i = 0; i < n; ++i) {
    const size_t gray = i ^ (i >> 1);
    push_rotation(circ, axis, w[gray] / static_cast<double>(n), target);
    const size_t ctrl_index = (i + 1 == n) ? k - 1 : std::countr_zero(i + 1);
    push_cx_cancelling(circ, controls[ctrl_index], target);
  }
}

// Controlled version of an arbitrary one-qubit unitary via the two-CX ABC
// construction; any determinant phase becomes an RZ on the control plus a
// global-phase entry, keeping the block action exact.
void append_controlled_1q(Circuit& out, const CMatrix& u, int control, int target) {
  const Zyz z = zyz_decompose(u);
  push_rotation(out, GateKind::Rz, (z.delta - z.beta) / 2.0, target);
  out.push(Gate::cx(control, target));
  push_rotation(out, GateKind::Rz, -(z.delta + z.beta) / 2.0, target);
  push_rotation(out, GateKind::Ry, -z.gamma / 2.0, target);
  out.push(Gate::cx(control, target));
  push_rotation(out, GateKind::Ry, z.gamma / 2.0, target);
  push_rotation(out, GateKind::Rz, z.beta, target);
  if (std::abs(z.alpha) >= kAngleTolerance) {
    out.push(Gate::rz(z.alpha, control));
    out.push(Gate::global_phase(z.alpha / 2.0));
  }
}

}  // namespace

SynthesizedPrep prepare_state(const StateVector& target) {
  if (std::abs(target.norm_squared() - 1.0) > 1e-8) {
    throw std::invalid_argument("preparation target must be normalised");
  }
  const int n = target.num_qubits();
  std::vector<cplx> work(target.amplitudes().begin(), target.amplitudes().end());

  // Disentangle the top qubit of the shrinking register: per control block,
  // RZ(lambda) aligns the pair's phases and RY(-theta) rotates it onto |0>.
  std::vector<std::vector<double>> ry_angles(n);
  std::vector<std::vector<double>> rz_angles(n);
  for (int t = n - 1; t >= 0; --t) {
    const size_t half = size_t{1} << t;
    ry_angles[t].resize(half);
    rz_angles[t].resize(half);
    for (size_t c = 0; c < half; ++c) {
      const cplx a = work[c];
      const cplx b = work[c | half];
      double theta = 0.0;
      double lambda = 0.0;
      if (std::abs(b) >= 1e-15) {
        theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
        lambda = std::arg(a) - std::arg(b);
      }
      ry_angles[t][c] = theta;
      rz_angles[t][c] = lambda;
      const cplx ar = a * std::polar(1.0, -lambda / 2.0);
      const cplx br = b * std::polar(1.0, lambda / 2.0);
      work[c] = std::cos(theta / 2.0) * ar + std::sin(theta / 2.0) * br;
    }
    work.resize(half);
  }
  const double gamma = std::arg(work[0]);

  // The prep circuit is the inverse walk, re-entangling from qubit 0 up.
  Circuit circ(n);
  std::vector<int> controls;
  for (int t = 0; t < n; ++t) {
    controls.resize(t);
    std::iota(controls.begin(), controls.end(), 0);
    append_ucr(circ, GateKind::Ry, controls, t, ry_angles[t]);
    for (double& a : rz_angles[t]) a = -a;
    append_ucr(circ, GateKind::Rz, controls, t, rz_angles[t]);
  }
  return {std::move(circ), -gamma};
}

SynthesizedPrep prepare_separable(const StateVector& block, int block_count) {
  if (block_count < 1) {
    throw std::invalid_argument("separable spec needs a positive block count");
  }
  SynthesizedPrep block_prep = prepare_state(block);
  Circuit circ(block.num_qubits() * block_count);
  for (int b = 0; b < block_count; ++b) {
    circ.append(block_prep.circuit, b * block.num_qubits());
  }
  return {std::move(circ), block_count * block_prep.global_phase};
}

SynthesizedPrep prepare_separable(const SeparablePrepSpec& spec) {
  if (spec.block_qubits < 1) {
    throw std::invalid_argument("separable spec needs a positive block size");
  }
  return prepare_separable(random_state(spec.block_qubits, spec.block_seed), spec.block_count);
}

Circuit controlled_onto(const Circuit& body, int control, std::span<const int> targets,
                        ControlPolarity polarity, int num_qubits) {
  if (static_cast<int>(targets.size()) != body.num_qubits) {
    throw std::invalid_argument("target list must match payload width");
  }
  Circuit out(num_qubits);
  if (polarity == ControlPolarity::OnZero) out.push(Gate::x(control));

  for (const Gate& g : body.instructions) {
    auto t = [&](int j) { return targets[static_cast<size_t>(g.qubits[j])]; };
    switch (g.kind) {
      case GateKind::X:
      case GateKind::Sx:
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::Rz:
      case GateKind::Ry:
        append_controlled_1q(out, one_qubit_matrix(g.kind, g.angle), control, t(0));
        break;
      case GateKind::Unitary:
        if (g.arity() != 1) {
          throw std::invalid_argument("cannot control a multi-qubit UNITARY payload");
        }
        append_controlled_1q(out, gate_matrix(g), control, t(0));
        break;
      case GateKind::Cx:
        out.append(decompose_toffoli(control, t(0), t(1)));
        break;
      case GateKind::Cz:
        out.push(Gate::h(t(1)));
        out.append(decompose_toffoli(control, t(0), t(1)));
        out.push(Gate::h(t(1)));
        break;
      case GateKind::Swap:
        out.append(decompose_cswap(control, t(0), t(1)));
        break;
      case GateKind::GlobalPhase:
        // A phase on the payload is a relative phase once controlled.
        out.push(Gate::rz(g.angle, control));
        out.push(Gate::global_phase(g.angle / 2.0));
        break;
      case GateKind::Cswap:
      case GateKind::Controlled:
        throw std::invalid_argument("cannot control a payload containing controlled gates");
    }
  }

  if (polarity == ControlPolarity::OnZero) out.push(Gate::x(control));
  return out;
}

Circuit controlled(const SynthesizedPrep& prep, ControlPolarity polarity) {
  const int n = prep.circuit.num_qubits;
  std::vector<int> targets(n);
  std::iota(targets.begin(), targets.end(), 0);
  return controlled_onto(prep.circuit, n, targets, polarity, n + 1);
}

Circuit decompose_toffoli(int control0, int control1, int target) {
  const int a = control0, b = control1, t = target;
  Circuit circ(std::max({a, b, t}) + 1);
  circ.push(Gate::h(t));
  circ.push(Gate::cx(b, t));
  circ.push(Gate::rz(-kQuarterPi, t));
  circ.push(Gate::cx(a, t));
  circ.push(Gate::rz(kQuarterPi, t));
  circ.push(Gate::cx(b, t));
  circ.push(Gate::rz(-kQuarterPi, t));
  circ.push(Gate::cx(a, t));
  circ.push(Gate::rz(kQuarterPi, b));
  circ.push(Gate::rz(kQuarterPi, t));
  circ.push(Gate::h(t));
  circ.push(Gate::cx(a, b));
  circ.push(Gate::rz(kQuarterPi, a));
  circ.push(Gate::rz(-kQuarterPi, b));
  circ.push(Gate::cx(a, b));
  // The T-for-RZ substitution above leaves a residual e^{-i pi/8}.
  circ.push(Gate::global_phase(kQuarterPi / 2.0));
  return circ;
}

Circuit decompose_cswap(int control, int a, int b) {
  if (control == a || control == b || a == b) {
    throw std::invalid_argument("CSWAP wires must be distinct");
  }
  Circuit circ(std::max({control, a, b}) + 1);
  circ.push(Gate::cx(b, a));
  circ.append(decompose_toffoli(control, a, b));
  circ.push(Gate::cx(b, a));
  return circ;
}

Circuit decompose_registers_cswap(int control, std::span<const int> reg_a,
                                  std::span<const int> reg_b) {
  if (reg_a.size() != reg_b.size()) {
    throw std::invalid_argument("swapped registers must have equal length");
  }
  int width = control;
  for (int q : reg_a) width = std::max(width, q);
  for (int q : reg_b) width = std::max(width, q);
  Circuit circ(width + 1);
  for (size_t i = 0; i < reg_a.size(); ++i) {
    circ.append(decompose_cswap(control, reg_a[i], reg_b[i]));
  }
  return circ;
}

Circuit flatten(const Circuit& circuit) {
  Circuit out(circuit.num_qubits);
  for (const Gate& g : circuit.instructions) {
    switch (g.kind) {
      case GateKind::Controlled: {
        const std::vector<int> targets(g.qubits.begin() + 1, g.qubits.end());
        out.append(controlled_onto(*g.inner, g.qubits[0], targets, g.polarity,
                                   circuit.num_qubits));
        break;
      }
      case GateKind::Unitary: {
        if (g.arity() != 1) {
          throw std::invalid_argument("cannot flatten a multi-qubit UNITARY");
        }
        const Zyz z = zyz_decompose(gate_matrix(g));
        push_rotation(out, GateKind::Rz, z.delta, g.qubits[0]);
        push_rotation(out, GateKind::Ry, z.gamma, g.qubits[0]);
        push_rotation(out, GateKind::Rz, z.beta, g.qubits[0]);
        if (std::abs(z.alpha) >= kAngleTolerance) out.push(Gate::global_phase(z.alpha));
        break;
      }
      default:
        out.push(g);
    }
  }
  return out;
}

}  // namespace qsp::synth

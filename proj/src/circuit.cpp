#include <algorithm>
#include <cmath>
#include <utility>

#include "qsp/types.hpp"

namespace qsp {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_unitary(const std::vector<cplx>& m, int dim) {
  // U†U = I entrywise.
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      cplx acc{0.0, 0.0};
      for (int k = 0; k < dim; ++k) {
        acc += std::conj(m[static_cast<size_t>(k) * dim + r]) * m[static_cast<size_t>(k) * dim + c];
      }
      const cplx expect = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(acc - expect) > kUnitarityTolerance) {
        throw std::invalid_argument("matrix payload is not unitary");
      }
    }
  }
}

void check_distinct(const std::vector<int>& qubits) {
  for (size_t i = 0; i < qubits.size(); ++i) {
    for (size_t j = i + 1; j < qubits.size(); ++j) {
      if (qubits[i] == qubits[j]) {
        throw std::invalid_argument("gate qubit indices must be distinct");
      }
    }
  }
}

}  // namespace

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Sx: return "SX";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::Rz: return "RZ";
    case GateKind::Ry: return "RY";
    case GateKind::Cx: return "CX";
    case GateKind::Cz: return "CZ";
    case GateKind::Swap: return "SWAP";
    case GateKind::Cswap: return "CSWAP";
    case GateKind::Unitary: return "UNITARY";
    case GateKind::Controlled: return "CONTROLLED";
    case GateKind::GlobalPhase: return "GLOBAL_PHASE";
  }
  return "?";
}

Gate Gate::unitary(std::vector<cplx> m, std::vector<int> targets) {
  const int k = static_cast<int>(targets.size());
  if (k < 1 || k > kMaxUnitaryQubits) {
    throw std::invalid_argument("UNITARY supports 1.." + std::to_string(kMaxUnitaryQubits) +
                                " qubits");
  }
  const size_t dim = size_t{1} << k;
  if (m.size() != dim * dim) {
    throw std::invalid_argument("UNITARY matrix size does not match target count");
  }
  check_unitary(m, static_cast<int>(dim));
  Gate g{GateKind::Unitary, std::move(targets)};
  g.matrix = std::move(m);
  return g;
}

Gate Gate::controlled(int control, Circuit body, ControlPolarity polarity,
                      std::vector<int> targets) {
  if (static_cast<int>(targets.size()) != body.num_qubits) {
    throw std::invalid_argument("CONTROLLED target list must match inner circuit width");
  }
  Gate g{GateKind::Controlled, {}};
  g.qubits.reserve(targets.size() + 1);
  g.qubits.push_back(control);
  g.qubits.insert(g.qubits.end(), targets.begin(), targets.end());
  g.inner = std::make_shared<const Circuit>(std::move(body));
  g.polarity = polarity;
  return g;
}

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Cx:
    case GateKind::Cz:
    case GateKind::Swap:
    case GateKind::Cswap:
      return *this;
    case GateKind::S:
      return Gate{GateKind::Sdg, qubits};
    case GateKind::Sdg:
      return Gate{GateKind::S, qubits};
    case GateKind::Rz:
    case GateKind::Ry:
    case GateKind::GlobalPhase: {
      Gate g = *this;
      g.angle = -g.angle;
      return g;
    }
    case GateKind::Sx: {
      // SX† is not an elementary kind; carry it as a matrix payload.
      const cplx p{0.5, -0.5}, q{0.5, 0.5};
      return Gate::unitary({p, q, q, p}, qubits);
    }
    case GateKind::Unitary: {
      const size_t dim = size_t{1} << qubits.size();
      std::vector<cplx> m(matrix.size());
      for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) m[c * dim + r] = std::conj(matrix[r * dim + c]);
      }
      Gate g = *this;
      g.matrix = std::move(m);
      return g;
    }
    case GateKind::Controlled: {
      Gate g = *this;
      g.inner = std::make_shared<const Circuit>(inner->adjoint());
      return g;
    }
  }
  throw std::logic_error("unreachable");
}

void Circuit::push(Gate g) {
  check_distinct(g.qubits);
  for (int q : g.qubits) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("gate qubit index out of range for circuit width");
    }
  }
  instructions.push_back(std::move(g));
}

void Circuit::append(const Circuit& other, int offset) {
  if (offset < 0 || other.num_qubits + offset > num_qubits) {
    throw std::invalid_argument("appended circuit does not fit at the given offset");
  }
  for (const Gate& g : other.instructions) {
    Gate shifted = g;
    for (int& q : shifted.qubits) q += offset;
    push(std::move(shifted));
  }
}

Circuit Circuit::adjoint() const {
  Circuit out(num_qubits);
  out.instructions.reserve(instructions.size());
  for (auto it = instructions.rbegin(); it != instructions.rend(); ++it) {
    out.push(it->inverse());
  }
  return out;
}

CMatrix CMatrix::identity(int d) {
  CMatrix m(d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::mul(const CMatrix& rhs) const {
  CMatrix out(dim);
  for (int r = 0; r < dim; ++r) {
    for (int k = 0; k < dim; ++k) {
      const cplx v = at(r, k);
      if (v == cplx{0.0, 0.0}) continue;
      for (int c = 0; c < dim; ++c) out.at(r, c) += v * rhs.at(k, c);
    }
  }
  return out;
}

CMatrix CMatrix::dagger() const {
  CMatrix out(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) out.at(c, r) = std::conj(at(r, c));
  }
  return out;
}

CMatrix one_qubit_matrix(GateKind kind, double angle) {
  CMatrix m(2);
  switch (kind) {
    case GateKind::X:
      m.at(0, 1) = m.at(1, 0) = 1.0;
      return m;
    case GateKind::Sx:
      m.at(0, 0) = m.at(1, 1) = cplx{0.5, 0.5};
      m.at(0, 1) = m.at(1, 0) = cplx{0.5, -0.5};
      return m;
    case GateKind::H:
      m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = kInvSqrt2;
      m.at(1, 1) = -kInvSqrt2;
      return m;
    case GateKind::S:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = cplx{0.0, 1.0};
      return m;
    case GateKind::Sdg:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = cplx{0.0, -1.0};
      return m;
    case GateKind::Rz:
      m.at(0, 0) = std::polar(1.0, -angle / 2.0);
      m.at(1, 1) = std::polar(1.0, angle / 2.0);
      return m;
    case GateKind::Ry:
      m.at(0, 0) = m.at(1, 1) = std::cos(angle / 2.0);
      m.at(0, 1) = -std::sin(angle / 2.0);
      m.at(1, 0) = std::sin(angle / 2.0);
      return m;
    default:
      throw std::invalid_argument("not an elementary one-qubit kind");
  }
}

CMatrix gate_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Sx:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Rz:
    case GateKind::Ry:
      return one_qubit_matrix(g.kind, g.angle);
    case GateKind::Cx: {
      CMatrix m(4);
      // qubits[0] (control) is the low index bit.
      m.at(0, 0) = m.at(2, 2) = 1.0;
      m.at(1, 3) = m.at(3, 1) = 1.0;
      return m;
    }
    case GateKind::Cz: {
      CMatrix m = CMatrix::identity(4);
      m.at(3, 3) = -1.0;
      return m;
    }
    case GateKind::Swap: {
      CMatrix m(4);
      m.at(0, 0) = m.at(3, 3) = 1.0;
      m.at(1, 2) = m.at(2, 1) = 1.0;
      return m;
    }
    case GateKind::Cswap: {
      CMatrix m = CMatrix::identity(8);
      // control = bit 0, swapped pair = bits 1 and 2.
      m.at(3, 3) = m.at(5, 5) = 0.0;
      m.at(3, 5) = m.at(5, 3) = 1.0;
      return m;
    }
    case GateKind::Unitary: {
      CMatrix m(1 << g.qubits.size());
      m.data = g.matrix;
      return m;
    }
    case GateKind::GlobalPhase: {
      CMatrix m(1);
      m.at(0, 0) = std::polar(1.0, g.angle);
      return m;
    }
    case GateKind::Controlled: {
      const int n_inner = g.inner->num_qubits;
      if (n_inner + 1 > kMaxDenseQubits) {
        throw std::invalid_argument("controlled payload too wide to densify");
      }
      const int dim = 1 << n_inner;
      // Compose the payload unitary, mapping each instruction's qubit b onto
      // matrix index bit b.
      CMatrix u = CMatrix::identity(dim);
      for (const Gate& inner_gate : g.inner->instructions) {
        const CMatrix gm = gate_matrix(inner_gate);
        CMatrix full(dim);
        const int k = inner_gate.arity();
        for (int col = 0; col < dim; ++col) {
          int sub_col = 0;
          for (int b = 0; b < k; ++b) sub_col |= ((col >> inner_gate.qubits[b]) & 1) << b;
          for (int sub_row = 0; sub_row < (1 << k); ++sub_row) {
            int row = col;
            for (int b = 0; b < k; ++b) {
              const int bit = (sub_row >> b) & 1;
              row = (row & ~(1 << inner_gate.qubits[b])) | (bit << inner_gate.qubits[b]);
            }
            full.at(row, col) += gm.at(sub_row, sub_col);
          }
        }
        u = full.mul(u);
      }
      // Control occupies index bit 0 (it is qubits[0] of this gate).
      const int active = (g.polarity == ControlPolarity::OnOne) ? 1 : 0;
      CMatrix out = CMatrix::identity(2 * dim);
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          out.at((r << 1) | active, (c << 1) | active) = u.at(r, c);
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace qsp

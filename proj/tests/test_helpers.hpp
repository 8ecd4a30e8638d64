#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qsp/statevector.hpp"
#include "qsp/types.hpp"

// Test-local linear algebra, kept independent of the library's own matrix
// helpers so equivalence checks have a second route.

namespace testalg {

using qsp::cplx;

using Mat = std::vector<std::vector<cplx>>;

inline Mat identity(size_t dim) {
  Mat m(dim, std::vector<cplx>(dim));
  for (size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const size_t dim = a.size();
  Mat out(dim, std::vector<cplx>(dim));
  for (size_t r = 0; r < dim; ++r) {
    for (size_t k = 0; k < dim; ++k) {
      if (a[r][k] == cplx{0.0, 0.0}) continue;
      for (size_t c = 0; c < dim; ++c) out[r][c] += a[r][k] * b[k][c];
    }
  }
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const size_t da = a.size();
  const size_t db = b.size();
  Mat out(da * db, std::vector<cplx>(da * db));
  for (size_t ra = 0; ra < da; ++ra) {
    for (size_t ca = 0; ca < da; ++ca) {
      for (size_t rb = 0; rb < db; ++rb) {
        for (size_t cb = 0; cb < db; ++cb) {
          out[ra * db + rb][ca * db + cb] = a[ra][ca] * b[rb][cb];
        }
      }
    }
  }
  return out;
}

/// Embeds a k-qubit matrix (targets[b] <-> matrix bit b) into an n-qubit
/// matrix, written index-by-index rather than via kron products.
inline Mat embed(const Mat& gate, const std::vector<int>& targets, int n) {
  const size_t dim = size_t{1} << n;
  const int k = static_cast<int>(targets.size());
  Mat out(dim, std::vector<cplx>(dim));
  for (size_t col = 0; col < dim; ++col) {
    size_t sub_col = 0;
    for (int b = 0; b < k; ++b) sub_col |= ((col >> targets[b]) & 1) << b;
    for (size_t sub_row = 0; sub_row < (size_t{1} << k); ++sub_row) {
      size_t row = col;
      for (int b = 0; b < k; ++b) {
        row &= ~(size_t{1} << targets[b]);
        row |= ((sub_row >> b) & 1) << targets[b];
      }
      out[row][col] += gate[sub_row][sub_col];
    }
  }
  return out;
}

inline double max_entry_diff(const Mat& a, const Mat& b) {
  double worst = 0.0;
  for (size_t r = 0; r < a.size(); ++r) {
    for (size_t c = 0; c < a.size(); ++c) worst = std::max(worst, std::abs(a[r][c] - b[r][c]));
  }
  return worst;
}

inline Mat from_cmatrix(const qsp::CMatrix& m) {
  Mat out(static_cast<size_t>(m.dim), std::vector<cplx>(static_cast<size_t>(m.dim)));
  for (int r = 0; r < m.dim; ++r) {
    for (int c = 0; c < m.dim; ++c) out[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
  }
  return out;
}

/// Largest |difference| between two statevectors.
inline double max_amp_diff(const qsp::StateVector& a, const qsp::StateVector& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// Dense 2x2 / 4x4 / 8x8 matrices for the elementary kinds, written out by
/// hand (qubits[b] <-> matrix bit b, matching the library convention).
Mat dense_gate(const qsp::Gate& g);

/// Seeded random circuit over the elementary kinds (one- and two-qubit plus
/// CSWAP when width allows).
qsp::Circuit random_elementary_circuit(int num_qubits, int num_gates, uint64_t seed);

}  // namespace testalg

#include "qsp/rng.hpp"

namespace testalg {

inline Mat dense_gate(const qsp::Gate& g) {
  using qsp::GateKind;
  const double is = 1.0 / std::sqrt(2.0);
  const cplx i1{0.0, 1.0};
  switch (g.kind) {
    case GateKind::X: return {{0, 1}, {1, 0}};
    case GateKind::Sx:
      return {{cplx{0.5, 0.5}, cplx{0.5, -0.5}}, {cplx{0.5, -0.5}, cplx{0.5, 0.5}}};
    case GateKind::H: return {{is, is}, {is, -is}};
    case GateKind::S: return {{1, 0}, {0, i1}};
    case GateKind::Sdg: return {{1, 0}, {0, -i1}};
    case GateKind::Rz:
      return {{std::exp(-i1 * (g.angle / 2.0)), 0}, {0, std::exp(i1 * (g.angle / 2.0))}};
    case GateKind::Ry:
      return {{std::cos(g.angle / 2.0), -std::sin(g.angle / 2.0)},
              {std::sin(g.angle / 2.0), std::cos(g.angle / 2.0)}};
    case GateKind::Cx:
      // control = bit 0
      return {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
    case GateKind::Cz:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    case GateKind::Swap:
      return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    case GateKind::Cswap: {
      Mat m = identity(8);
      m[3][3] = m[5][5] = 0.0;
      m[3][5] = m[5][3] = 1.0;
      return m;
    }
    default:
      throw std::runtime_error("dense_gate: unsupported kind");
  }
}

inline qsp::Circuit random_elementary_circuit(int num_qubits, int num_gates, uint64_t seed) {
  using qsp::Gate;
  qsp::Rng rng(seed);
  qsp::Circuit circ(num_qubits);
  const auto pick_qubit = [&]() { return static_cast<int>(rng.next_u64() % num_qubits); };
  for (int g = 0; g < num_gates; ++g) {
    const int choice = (num_qubits == 1) ? static_cast<int>(rng.next_u64() % 7)
                                         : static_cast<int>(rng.next_u64() % 11);
    const int q0 = pick_qubit();
    int q1 = q0;
    while (num_qubits > 1 && q1 == q0) q1 = pick_qubit();
    switch (choice) {
      case 0: circ.push(Gate::x(q0)); break;
      case 1: circ.push(Gate::sx(q0)); break;
      case 2: circ.push(Gate::h(q0)); break;
      case 3: circ.push(Gate::s(q0)); break;
      case 4: circ.push(Gate::sdg(q0)); break;
      case 5: circ.push(Gate::rz(4.0 * rng.uniform() - 2.0, q0)); break;
      case 6: circ.push(Gate::ry(4.0 * rng.uniform() - 2.0, q0)); break;
      case 7: circ.push(Gate::cx(q0, q1)); break;
      case 8: circ.push(Gate::cz(q0, q1)); break;
      case 9: circ.push(Gate::swap(q0, q1)); break;
      default: {
        if (num_qubits < 3) {
          circ.push(Gate::cx(q0, q1));
          break;
        }
        int q2 = pick_qubit();
        while (q2 == q0 || q2 == q1) q2 = pick_qubit();
        circ.push(Gate::cswap(q0, q1, q2));
        break;
      }
    }
  }
  return circ;
}

}  // namespace testalg

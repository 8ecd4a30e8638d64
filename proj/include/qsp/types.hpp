#pragma once

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsp {

using cplx = std::complex<double>;

/// Dense simulation is capped so a statevector never exceeds 2^20 amplitudes.
inline constexpr int kMaxSimQubits = 20;
/// Cap for materialising a full circuit unitary (2^10 x 2^10).
inline constexpr int kMaxDenseQubits = 10;
/// Largest matrix payload accepted for a UNITARY gate.
inline constexpr int kMaxUnitaryQubits = 4;
/// Rotations with |angle| below this are dropped during synthesis/transpile.
inline constexpr double kAngleTolerance = 1e-12;
/// Matrices must satisfy U†U = I entrywise within this bound.
inline constexpr double kUnitarityTolerance = 1e-10;

/// Raised when a recovery formula would divide by a (near-)zero reference
/// amplitude.  Callers should retry with a projection onto a basis state
/// where the reference state has weight.
class DegenerateReferenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by resource accounting when a circuit still contains gates outside
/// the {CZ, RZ, SX, X} basis.
class NotTranspiledError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GateKind {
  X,
  Sx,
  H,
  S,
  Sdg,
  Rz,
  Ry,
  Cx,
  Cz,
  Swap,
  Cswap,
  Unitary,
  Controlled,
  GlobalPhase,
};

enum class ControlPolarity { OnOne, OnZero };

const char* gate_kind_name(GateKind kind);

struct Circuit;

/// One circuit instruction.  `qubits` lists the wires the gate acts on,
/// control first where the kind has one.  Rotation kinds carry `angle`,
/// Unitary carries a row-major matrix, Controlled carries an inner circuit
/// whose qubit j maps onto qubits[1 + j].
struct Gate {
  GateKind kind{};
  std::vector<int> qubits;
  double angle = 0.0;
  std::vector<cplx> matrix;
  std::shared_ptr<const Circuit> inner;
  ControlPolarity polarity = ControlPolarity::OnOne;

  Gate() = default;
  Gate(GateKind k, std::vector<int> q, double a = 0.0)
      : kind(k), qubits(std::move(q)), angle(a) {}

  static Gate x(int q) { return Gate{GateKind::X, {q}}; }
  static Gate sx(int q) { return Gate{GateKind::Sx, {q}}; }
  static Gate h(int q) { return Gate{GateKind::H, {q}}; }
  static Gate s(int q) { return Gate{GateKind::S, {q}}; }
  static Gate sdg(int q) { return Gate{GateKind::Sdg, {q}}; }
  static Gate rz(double theta, int q) { return Gate{GateKind::Rz, {q}, theta}; }
  static Gate ry(double theta, int q) { return Gate{GateKind::Ry, {q}, theta}; }
  static Gate cx(int control, int target) { return Gate{GateKind::Cx, {control, target}}; }
  static Gate cz(int a, int b) { return Gate{GateKind::Cz, {a, b}}; }
  static Gate swap(int a, int b) { return Gate{GateKind::Swap, {a, b}}; }
  static Gate cswap(int control, int a, int b) { return Gate{GateKind::Cswap, {control, a, b}}; }
  static Gate global_phase(double phi) { return Gate{GateKind::GlobalPhase, {}, phi}; }

  /// Validates the matrix payload for unitarity.
  static Gate unitary(std::vector<cplx> m, std::vector<int> targets);

  /// Controlled application of a whole sub-circuit.  Inner qubit j acts on
  /// targets[j]; the control wire is prepended to `qubits`.
  static Gate controlled(int control, Circuit body, ControlPolarity polarity,
                         std::vector<int> targets);

  /// Number of wires the gate touches.
  int arity() const { return static_cast<int>(qubits.size()); }

  Gate inverse() const;
};

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> instructions;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {}

  /// Appends after validating qubit indices (distinct, in range).
  void push(Gate g);

  /// Appends all of `other`, shifting its qubit indices by `offset`.
  void append(const Circuit& other, int offset = 0);

  /// Reversed instruction order with every gate inverted.
  Circuit adjoint() const;

  size_t size() const { return instructions.size(); }
};

/// Square complex matrix, row-major.
struct CMatrix {
  int dim = 0;
  std::vector<cplx> data;

  CMatrix() = default;
  explicit CMatrix(int d) : dim(d), data(static_cast<size_t>(d) * d) {}

  cplx& at(int r, int c) { return data[static_cast<size_t>(r) * dim + c]; }
  const cplx& at(int r, int c) const { return data[static_cast<size_t>(r) * dim + c]; }

  static CMatrix identity(int d);
  CMatrix mul(const CMatrix& rhs) const;
  CMatrix dagger() const;
};

/// 2x2 matrix of an elementary one-qubit kind (X, SX, H, S, SDG, RZ, RY).
/// Throws for multi-qubit or structural kinds.
CMatrix one_qubit_matrix(GateKind kind, double angle = 0.0);

/// Dense matrix of a gate on its own wires (qubits[0] = least significant
/// row/column bit).  Controlled payloads are expanded recursively and are
/// subject to the dense-width cap.
CMatrix gate_matrix(const Gate& g);

}  // namespace qsp

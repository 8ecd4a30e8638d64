#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

#include "qsp/types.hpp"

namespace qsp {

/// Dense amplitude array over num_qubits wires.  Qubit 0 is the least
/// significant bit of the amplitude index; bitstrings are printed with the
/// most significant qubit first.  States are never renormalised behind the
/// caller's back: norm drift signals a gate bug.
class StateVector {
 public:
  /// |0...0> on n qubits; n must lie in [1, kMaxSimQubits].
  explicit StateVector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  size_t size() const { return amps_.size(); }

  std::span<const cplx> amplitudes() const { return amps_; }
  std::span<cplx> amplitudes() { return amps_; }

  const cplx& operator[](size_t i) const { return amps_[i]; }
  cplx& operator[](size_t i) { return amps_[i]; }

  double norm_squared() const;

 private:
  int num_qubits_;
  std::vector<cplx> amps_;
};

StateVector zero_state(int num_qubits);

/// Normalised state with amplitudes drawn from an isotropic complex normal
/// distribution; identical seeds give identical states.
StateVector random_state(int num_qubits, uint64_t seed);

void apply_gate(StateVector& state, const Gate& gate);

void apply_circuit(StateVector& state, const Circuit& circuit);

/// <bra|ket> = sum_k conj(bra_k) * ket_k.
cplx inner_product(const StateVector& bra, const StateVector& ket);

/// Amplitude <bitstring|state>; the bitstring is most-significant-qubit
/// first and must have exactly num_qubits characters from {0, 1}.
cplx basis_coefficient(const StateVector& state, std::string_view bitstring);

/// (p0, p1) for a Z measurement of one qubit; p0 + p1 = 1 up to rounding.
std::pair<double, double> ancilla_outcome_probabilities(const StateVector& state,
                                                        int ancilla_index);

/// Counts (n0, n1) over `shots` simulated Z measurements of one qubit.
/// Deterministic for a fixed (state, seed, shots) triple.
std::pair<long long, long long> sample_ancilla(const StateVector& state, int ancilla_index,
                                               long long shots, uint64_t seed);

/// Full 2^n x 2^n unitary of a circuit, built by applying it to every basis
/// state.  Capped at kMaxDenseQubits wires.
CMatrix circuit_unitary(const Circuit& circuit);

}  // namespace qsp

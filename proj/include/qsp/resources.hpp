#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/protocols.hpp"
#include "qsp/types.hpp"

namespace qsp::resources {

/// Gate census of a transpiled circuit.  CZ is the only two-qubit basis
/// gate, so two_qubit_count = counts[CZ]; dq = depth * qubits.
struct ResourceReport {
  std::map<GateKind, long long> counts;
  long long two_qubit_count = 0;
  int depth = 0;
  int qubits = 0;
  long long dq = 0;

  long long count(GateKind kind) const {
    const auto it = counts.find(kind);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Exact census of a circuit already in the {CZ, RZ, SX, X} basis;
/// GLOBAL_PHASE entries are ignored.  Throws NotTranspiledError otherwise.
ResourceReport report(const Circuit& circuit);

/// One protocol's cost at one scan configuration.  Gate counts and depth
/// are summed over the real- and imaginary-part circuits.
struct ComparisonRow {
  protocols::ProtocolKind protocol{};
  int block_qubits = 0;
  int block_count = 0;
  int qubits = 0;
  std::map<GateKind, long long> counts;
  long long two_qubit_count = 0;
  long long depth = 0;
  long long dq = 0;
};

/// Builds, transpiles and measures both parts of the Hadamard and
/// one-control tests for a separable A (block_count seeded blocks of
/// block_qubits wires) against a dense random B.
std::pair<ComparisonRow, ComparisonRow> compare_protocols(int block_qubits, int block_count,
                                                          uint64_t seed);

struct ScanResult {
  std::vector<ComparisonRow> rows;  ///< hadamard row then one-control row per n
  std::optional<int> gate_crossover_n;  ///< smallest n with fewer one-control CZ
  std::optional<int> dq_crossover_n;    ///< smallest n with smaller one-control dq
  /// Paper-style selection heuristic per scanned n: prefer one-control when
  /// the controlled-U_B-dagger CZ cost exceeds the 8n CSWAP overhead.
  std::vector<bool> heuristic_prefers_one_control;
};

ScanResult crossover_scan(int n_min, int n_max, int block_count, uint64_t seed);

/// CSV with header protocol,n,p,qubits,cz,rz,sx,x,two_qubit,depth,dq.
std::string to_csv(const ScanResult& scan);

std::string to_json(const ScanResult& scan);

/// One-line human summary of the crossover points.
std::string summary_line(const ScanResult& scan);

}  // namespace qsp::resources

#include "qsp/resources.hpp"

#include <sstream>

#include "qsp/numfmt.hpp"
#include "qsp/rng.hpp"
#include "qsp/transpile.hpp"

namespace qsp::resources {

using protocols::Part;
using protocols::ProtocolKind;
using synth::SynthesizedPrep;

ResourceReport report(const Circuit& circuit) {
  ResourceReport rep;
  rep.qubits = circuit.num_qubits;
  for (const Gate& g : circuit.instructions) {
    if (g.kind == GateKind::GlobalPhase) continue;
    if (!synth::is_basis_gate(g.kind)) {
      throw NotTranspiledError(std::string("circuit contains non-basis gate ") +
                               gate_kind_name(g.kind));
    }
    ++rep.counts[g.kind];
  }
  rep.two_qubit_count = rep.count(GateKind::Cz);
  rep.depth = synth::depth(circuit);
  rep.dq = static_cast<long long>(rep.depth) * rep.qubits;
  return rep;
}

namespace {

ComparisonRow summed_row(ProtocolKind protocol, int block_qubits, int block_count,
                         const Circuit& real_part, const Circuit& imag_part) {
  const ResourceReport re = report(synth::transpile(real_part));
  const ResourceReport im = report(synth::transpile(imag_part));
  ComparisonRow row;
  row.protocol = protocol;
  row.block_qubits = block_qubits;
  row.block_count = block_count;
  row.qubits = real_part.num_qubits;
  row.counts = re.counts;
  for (const auto& [kind, count] : im.counts) row.counts[kind] += count;
  row.two_qubit_count = re.two_qubit_count + im.two_qubit_count;
  row.depth = static_cast<long long>(re.depth) + im.depth;
  row.dq = row.depth * row.qubits;
  return row;
}

}  // namespace

std::pair<ComparisonRow, ComparisonRow> compare_protocols(int block_qubits, int block_count,
                                                          uint64_t seed) {
  const SynthesizedPrep prep_a =
      synth::prepare_separable({block_qubits, block_count, seed});
  const int total = block_qubits * block_count;
  const SynthesizedPrep prep_b = synth::prepare_state(random_state(total, mix_seed(seed, 1)));

  ComparisonRow hadamard =
      summed_row(ProtocolKind::HadamardTest, block_qubits, block_count,
                 protocols::build_hadamard_test(prep_a, prep_b, Part::Real),
                 protocols::build_hadamard_test(prep_a, prep_b, Part::Imag));
  ComparisonRow one_control =
      summed_row(ProtocolKind::OneControl, block_qubits, block_count,
                 protocols::build_one_control(prep_a, prep_b, Part::Real),
                 protocols::build_one_control(prep_a, prep_b, Part::Imag));
  return {std::move(hadamard), std::move(one_control)};
}

ScanResult crossover_scan(int n_min, int n_max, int block_count, uint64_t seed) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("invalid block size range");
  ScanResult scan;
  for (int n = n_min; n <= n_max; ++n) {
    auto [hadamard, one_control] = compare_protocols(n, block_count, seed);

    if (!scan.gate_crossover_n.has_value() &&
        one_control.two_qubit_count < hadamard.two_qubit_count) {
      scan.gate_crossover_n = n;
    }
    if (!scan.dq_crossover_n.has_value() && one_control.dq < hadamard.dq) {
      scan.dq_crossover_n = n;
    }

    // Selection heuristic: CZ cost of the controlled U_B^dagger alone versus
    // the 8 * (register width) CSWAP overhead.
    const SynthesizedPrep prep_b =
        synth::prepare_state(random_state(n * block_count, mix_seed(seed, 1)));
    Circuit adjoint_body = prep_b.circuit.adjoint();
    const SynthesizedPrep adjoint_prep{std::move(adjoint_body), 0.0};
    const ResourceReport controlled_b = report(synth::transpile(
        synth::controlled(adjoint_prep, ControlPolarity::OnOne)));
    scan.heuristic_prefers_one_control.push_back(controlled_b.two_qubit_count >
                                                 8LL * n * block_count);

    scan.rows.push_back(std::move(hadamard));
    scan.rows.push_back(std::move(one_control));
  }
  return scan;
}

std::string to_csv(const ScanResult& scan) {
  std::ostringstream os;
  os << "protocol,n,p,qubits,cz,rz,sx,x,two_qubit,depth,dq\n";
  for (const ComparisonRow& row : scan.rows) {
    os << protocols::protocol_name(row.protocol) << ',' << row.block_qubits << ','
       << row.block_count << ',' << row.qubits << ',';
    const auto count = [&row](GateKind k) {
      const auto it = row.counts.find(k);
      return it == row.counts.end() ? 0LL : it->second;
    };
    os << count(GateKind::Cz) << ',' << count(GateKind::Rz) << ',' << count(GateKind::Sx) << ','
       << count(GateKind::X) << ',' << row.two_qubit_count << ',' << row.depth << ',' << row.dq
       << '\n';
  }
  return os.str();
}

std::string to_json(const ScanResult& scan) {
  std::ostringstream os;
  os << "{\"rows\":[";
  for (size_t k = 0; k < scan.rows.size(); ++k) {
    const ComparisonRow& row = scan.rows[k];
    const auto count = [&row](GateKind kind) {
      const auto it = row.counts.find(kind);
      return it == row.counts.end() ? 0LL : it->second;
    };
    if (k > 0) os << ',';
    os << "{\"protocol\":\"" << protocols::protocol_name(row.protocol) << "\""
       << ",\"n\":" << row.block_qubits << ",\"p\":" << row.block_count
       << ",\"qubits\":" << row.qubits << ",\"cz\":" << count(GateKind::Cz)
       << ",\"rz\":" << count(GateKind::Rz) << ",\"sx\":" << count(GateKind::Sx)
       << ",\"x\":" << count(GateKind::X) << ",\"two_qubit\":" << row.two_qubit_count
       << ",\"depth\":" << row.depth << ",\"dq\":" << row.dq << "}";
  }
  os << "],\"gate_crossover_n\":";
  if (scan.gate_crossover_n) {
    os << *scan.gate_crossover_n;
  } else {
    os << "null";
  }
  os << ",\"dq_crossover_n\":";
  if (scan.dq_crossover_n) {
    os << *scan.dq_crossover_n;
  } else {
    os << "null";
  }
  os << "}";
  return os.str();
}

std::string summary_line(const ScanResult& scan) {
  std::ostringstream os;
  os << "two-qubit crossover: ";
  if (scan.gate_crossover_n) {
    os << "one-control cheaper from n=" << *scan.gate_crossover_n;
  } else {
    os << "none in range";
  }
  os << "; depth*qubits crossover: ";
  if (scan.dq_crossover_n) {
    os << "one-control cheaper from n=" << *scan.dq_crossover_n;
  } else {
    os << "none in range";
  }
  return os.str();
}

}  // namespace qsp::resources

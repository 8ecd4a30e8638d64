#include "qsp/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qsp/numfmt.hpp"
#include "qsp/rng.hpp"

namespace qsp::protocols {

namespace {

void check_widths(const synth::SynthesizedPrep& a, const synth::SynthesizedPrep& b) {
  if (a.circuit.num_qubits != b.circuit.num_qubits) {
    throw std::invalid_argument("preparation circuits have different widths");
  }
}

// Appends an uncontrolled preparation whose action on |0...0> is exactly
// the target (synthesis phase cancelled by bookkeeping).
void append_prep_exact(Circuit& circ, const synth::SynthesizedPrep& prep, int offset) {
  circ.append(prep.circuit, offset);
  if (std::abs(prep.global_phase) >= kAngleTolerance) {
    circ.push(Gate::global_phase(-prep.global_phase));
  }
}

// Payload for a controlled preparation; the trailing phase entry is
// promoted to an RZ on the control when lowered, so the controlled branch
// prepares the bare target.
Circuit exact_prep_body(const synth::SynthesizedPrep& prep) {
  Circuit body = prep.circuit;
  if (std::abs(prep.global_phase) >= kAngleTolerance) {
    body.push(Gate::global_phase(-prep.global_phase));
  }
  return body;
}

std::vector<int> iota_range(int first, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

void append_ancilla_header(Circuit& circ, int anc, Part part, const BuildOptions& opts) {
  circ.push(Gate::h(anc));
  if (part == Part::Imag) {
    circ.push(opts.flip_imag_phase ? Gate::s(anc) : Gate::sdg(anc));
  }
}

std::string validated_projection(std::string_view projection, int n) {
  if (projection.empty()) return std::string(static_cast<size_t>(n), '0');
  if (static_cast<int>(projection.size()) != n) {
    throw std::invalid_argument("projection bitstring length must equal the register width");
  }
  for (char c : projection) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("projection bitstring may contain only '0' and '1'");
    }
  }
  return std::string(projection);
}

// Prepares the state a prep circuit actually produces, with the synthesis
// phase removed: exactly the caller's target amplitudes.
StateVector realized_target(const synth::SynthesizedPrep& prep) {
  StateVector state(prep.circuit.num_qubits);
  apply_circuit(state, prep.circuit);
  const cplx fix = std::polar(1.0, -prep.global_phase);
  for (auto& a : state.amplitudes()) a *= fix;
  return state;
}

long long count_below(double p, long long shots, uint64_t seed) {
  Rng rng(seed);
  long long hits = 0;
  for (long long s = 0; s < shots; ++s) {
    if (rng.uniform() < p) ++hits;
  }
  return hits;
}

cplx require_reference(cplx value, const char* which) {
  if (std::abs(value) <= kReferenceThreshold) {
    throw DegenerateReferenceError(
        std::string(which) +
        " reference amplitude is (near) zero; choose a projection bitstring onto a basis "
        "state where the reference state has weight");
  }
  return value;
}

}  // namespace

const char* protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::SwapTest: return "swap";
    case ProtocolKind::VacuumTest: return "vacuum";
    case ProtocolKind::HadamardTest: return "hadamard";
    case ProtocolKind::OneControl: return "one-control";
    case ProtocolKind::ZeroControl: return "zero-control";
  }
  return "?";
}

std::optional<ProtocolKind> protocol_from_name(std::string_view name) {
  if (name == "swap") return ProtocolKind::SwapTest;
  if (name == "vacuum") return ProtocolKind::VacuumTest;
  if (name == "hadamard") return ProtocolKind::HadamardTest;
  if (name == "one-control") return ProtocolKind::OneControl;
  if (name == "zero-control") return ProtocolKind::ZeroControl;
  return std::nullopt;
}

bool carries_phase(ProtocolKind kind) {
  return kind == ProtocolKind::HadamardTest || kind == ProtocolKind::OneControl ||
         kind == ProtocolKind::ZeroControl;
}

Circuit build_swap_test(const synth::SynthesizedPrep& prep_a,
                        const synth::SynthesizedPrep& prep_b) {
  check_widths(prep_a, prep_b);
  const int n = prep_a.circuit.num_qubits;
  const int anc = 2 * n;
  Circuit circ(2 * n + 1);
  circ.push(Gate::h(anc));
  append_prep_exact(circ, prep_a, 0);
  append_prep_exact(circ, prep_b, n);
  for (int j = 0; j < n; ++j) circ.push(Gate::cswap(anc, j, n + j));
  circ.push(Gate::h(anc));
  return circ;
}

Circuit build_vacuum_test(const synth::SynthesizedPrep& prep_a,
                          const synth::SynthesizedPrep& prep_b) {
  check_widths(prep_a, prep_b);
  const int n = prep_a.circuit.num_qubits;
  Circuit circ(n);
  append_prep_exact(circ, prep_a, 0);
  circ.append(exact_prep_body(prep_b).adjoint(), 0);
  return circ;
}

Circuit build_hadamard_test(const synth::SynthesizedPrep& prep_a,
                            const synth::SynthesizedPrep& prep_b, Part part,
                            const BuildOptions& opts) {
  check_widths(prep_a, prep_b);
  const int n = prep_a.circuit.num_qubits;
  const int anc = n;
  Circuit circ(n + 1);
  append_ancilla_header(circ, anc, part, opts);
  // Controlled U_B^dagger U_A as one payload; both factors' phases ride
  // along and are promoted exactly.
  Circuit body = exact_prep_body(prep_a);
  body.append(exact_prep_body(prep_b).adjoint(), 0);
  circ.push(Gate::controlled(anc, std::move(body), ControlPolarity::OnOne, iota_range(0, n)));
  circ.push(Gate::h(anc));
  return circ;
}

Circuit build_one_control(const synth::SynthesizedPrep& prep_a,
                          const synth::SynthesizedPrep& prep_b, Part part,
                          std::string_view projection, const BuildOptions& opts) {
  check_widths(prep_a, prep_b);
  const int n = prep_a.circuit.num_qubits;
  const int anc = 2 * n;
  const std::string proj = validated_projection(projection, n);
  Circuit circ(2 * n + 1);
  append_ancilla_header(circ, anc, part, opts);
  // Open-controlled X onto every A wire whose projection bit is one: the
  // control-off branch then interferes <proj|B> instead of <0...0|B>.
  for (int j = 0; j < n; ++j) {
    if (proj[static_cast<size_t>(n - 1 - j)] == '1') {
      Circuit flip(1);
      flip.push(Gate::x(0));
      circ.push(Gate::controlled(anc, std::move(flip), ControlPolarity::OnZero, {j}));
    }
  }
  circ.push(
      Gate::controlled(anc, exact_prep_body(prep_a), ControlPolarity::OnOne, iota_range(0, n)));
  append_prep_exact(circ, prep_b, n);
  for (int j = 0; j < n; ++j) circ.push(Gate::cswap(anc, j, n + j));
  circ.push(Gate::h(anc));
  return circ;
}

Circuit build_zero_control(const synth::SynthesizedPrep& prep_a,
                           const synth::SynthesizedPrep& prep_b, Part part,
                           const BuildOptions& opts) {
  check_widths(prep_a, prep_b);
  const int n = prep_a.circuit.num_qubits;
  const int anc = 3 * n;
  Circuit circ(3 * n + 1);
  append_ancilla_header(circ, anc, part, opts);
  append_prep_exact(circ, prep_a, n);
  append_prep_exact(circ, prep_b, 2 * n);
  for (int j = 0; j < n; ++j) circ.push(Gate::cswap(anc, j, n + j));
  // Second register CSWAP controls on |0>: X-conjugate the ancilla.
  circ.push(Gate::x(anc));
  for (int j = 0; j < n; ++j) circ.push(Gate::cswap(anc, j, 2 * n + j));
  circ.push(Gate::x(anc));
  circ.push(Gate::h(anc));
  return circ;
}

cplx recover_one_control(double r, double i, cplx b0) {
  require_reference(b0, "b0");
  const double c = b0.real();
  const double d = b0.imag();
  const double n2 = c * c + d * d;
  return {(c * r + d * i) / n2, (c * i - d * r) / n2};
}

cplx recover_zero_control(double r, double i, cplx a0, cplx b0) {
  require_reference(a0, "a0");
  require_reference(b0, "b0");
  const double e = a0.real();
  const double f = a0.imag();
  const double c = b0.real();
  const double d = b0.imag();
  // conj(a0) * b0 = g + ih with the conjugated convention.
  const double g = e * c + f * d;
  const double h = e * d - f * c;
  const double n2 = (e * e + f * f) * (c * c + d * d);
  return {(g * r + h * i) / n2, (g * i - h * r) / n2};
}

namespace {

struct PartEvaluation {
  double outcome = 0.0;  // p(0) - p(1)
  long long shots = 0;
};

PartEvaluation evaluate_ancilla_difference(const Circuit& circ, int anc, long long shots,
                                           uint64_t seed) {
  StateVector state(circ.num_qubits);
  apply_circuit(state, circ);
  if (shots <= 0) {
    const auto [p0, p1] = ancilla_outcome_probabilities(state, anc);
    return {p0 - p1, 0};
  }
  const auto [n0, n1] = sample_ancilla(state, anc, shots, seed);
  return {static_cast<double>(n0 - n1) / static_cast<double>(shots), shots};
}

// Magnitude of a reference amplitude estimated via an auxiliary one-control
// run with the projection basis state in the A register; returns the
// estimate of |ref|^2 and its standard error.
std::pair<double, double> sample_reference_magnitude(const synth::SynthesizedPrep& prep,
                                                     const std::string& projection,
                                                     long long shots, uint64_t seed) {
  const int n = prep.circuit.num_qubits;
  Circuit basis_prep(n);
  for (int j = 0; j < n; ++j) {
    if (projection[static_cast<size_t>(n - 1 - j)] == '1') basis_prep.push(Gate::x(j));
  }
  const synth::SynthesizedPrep aux{std::move(basis_prep), 0.0};
  const Circuit circ = build_one_control(aux, prep, Part::Real, projection);
  const auto eval = evaluate_ancilla_difference(circ, 2 * n, shots, seed);
  const double r = eval.outcome;
  const double stderr_r =
      std::sqrt(std::max(0.0, 1.0 - r * r) / static_cast<double>(std::max<long long>(shots, 1)));
  return {r, stderr_r};
}

}  // namespace

OverlapEstimate estimate_overlap(ProtocolKind kind, const synth::SynthesizedPrep& prep_a,
                                 const synth::SynthesizedPrep& prep_b,
                                 const EstimateOptions& opts) {
  check_widths(prep_a, prep_b);
  const int n = prep_a.circuit.num_qubits;
  if (opts.shots < 0) throw std::invalid_argument("shot budget must be >= 0");

  OverlapEstimate est;
  est.protocol = kind;
  est.shots = opts.shots;
  est.seed = opts.seed;

  if (!carries_phase(kind)) {
    if (kind == ProtocolKind::SwapTest) {
      const Circuit circ = build_swap_test(prep_a, prep_b);
      const auto eval =
          evaluate_ancilla_difference(circ, 2 * n, opts.shots, mix_seed(opts.seed, 0));
      est.raw_magnitude_squared = eval.outcome;
      est.outcome.r = eval.outcome;
      est.outcome.shots_r = eval.shots;
    } else {
      const Circuit circ = build_vacuum_test(prep_a, prep_b);
      StateVector state(circ.num_qubits);
      apply_circuit(state, circ);
      const double p_all_zero = std::norm(state[0]);
      if (opts.shots <= 0) {
        est.raw_magnitude_squared = p_all_zero;
      } else {
        const long long hits = count_below(p_all_zero, opts.shots, mix_seed(opts.seed, 0));
        est.raw_magnitude_squared = static_cast<double>(hits) / static_cast<double>(opts.shots);
        est.outcome.shots_r = opts.shots;
      }
    }
    est.magnitude_squared = std::clamp(est.raw_magnitude_squared, 0.0, 1.0);
    est.clamped = est.raw_magnitude_squared < 0.0 || est.raw_magnitude_squared > 1.0;
    return est;
  }

  // Phase-bearing protocols.
  const std::string proj = validated_projection(opts.projection, n);
  est.projection = proj;

  const StateVector state_b = realized_target(prep_b);
  cplx b0{1.0, 0.0};
  cplx a0{1.0, 0.0};
  if (kind == ProtocolKind::OneControl) {
    b0 = require_reference(basis_coefficient(state_b, proj), "b0");
  } else if (kind == ProtocolKind::ZeroControl) {
    if (!opts.projection.empty()) {
      throw std::invalid_argument("the zero-control test has no projection variant");
    }
    const StateVector state_a = realized_target(prep_a);
    a0 = require_reference(state_a[0], "a0");
    b0 = require_reference(state_b[0], "b0");
  }

  double ref_rel_stderr = 0.0;
  if (opts.reference_mode == ReferenceMode::Sampled && kind != ProtocolKind::HadamardTest) {
    const auto [rb, sb] =
        sample_reference_magnitude(prep_b, proj, opts.reference_shots, mix_seed(opts.seed, 2));
    const double mag2_b = std::max(rb, kReferenceThreshold * kReferenceThreshold);
    b0 = std::polar(std::sqrt(mag2_b), std::arg(b0));
    ref_rel_stderr += 0.5 * sb / mag2_b;
    if (kind == ProtocolKind::ZeroControl) {
      const std::string zeros(static_cast<size_t>(n), '0');
      const auto [ra, sa] =
          sample_reference_magnitude(prep_a, zeros, opts.reference_shots, mix_seed(opts.seed, 3));
      const double mag2_a = std::max(ra, kReferenceThreshold * kReferenceThreshold);
      a0 = std::polar(std::sqrt(mag2_a), std::arg(a0));
      ref_rel_stderr += 0.5 * sa / mag2_a;
    }
  }

  long long shots_r = 0;
  long long shots_i = 0;
  if (opts.shots > 0) {
    if (opts.shots < 2) {
      throw std::invalid_argument("phase-bearing protocols need at least 2 shots to split");
    }
    shots_i = opts.shots / 2;
    shots_r = opts.shots - shots_i;
  }

  auto build_part = [&](Part part) {
    switch (kind) {
      case ProtocolKind::HadamardTest:
        return build_hadamard_test(prep_a, prep_b, part, opts.build);
      case ProtocolKind::OneControl:
        return build_one_control(prep_a, prep_b, part, proj, opts.build);
      default:
        return build_zero_control(prep_a, prep_b, part, opts.build);
    }
  };
  const int anc = (kind == ProtocolKind::HadamardTest) ? n
                  : (kind == ProtocolKind::OneControl) ? 2 * n
                                                       : 3 * n;

  const auto eval_r =
      evaluate_ancilla_difference(build_part(Part::Real), anc, shots_r, mix_seed(opts.seed, 0));
  const auto eval_i =
      evaluate_ancilla_difference(build_part(Part::Imag), anc, shots_i, mix_seed(opts.seed, 1));
  est.outcome = {eval_r.outcome, eval_i.outcome, eval_r.shots, eval_i.shots};

  cplx value;
  switch (kind) {
    case ProtocolKind::HadamardTest:
      value = cplx{eval_r.outcome, eval_i.outcome};
      break;
    case ProtocolKind::OneControl:
      value = recover_one_control(eval_r.outcome, eval_i.outcome, b0);
      est.references.push_back({proj, b0});
      break;
    default:
      value = recover_zero_control(eval_r.outcome, eval_i.outcome, a0, b0);
      est.references.push_back({std::string(static_cast<size_t>(n), '0'), a0});
      est.references.push_back({std::string(static_cast<size_t>(n), '0'), b0});
      break;
  }
  est.value = value;
  est.raw_magnitude_squared = std::norm(value);
  est.magnitude_squared = std::clamp(est.raw_magnitude_squared, 0.0, 1.0);
  est.clamped = est.raw_magnitude_squared > 1.0;
  est.reference_stderr = std::abs(value) * ref_rel_stderr;
  return est;
}

std::string to_json(const OverlapEstimate& est) {
  std::ostringstream os;
  os << "{";
  os << "\"protocol\":\"" << protocol_name(est.protocol) << "\"";
  if (est.value.has_value()) {
    os << ",\"real\":" << format_double(est.value->real());
    os << ",\"imag\":" << format_double(est.value->imag());
  }
  if (est.magnitude_squared.has_value()) {
    os << ",\"magnitude_squared\":" << format_double(*est.magnitude_squared);
  }
  os << ",\"raw_magnitude_squared\":" << format_double(est.raw_magnitude_squared);
  os << ",\"clamped\":" << (est.clamped ? "true" : "false");
  os << ",\"shots\":" << est.shots;
  os << ",\"shots_real\":" << est.outcome.shots_r;
  os << ",\"shots_imag\":" << est.outcome.shots_i;
  os << ",\"seed\":" << est.seed;
  if (!est.projection.empty()) os << ",\"projection\":\"" << est.projection << "\"";
  os << ",\"references\":[";
  for (size_t k = 0; k < est.references.size(); ++k) {
    if (k > 0) os << ",";
    os << "{\"bitstring\":\"" << est.references[k].bitstring << "\""
       << ",\"real\":" << format_double(est.references[k].value.real())
       << ",\"imag\":" << format_double(est.references[k].value.imag()) << "}";
  }
  os << "]";
  if (est.reference_stderr > 0.0) {
    os << ",\"reference_stderr\":" << format_double(est.reference_stderr);
  }
  os << "}";
  return os.str();
}

}  // namespace qsp::protocols

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qsp/synthesis.hpp"
#include "qsp/types.hpp"

namespace qsp::protocols {

enum class ProtocolKind { SwapTest, VacuumTest, HadamardTest, OneControl, ZeroControl };
enum class Part { Real, Imag };

const char* protocol_name(ProtocolKind kind);
std::optional<ProtocolKind> protocol_from_name(std::string_view name);

/// True for protocols whose result is the complex overlap; the swap and
/// vacuum tests only produce its squared magnitude.
bool carries_phase(ProtocolKind kind);

/// Recovery refuses reference amplitudes at or below this magnitude.
inline constexpr double kReferenceThreshold = 1e-8;

struct BuildOptions {
  /// Fault-injection hook used by the validation command: builds the
  /// imaginary-part circuits with S instead of S-dagger on the ancilla.
  bool flip_imag_phase = false;
};

// Circuit builders.  Register layout: payload registers first (A, then B,
// then the bare register for the zero-control test), ancilla on the top
// wire.  Preparation phases are zeroed with global-phase entries so each
// register holds exactly the caller's target amplitudes; under a control
// the promotion machinery keeps that exact.

/// 2n+1 wires; ancilla p(0) - p(1) = |<B|A>|^2.
Circuit build_swap_test(const synth::SynthesizedPrep& prep_a,
                        const synth::SynthesizedPrep& prep_b);

/// n wires; P(all-zero outcome) = |<B|A>|^2.
Circuit build_vacuum_test(const synth::SynthesizedPrep& prep_a,
                          const synth::SynthesizedPrep& prep_b);

/// n+1 wires; ancilla p(0) - p(1) = Re or Im of <B|A>.
Circuit build_hadamard_test(const synth::SynthesizedPrep& prep_a,
                            const synth::SynthesizedPrep& prep_b, Part part,
                            const BuildOptions& opts = {});

/// 2n+1 wires; ancilla p(0) - p(1) = Re or Im of <B|A> * <t|B>, where t is
/// the projection bitstring (all zeros when empty).
Circuit build_one_control(const synth::SynthesizedPrep& prep_a,
                          const synth::SynthesizedPrep& prep_b, Part part,
                          std::string_view projection = {}, const BuildOptions& opts = {});

/// 3n+1 wires; ancilla p(0) - p(1) = Re or Im of <B|A> * conj(a0) * b0.
Circuit build_zero_control(const synth::SynthesizedPrep& prep_a,
                           const synth::SynthesizedPrep& prep_b, Part part,
                           const BuildOptions& opts = {});

/// Inverts R + iI = <B|A> * b0 for b0 = c + id:
/// <B|A> = (cR + dI)/|b0|^2 + i (cI - dR)/|b0|^2.
cplx recover_one_control(double r, double i, cplx b0);

/// Inverts the zero-control outcome.  The measured pair satisfies
/// R + iI = <B|A> * conj(a0) * b0 (pinned against the simulator), so the
/// composite reference fed into the division is conj(a0) * b0.
cplx recover_zero_control(double r, double i, cplx a0, cplx b0);

struct ReferenceCoefficient {
  std::string bitstring;
  cplx value{0.0, 0.0};
};

enum class ReferenceMode {
  /// Read reference amplitudes from the synthesised states (known
  /// classically).
  Classical,
  /// Estimate each reference magnitude with an auxiliary one-control run
  /// whose A register holds the projection basis state; the phase still
  /// comes from the classical read, and the induced first-order error is
  /// reported in the estimate.
  Sampled,
};

struct EstimateOptions {
  long long shots = 0;  ///< total budget; 0 = exact evaluation
  uint64_t seed = 0;
  std::string projection;  ///< one-control only; empty = all zeros
  ReferenceMode reference_mode = ReferenceMode::Classical;
  long long reference_shots = 100000;
  BuildOptions build;
};

struct MeasurementOutcome {
  double r = 0.0;
  double i = 0.0;
  long long shots_r = 0;  ///< 0 = exact
  long long shots_i = 0;
};

struct OverlapEstimate {
  ProtocolKind protocol{};
  std::optional<cplx> value;
  std::optional<double> magnitude_squared;
  double raw_magnitude_squared = 0.0;
  bool clamped = false;
  MeasurementOutcome outcome;
  std::vector<ReferenceCoefficient> references;
  std::string projection;
  long long shots = 0;
  uint64_t seed = 0;
  double reference_stderr = 0.0;
};

/// Builds, evaluates (exactly or by sampling) and post-processes one
/// protocol.  Phase-bearing protocols split the shot budget evenly between
/// the real and imaginary circuits, with per-part seeds derived from
/// `seed`.
OverlapEstimate estimate_overlap(ProtocolKind kind, const synth::SynthesizedPrep& prep_a,
                                 const synth::SynthesizedPrep& prep_b,
                                 const EstimateOptions& opts = {});

/// Key-value JSON rendering with 12-significant-digit numbers.
std::string to_json(const OverlapEstimate& estimate);

}  // namespace qsp::protocols

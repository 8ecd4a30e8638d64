#include <benchmark/benchmark.h>

#include "qsp/reference.hpp"
#include "qsp/rng.hpp"
#include "qsp/statevector.hpp"

// Fast bit-mask kernels (OpenMP above the size threshold) against the
// serial generic reference, on the gate mix the protocol circuits are made
// of.  Run manually: build/bench/bench_kernels

namespace {

qsp::Circuit layered_circuit(int num_qubits, int layers, uint64_t seed) {
  qsp::Rng rng(seed);
  qsp::Circuit circ(num_qubits);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < num_qubits; ++q) {
      switch (rng.next_u64() % 4) {
        case 0: circ.push(qsp::Gate::h(q)); break;
        case 1: circ.push(qsp::Gate::sx(q)); break;
        case 2: circ.push(qsp::Gate::rz(2.0 * rng.uniform() - 1.0, q)); break;
        default: circ.push(qsp::Gate::ry(2.0 * rng.uniform() - 1.0, q)); break;
      }
    }
    for (int q = 0; q + 1 < num_qubits; q += 2) {
      circ.push(qsp::Gate::cx(q, q + 1));
    }
  }
  return circ;
}

void bm_kernels(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qsp::Circuit circ = layered_circuit(n, 4, 7);
  qsp::StateVector psi = qsp::random_state(n, 1);
  for (auto _ : state) {
    qsp::apply_circuit(psi, circ);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(circ.size()) *
                          static_cast<int64_t>(psi.size()));
}

void bm_reference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qsp::Circuit circ = layered_circuit(n, 4, 7);
  qsp::StateVector psi = qsp::random_state(n, 1);
  for (auto _ : state) {
    qsp::ref::apply_circuit(psi, circ);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(circ.size()) *
                          static_cast<int64_t>(psi.size()));
}

}  // namespace

BENCHMARK(bm_kernels)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_reference)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsp/rng.hpp"
#include "qsp/statevector.hpp"
#include "test_helpers.hpp"

using namespace qsp;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("zero_state basics") {
  const StateVector one = zero_state(1);
  CHECK(one.size() == 2);
  CHECK(one[0] == cplx{1.0, 0.0});
  CHECK(one[1] == cplx{0.0, 0.0});

  const StateVector two = zero_state(2);
  CHECK(two.size() == 4);
  CHECK(two[0] == cplx{1.0, 0.0});
  for (size_t i = 1; i < 4; ++i) CHECK(two[i] == cplx{0.0, 0.0});

  const StateVector big = zero_state(12);
  CHECK(big.size() == 4096);
  CHECK(big.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(zero_state(0), std::invalid_argument);
  CHECK_THROWS_AS(zero_state(kMaxSimQubits + 1), std::invalid_argument);
}

TEST_CASE("apply_gate single gates") {
  StateVector s = zero_state(1);
  apply_gate(s, Gate::h(0));
  CHECK(std::abs(s[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s[1] - kInvSqrt2) < 1e-15);

  StateVector x = zero_state(1);
  apply_gate(x, Gate::x(0));
  CHECK(x[0] == cplx{0.0, 0.0});
  CHECK(x[1] == cplx{1.0, 0.0});
}

TEST_CASE("apply_gate cswap truth table") {
  // |control=1, a=0, b=1> on wires (0, 1, 2) is index 0b101 = 5.
  StateVector s = zero_state(3);
  s[0] = 0.0;
  s[5] = 1.0;
  apply_gate(s, Gate::cswap(0, 1, 2));
  CHECK(s[5] == cplx{0.0, 0.0});
  CHECK(s[3] == cplx{1.0, 0.0});  // |control=1, a=1, b=0>

  // Control off: nothing moves.
  StateVector idle = zero_state(3);
  idle[0] = 0.0;
  idle[4] = 1.0;  // |c=0, a=0, b=1>
  apply_gate(idle, Gate::cswap(0, 1, 2));
  CHECK(idle[4] == cplx{1.0, 0.0});
}

TEST_CASE("apply_gate errors") {
  StateVector s = zero_state(2);
  CHECK_THROWS_AS(apply_gate(s, Gate::h(2)), std::invalid_argument);
  CHECK_THROWS_AS(Gate::unitary({1.0, 0.0, 0.0, 2.0}, {0}), std::invalid_argument);
}

TEST_CASE("apply_circuit identity cases") {
  StateVector s = random_state(3, 11);
  const StateVector before = s;
  apply_circuit(s, Circuit(3));
  CHECK(testalg::max_amp_diff(s, before) == 0.0);

  StateVector hh = zero_state(1);
  Circuit twice(1);
  twice.push(Gate::h(0));
  twice.push(Gate::h(0));
  apply_circuit(hh, twice);
  CHECK(std::abs(hh[0] - 1.0) < 1e-12);
  CHECK(std::abs(hh[1]) < 1e-12);

  StateVector wrong = zero_state(2);
  CHECK_THROWS_AS(apply_circuit(wrong, Circuit(3)), std::invalid_argument);
}

TEST_CASE("apply_circuit matches a dense matrix product") {
  // Oracle: multiply embedded gate matrices built by hand in the test.
  const int n = 4;
  const Circuit circ = testalg::random_elementary_circuit(n, 60, 99);
  testalg::Mat u = testalg::identity(16);
  for (const Gate& g : circ.instructions) {
    u = testalg::matmul(testalg::embed(testalg::dense_gate(g), g.qubits, n), u);
  }
  for (int col = 0; col < 16; ++col) {
    StateVector basis = zero_state(n);
    basis[0] = 0.0;
    basis[static_cast<size_t>(col)] = 1.0;
    apply_circuit(basis, circ);
    for (int row = 0; row < 16; ++row) {
      CHECK(std::abs(basis[static_cast<size_t>(row)] - u[row][col]) < 1e-10);
    }
  }
}

TEST_CASE("inner_product") {
  CHECK(inner_product(zero_state(1), zero_state(1)) == cplx{1.0, 0.0});

  StateVector one = zero_state(1);
  apply_gate(one, Gate::x(0));
  CHECK(std::abs(inner_product(one, zero_state(1))) == 0.0);

  // Direct summation recomputed here, independent of the library loop.
  const StateVector a = random_state(3, 7);
  const StateVector b = random_state(3, 8);
  cplx direct{0.0, 0.0};
  for (size_t i = 0; i < a.size(); ++i) direct += std::conj(b[i]) * a[i];
  CHECK(std::abs(inner_product(b, a) - direct) < 1e-14);

  // Conjugate symmetry and normalisation.
  CHECK(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))) < 1e-14);
  CHECK(std::abs(inner_product(a, a) - 1.0) < 1e-12);

  CHECK_THROWS_AS(inner_product(zero_state(1), zero_state(2)), std::invalid_argument);
}

TEST_CASE("basis_coefficient") {
  CHECK(basis_coefficient(zero_state(3), "000") == cplx{1.0, 0.0});

  StateVector h = zero_state(1);
  apply_gate(h, Gate::h(0));
  CHECK(std::abs(basis_coefficient(h, "1") - kInvSqrt2) < 1e-15);

  const StateVector r = random_state(4, 21);
  CHECK(basis_coefficient(r, "0000") == r[0]);
  // Most significant qubit first: "1000" is qubit 3 set, index 8.
  CHECK(basis_coefficient(r, "1000") == r[8]);

  CHECK_THROWS_AS(basis_coefficient(r, "000"), std::invalid_argument);
  CHECK_THROWS_AS(basis_coefficient(r, "00x0"), std::invalid_argument);
}

TEST_CASE("ancilla_outcome_probabilities") {
  StateVector h = zero_state(1);
  apply_gate(h, Gate::h(0));
  const auto [p0, p1] = ancilla_outcome_probabilities(h, 0);
  CHECK(p0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p1 == doctest::Approx(0.5).epsilon(1e-12));

  const auto [q0, q1] = ancilla_outcome_probabilities(zero_state(2), 1);
  CHECK(q0 == 1.0);
  CHECK(q1 == 0.0);

  const StateVector r = random_state(5, 3);
  for (int q = 0; q < 5; ++q) {
    const auto [a, b] = ancilla_outcome_probabilities(r, q);
    CHECK(std::abs(a + b - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(ancilla_outcome_probabilities(r, 5), std::invalid_argument);
}

TEST_CASE("sample_ancilla determinism and edge cases") {
  const StateVector zero = zero_state(2);
  const auto [n0, n1] = sample_ancilla(zero, 0, 1000, 42);
  CHECK(n0 == 1000);
  CHECK(n1 == 0);

  StateVector h = zero_state(1);
  apply_gate(h, Gate::h(0));
  const auto first = sample_ancilla(h, 0, 5000, 7);
  const auto second = sample_ancilla(h, 0, 5000, 7);
  CHECK(first == second);
  CHECK(first.first + first.second == 5000);

  CHECK_THROWS_AS(sample_ancilla(h, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("sample_ancilla binomial concentration") {
  StateVector h = zero_state(1);
  apply_gate(h, Gate::h(0));
  const long long shots = 1000000;
  int within = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto [n0, n1] = sample_ancilla(h, 0, shots, seed);
    const double p_hat = static_cast<double>(n0) / static_cast<double>(shots);
    if (std::abs(p_hat - 0.5) <= 5e-3) ++within;
  }
  CHECK(within >= 95);
}

TEST_CASE("sampling consistency against exact probabilities") {
  // Empirical p0 within 4/sqrt(shots) of exact in at least 99% of trials.
  const long long shots = 10000;
  const double bound = 4.0 / std::sqrt(static_cast<double>(shots));
  int ok = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const StateVector s = random_state(4, 1000 + static_cast<uint64_t>(t));
    const int q = t % 4;
    const auto [p0, p1] = ancilla_outcome_probabilities(s, q);
    (void)p1;
    const auto [n0, n1] = sample_ancilla(s, q, shots, 77 + static_cast<uint64_t>(t));
    (void)n1;
    const double p_hat = static_cast<double>(n0) / static_cast<double>(shots);
    if (std::abs(p_hat - p0) <= bound) ++ok;
  }
  CHECK(ok >= trials * 99 / 100);
}

TEST_CASE("random_state") {
  for (uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    CHECK(std::abs(random_state(5, seed).norm_squared() - 1.0) < 1e-12);
  }

  const StateVector a = random_state(3, 1);
  const StateVector b = random_state(3, 2);
  CHECK(testalg::max_amp_diff(a, b) > 1e-6);

  const StateVector a_again = random_state(3, 1);
  CHECK(testalg::max_amp_diff(a, a_again) == 0.0);
}

TEST_CASE("circuit_unitary") {
  Circuit x(1);
  x.push(Gate::x(0));
  const CMatrix ux = circuit_unitary(x);
  CHECK(ux.at(0, 0) == cplx{0.0, 0.0});
  CHECK(ux.at(0, 1) == cplx{1.0, 0.0});
  CHECK(ux.at(1, 0) == cplx{1.0, 0.0});
  CHECK(ux.at(1, 1) == cplx{0.0, 0.0});

  Circuit sw(2);
  sw.push(Gate::swap(0, 1));
  const CMatrix us = circuit_unitary(sw);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const bool expect_one = (r == 0 && c == 0) || (r == 3 && c == 3) || (r == 1 && c == 2) ||
                              (r == 2 && c == 1);
      CHECK(us.at(r, c) == (expect_one ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));
    }
  }

  CHECK_THROWS_AS(circuit_unitary(Circuit(kMaxDenseQubits + 1)), std::invalid_argument);
}

TEST_CASE("norm preservation over a long random circuit") {
  const int n = 12;
  StateVector s = random_state(n, 5);
  const Circuit circ = testalg::random_elementary_circuit(n, 10000, 6);
  apply_circuit(s, circ);
  CHECK(std::abs(s.norm_squared() - 1.0) < 1e-9);
}

TEST_CASE("linearity of circuit application") {
  const int n = 3;
  const Circuit circ = testalg::random_elementary_circuit(n, 40, 8);
  const StateVector a = random_state(n, 30);
  const StateVector b = random_state(n, 31);
  const cplx alpha{0.3, -0.2};
  const cplx beta{-0.5, 0.8};

  StateVector mix = zero_state(n);
  for (size_t i = 0; i < mix.size(); ++i) mix[i] = alpha * a[i] + beta * b[i];

  StateVector fa = a;
  StateVector fb = b;
  apply_circuit(mix, circ);
  apply_circuit(fa, circ);
  apply_circuit(fb, circ);
  for (size_t i = 0; i < mix.size(); ++i) {
    CHECK(std::abs(mix[i] - (alpha * fa[i] + beta * fb[i])) < 1e-10);
  }
}

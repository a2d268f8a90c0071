// Copyright 2026 The jumpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "jumpsim/jumpcodes.hpp"
#include "support/dense_oracle.hpp"

using namespace jumpsim;
namespace jt = jumpsim::testing;

namespace {

StateVector random_code_state(const JumpCode& code, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector s(code.num_qubits());
  s[0] = 0.0;
  const double inv = 1.0 / std::sqrt(2.0);
  double norm2 = 0.0;
  for (std::uint64_t b : code.representatives()) {
    const cxd amp{gauss(rng), gauss(rng)};
    s[b] += amp * inv;
    s[code.complement(b)] += amp * inv;
    norm2 += std::norm(amp);
  }
  s.scale(1.0 / std::sqrt(norm2));
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(overlap(a, b));
}

}  // namespace

TEST_SUITE("jumpcodes") {

TEST_CASE("pairing code dimensions follow binom(n_q, n_q/2)/2") {
  CHECK(pairing_code_basis(4).size() == 3);
  CHECK(pairing_code_basis(6).size() == 10);
  CHECK(pairing_code_basis(8).size() == 35);
  CHECK(pairing_code_basis(14).size() == 1716);
  CHECK_THROWS(pairing_code_basis(3));
  CHECK_THROWS(pairing_code_basis(0));
}

TEST_CASE("representatives are canonical and sorted") {
  for (int n_q : {4, 6, 8}) {
    const JumpCode code = pairing_code_basis(n_q);
    std::uint64_t prev = 0;
    bool first = true;
    for (std::uint64_t b : code.representatives()) {
      CHECK(std::popcount(b) == n_q / 2);
      CHECK(((b >> (n_q - 1)) & 1) == 0);
      if (!first) CHECK(b > prev);
      prev = b;
      first = false;
    }
  }
}

TEST_CASE("codewords are orthonormal") {
  for (int n_q : {4, 6}) {
    const JumpCode code = pairing_code_basis(n_q);
    for (std::size_t k = 0; k < code.size(); ++k) {
      for (std::size_t l = 0; l <= k; ++l) {
        const cxd ip = overlap(code.codeword(k), code.codeword(l));
        const double expect = k == l ? 1.0 : 0.0;
        CHECK(std::abs(ip - expect) < 1e-12);
      }
    }
  }
}

TEST_CASE("the four-qubit codewords are the documented pairs") {
  const JumpCode code = pairing_code_basis(4);
  const std::vector<std::uint64_t> reps = code.representatives();
  CHECK(reps == std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110});
}

TEST_CASE("logical basis states live inside the pairing code") {
  for (int n_L = 1; n_L <= 3; ++n_L) {
    const KLEncoding enc(n_L);
    const JumpCode code = pairing_code_basis(enc.num_qubits());
    const auto& reps = code.representatives();
    for (std::uint64_t s = 0; s < enc.dim_logical(); ++s) {
      const std::uint64_t b = enc.branch(s);
      CHECK(std::popcount(b) == enc.num_qubits() / 2);
      const std::uint64_t rep =
          (b >> (enc.num_qubits() - 1)) & 1 ? enc.branch_complement(s) : b;
      CHECK(std::binary_search(reps.begin(), reps.end(), rep));
      CHECK(code_span_residual(enc.logical_basis_state(s), code) < 1e-14);
    }
  }
}

TEST_CASE("distinct logical states use distinct codewords") {
  const KLEncoding enc(3);
  std::vector<std::uint64_t> branches;
  for (std::uint64_t s = 0; s < enc.dim_logical(); ++s) {
    branches.push_back(enc.branch(s));
  }
  std::sort(branches.begin(), branches.end());
  CHECK(std::adjacent_find(branches.begin(), branches.end()) == branches.end());
}

TEST_CASE("encode/decode round trip preserves amplitudes") {
  std::mt19937_64 rng(41);
  for (int n_L = 1; n_L <= 3; ++n_L) {
    const KLEncoding enc(n_L);
    for (int rep = 0; rep < 10; ++rep) {
      const StateVector logical = jt::random_state(n_L, rng);
      const StateVector physical = encode(logical, enc);
      CHECK(std::abs(physical.norm2() - 1.0) < 1e-12);
      const auto [back, residual] = decode(physical, enc);
      CHECK(residual < 1e-14);
      CHECK(fidelity(back, logical) > 1.0 - 1e-12);
      for (std::uint64_t s = 0; s < logical.dim(); ++s) {
        CHECK(std::abs(back[s] - logical[s]) < 1e-12);
      }
    }
  }
}

TEST_CASE("encoded states hold exactly n_q/2 excitations") {
  std::mt19937_64 rng(43);
  const KLEncoding enc(2);
  const StateVector physical = encode(jt::random_state(2, rng), enc);
  for (std::uint64_t x = 0; x < physical.dim(); ++x) {
    if (std::abs(physical[x]) > 1e-14) {
      CHECK(std::popcount(x) == enc.num_qubits() / 2);
    }
  }
}

TEST_CASE("code_span_residual separates inside from outside") {
  const JumpCode code = pairing_code_basis(4);
  CHECK(code_span_residual(code.codeword(1), code) < 1e-14);

  StateVector lone = basis_state(4, "0011");
  CHECK(std::abs(code_span_residual(lone, code) - 0.5) < 1e-12);

  // The antisymmetric combination is orthogonal to every codeword.
  StateVector anti = basis_state(4, "0011");
  const StateVector other = basis_state(4, "1100");
  for (std::uint64_t x = 0; x < 16; ++x) {
    anti[x] = (anti[x] - other[x]) / std::sqrt(2.0);
  }
  CHECK(std::abs(code_span_residual(anti, code) - 1.0) < 1e-12);
}

TEST_CASE("recovery circuit has the documented gate order") {
  const RecoveryCircuit circuit = recovery_circuit(2, 4);
  REQUIRE(circuit.gates.size() == 5);
  CHECK(circuit.gates.front().kind == RecoveryCircuit::Kind::Hadamard);
  CHECK(circuit.gates.front().a == 2);
  CHECK(circuit.gates[1].kind == RecoveryCircuit::Kind::Cnot);
  CHECK(circuit.gates[1].a == 2);
  CHECK(circuit.gates[1].b == 0);
  CHECK(circuit.gates[2].b == 1);
  CHECK(circuit.gates[3].b == 3);
  CHECK(circuit.gates.back().kind == RecoveryCircuit::Kind::Not);
}

TEST_CASE("jump then recovery restores any code state exactly") {
  std::mt19937_64 rng(47);
  for (int n_q : {4, 6, 8}) {
    const JumpCode code = pairing_code_basis(n_q);
    for (int alpha = 0; alpha < n_q; ++alpha) {
      const RecoveryCircuit circuit = recovery_circuit(alpha, n_q);
      for (int rep = 0; rep < 20; ++rep) {
        const StateVector original = random_code_state(code, rng);
        StateVector s = original;
        const double weight = apply_jump(s, alpha);
        CHECK(std::abs(weight - 0.5) < 1e-12);  // half the excitation of n_q/2
        normalize(s);
        circuit.apply(s);
        CHECK(fidelity(s, original) > 1.0 - 1e-12);
        // The restoration is exact including the global phase.
        for (std::uint64_t x = 0; x < s.dim(); ++x) {
          CHECK(std::abs(s[x] - original[x]) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("worked example: decay on qubit 2 of the first codeword") {
  const JumpCode code = pairing_code_basis(4);
  StateVector s = code.codeword(0);  // (|0011> + |1100>)/sqrt(2)
  const double weight = apply_jump(s, 2);
  CHECK(std::abs(weight - 0.5) < 1e-12);
  CHECK(std::abs(s[0b1000] - cxd{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
  normalize(s);
  recovery_circuit(2, 4).apply(s);
  CHECK(fidelity(s, code.codeword(0)) > 1.0 - 1e-12);
}

TEST_CASE("jump weight is uniform across qubits on code states") {
  std::mt19937_64 rng(53);
  const JumpCode code = pairing_code_basis(6);
  const StateVector s = random_code_state(code, rng);
  const std::vector<double> pops = excitation_expectations(s);
  for (double p : pops) CHECK(std::abs(p - 0.5) < 1e-12);
}

}  // TEST_SUITE

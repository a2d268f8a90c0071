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

#include "jumpsim/jumpcodes.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace jumpsim {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

JumpCode::JumpCode(int n_q, std::vector<std::uint64_t> representatives)
    : n_q_(n_q), reps_(std::move(representatives)) {
  if (n_q < 2 || n_q % 2 != 0 || n_q > 24) {
    throw std::invalid_argument("JumpCode: n_q must be even and in [2, 24]");
  }
  dim_ = std::uint64_t{1} << n_q;
  const std::uint64_t top = std::uint64_t{1} << (n_q - 1);
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t b : reps_) {
    if (b >= dim_ || (b & top) != 0 ||
        std::popcount(b) != n_q / 2) {
      throw std::invalid_argument("JumpCode: invalid representative");
    }
    if (!first && b <= prev) {
      throw std::invalid_argument("JumpCode: representatives not ascending");
    }
    prev = b;
    first = false;
  }
}

StateVector JumpCode::codeword(std::size_t k) const {
  if (k >= reps_.size()) {
    throw std::out_of_range("JumpCode::codeword: index out of range");
  }
  StateVector state(n_q_);
  state[0] = 0.0;
  const std::uint64_t b = reps_[k];
  state[b] = kInvSqrt2;
  state[complement(b)] = kInvSqrt2;
  return state;
}

JumpCode pairing_code_basis(int n_q) {
  if (n_q < 2 || n_q % 2 != 0 || n_q > 24) {
    throw std::invalid_argument(
        "pairing_code_basis: n_q must be even and in [2, 24]");
  }
  std::vector<std::uint64_t> reps;
  const std::uint64_t half = std::uint64_t{1} << (n_q - 1);
  for (std::uint64_t b = 0; b < half; ++b) {
    if (std::popcount(b) == n_q / 2) reps.push_back(b);
  }
  return JumpCode(n_q, std::move(reps));
}

double code_span_residual(const StateVector& state, const JumpCode& code) {
  if (state.num_qubits() != code.num_qubits()) {
    throw std::invalid_argument("code_span_residual: qubit count mismatch");
  }
  double inside = 0.0;
  for (std::uint64_t b : code.representatives()) {
    const cxd amp = kInvSqrt2 * (state[b] + state[code.complement(b)]);
    inside += std::norm(amp);
  }
  double residual = state.norm2() - inside;
  return residual > 0.0 ? residual : 0.0;
}

KLEncoding::KLEncoding(int n_L) : n_L_(n_L) {
  if (n_L < 1 || 2 * n_L + 2 > 24) {
    throw std::invalid_argument("KLEncoding: n_L must be in [1, 11]");
  }
}

std::uint64_t KLEncoding::branch(std::uint64_t s) const {
  if (s >= dim_logical()) {
    throw std::out_of_range("KLEncoding::branch: state out of range");
  }
  std::uint64_t b = 1;  // rightmost pair (1, 0) holds |01>
  for (int i = 0; i < n_L_; ++i) {
    const int shift = ((s >> i) & 1) ? (2 * i + 3) : (2 * i + 2);
    b |= std::uint64_t{1} << shift;
  }
  return b;
}

std::uint64_t KLEncoding::branch_complement(std::uint64_t s) const {
  const std::uint64_t dim = std::uint64_t{1} << num_qubits();
  return ~branch(s) & (dim - 1);
}

StateVector KLEncoding::logical_basis_state(std::uint64_t s) const {
  StateVector state(num_qubits());
  state[0] = 0.0;
  state[branch(s)] = kInvSqrt2;
  state[branch_complement(s)] = kInvSqrt2;
  return state;
}

KLEncoding kl_basis(int n_L) { return KLEncoding(n_L); }

StateVector encode(const StateVector& logical, const KLEncoding& enc) {
  if (logical.num_qubits() != enc.logical_qubits()) {
    throw std::invalid_argument("encode: logical qubit count mismatch");
  }
  StateVector physical(enc.num_qubits());
  physical[0] = 0.0;
  for (std::uint64_t s = 0; s < enc.dim_logical(); ++s) {
    const cxd amp = logical[s] * kInvSqrt2;
    if (amp == cxd{}) continue;
    physical[enc.branch(s)] += amp;
    physical[enc.branch_complement(s)] += amp;
  }
  return physical;
}

std::pair<StateVector, double> decode(const StateVector& physical,
                                      const KLEncoding& enc) {
  if (physical.num_qubits() != enc.num_qubits()) {
    throw std::invalid_argument("decode: physical qubit count mismatch");
  }
  StateVector logical(enc.logical_qubits());
  logical[0] = 0.0;
  double inside = 0.0;
  for (std::uint64_t s = 0; s < enc.dim_logical(); ++s) {
    const cxd amp =
        kInvSqrt2 * (physical[enc.branch(s)] + physical[enc.branch_complement(s)]);
    logical[s] = amp;
    inside += std::norm(amp);
  }
  double residual = physical.norm2() - inside;
  if (residual < 0.0) residual = 0.0;
  return {std::move(logical), residual};
}

void apply_hadamard_gate(StateVector& state, int q) {
  const std::uint64_t dim = state.dim();
  const std::uint64_t mask = std::uint64_t{1} << q;
  if (mask >= dim) {
    throw std::out_of_range("apply_hadamard_gate: qubit out of range");
  }
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & mask) continue;
    const cxd a = state[x];
    const cxd b = state[x | mask];
    state[x] = kInvSqrt2 * (a + b);
    state[x | mask] = kInvSqrt2 * (a - b);
  }
}

void apply_cnot_gate(StateVector& state, int control, int target) {
  const std::uint64_t dim = state.dim();
  const std::uint64_t cmask = std::uint64_t{1} << control;
  const std::uint64_t tmask = std::uint64_t{1} << target;
  if (cmask >= dim || tmask >= dim || control == target) {
    throw std::out_of_range("apply_cnot_gate: invalid qubits");
  }
  for (std::uint64_t x = 0; x < dim; ++x) {
    if ((x & cmask) && !(x & tmask)) {
      std::swap(state[x], state[x | tmask]);
    }
  }
}

void apply_x_gate(StateVector& state, int q) {
  const std::uint64_t dim = state.dim();
  const std::uint64_t mask = std::uint64_t{1} << q;
  if (mask >= dim) {
    throw std::out_of_range("apply_x_gate: qubit out of range");
  }
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (!(x & mask)) std::swap(state[x], state[x | mask]);
  }
}

void RecoveryCircuit::apply(StateVector& state) const {
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Kind::Hadamard:
        apply_hadamard_gate(state, g.a);
        break;
      case Kind::Cnot:
        apply_cnot_gate(state, g.a, g.b);
        break;
      case Kind::Not:
        apply_x_gate(state, g.a);
        break;
    }
  }
}

RecoveryCircuit recovery_circuit(int alpha, int n_q) {
  if (alpha < 0 || alpha >= n_q) {
    throw std::invalid_argument("recovery_circuit: alpha out of range");
  }
  std::vector<int> qubits(n_q);
  for (int q = 0; q < n_q; ++q) qubits[q] = q;
  return recovery_circuit_on(alpha, qubits);
}

RecoveryCircuit recovery_circuit_on(int alpha, const std::vector<int>& qubits) {
  bool found = false;
  for (int q : qubits) {
    if (q == alpha) found = true;
  }
  if (!found) {
    throw std::invalid_argument("recovery_circuit_on: alpha not in qubit set");
  }
  RecoveryCircuit circuit;
  circuit.alpha = alpha;
  circuit.gates.push_back({RecoveryCircuit::Kind::Hadamard, alpha, 0});
  for (int q : qubits) {
    if (q == alpha) continue;
    circuit.gates.push_back({RecoveryCircuit::Kind::Cnot, alpha, q});
  }
  circuit.gates.push_back({RecoveryCircuit::Kind::Not, alpha, 0});
  return circuit;
}

}  // namespace jumpsim

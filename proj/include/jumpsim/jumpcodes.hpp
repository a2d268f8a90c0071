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

#ifndef JUMPSIM_JUMPCODES_HPP
#define JUMPSIM_JUMPCODES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "jumpsim/statevec.hpp"

namespace jumpsim {

// One-error-correcting pairing code on n_q qubits: code words are
// (|b> + |b~>)/sqrt(2) with b~ the bitwise complement of b and
// popcount(b) = n_q/2.  Each code word is stored by its canonical
// representative (the branch with qubit n_q-1 in |0>), sorted ascending.
class JumpCode {
 public:
  JumpCode(int n_q, std::vector<std::uint64_t> representatives);

  int num_qubits() const { return n_q_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<std::uint64_t>& representatives() const { return reps_; }
  std::uint64_t complement(std::uint64_t b) const { return ~b & (dim_ - 1); }

  StateVector codeword(std::size_t k) const;

 private:
  int n_q_;
  std::uint64_t dim_;
  std::vector<std::uint64_t> reps_;
};

// All pairing-code words on n_q qubits; dimension binom(n_q, n_q/2)/2.
JumpCode pairing_code_basis(int n_q);

// Squared norm of the component of `state` outside the span of the code.
double code_span_residual(const StateVector& state, const JumpCode& code);

// Logical subspace over n_L logical qubits embedded in n_q = 2 n_L + 2
// physical qubits.  Logical bit i selects |01> or |10> on the physical pair
// (2i+3, 2i+2) in the first branch; the rightmost pair (1, 0) carries |01>
// and distinguishes the two complementary branches.
class KLEncoding {
 public:
  explicit KLEncoding(int n_L);

  int logical_qubits() const { return n_L_; }
  int num_qubits() const { return 2 * n_L_ + 2; }
  std::uint64_t dim_logical() const { return std::uint64_t{1} << n_L_; }

  // First-branch bit pattern for logical basis state s.
  std::uint64_t branch(std::uint64_t s) const;
  std::uint64_t branch_complement(std::uint64_t s) const;

  StateVector logical_basis_state(std::uint64_t s) const;

 private:
  int n_L_;
};

KLEncoding kl_basis(int n_L);

// Isometry from 2^n_L logical amplitudes into the physical space.
StateVector encode(const StateVector& logical, const KLEncoding& enc);

// Projection back onto the logical subspace; second element is the squared
// norm of the physical component outside it.
std::pair<StateVector, double> decode(const StateVector& physical,
                                      const KLEncoding& enc);

// Exact single-qubit/two-qubit gates used by the recovery network.
void apply_hadamard_gate(StateVector& state, int q);
void apply_cnot_gate(StateVector& state, int control, int target);
void apply_x_gate(StateVector& state, int q);

// Recovery network for a decay on qubit alpha: first a Hadamard on alpha,
// then CNOTs from alpha onto every other code qubit in ascending order,
// finally a NOT on alpha.  Restores any code-space superposition hit by one
// jump exactly.
struct RecoveryCircuit {
  enum class Kind { Hadamard, Cnot, Not };
  struct Gate {
    Kind kind;
    int a;  // acted qubit (control for Cnot)
    int b;  // Cnot target, otherwise unused
  };

  int alpha;
  std::vector<Gate> gates;

  void apply(StateVector& state) const;
};

RecoveryCircuit recovery_circuit(int alpha, int n_q);

// Same network over an explicit qubit set (used when two registers are
// temporarily entangled into one larger code).
RecoveryCircuit recovery_circuit_on(int alpha, const std::vector<int>& qubits);

}  // namespace jumpsim

#endif  // JUMPSIM_JUMPCODES_HPP

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

#ifndef JUMPSIM_STATEVEC_HPP
#define JUMPSIM_STATEVEC_HPP

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "jumpsim/pauli.hpp"

namespace jumpsim {

using cxd = std::complex<double>;

// Dense amplitude vector over n qubits.  Basis index x encodes the
// computational state |q_{n-1} ... q_1 q_0> with qubit 0 in the least
// significant bit.
class StateVector {
 public:
  // Initializes to the computational basis state |0...0>, not the zero
  // vector.
  explicit StateVector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }

  cxd& operator[](std::uint64_t i) { return amps_[i]; }
  const cxd& operator[](std::uint64_t i) const { return amps_[i]; }

  std::vector<cxd>& amplitudes() { return amps_; }
  const std::vector<cxd>& amplitudes() const { return amps_; }

  double norm2() const;
  void scale(cxd factor);

 private:
  int num_qubits_;
  std::vector<cxd> amps_;
};

// |bits> with the string read left to right as q_{n-1} ... q_0.
StateVector basis_state(int num_qubits, std::string_view bits);

// <a|b>.  Throws on dimension mismatch.
cxd overlap(const StateVector& a, const StateVector& b);

// Rescales to unit norm.  Throws std::domain_error on (near-)zero states.
void normalize(StateVector& state);

// In-place exp(-i H tau) via the product of term exponentials (terms commute).
void apply_pulse(StateVector& state, const PauliSum& h, double tau);

// Precomputed split of a pulse Hamiltonian for damped evolution.  Terms are
// grouped into connected components by support overlap: components made of Z
// strings only stay diagonal, the rest become small dense blocks that are
// exponentiated together with the excitation damping on their qubits.
struct EffectivePlan {
  struct DiagTerm {
    std::uint64_t zmask;
    double coeff;
  };
  struct Block {
    std::vector<int> qubits;       // ascending component support
    std::vector<PauliTerm> terms;  // with global qubit indices
  };
  std::vector<DiagTerm> diag;
  std::vector<Block> blocks;
  std::uint64_t block_mask = 0;  // union of block supports
};

EffectivePlan make_effective_plan(const PauliSum& h);

// In-place exp((-i H - (kappa/2) N) tau) with N the excitation number
// operator summed over all qubits of the state.  Exact: qubits outside the
// non-diagonal blocks receive the closed-form diagonal damping, each block is
// exponentiated densely.  Requires kappa >= 0.
void apply_effective_pulse(StateVector& state, const PauliSum& h, double tau,
                           double kappa);
void apply_effective_pulse(StateVector& state, const EffectivePlan& plan,
                           double tau, double kappa);

namespace detail {
// Same kernel without sign restrictions; kappa and tau only enter as the
// product kappa * tau, so calling with -tau undoes a forward step exactly.
// The trajectory sampler relies on this for jump-time bisection.
void effective_kernel(StateVector& state, const EffectivePlan& plan,
                      double tau, double kappa);
}  // namespace detail

// Spontaneous-decay jump |0><1| on qubit alpha.  Leaves the state
// unnormalized and returns its squared norm (the channel weight).  The jump
// annihilates components with qubit alpha in |0>, so the weight can be zero.
double apply_jump(StateVector& state, int alpha);

// <n_alpha> per qubit for a normalized reading of the state.
// Throws std::domain_error if the state has zero norm.
std::vector<double> excitation_expectations(const StateVector& state);

}  // namespace jumpsim

#endif  // JUMPSIM_STATEVEC_HPP

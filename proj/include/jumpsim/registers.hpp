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

#ifndef JUMPSIM_REGISTERS_HPP
#define JUMPSIM_REGISTERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "jumpsim/jumpcodes.hpp"
#include "jumpsim/pulsegates.hpp"
#include "jumpsim/statevec.hpp"

namespace jumpsim {

// Partition of the logical qubits into independently encoded registers.
// Register r holds widths[r] logical qubits on 2 widths[r] + 2 physical
// qubits; register 0 sits at physical offset 0, later registers above it.
class RegisterLayout {
 public:
  explicit RegisterLayout(std::vector<int> widths);

  int num_registers() const { return static_cast<int>(widths_.size()); }
  int width(int r) const { return widths_.at(r); }
  int total_logical() const { return logical_total_; }
  int total_qubits() const { return qubit_total_; }

  int reg_offset(int r) const { return offsets_.at(r); }
  int reg_qubits(int r) const { return 2 * widths_.at(r) + 2; }
  std::vector<int> register_qubits(int r) const;
  const KLEncoding& encoding(int r) const { return encodings_.at(r); }

  // Global logical index -> (register, local index).
  std::pair<int, int> locate(int global_logical) const;
  int register_of_qubit(int q) const;

  std::string describe() const;  // widths joined with '+', e.g. "1+1"

 private:
  std::vector<int> widths_;
  std::vector<int> offsets_;          // physical offset per register
  std::vector<int> logical_offsets_;  // logical offset per register
  std::vector<KLEncoding> encodings_;
  int logical_total_ = 0;
  int qubit_total_ = 0;
};

RegisterLayout make_layout(std::vector<int> widths);

// Compile a gate on global logical indices.  Gates within one register use
// the encoded pulse library; a cross-register controlled-not is a pair of
// local Hadamards around the joint controlled-pi pulse, and a cross-register
// controlled phase is built from two such controlled-nots plus local phases
// (a pi angle collapses to the single joint pulse).
GateSchedule compile_global(const LogicalGate& gate, const RegisterLayout& layout);
GateSchedule compile_global_program(const std::vector<LogicalGate>& gates,
                                    const RegisterLayout& layout);

// Joint controlled-pi pulse between global logical qubits i and j.
GateSchedule compile_cpi_global(int i, int j, const RegisterLayout& layout,
                                bool sequential = false);

// Product-encode a 2^total_logical amplitude vector into the physical space.
StateVector encode_global(const StateVector& logical, const RegisterLayout& layout);

// Recovery pulses on the register holding physical qubit alpha.
GateSchedule recovery_for(int alpha, const RegisterLayout& layout);

// Physical qubits to recover over after a decay on alpha while the pulse
// with the given support was running: the union of all registers touched by
// the pulse when alpha's register is among them and at least two registers
// are involved (the registers are then one joint code), otherwise just
// alpha's register.
std::vector<int> recovery_scope(const RegisterLayout& layout,
                                std::uint64_t pulse_support, int alpha);

// Fidelity-decay rate per unit circuit time caused by first-order recovery
// interruptions: (kappa/2)^2 sum_r tau_rec(n_r) n_r^2.
double block_rate(const RegisterLayout& layout, double kappa);
double block_fidelity(const RegisterLayout& layout, double kappa,
                      double tau_iteration, int iterations);

// Iterations per unit 1/kappa sustainable at unit fidelity cost scale:
// n_L / (4 kappa (n_L + 1)^3); grows by splitting registers.
double cnot_speed_bound(int n_L, double kappa);

}  // namespace jumpsim

#endif  // JUMPSIM_REGISTERS_HPP

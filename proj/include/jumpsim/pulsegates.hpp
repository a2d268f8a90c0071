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

#ifndef JUMPSIM_PULSEGATES_HPP
#define JUMPSIM_PULSEGATES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jumpsim/pauli.hpp"
#include "jumpsim/statevec.hpp"

namespace jumpsim {

// Gates are always realized as single continuous pulses exp(-i H tau) with H
// a sum of commuting Pauli terms; recoveries use the same pulse shapes on
// bare qubits.
struct Pulse {
  PauliSum hamiltonian;
  double duration;
  std::string label;
  std::shared_ptr<const EffectivePlan> plan;
};

Pulse make_pulse(PauliSum h, double duration, std::string label);

// Abstract gate on logical qubits.  Phase/CPhase angles are taken mod 2*pi
// into [0, 2*pi); an angle that wraps to zero compiles to nothing.
enum class GateKind { Not, Hadamard, Phase, CPhase, Cnot };

struct LogicalGate {
  GateKind kind;
  int i = 0;        // target (control for CPhase/Cnot)
  int j = 0;        // second qubit for CPhase/Cnot
  double phi = 0.0; // angle for Phase/CPhase

  static LogicalGate not_gate(int i) { return {GateKind::Not, i, 0, 0.0}; }
  static LogicalGate hadamard(int i) { return {GateKind::Hadamard, i, 0, 0.0}; }
  static LogicalGate phase(int i, double phi) {
    return {GateKind::Phase, i, 0, phi};
  }
  static LogicalGate cphase(int i, int j, double phi) {
    return {GateKind::CPhase, i, j, phi};
  }
  static LogicalGate cnot(int i, int j) { return {GateKind::Cnot, i, j, 0.0}; }
};

enum class ScheduleKind { Program, Recovery };

// Time-ordered pulse list; markers label the first pulse of each compiled
// gate so interrupted gates can be identified.
struct GateSchedule {
  std::vector<Pulse> pulses;
  struct Marker {
    std::size_t first_pulse;
    std::string label;
  };
  std::vector<Marker> markers;
  ScheduleKind kind = ScheduleKind::Program;

  double total_duration() const;
  void append(Pulse pulse);
  void append_marked(const std::string& label);
  void append_schedule(const GateSchedule& other);
};

struct ScheduleStats {
  std::size_t gates;
  std::size_t pulses;
  std::size_t terms;
  double duration;
};

ScheduleStats schedule_stats(const GateSchedule& schedule);

// Reduce an angle to [0, 2*pi).
double wrap_angle(double phi);

// Recovery pulse-train duration for an n_q-qubit register:
// one Hadamard (3*pi/4), n_q - 1 CNOTs (7*pi/4 each), one NOT (pi/2).
double recovery_duration(int n_q);

// Encoded one-qubit operators for a register whose physical qubits start at
// `offset`.  Logical qubit i lives on the physical pair (2i+3, 2i+2).
PauliSum logical_x(int i, int offset = 0);
PauliSum logical_z(int i, int offset = 0);
PauliSum logical_zz(int i, int j, int offset = 0);

// Two-register entangling Hamiltonian coupling logical qubit j_a of the
// register at offset_a with logical qubit j_b of the register at offset_b
// (offset_b < offset_a required).  A pi/4 pulse realizes a logical
// controlled-pi phase between the two registers.
PauliSum ent_hamiltonian(int j_a, int j_b, int offset_a, int offset_b);

// Compile a gate acting inside one encoded register.
GateSchedule compile_gate(const LogicalGate& gate, int n_L, int offset = 0);
GateSchedule compile_program(const std::vector<LogicalGate>& gates, int n_L,
                             int offset = 0);

// Cross-register controlled-pi phase; `sequential` splits the four ZZ
// couplings into separate pi/4 pulses instead of one joint pulse.
GateSchedule compile_cpi(int j_a, int j_b, int offset_a, int offset_b,
                         bool sequential = false);

// Same gates on bare qubits (no encoding); used for the uncorrected runs and
// for recovery synthesis.
GateSchedule compile_bare_gate(const LogicalGate& gate, int n_qubits);
GateSchedule compile_bare_program(const std::vector<LogicalGate>& gates,
                                  int n_qubits);

// Pulse realization of the recovery network on qubits
// offset .. offset + n_q - 1 after a decay on absolute qubit alpha.
GateSchedule compile_recovery(int alpha, int n_q, int offset = 0);
GateSchedule compile_recovery_on(int alpha, const std::vector<int>& qubits);

// Dense unitary of a schedule on `num_qubits` qubits (num_qubits <= 12).
Eigen::MatrixXcd unitary_of(const GateSchedule& schedule, int num_qubits);

}  // namespace jumpsim

#endif  // JUMPSIM_PULSEGATES_HPP

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

#include "jumpsim/pulsegates.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace jumpsim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_logical_index(int i, int n_L, const char* what) {
  if (i < 0 || i >= n_L) {
    throw std::invalid_argument(std::string(what) + ": logical index out of range");
  }
}

void check_register(int n_L, int offset) {
  if (n_L < 1) throw std::invalid_argument("register needs n_L >= 1");
  if (offset < 0 || offset + 2 * n_L + 2 > 24) {
    throw std::invalid_argument("register exceeds the 24-qubit limit");
  }
}

std::string qubit_tag(int i) { return "(" + std::to_string(i) + ")"; }
std::string qubit_tag(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Pulse make_pulse(PauliSum h, double duration, std::string label) {
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw std::invalid_argument("make_pulse: duration must be positive");
  }
  if (h.empty()) throw std::invalid_argument("make_pulse: empty Hamiltonian");
  auto plan = std::make_shared<EffectivePlan>(make_effective_plan(h));
  return Pulse{std::move(h), duration, std::move(label), std::move(plan)};
}

double GateSchedule::total_duration() const {
  double total = 0.0;
  for (const Pulse& p : pulses) total += p.duration;
  return total;
}

void GateSchedule::append(Pulse pulse) { pulses.push_back(std::move(pulse)); }

void GateSchedule::append_marked(const std::string& label) {
  markers.push_back({pulses.size(), label});
}

void GateSchedule::append_schedule(const GateSchedule& other) {
  const std::size_t base = pulses.size();
  for (const Pulse& p : other.pulses) pulses.push_back(p);
  for (const GateSchedule::Marker& m : other.markers) {
    markers.push_back({base + m.first_pulse, m.label});
  }
}

ScheduleStats schedule_stats(const GateSchedule& schedule) {
  ScheduleStats stats{schedule.markers.size(), schedule.pulses.size(), 0,
                      schedule.total_duration()};
  for (const Pulse& p : schedule.pulses) stats.terms += p.hamiltonian.terms().size();
  return stats;
}

double wrap_angle(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("wrap_angle: non-finite");
  double w = std::fmod(phi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

double recovery_duration(int n_q) {
  if (n_q < 2) throw std::invalid_argument("recovery_duration: n_q too small");
  return n_q * (7.0 * kPi / 4.0) - kPi / 2.0;
}

PauliSum logical_x(int i, int offset) {
  return t_coupling(offset + 2 * i + 3, offset + 2 * i + 2);
}

PauliSum logical_z(int i, int offset) {
  return sum_zz(offset + 2 * i + 3, offset + 1);
}

PauliSum logical_zz(int i, int j, int offset) {
  if (i == j) throw std::invalid_argument("logical_zz: i == j");
  return sum_zz(offset + 2 * i + 3, offset + 2 * j + 3);
}

PauliSum ent_hamiltonian(int j_a, int j_b, int offset_a, int offset_b) {
  if (offset_b >= offset_a) {
    throw std::invalid_argument("ent_hamiltonian: offset_b must be below offset_a");
  }
  PauliSum h;
  h.add(1.0, pauli_zz(offset_a + 0, offset_b + 0));
  h.add(1.0, pauli_zz(offset_a + 2 * j_a + 2, offset_b + 1));
  h.add(1.0, pauli_zz(offset_a + 1, offset_b + 2 * j_b + 2));
  h.add(1.0, pauli_zz(offset_a + 2 * j_a + 3, offset_b + 2 * j_b + 3));
  return h;
}

namespace {

// Shared gate synthesis: the encoded and bare variants differ only in the
// one-qubit operator families, so both go through these callbacks.
struct OperatorSet {
  std::function<PauliSum(int)> x;
  std::function<PauliSum(int)> z;
  std::function<PauliSum(int, int)> cp_sum;  // Z_i + Z_j - Z_i Z_j analogue
  std::string suffix;                        // distinguishes pulse labels
};

void emit_phase(GateSchedule& out, const OperatorSet& ops, int i, double phi) {
  const double w = wrap_angle(phi);
  if (w == 0.0) return;
  out.append_marked("p" + ops.suffix + qubit_tag(i));
  out.append(make_pulse(ops.z(i), w / 2.0, "z" + ops.suffix + qubit_tag(i)));
}

void emit_hadamard_pulses(GateSchedule& out, const OperatorSet& ops, int i) {
  out.append(make_pulse(ops.z(i), kPi / 4.0, "z" + ops.suffix + qubit_tag(i)));
  out.append(make_pulse(ops.x(i), kPi / 4.0, "x" + ops.suffix + qubit_tag(i)));
  out.append(make_pulse(ops.z(i), kPi / 4.0, "z" + ops.suffix + qubit_tag(i)));
}

void emit_cphase_pulses(GateSchedule& out, const OperatorSet& ops, int i, int j,
                        double wrapped) {
  out.append(make_pulse(ops.cp_sum(i, j), wrapped / 4.0,
                        "cp" + ops.suffix + qubit_tag(i, j)));
}

void emit_gate(GateSchedule& out, const OperatorSet& ops, const LogicalGate& g) {
  switch (g.kind) {
    case GateKind::Not:
      out.append_marked("not" + ops.suffix + qubit_tag(g.i));
      out.append(make_pulse(ops.x(g.i), kPi / 2.0, "x" + ops.suffix + qubit_tag(g.i)));
      return;
    case GateKind::Hadamard:
      out.append_marked("h" + ops.suffix + qubit_tag(g.i));
      emit_hadamard_pulses(out, ops, g.i);
      return;
    case GateKind::Phase:
      emit_phase(out, ops, g.i, g.phi);
      return;
    case GateKind::CPhase: {
      if (g.i == g.j) throw std::invalid_argument("cphase: i == j");
      const double w = wrap_angle(g.phi);
      if (w == 0.0) return;
      out.append_marked("cp" + ops.suffix + qubit_tag(g.i, g.j));
      emit_cphase_pulses(out, ops, g.i, g.j, w);
      return;
    }
    case GateKind::Cnot: {
      if (g.i == g.j) throw std::invalid_argument("cnot: i == j");
      out.append_marked("cnot" + ops.suffix + qubit_tag(g.i, g.j));
      emit_hadamard_pulses(out, ops, g.j);
      emit_cphase_pulses(out, ops, g.i, g.j, kPi);
      emit_hadamard_pulses(out, ops, g.j);
      return;
    }
  }
  throw std::invalid_argument("emit_gate: unknown gate kind");
}

OperatorSet logical_ops(int n_L, int offset) {
  check_register(n_L, offset);
  OperatorSet ops;
  ops.x = [n_L, offset](int i) {
    check_logical_index(i, n_L, "logical gate");
    return logical_x(i, offset);
  };
  ops.z = [n_L, offset](int i) {
    check_logical_index(i, n_L, "logical gate");
    return logical_z(i, offset);
  };
  ops.cp_sum = [n_L, offset](int i, int j) {
    check_logical_index(i, n_L, "logical gate");
    check_logical_index(j, n_L, "logical gate");
    PauliSum h;
    h.add(1.0, pauli_zz(offset + 2 * i + 3, offset + 1));
    h.add(1.0, pauli_zz(offset + 2 * j + 3, offset + 1));
    h.add(-1.0, pauli_zz(offset + 2 * i + 3, offset + 2 * j + 3));
    return h;
  };
  ops.suffix = "";
  return ops;
}

OperatorSet bare_ops(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 24) {
    throw std::invalid_argument("bare program: qubit count out of range");
  }
  OperatorSet ops;
  ops.x = [n_qubits](int q) {
    check_logical_index(q, n_qubits, "bare gate");
    return sum_x(q);
  };
  ops.z = [n_qubits](int q) {
    check_logical_index(q, n_qubits, "bare gate");
    return sum_z(q);
  };
  ops.cp_sum = [n_qubits](int a, int b) {
    check_logical_index(a, n_qubits, "bare gate");
    check_logical_index(b, n_qubits, "bare gate");
    PauliSum h;
    h.add(1.0, pauli_z(a));
    h.add(1.0, pauli_z(b));
    h.add(-1.0, pauli_zz(a, b));
    return h;
  };
  ops.suffix = "!";
  return ops;
}

}  // namespace

GateSchedule compile_gate(const LogicalGate& gate, int n_L, int offset) {
  GateSchedule schedule;
  emit_gate(schedule, logical_ops(n_L, offset), gate);
  return schedule;
}

GateSchedule compile_program(const std::vector<LogicalGate>& gates, int n_L,
                             int offset) {
  GateSchedule schedule;
  const OperatorSet ops = logical_ops(n_L, offset);
  for (const LogicalGate& g : gates) emit_gate(schedule, ops, g);
  return schedule;
}

GateSchedule compile_cpi(int j_a, int j_b, int offset_a, int offset_b,
                         bool sequential) {
  GateSchedule schedule;
  const PauliSum h = ent_hamiltonian(j_a, j_b, offset_a, offset_b);
  schedule.append_marked("cpi@" + std::to_string(offset_b) + "," +
                         std::to_string(offset_a));
  if (sequential) {
    for (const PauliTerm& t : h.terms()) {
      PauliSum single;
      single.add(t.coeff, t.op);
      schedule.append(make_pulse(std::move(single), kPi / 4.0, "ent.zz"));
    }
  } else {
    schedule.append(make_pulse(h, kPi / 4.0, "ent"));
  }
  return schedule;
}

GateSchedule compile_bare_gate(const LogicalGate& gate, int n_qubits) {
  GateSchedule schedule;
  emit_gate(schedule, bare_ops(n_qubits), gate);
  return schedule;
}

GateSchedule compile_bare_program(const std::vector<LogicalGate>& gates,
                                  int n_qubits) {
  GateSchedule schedule;
  const OperatorSet ops = bare_ops(n_qubits);
  for (const LogicalGate& g : gates) emit_gate(schedule, ops, g);
  return schedule;
}

GateSchedule compile_recovery(int alpha, int n_q, int offset) {
  if (n_q < 2) throw std::invalid_argument("compile_recovery: n_q too small");
  std::vector<int> qubits(n_q);
  for (int q = 0; q < n_q; ++q) qubits[q] = offset + q;
  return compile_recovery_on(alpha, qubits);
}

GateSchedule compile_recovery_on(int alpha, const std::vector<int>& qubits) {
  if (qubits.size() < 2) {
    throw std::invalid_argument("compile_recovery_on: need at least two qubits");
  }
  bool found = false;
  int max_q = 0;
  for (int q : qubits) {
    if (q == alpha) found = true;
    if (q < 0 || q >= 24) {
      throw std::invalid_argument("compile_recovery_on: qubit out of range");
    }
    if (q > max_q) max_q = q;
  }
  if (!found) {
    throw std::invalid_argument("compile_recovery_on: alpha not in qubit set");
  }
  const int n = max_q + 1;
  GateSchedule schedule;
  schedule.kind = ScheduleKind::Recovery;
  const OperatorSet ops = bare_ops(n);
  emit_gate(schedule, ops, LogicalGate::hadamard(alpha));
  for (int q : qubits) {
    if (q == alpha) continue;
    emit_gate(schedule, ops, LogicalGate::cnot(alpha, q));
  }
  emit_gate(schedule, ops, LogicalGate::not_gate(alpha));
  return schedule;
}

Eigen::MatrixXcd unitary_of(const GateSchedule& schedule, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 12) {
    throw std::invalid_argument("unitary_of: qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    StateVector state(num_qubits);
    state[0] = 0.0;
    state[col] = 1.0;
    for (const Pulse& p : schedule.pulses) {
      apply_effective_pulse(state, *p.plan, p.duration, 0.0);
    }
    for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = state[row];
  }
  return u;
}

}  // namespace jumpsim

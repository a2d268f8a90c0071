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

#include "jumpsim/registers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace jumpsim {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

RegisterLayout::RegisterLayout(std::vector<int> widths)
    : widths_(std::move(widths)) {
  if (widths_.empty()) {
    throw std::invalid_argument("RegisterLayout: no registers");
  }
  for (int w : widths_) {
    if (w < 1) throw std::invalid_argument("RegisterLayout: width < 1");
  }
  for (std::size_t r = 0; r < widths_.size(); ++r) {
    offsets_.push_back(qubit_total_);
    logical_offsets_.push_back(logical_total_);
    encodings_.emplace_back(widths_[r]);
    qubit_total_ += 2 * widths_[r] + 2;
    logical_total_ += widths_[r];
  }
  if (qubit_total_ > 24) {
    throw std::invalid_argument("RegisterLayout: more than 24 physical qubits");
  }
}

std::vector<int> RegisterLayout::register_qubits(int r) const {
  std::vector<int> qubits(reg_qubits(r));
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    qubits[q] = offsets_.at(r) + static_cast<int>(q);
  }
  return qubits;
}

std::pair<int, int> RegisterLayout::locate(int global_logical) const {
  if (global_logical < 0 || global_logical >= logical_total_) {
    throw std::out_of_range("RegisterLayout::locate: index out of range");
  }
  int r = num_registers() - 1;
  while (logical_offsets_[r] > global_logical) --r;
  return {r, global_logical - logical_offsets_[r]};
}

int RegisterLayout::register_of_qubit(int q) const {
  if (q < 0 || q >= qubit_total_) {
    throw std::out_of_range("RegisterLayout::register_of_qubit: out of range");
  }
  int r = num_registers() - 1;
  while (offsets_[r] > q) --r;
  return r;
}

std::string RegisterLayout::describe() const {
  std::string s;
  for (std::size_t r = 0; r < widths_.size(); ++r) {
    if (r) s += "+";
    s += std::to_string(widths_[r]);
  }
  return s;
}

RegisterLayout make_layout(std::vector<int> widths) {
  return RegisterLayout(std::move(widths));
}

namespace {

GateSchedule cross_cnot(int gi, int gj, const RegisterLayout& layout) {
  const auto [rj, lj] = layout.locate(gj);
  GateSchedule schedule;
  schedule.append_marked("cnot*(" + std::to_string(gi) + "," +
                         std::to_string(gj) + ")");
  GateSchedule h = compile_gate(LogicalGate::hadamard(lj), layout.width(rj),
                                layout.reg_offset(rj));
  schedule.append_schedule(h);
  schedule.append_schedule(compile_cpi_global(gi, gj, layout));
  schedule.append_schedule(h);
  // Drop the inner markers; the controlled-not is one gate.
  schedule.markers.resize(1);
  return schedule;
}

}  // namespace

GateSchedule compile_cpi_global(int i, int j, const RegisterLayout& layout,
                                bool sequential) {
  const auto [ri, li] = layout.locate(i);
  const auto [rj, lj] = layout.locate(j);
  if (ri == rj) {
    throw std::invalid_argument("compile_cpi_global: same register");
  }
  // ent_hamiltonian wants the higher-offset register first.
  if (layout.reg_offset(ri) > layout.reg_offset(rj)) {
    return compile_cpi(li, lj, layout.reg_offset(ri), layout.reg_offset(rj),
                       sequential);
  }
  return compile_cpi(lj, li, layout.reg_offset(rj), layout.reg_offset(ri),
                     sequential);
}

GateSchedule compile_global(const LogicalGate& gate, const RegisterLayout& layout) {
  const bool two_qubit =
      gate.kind == GateKind::CPhase || gate.kind == GateKind::Cnot;
  const auto [ri, li] = layout.locate(gate.i);
  if (!two_qubit) {
    LogicalGate local = gate;
    local.i = li;
    return compile_gate(local, layout.width(ri), layout.reg_offset(ri));
  }
  const auto [rj, lj] = layout.locate(gate.j);
  if (ri == rj) {
    LogicalGate local = gate;
    local.i = li;
    local.j = lj;
    return compile_gate(local, layout.width(ri), layout.reg_offset(ri));
  }
  if (gate.kind == GateKind::Cnot) {
    return cross_cnot(gate.i, gate.j, layout);
  }
  const double w = wrap_angle(gate.phi);
  GateSchedule schedule;
  if (w == 0.0) return schedule;
  if (w == kPi) {
    return compile_cpi_global(gate.i, gate.j, layout);
  }
  // Generic cross-register controlled phase: the parity trick
  // a b = (a + b - (a xor b)) / 2 with the xor carried on qubit j between
  // the two controlled-nots.
  schedule.append_marked("cp*(" + std::to_string(gate.i) + "," +
                         std::to_string(gate.j) + ")");
  const GateSchedule cnot = cross_cnot(gate.i, gate.j, layout);
  const auto phase_on = [&](int r, int l, double phi) {
    return compile_gate(LogicalGate::phase(l, phi), layout.width(r),
                        layout.reg_offset(r));
  };
  schedule.append_schedule(cnot);
  schedule.append_schedule(phase_on(rj, lj, -w / 2.0));
  schedule.append_schedule(cnot);
  schedule.append_schedule(phase_on(rj, lj, w / 2.0));
  schedule.append_schedule(phase_on(ri, li, w / 2.0));
  schedule.markers.resize(1);
  return schedule;
}

GateSchedule compile_global_program(const std::vector<LogicalGate>& gates,
                                    const RegisterLayout& layout) {
  GateSchedule schedule;
  for (const LogicalGate& g : gates) {
    schedule.append_schedule(compile_global(g, layout));
  }
  return schedule;
}

StateVector encode_global(const StateVector& logical,
                          const RegisterLayout& layout) {
  if (logical.num_qubits() != layout.total_logical()) {
    throw std::invalid_argument("encode_global: logical qubit count mismatch");
  }
  StateVector physical(layout.total_qubits());
  physical[0] = 0.0;
  const int regs = layout.num_registers();
  const double weight = std::pow(kInvSqrt2, regs);
  for (std::uint64_t s = 0; s < logical.dim(); ++s) {
    const cxd amp = logical[s];
    if (amp == cxd{}) continue;
    // Each register contributes its two complementary branches; walk all
    // 2^regs combinations.
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << regs); ++pick) {
      std::uint64_t index = 0;
      std::uint64_t rest = s;
      for (int r = 0; r < regs; ++r) {
        const KLEncoding& enc = layout.encoding(r);
        const std::uint64_t local = rest & (enc.dim_logical() - 1);
        rest >>= layout.width(r);
        const std::uint64_t bits = (pick >> r) & 1
                                       ? enc.branch_complement(local)
                                       : enc.branch(local);
        index |= bits << layout.reg_offset(r);
      }
      physical[index] += amp * weight;
    }
  }
  return physical;
}

GateSchedule recovery_for(int alpha, const RegisterLayout& layout) {
  const int r = layout.register_of_qubit(alpha);
  return compile_recovery(alpha, layout.reg_qubits(r), layout.reg_offset(r));
}

std::vector<int> recovery_scope(const RegisterLayout& layout,
                                std::uint64_t pulse_support, int alpha) {
  const int r_alpha = layout.register_of_qubit(alpha);
  std::set<int> regs;
  for (int q = 0; q < layout.total_qubits(); ++q) {
    if (pulse_support & (std::uint64_t{1} << q)) {
      regs.insert(layout.register_of_qubit(q));
    }
  }
  if (regs.size() < 2 || regs.find(r_alpha) == regs.end()) {
    return layout.register_qubits(r_alpha);
  }
  std::vector<int> qubits;
  for (int r : regs) {
    for (int q : layout.register_qubits(r)) qubits.push_back(q);
  }
  std::sort(qubits.begin(), qubits.end());
  return qubits;
}

double block_rate(const RegisterLayout& layout, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("block_rate: kappa < 0");
  double sum = 0.0;
  for (int r = 0; r < layout.num_registers(); ++r) {
    const double n = layout.reg_qubits(r);
    sum += recovery_duration(layout.reg_qubits(r)) * n * n;
  }
  return 0.25 * kappa * kappa * sum;
}

double block_fidelity(const RegisterLayout& layout, double kappa,
                      double tau_iteration, int iterations) {
  return std::exp(-block_rate(layout, kappa) * tau_iteration * iterations);
}

double cnot_speed_bound(int n_L, double kappa) {
  if (n_L < 1) throw std::invalid_argument("cnot_speed_bound: n_L < 1");
  if (!(kappa > 0.0)) throw std::invalid_argument("cnot_speed_bound: kappa <= 0");
  const double np1 = n_L + 1.0;
  return n_L / (4.0 * kappa * np1 * np1 * np1);
}

}  // namespace jumpsim

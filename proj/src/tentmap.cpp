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

#include "jumpsim/tentmap.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "jumpsim/jumpcodes.hpp"

namespace jumpsim {

namespace {
constexpr double kPi = std::numbers::pi;

void check_levels(int n_L, int max_qubits) {
  if (n_L < 1 || n_L > max_qubits) {
    throw std::invalid_argument("tent map: n_L out of range");
  }
}
}  // namespace

TentMapParams TentMapParams::standard(int n_L) {
  check_levels(n_L, 20);
  TentMapParams p{n_L, 0.0};
  p.kick = 1.7 / p.spacing();
  return p;
}

double TentMapParams::spacing() const { return 2.0 * kPi / levels(); }

double TentMapParams::position(int j) const { return spacing() * j; }

double tent_potential(double x) {
  if (!(x >= 0.0) || !(x < 2.0 * kPi)) {
    throw std::domain_error("tent_potential: x outside [0, 2 pi)");
  }
  if (x < kPi) return -0.5 * x * x + 0.5 * kPi * x;
  return 0.5 * x * x - 1.5 * kPi * x + kPi * kPi;
}

Eigen::MatrixXcd oracle_step(const TentMapParams& params) {
  check_levels(params.n_L, 12);
  const int n = params.levels();
  const double t = params.spacing();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::MatrixXcd dft(n, n);
  Eigen::VectorXcd kin(n);
  Eigen::VectorXcd kick(n);
  for (int r = 0; r < n; ++r) {
    const double momentum = r < n / 2 ? r : r - n;
    kin(r) = std::polar(1.0, -0.5 * t * momentum * momentum);
    for (int j = 0; j < n; ++j) {
      dft(r, j) = scale * std::polar(1.0, -momentum * params.position(j));
    }
  }
  for (int j = 0; j < n; ++j) {
    kick(j) = std::polar(1.0, -params.kick * tent_potential(params.position(j)));
  }
  return dft.adjoint() * kin.asDiagonal() * dft * kick.asDiagonal();
}

StateVector coherent_state(const TentMapParams& params, double x0, int p0) {
  check_levels(params.n_L, 24);
  StateVector state(params.n_L);
  const double t = params.spacing();
  double norm2 = 0.0;
  for (int j = 0; j < params.levels(); ++j) {
    const double x = params.position(j);
    double envelope = 0.0;
    for (int m = -3; m <= 3; ++m) {
      const double d = x - x0 + 2.0 * kPi * m;
      envelope += std::exp(-d * d / (2.0 * t));
    }
    const cxd amp = envelope * std::polar(1.0, p0 * x);
    state[j] = amp;
    norm2 += std::norm(amp);
  }
  if (norm2 <= 0.0) throw std::domain_error("coherent_state: vanishing norm");
  state.scale(1.0 / std::sqrt(norm2));
  return state;
}

namespace {

// Angles are pushed through wrap_angle here so that dropped gates are decided
// once, in this routine, rather than inside the compiler.
void push_phase(std::vector<LogicalGate>& gates, int i, double phi) {
  const double w = wrap_angle(phi);
  if (w == 0.0) return;
  gates.push_back(LogicalGate::phase(i, w));
}

void push_cphase(std::vector<LogicalGate>& gates, int i, int j, double phi) {
  const double w = wrap_angle(phi);
  if (w == 0.0) return;
  gates.push_back(LogicalGate::cphase(i, j, w));
}

// No-swap transform network: applied to |j>, wire q ends up holding output
// bit n-1-q of the DFT with positive sign convention.
std::vector<LogicalGate> noswap_dft(int n) {
  std::vector<LogicalGate> gates;
  for (int q = n - 1; q >= 0; --q) {
    gates.push_back(LogicalGate::hadamard(q));
    for (int qp = q - 1; qp >= 0; --qp) {
      gates.push_back(
          LogicalGate::cphase(qp, q, 2.0 * kPi / std::pow(2.0, q - qp + 1)));
    }
  }
  return gates;
}

std::vector<LogicalGate> invert_gates(const std::vector<LogicalGate>& gates) {
  std::vector<LogicalGate> inv;
  inv.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    LogicalGate g = *it;
    if (g.kind == GateKind::Phase || g.kind == GateKind::CPhase) {
      g.phi = wrap_angle(-g.phi);
    }
    inv.push_back(g);
  }
  return inv;
}

std::vector<LogicalGate> relabel_reversed(const std::vector<LogicalGate>& gates,
                                          int n) {
  std::vector<LogicalGate> out;
  out.reserve(gates.size());
  for (LogicalGate g : gates) {
    g.i = n - 1 - g.i;
    if (g.kind == GateKind::CPhase || g.kind == GateKind::Cnot) {
      g.j = n - 1 - g.j;
    }
    out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<LogicalGate> circuit_step(const TentMapParams& params) {
  check_levels(params.n_L, 20);
  const int n = params.n_L;
  const int m = n - 1;
  const double t = params.spacing();
  const double k = params.kick;

  std::vector<LogicalGate> gates;

  // Kick phase: exp(i (1 - 2 b_m) k g(j')) with j' the lower m bits and
  // g(j') = (T^2/2) j'^2 - (pi T / 2) j'.  Expanding j' in bits gives
  // single-qubit phases theta_i, pairwise couplings chi_il, and the b_m
  // factor doubles both with opposite sign (one extra control).
  std::vector<double> theta(m);
  for (int i = 0; i < m; ++i) {
    const double w = t * std::pow(2.0, i);
    theta[i] = k * 0.5 * w * (w - kPi);
    push_phase(gates, i, theta[i]);
  }
  for (int i = 0; i < m; ++i) {
    for (int l = i + 1; l < m; ++l) {
      push_cphase(gates, i, l, k * t * t * std::pow(2.0, i + l));
    }
  }
  for (int i = 0; i < m; ++i) {
    push_cphase(gates, m, i, -2.0 * theta[i]);
  }
  for (int i = 0; i < m; ++i) {
    for (int l = i + 1; l < m; ++l) {
      // Triple-controlled phase on (m, i, l) via b_i b_l =
      // (b_i + b_l - (b_i xor b_l)) / 2, with the xor computed on wire l.
      const double half = -k * t * t * std::pow(2.0, i + l);
      push_cphase(gates, m, i, half);
      push_cphase(gates, m, l, half);
      gates.push_back(LogicalGate::cnot(i, l));
      push_cphase(gates, m, l, -half);
      gates.push_back(LogicalGate::cnot(i, l));
    }
  }

  // Kinetic phase exp(-i T r^2 / 2) acts in the transform basis.  The
  // no-swap network leaves the momentum bits in reversed wire order, so the
  // diagonal is applied with reversed labels instead of swapping wires.
  const std::vector<LogicalGate> forward =
      relabel_reversed(invert_gates(noswap_dft(n)), n);
  for (const LogicalGate& g : forward) gates.push_back(g);

  for (int i = 0; i < n; ++i) {
    push_phase(gates, n - 1 - i, -0.5 * t * std::pow(4.0, i));
  }
  for (int i = 0; i < n; ++i) {
    for (int l = i + 1; l < n; ++l) {
      push_cphase(gates, n - 1 - i, n - 1 - l, -t * std::pow(2.0, i + l));
    }
  }

  for (const LogicalGate& g : invert_gates(forward)) gates.push_back(g);
  return gates;
}

void apply_ideal_gate(StateVector& state, const LogicalGate& gate) {
  const std::uint64_t dim = state.dim();
  switch (gate.kind) {
    case GateKind::Not:
      apply_x_gate(state, gate.i);
      return;
    case GateKind::Hadamard:
      apply_hadamard_gate(state, gate.i);
      return;
    case GateKind::Phase: {
      const std::uint64_t mask = std::uint64_t{1} << gate.i;
      const cxd f = std::polar(1.0, gate.phi);
      for (std::uint64_t x = 0; x < dim; ++x) {
        if (x & mask) state[x] *= f;
      }
      return;
    }
    case GateKind::CPhase: {
      const std::uint64_t mask =
          (std::uint64_t{1} << gate.i) | (std::uint64_t{1} << gate.j);
      const cxd f = std::polar(1.0, gate.phi);
      for (std::uint64_t x = 0; x < dim; ++x) {
        if ((x & mask) == mask) state[x] *= f;
      }
      return;
    }
    case GateKind::Cnot:
      apply_cnot_gate(state, gate.i, gate.j);
      return;
  }
  throw std::invalid_argument("apply_ideal_gate: unknown gate kind");
}

Eigen::MatrixXcd logical_unitary(const std::vector<LogicalGate>& gates,
                                 int num_qubits) {
  if (num_qubits < 1 || num_qubits > 12) {
    throw std::invalid_argument("logical_unitary: qubit count out of range");
  }
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    StateVector state(num_qubits);
    state[0] = 0.0;
    state[col] = 1.0;
    for (const LogicalGate& g : gates) apply_ideal_gate(state, g);
    for (std::uint64_t row = 0; row < dim; ++row) u(row, col) = state[row];
  }
  return u;
}

}  // namespace jumpsim

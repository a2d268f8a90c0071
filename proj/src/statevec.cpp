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

#include "jumpsim/statevec.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace jumpsim {

namespace {

constexpr int kMaxQubits = 24;
constexpr int kMaxBlockQubits = 8;

inline int parity(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits)
    throw std::invalid_argument("unsupported qubit count");
  amps_.assign(dim(), cxd{0.0, 0.0});
  amps_[0] = cxd{1.0, 0.0};
}

double StateVector::norm2() const {
  double s = 0.0;
  for (const cxd& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::scale(cxd factor) {
  for (cxd& a : amps_) a *= factor;
}

StateVector basis_state(int num_qubits, std::string_view bits) {
  if (static_cast<int>(bits.size()) != num_qubits)
    throw std::invalid_argument("bit string length must equal qubit count");
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must be 0/1");
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  StateVector s(num_qubits);
  s[0] = cxd{0.0, 0.0};
  s[index] = cxd{1.0, 0.0};
  return s;
}

cxd overlap(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("overlap: dimension mismatch");
  cxd s{0.0, 0.0};
  for (std::uint64_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void normalize(StateVector& state) {
  const double n2 = state.norm2();
  if (n2 <= 1e-300) throw std::domain_error("cannot normalize zero state");
  state.scale(cxd{1.0 / std::sqrt(n2), 0.0});
}

namespace {

// psi <- exp(-i theta P) psi for a single Pauli string, using
// exp(-i theta P) = cos(theta) I - i sin(theta) P.
void apply_term_exponential(StateVector& s, const PauliString& p, double theta) {
  const std::uint64_t dim = s.dim();
  if (p.max_qubit() >= s.num_qubits())
    throw std::invalid_argument("Pauli string acts outside the state");
  if (p.diagonal()) {
    // P|x> = (-1)^{parity(x & zmask)} |x>
    const cxd f_even = std::polar(1.0, -theta);
    const cxd f_odd = std::polar(1.0, theta);
    const std::uint64_t zm = p.z_mask();
    for (std::uint64_t x = 0; x < dim; ++x) s[x] *= parity(x & zm) ? f_odd : f_even;
    return;
  }
  // P|x> = phi(x) |x ^ flip> with phi(x) = i^{#Y} (-1)^{parity(x & (Y|Z))}.
  const std::uint64_t flip = p.flip_mask();
  const std::uint64_t ymz = p.y_mask() | p.z_mask();
  const int ny = std::popcount(p.y_mask());
  static const cxd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cxd iy = kIPow[ny & 3];
  const std::uint64_t low = flip & (~flip + 1);
  const double c = std::cos(theta);
  const cxd mis{0.0, -std::sin(theta)};
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (x & low) continue;
    const std::uint64_t y = x ^ flip;
    const cxd phix = parity(x & ymz) ? -iy : iy;
    const cxd phiy = std::conj(phix);  // phi(x) phi(y) = 1 and |phi| = 1
    const cxd a = s[x], b = s[y];
    s[x] = c * a + mis * (phiy * b);
    s[y] = c * b + mis * (phix * a);
  }
}

}  // namespace

void apply_pulse(StateVector& state, const PauliSum& h, double tau) {
  for (const PauliTerm& t : h.terms())
    apply_term_exponential(state, t.op, t.coeff * tau);
}

EffectivePlan make_effective_plan(const PauliSum& h) {
  EffectivePlan plan;
  const auto& terms = h.terms();
  const int n = static_cast<int>(terms.size());
  // Union-find over terms joined by overlapping support.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (terms[i].op.support_mask() & terms[j].op.support_mask())
        parent[find(i)] = find(j);

  for (int root = 0; root < n; ++root) {
    if (find(root) != root) continue;
    std::vector<int> members;
    bool all_diagonal = true;
    std::uint64_t support = 0;
    for (int i = 0; i < n; ++i) {
      if (find(i) != root) continue;
      members.push_back(i);
      all_diagonal = all_diagonal && terms[i].op.diagonal();
      support |= terms[i].op.support_mask();
    }
    if (all_diagonal) {
      for (int i : members)
        plan.diag.push_back({terms[i].op.z_mask(), terms[i].coeff});
    } else {
      EffectivePlan::Block blk;
      for (int q = 0; q < 64; ++q)
        if (support & (std::uint64_t{1} << q)) blk.qubits.push_back(q);
      if (static_cast<int>(blk.qubits.size()) > kMaxBlockQubits)
        throw std::invalid_argument("coupled non-diagonal component too large");
      for (int i : members) blk.terms.push_back(terms[i]);
      plan.block_mask |= support;
      plan.blocks.push_back(std::move(blk));
    }
  }
  return plan;
}

namespace detail {

void effective_kernel(StateVector& state, const EffectivePlan& plan,
                      double tau, double kappa) {
  const std::uint64_t dim = state.dim();
  const int nq = state.num_qubits();
  const std::uint64_t damp_mask = ~plan.block_mask & (dim - 1);

  // Diagonal pass: phases from the decoupled Z components and damping on all
  // qubits outside the dense blocks (their number operators commute with the
  // diagonal terms).
  const int nd = static_cast<int>(plan.diag.size());
  const bool damped = kappa != 0.0 && tau != 0.0;
  if (nd > 0 || damped) {
    if (nd > 20) throw std::invalid_argument("too many diagonal terms");
    std::vector<cxd> phase_table(std::size_t{1} << nd);
    for (std::uint64_t pat = 0; pat < phase_table.size(); ++pat) {
      double theta = 0.0;
      for (int t = 0; t < nd; ++t)
        theta += ((pat >> t) & 1) ? -plan.diag[t].coeff : plan.diag[t].coeff;
      phase_table[pat] = std::polar(1.0, -theta * tau);
    }
    std::vector<double> damp_table(nq + 1, 1.0);
    if (damped)
      for (int c = 0; c <= nq; ++c) damp_table[c] = std::exp(-0.5 * kappa * tau * c);
    for (std::uint64_t x = 0; x < dim; ++x) {
      std::uint64_t pat = 0;
      for (int t = 0; t < nd; ++t)
        pat |= static_cast<std::uint64_t>(parity(x & plan.diag[t].zmask)) << t;
      cxd f = phase_table[pat];
      if (damped) f *= damp_table[std::popcount(x & damp_mask)];
      state[x] *= f;
    }
  }

  // Dense blocks: exponentiate -i H_blk - (kappa/2) N_blk on the component
  // qubits and apply the matrix along every slice of the state.
  for (const auto& blk : plan.blocks) {
    const int s = static_cast<int>(blk.qubits.size());
    if (blk.qubits.back() >= nq)
      throw std::invalid_argument("pulse acts outside the state");
    const int bd = 1 << s;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(bd, bd);
    for (const PauliTerm& t : blk.terms) {
      // Local copy of the string on block coordinates.
      std::uint64_t lflip = 0, ly = 0, lz = 0;
      for (std::size_t k = 0; k < t.op.qubits().size(); ++k) {
        int local = -1;
        for (int b = 0; b < s; ++b)
          if (blk.qubits[b] == t.op.qubits()[k]) local = b;
        const std::uint64_t bit = std::uint64_t{1} << local;
        const Pauli p = t.op.letters()[k];
        if (p == Pauli::X || p == Pauli::Y) lflip |= bit;
        if (p == Pauli::Y) ly |= bit;
        if (p == Pauli::Z) lz |= bit;
      }
      const int ny = std::popcount(ly);
      static const cxd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      for (int x = 0; x < bd; ++x) {
        const cxd phi = parity(x & (ly | lz)) ? -kIPow[ny & 3] : kIPow[ny & 3];
        g(x ^ lflip, x) += cxd{0.0, -1.0} * t.coeff * phi;
      }
    }
    if (kappa != 0.0)
      for (int x = 0; x < bd; ++x)
        g(x, x) += cxd{-0.5 * kappa * std::popcount(static_cast<unsigned>(x)), 0.0};
    const Eigen::MatrixXcd m = (g * tau).exp();

    // Scatter table: local index -> global bit pattern.
    std::vector<std::uint64_t> scat(bd, 0);
    for (int gidx = 0; gidx < bd; ++gidx)
      for (int b = 0; b < s; ++b)
        if (gidx & (1 << b)) scat[gidx] |= std::uint64_t{1} << blk.qubits[b];

    std::vector<cxd> v(bd), w(bd);
    const std::uint64_t outer = dim >> s;
    for (std::uint64_t o = 0; o < outer; ++o) {
      std::uint64_t base = o;
      for (int b = 0; b < s; ++b) {
        const int q = blk.qubits[b];
        const std::uint64_t lowbits = (std::uint64_t{1} << q) - 1;
        base = ((base & ~lowbits) << 1) | (base & lowbits);
      }
      for (int gidx = 0; gidx < bd; ++gidx) v[gidx] = state[base | scat[gidx]];
      for (int r = 0; r < bd; ++r) {
        cxd acc{0.0, 0.0};
        for (int c2 = 0; c2 < bd; ++c2) acc += m(r, c2) * v[c2];
        w[r] = acc;
      }
      for (int gidx = 0; gidx < bd; ++gidx) state[base | scat[gidx]] = w[gidx];
    }
  }
}

}  // namespace detail

void apply_effective_pulse(StateVector& state, const EffectivePlan& plan,
                           double tau, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("kappa must be non-negative");
  detail::effective_kernel(state, plan, tau, kappa);
}

void apply_effective_pulse(StateVector& state, const PauliSum& h, double tau,
                           double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("kappa must be non-negative");
  const EffectivePlan plan = make_effective_plan(h);
  detail::effective_kernel(state, plan, tau, kappa);
}

double apply_jump(StateVector& state, int alpha) {
  if (alpha < 0 || alpha >= state.num_qubits())
    throw std::invalid_argument("jump qubit out of range");
  const std::uint64_t mask = std::uint64_t{1} << alpha;
  const std::uint64_t dim = state.dim();
  double weight = 0.0;
  for (std::uint64_t x0 = 0; x0 < dim; ++x0) {
    if (x0 & mask) continue;
    const cxd a = state[x0 | mask];
    state[x0] = a;
    state[x0 | mask] = cxd{0.0, 0.0};
    weight += std::norm(a);
  }
  return weight;
}

std::vector<double> excitation_expectations(const StateVector& state) {
  const double n2 = state.norm2();
  if (n2 <= 1e-300) throw std::domain_error("zero state has no excitations");
  std::vector<double> out(state.num_qubits(), 0.0);
  for (std::uint64_t x = 0; x < state.dim(); ++x) {
    const double w = std::norm(state[x]);
    if (w == 0.0) continue;
    std::uint64_t bits = x;
    while (bits) {
      const int q = std::countr_zero(bits);
      out[q] += w;
      bits &= bits - 1;
    }
  }
  for (double& v : out) v /= n2;
  return out;
}

}  // namespace jumpsim

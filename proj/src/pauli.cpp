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

#include "jumpsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace jumpsim {

PauliString::PauliString(std::vector<std::pair<int, Pauli>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  qubits_.reserve(factors.size());
  letters_.reserve(factors.size());
  for (const auto& [q, p] : factors) {
    if (q < 0 || q >= 64) throw std::invalid_argument("qubit index out of range");
    if (!qubits_.empty() && qubits_.back() == q)
      throw std::invalid_argument("duplicate qubit in Pauli string");
    qubits_.push_back(q);
    letters_.push_back(p);
    const std::uint64_t bit = std::uint64_t{1} << q;
    support_ |= bit;
    if (p == Pauli::X || p == Pauli::Y) flip_ |= bit;
    if (p == Pauli::Y) y_ |= bit;
    if (p == Pauli::Z) z_ |= bit;
  }
}

bool commute(const PauliString& a, const PauliString& b) {
  int mismatches = 0;
  std::size_t i = 0, j = 0;
  while (i < a.qubits().size() && j < b.qubits().size()) {
    const int qa = a.qubits()[i], qb = b.qubits()[j];
    if (qa < qb) {
      ++i;
    } else if (qb < qa) {
      ++j;
    } else {
      if (a.letters()[i] != b.letters()[j]) ++mismatches;
      ++i;
      ++j;
    }
  }
  return (mismatches % 2) == 0;
}

void PauliSum::add(double coeff, PauliString op) {
  for (const auto& t : terms_) {
    if (!commute(t.op, op))
      throw std::invalid_argument("PauliSum terms must commute pairwise");
  }
  support_ |= op.support_mask();
  terms_.push_back({coeff, std::move(op)});
}

int PauliSum::max_qubit() const {
  if (support_ == 0) return -1;
  return 63 - std::countl_zero(support_);
}

PauliString pauli_x(int q) { return PauliString({{q, Pauli::X}}); }
PauliString pauli_y(int q) { return PauliString({{q, Pauli::Y}}); }
PauliString pauli_z(int q) { return PauliString({{q, Pauli::Z}}); }

PauliString pauli_zz(int a, int b) {
  return PauliString({{a, Pauli::Z}, {b, Pauli::Z}});
}

PauliSum sum_x(int q) {
  PauliSum s;
  s.add(1.0, pauli_x(q));
  return s;
}

PauliSum sum_z(int q) {
  PauliSum s;
  s.add(1.0, pauli_z(q));
  return s;
}

PauliSum sum_zz(int a, int b) {
  PauliSum s;
  s.add(1.0, pauli_zz(a, b));
  return s;
}

PauliSum t_coupling(int a, int b) {
  PauliSum s;
  s.add(0.5, PauliString({{a, Pauli::X}, {b, Pauli::X}}));
  s.add(0.5, PauliString({{a, Pauli::Y}, {b, Pauli::Y}}));
  return s;
}

}  // namespace jumpsim

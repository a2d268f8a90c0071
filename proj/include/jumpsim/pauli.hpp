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

#ifndef JUMPSIM_PAULI_HPP
#define JUMPSIM_PAULI_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace jumpsim {

enum class Pauli : unsigned char { X, Y, Z };

// Tensor product of single-qubit Pauli operators on distinct qubits.
// Qubits are numbered from right to left: qubit 0 is the least significant
// bit of a computational basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<std::pair<int, Pauli>> factors);

  const std::vector<int>& qubits() const { return qubits_; }
  const std::vector<Pauli>& letters() const { return letters_; }
  int weight() const { return static_cast<int>(qubits_.size()); }
  int max_qubit() const { return qubits_.empty() ? -1 : qubits_.back(); }

  std::uint64_t support_mask() const { return support_; }
  std::uint64_t flip_mask() const { return flip_; }  // X and Y positions
  std::uint64_t y_mask() const { return y_; }
  std::uint64_t z_mask() const { return z_; }
  bool diagonal() const { return flip_ == 0; }

 private:
  std::vector<int> qubits_;   // ascending
  std::vector<Pauli> letters_;
  std::uint64_t support_ = 0;
  std::uint64_t flip_ = 0;
  std::uint64_t y_ = 0;
  std::uint64_t z_ = 0;
};

// Two Pauli strings commute iff they differ on an even number of shared qubits.
bool commute(const PauliString& a, const PauliString& b);

struct PauliTerm {
  double coeff;
  PauliString op;
};

// Real linear combination of Pauli strings whose terms commute pairwise, so
// the exponential of the sum factorizes into a product of term exponentials.
class PauliSum {
 public:
  PauliSum() = default;

  // Throws std::invalid_argument if the new term fails to commute with an
  // existing one.
  void add(double coeff, PauliString op);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::uint64_t support_mask() const { return support_; }
  int max_qubit() const;

 private:
  std::vector<PauliTerm> terms_;
  std::uint64_t support_ = 0;
};

// Convenience builders for the operator families used throughout.
PauliString pauli_x(int q);
PauliString pauli_y(int q);
PauliString pauli_z(int q);
PauliString pauli_zz(int a, int b);

// Single-term sums.
PauliSum sum_x(int q);
PauliSum sum_z(int q);
PauliSum sum_zz(int a, int b);

// Excitation hopping T_{ab} = (X_a X_b + Y_a Y_b) / 2, which exchanges
// |01> and |10> on the pair and annihilates |00> and |11>.
PauliSum t_coupling(int a, int b);

}  // namespace jumpsim

#endif  // JUMPSIM_PAULI_HPP

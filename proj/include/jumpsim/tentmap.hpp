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

#ifndef JUMPSIM_TENTMAP_HPP
#define JUMPSIM_TENTMAP_HPP

#include <Eigen/Dense>
#include <vector>

#include "jumpsim/pulsegates.hpp"
#include "jumpsim/statevec.hpp"

namespace jumpsim {

// Quantized tent map on N = 2^n_L position levels x_j = T j with T = 2 pi / N.
// One iteration is exp(-i T p^2 / 2) exp(-i k V(x)) with the tent potential V.
struct TentMapParams {
  int n_L;
  double kick;

  static TentMapParams standard(int n_L);  // kick = 1.7 / T

  int levels() const { return 1 << n_L; }
  double spacing() const;        // T
  double position(int j) const;  // x_j
};

// Piecewise-quadratic potential whose gradient is the tent profile; defined
// on [0, 2 pi).
double tent_potential(double x);

// Dense one-iteration unitary built directly from the DFT and the two
// diagonal factors; reference for the gate decomposition (n_L <= 12).
Eigen::MatrixXcd oracle_step(const TentMapParams& params);

// Periodized Gaussian centered at (x0, p0) with position variance T/2,
// normalized.
StateVector coherent_state(const TentMapParams& params, double x0, int p0);

// One map iteration as Hadamard/phase/controlled-phase/controlled-not gates
// on the n_L qubits.  Phases are wrapped to [0, 2 pi) and gates whose angle
// wraps to zero are omitted.
std::vector<LogicalGate> circuit_step(const TentMapParams& params);

// Exact (idealized) action of one gate on an n-qubit state, and the dense
// unitary of a gate list; used to validate decompositions.
void apply_ideal_gate(StateVector& state, const LogicalGate& gate);
Eigen::MatrixXcd logical_unitary(const std::vector<LogicalGate>& gates,
                                 int num_qubits);

}  // namespace jumpsim

#endif  // JUMPSIM_TENTMAP_HPP

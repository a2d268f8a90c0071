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

#ifndef JUMPSIM_TESTS_DENSE_ORACLE_HPP
#define JUMPSIM_TESTS_DENSE_ORACLE_HPP

#include <Eigen/Dense>
#include <random>

#include "jumpsim/pauli.hpp"
#include "jumpsim/statevec.hpp"

// Slow, obviously-correct dense references the fast kernels are tested
// against.  Everything here is built from explicit Kronecker products and
// full matrix exponentials.
namespace jumpsim::testing {

Eigen::Matrix2cd pauli_matrix(Pauli p);

// Dense operator on n qubits; qubit 0 is the least significant index bit.
Eigen::MatrixXcd dense_operator(const PauliString& op, int n);
Eigen::MatrixXcd dense_hamiltonian(const PauliSum& h, int n);

// Excitation number operator sum_q |1><1|_q.
Eigen::MatrixXcd dense_number_operator(int n);

// exp((-i H - (kappa/2) N) tau) via a full matrix exponential.
Eigen::MatrixXcd dense_effective(const PauliSum& h, int n, double tau,
                                 double kappa);

Eigen::VectorXcd to_eigen(const StateVector& state);
StateVector from_eigen(const Eigen::VectorXcd& v, int n);

StateVector random_state(int n, std::mt19937_64& rng);

// max_ij |a_ij - b_ij|, optionally after aligning the global phase of b to a
// at the largest entry of a.
double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
double phase_aligned_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace jumpsim::testing

#endif  // JUMPSIM_TESTS_DENSE_ORACLE_HPP

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

#include "support/dense_oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <complex>
#include <stdexcept>

namespace jumpsim::testing {

using cxd = std::complex<double>;

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (p) {
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = cxd{0.0, -1.0};
      m(1, 0) = cxd{0.0, 1.0};
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd dense_operator(const PauliString& op, int n) {
  if (op.max_qubit() >= n) {
    throw std::invalid_argument("dense_operator: operator exceeds qubit count");
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = n - 1; q >= 0; --q) {
    Eigen::Matrix2cd factor = Eigen::Matrix2cd::Identity();
    for (std::size_t k = 0; k < op.qubits().size(); ++k) {
      if (op.qubits()[k] == q) factor = pauli_matrix(op.letters()[k]);
    }
    m = kron(m, factor);
  }
  return m;
}

Eigen::MatrixXcd dense_hamiltonian(const PauliSum& h, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const PauliTerm& t : h.terms()) {
    m += t.coeff * dense_operator(t.op, n);
  }
  return m;
}

Eigen::MatrixXcd dense_number_operator(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    int count = 0;
    for (int q = 0; q < n; ++q) {
      if (x & (Eigen::Index{1} << q)) ++count;
    }
    m(x, x) = static_cast<double>(count);
  }
  return m;
}

Eigen::MatrixXcd dense_effective(const PauliSum& h, int n, double tau,
                                 double kappa) {
  const Eigen::MatrixXcd g =
      cxd{0.0, -1.0} * dense_hamiltonian(h, n) -
      0.5 * kappa * dense_number_operator(n);
  return (g * tau).exp();
}

Eigen::VectorXcd to_eigen(const StateVector& state) {
  Eigen::VectorXcd v(state.dim());
  for (std::uint64_t x = 0; x < state.dim(); ++x) v(x) = state[x];
  return v;
}

StateVector from_eigen(const Eigen::VectorXcd& v, int n) {
  StateVector state(n);
  state[0] = 0.0;
  for (Eigen::Index x = 0; x < v.size(); ++x) state[x] = v(x);
  return state;
}

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector state(n);
  double norm2 = 0.0;
  for (std::uint64_t x = 0; x < state.dim(); ++x) {
    state[x] = cxd{gauss(rng), gauss(rng)};
    norm2 += std::norm(state[x]);
  }
  state.scale(1.0 / std::sqrt(norm2));
  return state;
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double phase_aligned_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::Index imax = 0;
  Eigen::Index jmax = 0;
  a.cwiseAbs().maxCoeff(&imax, &jmax);
  const cxd ratio = b(imax, jmax) / a(imax, jmax);
  const cxd phase = ratio / std::abs(ratio);
  return max_abs_diff(a * phase, b);
}

}  // namespace jumpsim::testing

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "jumpsim/registers.hpp"
#include "jumpsim/tentmap.hpp"
#include "support/dense_oracle.hpp"

using namespace jumpsim;
namespace jt = jumpsim::testing;

namespace {

constexpr double kPi = std::numbers::pi;

// Logical-subspace action of a schedule under a product encoding.
Eigen::MatrixXcd global_action(const GateSchedule& schedule,
                               const RegisterLayout& layout) {
  const std::uint64_t dim = std::uint64_t{1} << layout.total_logical();
  Eigen::MatrixXcd m(dim, dim);
  std::vector<StateVector> images;
  for (std::uint64_t s = 0; s < dim; ++s) {
    StateVector logical(layout.total_logical());
    logical[0] = 0.0;
    logical[s] = 1.0;
    images.push_back(encode_global(logical, layout));
  }
  for (std::uint64_t s = 0; s < dim; ++s) {
    StateVector physical = images[s];
    for (const Pulse& p : schedule.pulses) {
      apply_effective_pulse(physical, *p.plan, p.duration, 0.0);
    }
    for (std::uint64_t sp = 0; sp < dim; ++sp) {
      m(sp, s) = overlap(images[sp], physical);
    }
  }
  return m;
}

void check_global_gate(const LogicalGate& gate, const RegisterLayout& layout,
                       double tol = 1e-10) {
  const Eigen::MatrixXcd got = global_action(compile_global(gate, layout), layout);
  const Eigen::MatrixXcd ideal = logical_unitary({gate}, layout.total_logical());
  CHECK(jt::phase_aligned_diff(ideal, got) < tol);
  for (Eigen::Index s = 0; s < got.cols(); ++s) {
    CHECK(std::abs(got.col(s).squaredNorm() - 1.0) < 1e-10);
  }
}

}  // namespace

TEST_SUITE("registers") {

TEST_CASE("layout arithmetic for [1,1]") {
  const RegisterLayout layout({1, 1});
  CHECK(layout.num_registers() == 2);
  CHECK(layout.total_logical() == 2);
  CHECK(layout.total_qubits() == 8);
  CHECK(layout.reg_offset(0) == 0);
  CHECK(layout.reg_offset(1) == 4);
  CHECK(layout.locate(0) == std::pair<int, int>{0, 0});
  CHECK(layout.locate(1) == std::pair<int, int>{1, 0});
  CHECK(layout.register_of_qubit(3) == 0);
  CHECK(layout.register_of_qubit(4) == 1);
  CHECK(layout.describe() == "1+1");
  CHECK(layout.register_qubits(1) == std::vector<int>{4, 5, 6, 7});
  CHECK_THROWS(layout.locate(2));
  CHECK_THROWS(RegisterLayout({}));
}

TEST_CASE("layout arithmetic for [2,1]") {
  const RegisterLayout layout({2, 1});
  CHECK(layout.total_logical() == 3);
  CHECK(layout.total_qubits() == 10);
  CHECK(layout.reg_offset(1) == 6);
  CHECK(layout.locate(1) == std::pair<int, int>{0, 1});
  CHECK(layout.locate(2) == std::pair<int, int>{1, 0});
  CHECK(layout.describe() == "2+1");
}

TEST_CASE("encode_global is the product of register encodings") {
  std::mt19937_64 rng(73);
  const RegisterLayout layout({1, 1});
  const KLEncoding enc(1);
  const StateVector a = jt::random_state(1, rng);
  const StateVector b = jt::random_state(1, rng);
  // Product logical state with register 0 holding a and register 1 holding b.
  StateVector product(2);
  product[0] = a[0] * b[0];
  product[1] = a[1] * b[0];
  product[2] = a[0] * b[1];
  product[3] = a[1] * b[1];
  const StateVector global = encode_global(product, layout);
  const StateVector ea = encode(a, enc);
  const StateVector eb = encode(b, enc);
  for (std::uint64_t upper = 0; upper < 16; ++upper) {
    for (std::uint64_t lower = 0; lower < 16; ++lower) {
      const cxd expect = eb[upper] * ea[lower];
      CHECK(std::abs(global[(upper << 4) | lower] - expect) < 1e-12);
    }
  }
}

TEST_CASE("joint controlled-pi phase acts as CP(pi) with no extra phase") {
  const RegisterLayout layout({1, 1});
  const Eigen::MatrixXcd got =
      global_action(compile_cpi_global(0, 1, layout), layout);
  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Identity(4, 4);
  expect(3, 3) = -1.0;
  CHECK(jt::max_abs_diff(expect, got) < 1e-12);
}

TEST_CASE("sequential controlled-pi split agrees with the joint pulse") {
  const RegisterLayout layout({1, 1});
  const Eigen::MatrixXcd joint =
      global_action(compile_cpi_global(0, 1, layout), layout);
  const Eigen::MatrixXcd split =
      global_action(compile_cpi_global(0, 1, layout, true), layout);
  CHECK(jt::max_abs_diff(joint, split) < 1e-12);
}

TEST_CASE("joint controlled-pi phase between wider registers") {
  const RegisterLayout layout({2, 1});
  const Eigen::MatrixXcd got =
      global_action(compile_cpi_global(1, 2, layout), layout);
  const Eigen::MatrixXcd ideal =
      logical_unitary({LogicalGate::cphase(1, 2, kPi)}, 3);
  CHECK(jt::max_abs_diff(ideal, got) < 1e-10);
}

TEST_CASE("cross-register gates act as their logical targets") {
  const RegisterLayout layout({1, 1});
  check_global_gate(LogicalGate::cnot(0, 1), layout);
  check_global_gate(LogicalGate::cnot(1, 0), layout);
  check_global_gate(LogicalGate::cphase(0, 1, 1.3), layout);
  check_global_gate(LogicalGate::cphase(1, 0, 4.9), layout);
  check_global_gate(LogicalGate::hadamard(1), layout);
  check_global_gate(LogicalGate::phase(0, 2.0), layout);
}

TEST_CASE("cross-register gates on mixed widths") {
  const RegisterLayout layout({2, 1});
  check_global_gate(LogicalGate::cnot(2, 0), layout);
  check_global_gate(LogicalGate::cnot(1, 2), layout);
  check_global_gate(LogicalGate::cphase(0, 2, 2.7), layout);
  check_global_gate(LogicalGate::cnot(0, 1), layout);  // intra register 0
}

TEST_CASE("mid-pulse entangling states stay in the joint pairing span") {
  std::mt19937_64 rng(79);
  const RegisterLayout layout({1, 1});
  const JumpCode joint_code = pairing_code_basis(8);
  const GateSchedule cpi = compile_cpi_global(0, 1, layout);
  REQUIRE(cpi.pulses.size() == 1);
  for (double frac : {0.15, 0.4, 0.5, 0.77}) {
    StateVector s = encode_global(jt::random_state(2, rng), layout);
    apply_effective_pulse(s, *cpi.pulses[0].plan,
                          frac * cpi.pulses[0].duration, 0.0);
    CHECK(code_span_residual(s, joint_code) < 1e-12);
  }
}

TEST_CASE("mid-pulse entangling states leave the product span") {
  // Halfway through the joint pulse the |11> logical component is entangled
  // between the registers, so projecting each register onto its own code
  // space must lose weight.
  const RegisterLayout layout({1, 1});
  StateVector logical(2);
  logical[0] = 0.0;
  logical[3] = 1.0;
  StateVector s = encode_global(logical, layout);
  const GateSchedule cpi = compile_cpi_global(0, 1, layout);
  apply_effective_pulse(s, *cpi.pulses[0].plan, 0.5 * cpi.pulses[0].duration,
                        0.0);
  // Projection onto span{c_k (x) c_l}: accumulate overlaps with all product
  // codeword pairs.
  const JumpCode code4 = pairing_code_basis(4);
  double inside = 0.0;
  for (std::size_t k = 0; k < code4.size(); ++k) {
    for (std::size_t l = 0; l < code4.size(); ++l) {
      const StateVector ck = code4.codeword(k);
      const StateVector cl = code4.codeword(l);
      cxd ip = 0.0;
      for (std::uint64_t upper = 0; upper < 16; ++upper) {
        for (std::uint64_t lower = 0; lower < 16; ++lower) {
          ip += std::conj(cl[upper] * ck[lower]) * s[(upper << 4) | lower];
        }
      }
      inside += std::norm(ip);
    }
  }
  CHECK(1.0 - inside > 0.05);
}

TEST_CASE("recovery_scope picks the register or the joint block") {
  const RegisterLayout layout({1, 1});
  // Intra-register pulse support.
  const std::uint64_t intra = 0b11000000;  // qubits 6, 7 (register 1)
  CHECK(recovery_scope(layout, intra, 6) == std::vector<int>{4, 5, 6, 7});
  CHECK(recovery_scope(layout, intra, 1) == std::vector<int>{0, 1, 2, 3});
  // Joint pulse support touching both registers.
  const std::uint64_t joint = 0b00010001;  // qubits 0 and 4
  const std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(recovery_scope(layout, joint, 2) == all);
  CHECK(recovery_scope(layout, joint, 5) == all);
}

TEST_CASE("a jump during the joint pulse is corrected by joint recovery") {
  std::mt19937_64 rng(83);
  const RegisterLayout layout({1, 1});
  const GateSchedule cpi = compile_cpi_global(0, 1, layout);
  const Pulse& pulse = cpi.pulses[0];
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  for (int alpha = 0; alpha < 8; ++alpha) {
    for (int rep = 0; rep < 6; ++rep) {
      StateVector ideal = encode_global(jt::random_state(2, rng), layout);
      StateVector s = ideal;
      apply_effective_pulse(ideal, *pulse.plan, pulse.duration, 0.0);

      const double cut = frac(rng) * pulse.duration;
      apply_effective_pulse(s, *pulse.plan, cut, 0.0);
      const double weight = apply_jump(s, alpha);
      CHECK(weight > 1e-6);
      normalize(s);
      const std::vector<int> scope =
          recovery_scope(layout, pulse.hamiltonian.support_mask(), alpha);
      CHECK(scope.size() == 8);
      recovery_circuit_on(alpha, scope).apply(s);
      apply_effective_pulse(s, *pulse.plan, pulse.duration - cut, 0.0);
      CHECK(std::norm(overlap(ideal, s)) > 1.0 - 1e-10);
    }
  }
}

TEST_CASE("independent register jumps are corrected independently") {
  std::mt19937_64 rng(89);
  const RegisterLayout layout({1, 1});
  for (int rep = 0; rep < 20; ++rep) {
    const StateVector ideal = encode_global(jt::random_state(2, rng), layout);
    StateVector s = ideal;
    // One decay in each register at the same instant.
    const int alpha0 = rep % 4;
    const int alpha1 = 4 + (rep / 4) % 4;
    apply_jump(s, alpha0);
    apply_jump(s, alpha1);
    normalize(s);
    recovery_circuit_on(alpha0, layout.register_qubits(0)).apply(s);
    recovery_circuit_on(alpha1, layout.register_qubits(1)).apply(s);
    CHECK(std::norm(overlap(ideal, s)) > 1.0 - 1e-10);
  }
}

TEST_CASE("block rate reproduces the closed forms") {
  const double kappa = 3e-3;
  const RegisterLayout pair({1, 1});
  CHECK(std::abs(block_rate(pair, kappa) - 52.0 * kPi * kappa * kappa) <
        1e-15);
  const RegisterLayout single({6});
  CHECK(std::abs(block_rate(single, kappa) - 1176.0 * kPi * kappa * kappa) <
        1e-12);
  CHECK(std::abs(block_fidelity(pair, kappa, 10.0, 3) -
                 std::exp(-block_rate(pair, kappa) * 30.0)) < 1e-15);
}

TEST_CASE("speed bound value and monotonicity") {
  const double kappa = 2.0 / (3.0 * kPi) * 1e-4;
  CHECK(std::abs(cnot_speed_bound(6, kappa) - 206.086) < 0.01);
  // Narrower registers admit slower gates.
  CHECK(cnot_speed_bound(1, kappa) > cnot_speed_bound(2, kappa));
  CHECK(cnot_speed_bound(2, kappa) > cnot_speed_bound(6, kappa));
  // The pulse library's controlled-not fits under the bound at this rate.
  CHECK(7.0 * kPi / 4.0 < cnot_speed_bound(6, kappa));
}

}  // TEST_SUITE

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

#ifndef JUMPSIM_TRAJECTORIES_HPP
#define JUMPSIM_TRAJECTORIES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jumpsim/pulsegates.hpp"
#include "jumpsim/registers.hpp"
#include "jumpsim/statevec.hpp"
#include "jumpsim/tentmap.hpp"

namespace jumpsim {

// A pulse schedule repeated for a number of iterations from a fixed initial
// state.  With a layout present, decays trigger recovery pulse trains; with
// none the state just keeps running (uncorrected mode).
struct Program {
  GateSchedule iteration;
  StateVector initial;
  std::optional<RegisterLayout> layout;
};

// Tent-map experiment wiring: coherent initial state, one schedule per map
// iteration, encoded into a single register or left on bare qubits.
Program tentmap_program(const TentMapParams& params, bool encoded,
                        double x0 = 5.35, int p0 = 0);

struct TrajectoryConfig {
  double kappa = 0.0;
  std::uint64_t seed = 1;
  int trajectories = 1;
  int iterations = 1;
  std::vector<int> record_points;  // defaults to every iteration
  int workers = 0;  // 0: JUMPSIM_WORKERS env var, then hardware concurrency
};

struct JumpEvent {
  double time;  // circuit time, recoveries included
  int alpha;
  bool during_recovery;
  // True when alpha lies inside the support of a recovery that was already
  // running, i.e. the decay disrupts the repair of its own register.  These
  // are the loss events the closed-form corrected-fidelity models count.
  bool recovery_overlap;
};

struct TrajectoryResult {
  std::vector<cxd> overlaps;  // conditional state against the reference
  std::vector<int> jumps_at_record;
  std::vector<JumpEvent> jumps;
};

// Decay-free state after each iteration, used as the fidelity reference.
std::vector<StateVector> reference_states(const Program& program, int iterations);

// Throws std::invalid_argument on an unusable configuration; run_trajectory
// and run_ensemble call this, the CLI calls it before opening output files.
void check_config(const Program& program, const TrajectoryConfig& config);

// One quantum trajectory.  The norm of the conditional state decays under
// the effective evolution; a jump fires when the squared norm crosses a
// uniform threshold, the jump time is located by bisection with the exact
// inverse kernel, the decayed qubit is sampled from the excitation weights,
// and the state is renormalized with a fresh threshold drawn.  Trajectory m
// is seeded with seed xor mix64(m) independently of the worker count.
TrajectoryResult run_trajectory(const Program& program,
                                const TrajectoryConfig& config,
                                std::uint64_t index,
                                const std::vector<StateVector>& reference);

struct FidelityRecord {
  int iteration;
  double mean_fidelity;
  double std_error;
  double mean_jumps;
  double analytic;
};

struct EnsembleResult {
  std::vector<FidelityRecord> records;
};

EnsembleResult run_ensemble(const Program& program, const TrajectoryConfig& config);

// Closed-form fidelity estimates per iteration of duration tau_iteration:
// uncorrected decay exp(-(n_q/2) kappa tau t) and the corrected first-order
// recovery cost from block_rate.
double analytic_bare_fidelity(int n_q, double kappa, double tau_iteration, int t);
double analytic_mean_jumps(int n_q, double kappa, double tau_iteration, int t);

// CSV schema:
// t,mean_fidelity,stderr,mean_jumps,f_analytic,mode,kappa,layout
// write_csv emits header plus rows; the split forms allow one header over a
// sweep of kappa values.
void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, const EnsembleResult& result,
                    const std::string& mode, double kappa,
                    const std::string& layout);
void write_csv(std::ostream& out, const EnsembleResult& result,
               const std::string& mode, double kappa, const std::string& layout);

// SplitMix64 finalizer; spreads trajectory indices into seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace jumpsim

#endif  // JUMPSIM_TRAJECTORIES_HPP

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

#include "jumpsim/trajectories.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <memory>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace jumpsim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Program tentmap_program(const TentMapParams& params, bool encoded, double x0,
                        int p0) {
  const std::vector<LogicalGate> gates = circuit_step(params);
  const StateVector logical = coherent_state(params, x0, p0);
  if (!encoded) {
    return Program{compile_bare_program(gates, params.n_L), logical,
                   std::nullopt};
  }
  RegisterLayout layout({params.n_L});
  GateSchedule schedule = compile_global_program(gates, layout);
  StateVector initial = encode_global(logical, layout);
  return Program{std::move(schedule), std::move(initial), std::move(layout)};
}

std::vector<StateVector> reference_states(const Program& program,
                                          int iterations) {
  if (iterations < 1) {
    throw std::invalid_argument("reference_states: iterations < 1");
  }
  std::vector<StateVector> refs;
  refs.reserve(iterations);
  StateVector state = program.initial;
  for (int it = 0; it < iterations; ++it) {
    for (const Pulse& p : program.iteration.pulses) {
      apply_effective_pulse(state, *p.plan, p.duration, 0.0);
    }
    refs.push_back(state);
  }
  return refs;
}

namespace {

struct Frame {
  std::shared_ptr<const GateSchedule> schedule;
  std::size_t pulse_index = 0;
  double elapsed_in_pulse = 0.0;
  // Union of the schedule's pulse supports when this frame is a recovery;
  // zero for the program frame.  A jump landing in an active mask disrupts
  // the repair of its own register.
  std::uint64_t recovery_mask = 0;
};

std::uint64_t schedule_support(const GateSchedule& schedule) {
  std::uint64_t mask = 0;
  for (const Pulse& pulse : schedule.pulses) {
    mask |= pulse.hamiltonian.support_mask();
  }
  return mask;
}

std::vector<int> resolved_record_points(const TrajectoryConfig& config) {
  std::vector<int> points = config.record_points;
  if (points.empty()) {
    points.resize(config.iterations);
    for (int t = 0; t < config.iterations; ++t) points[t] = t + 1;
    return points;
  }
  int prev = 0;
  for (int t : points) {
    if (t <= prev || t > config.iterations) {
      throw std::invalid_argument(
          "record_points must be ascending within [1, iterations]");
    }
    prev = t;
  }
  return points;
}

// Locate the threshold crossing inside the current pulse.  On entry the
// state sits at offset `span` into the pulse remainder with squared norm
// below the threshold; kernel moves are exact inverses of each other, so the
// state can be walked to the crossing point in place.
double bisect_to_threshold(StateVector& state, const EffectivePlan& plan,
                           double kappa, double span, double norm_end,
                           double threshold) {
  double lo = 0.0;
  double hi = span;
  double cur = span;
  double norm_cur = norm_end;
  const double tol = 1e-12 * threshold + 1e-13;
  for (int round = 0; round < 200; ++round) {
    if (std::abs(norm_cur - threshold) <= tol) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    detail::effective_kernel(state, plan, mid - cur, kappa);
    cur = mid;
    norm_cur = state.norm2();
    (norm_cur > threshold ? lo : hi) = mid;
  }
  return cur;
}

int sample_jump_channel(const StateVector& state, double u) {
  const std::vector<double> weights = excitation_expectations(state);
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) {
    throw std::runtime_error("jump fired with no excited population");
  }
  double target = u * total;
  int last_positive = -1;
  for (std::size_t q = 0; q < weights.size(); ++q) {
    if (weights[q] <= 0.0) continue;
    last_positive = static_cast<int>(q);
    target -= weights[q];
    if (target < 0.0) return last_positive;
  }
  return last_positive;
}

}  // namespace

void check_config(const Program& program, const TrajectoryConfig& config) {
  if (!(config.kappa >= 0.0)) {
    throw std::invalid_argument("kappa must be non-negative");
  }
  if (config.trajectories < 1) {
    throw std::invalid_argument("trajectories must be positive");
  }
  if (config.iterations < 1) {
    throw std::invalid_argument("iterations must be positive");
  }
  if (program.iteration.pulses.empty()) {
    throw std::invalid_argument("program has no pulses");
  }
  if (program.layout &&
      program.layout->total_qubits() != program.initial.num_qubits()) {
    throw std::invalid_argument("layout does not match the initial state");
  }
  resolved_record_points(config);  // validates ordering and range
}

TrajectoryResult run_trajectory(const Program& program,
                                const TrajectoryConfig& config,
                                std::uint64_t index,
                                const std::vector<StateVector>& reference) {
  check_config(program, config);
  const std::vector<int> points = resolved_record_points(config);
  if (reference.size() < static_cast<std::size_t>(config.iterations)) {
    throw std::invalid_argument("reference does not cover all iterations");
  }

  std::mt19937_64 rng(config.seed ^ mix64(index));
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto fresh_threshold = [&] { return 1.0 - uni(rng); };  // (0, 1]

  StateVector state = program.initial;
  double threshold = fresh_threshold();
  double now = 0.0;

  TrajectoryResult result;
  result.overlaps.reserve(points.size());
  result.jumps_at_record.reserve(points.size());
  std::size_t next_point = 0;

  std::vector<Frame> stack;
  for (int it = 0; it < config.iterations; ++it) {
    stack.push_back(Frame{
        std::shared_ptr<const GateSchedule>(std::shared_ptr<void>(),
                                            &program.iteration),
        0, 0.0});
    while (!stack.empty()) {
      Frame& frame = stack.back();
      if (frame.pulse_index >= frame.schedule->pulses.size()) {
        stack.pop_back();
        continue;
      }
      const Pulse& pulse = frame.schedule->pulses[frame.pulse_index];
      const double span = pulse.duration - frame.elapsed_in_pulse;
      detail::effective_kernel(state, *pulse.plan, span, config.kappa);
      const double norm_end = state.norm2();
      if (norm_end > threshold) {
        now += span;
        frame.pulse_index += 1;
        frame.elapsed_in_pulse = 0.0;
        continue;
      }

      const double dt = bisect_to_threshold(state, *pulse.plan, config.kappa,
                                            span, norm_end, threshold);
      assert(std::abs(state.norm2() - threshold) <=
             1e-9 * threshold + 1e-10);
      now += dt;
      frame.elapsed_in_pulse += dt;

      const int alpha = sample_jump_channel(state, uni(rng));
      apply_jump(state, alpha);
      normalize(state);
      threshold = fresh_threshold();
      const bool in_recovery = frame.schedule->kind == ScheduleKind::Recovery;
      std::uint64_t active_mask = 0;
      for (const Frame& f : stack) active_mask |= f.recovery_mask;
      const bool overlaps_recovery = (active_mask >> alpha) & 1u;
      result.jumps.push_back({now, alpha, in_recovery, overlaps_recovery});

      if (program.layout) {
        const std::vector<int> scope = recovery_scope(
            *program.layout, pulse.hamiltonian.support_mask(), alpha);
        auto recovery = std::make_shared<GateSchedule>(
            compile_recovery_on(alpha, scope));
        const std::uint64_t mask = schedule_support(*recovery);
        stack.push_back(Frame{std::move(recovery), 0, 0.0, mask});
      }
    }

    if (next_point < points.size() && points[next_point] == it + 1) {
      const double norm = std::sqrt(state.norm2());
      result.overlaps.push_back(overlap(reference[it], state) / norm);
      result.jumps_at_record.push_back(static_cast<int>(result.jumps.size()));
      ++next_point;
    }
  }
  return result;
}

namespace {

int resolve_workers(const TrajectoryConfig& config, int jobs) {
  int workers = config.workers;
  if (workers <= 0) {
    if (const char* env = std::getenv("JUMPSIM_WORKERS")) {
      const long parsed = std::strtol(env, nullptr, 10);
      if (parsed > 0) workers = static_cast<int>(parsed);
    }
  }
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
  }
  if (workers < 1) workers = 1;
  if (workers > jobs) workers = jobs;
  return workers;
}

}  // namespace

EnsembleResult run_ensemble(const Program& program,
                            const TrajectoryConfig& config) {
  check_config(program, config);
  const std::vector<int> points = resolved_record_points(config);
  const std::vector<StateVector> reference =
      reference_states(program, config.iterations);

  const int m = config.trajectories;
  std::vector<TrajectoryResult> results(m);
  const int workers = resolve_workers(config, m);
  if (workers == 1) {
    for (int i = 0; i < m; ++i) {
      results[i] = run_trajectory(program, config, i, reference);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int i = next.fetch_add(1); i < m; i = next.fetch_add(1)) {
            results[i] = run_trajectory(program, config, i, reference);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Reduce in ascending trajectory order so the output is identical for any
  // worker count.
  const double tau_it = program.iteration.total_duration();
  const double rate =
      program.layout
          ? block_rate(*program.layout, config.kappa)
          : 0.5 * program.initial.num_qubits() * config.kappa;

  EnsembleResult out;
  out.records.reserve(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    double sum_f = 0.0;
    double sum_j = 0.0;
    for (int i = 0; i < m; ++i) {
      sum_f += std::norm(results[i].overlaps[p]);
      sum_j += results[i].jumps_at_record[p];
    }
    const double mean_f = sum_f / m;
    double var = 0.0;
    for (int i = 0; i < m; ++i) {
      const double d = std::norm(results[i].overlaps[p]) - mean_f;
      var += d * d;
    }
    const double std_error =
        m > 1 ? std::sqrt(var / (static_cast<double>(m) - 1.0) / m) : 0.0;
    const int t = points[p];
    out.records.push_back({t, mean_f, std_error, sum_j / m,
                           std::exp(-rate * tau_it * t)});
  }
  return out;
}

double analytic_bare_fidelity(int n_q, double kappa, double tau_iteration,
                              int t) {
  return std::exp(-0.5 * n_q * kappa * tau_iteration * t);
}

double analytic_mean_jumps(int n_q, double kappa, double tau_iteration, int t) {
  return 0.5 * n_q * kappa * tau_iteration * t;
}

namespace {

std::string format_g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "t,mean_fidelity,stderr,mean_jumps,f_analytic,mode,kappa,layout\n";
}

void write_csv_rows(std::ostream& out, const EnsembleResult& result,
                    const std::string& mode, double kappa,
                    const std::string& layout) {
  for (const FidelityRecord& r : result.records) {
    out << r.iteration << ',' << format_g(r.mean_fidelity) << ','
        << format_g(r.std_error) << ',' << format_g(r.mean_jumps) << ','
        << format_g(r.analytic) << ',' << mode << ',' << format_g(kappa) << ','
        << layout << '\n';
  }
}

void write_csv(std::ostream& out, const EnsembleResult& result,
               const std::string& mode, double kappa,
               const std::string& layout) {
  write_csv_header(out);
  write_csv_rows(out, result, mode, kappa, layout);
}

}  // namespace jumpsim

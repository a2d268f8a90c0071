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
//
// Command line front end.  Exit codes: 0 success, 1 verification failure or
// internal error, 2 configuration error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jumpsim/jumpcodes.hpp"
#include "jumpsim/pulsegates.hpp"
#include "jumpsim/registers.hpp"
#include "jumpsim/statevec.hpp"
#include "jumpsim/tentmap.hpp"
#include "jumpsim/trajectories.hpp"

namespace {

using namespace jumpsim;

constexpr double kPi = std::numbers::pi;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;

struct RunOptions {
  std::vector<int> registers = {6};
  std::string mode = "encoded";
  std::vector<double> kappas;
  int iterations = 30;
  int trajectories = 1000;
  std::uint64_t seed = 1;
  std::vector<int> record;
  int workers = 0;
  double kt = 1.7;
  double x0 = 5.35;
  int p0 = 0;
  std::string out_path;
};

TentMapParams map_params(int n_L, double kt) {
  TentMapParams params{n_L, 0.0};
  params.kick = kt / params.spacing();
  return params;
}

int total_width(const std::vector<int>& registers) {
  int total = 0;
  for (int w : registers) total += w;
  return total;
}

Program build_program(const RunOptions& opt) {
  const int n_L = total_width(opt.registers);
  const TentMapParams params = map_params(n_L, opt.kt);
  const std::vector<LogicalGate> gates = circuit_step(params);
  const StateVector packet = coherent_state(params, opt.x0, opt.p0);
  if (opt.mode == "bare") {
    return Program{compile_bare_program(gates, n_L), packet, std::nullopt};
  }
  RegisterLayout layout(opt.registers);
  GateSchedule schedule = compile_global_program(gates, layout);
  StateVector initial = encode_global(packet, layout);
  return Program{std::move(schedule), std::move(initial), std::move(layout)};
}

// Values from a `key = value` file, split on commas or whitespace; a token
// starting with '#' opens a trailing comment.
std::vector<std::string> config_values(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const std::string& raw : inputs) {
    if (!raw.empty() && raw.front() == '#') break;
    std::string token;
    std::istringstream stream(raw);
    while (std::getline(stream, token, ',')) {
      if (!token.empty()) out.push_back(token);
    }
  }
  return out;
}

long long config_int(const std::vector<std::string>& vals) {
  if (vals.size() != 1) throw std::invalid_argument("expected one integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(vals[0], &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (vals[0].empty() || pos != vals[0].size()) {
    throw std::invalid_argument("not an integer: " + vals[0]);
  }
  return v;
}

double config_double(const std::vector<std::string>& vals) {
  if (vals.size() != 1) throw std::invalid_argument("expected one number");
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(vals[0], &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (vals[0].empty() || pos != vals[0].size()) {
    throw std::invalid_argument("not a number: " + vals[0]);
  }
  return v;
}

std::vector<int> config_ints(const std::vector<std::string>& vals) {
  if (vals.empty()) throw std::invalid_argument("expected integers");
  std::vector<int> out;
  for (const std::string& v : vals) {
    out.push_back(static_cast<int>(config_int({v})));
  }
  return out;
}

std::vector<double> config_doubles(const std::vector<std::string>& vals) {
  if (vals.empty()) throw std::invalid_argument("expected numbers");
  std::vector<double> out;
  for (const std::string& v : vals) out.push_back(config_double({v}));
  return out;
}

// CLI11 only reads config files through the top-level app, so the run
// subcommand applies its file by hand: keys match the long option names,
// command-line flags win over file values, unknown keys are rejected.
int apply_config_file(const std::string& path, const CLI::App& run,
                      RunOptions& opt) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::FileError& e) {
    std::cerr << "run: " << e.what() << "\n";
    return kExitConfigError;
  }
  const auto given = [&run](const char* name) { return run.count(name) > 0; };
  for (const CLI::ConfigItem& item : items) {
    const std::vector<std::string> vals = config_values(item.inputs);
    try {
      if (!item.parents.empty()) {
        throw std::invalid_argument("unknown configuration key");
      } else if (item.name == "registers") {
        if (!given("--registers")) opt.registers = config_ints(vals);
      } else if (item.name == "mode") {
        if (vals.size() != 1 || (vals[0] != "encoded" && vals[0] != "bare")) {
          throw std::invalid_argument("mode must be encoded or bare");
        }
        if (!given("--mode")) opt.mode = vals[0];
      } else if (item.name == "kappa") {
        if (!given("--kappa")) opt.kappas = config_doubles(vals);
      } else if (item.name == "iterations") {
        if (!given("--iterations")) {
          opt.iterations = static_cast<int>(config_int(vals));
        }
      } else if (item.name == "trajectories") {
        if (!given("--trajectories")) {
          opt.trajectories = static_cast<int>(config_int(vals));
        }
      } else if (item.name == "seed") {
        if (!given("--seed")) {
          opt.seed = static_cast<std::uint64_t>(config_int(vals));
        }
      } else if (item.name == "record") {
        if (!given("--record")) opt.record = config_ints(vals);
      } else if (item.name == "workers") {
        if (!given("--workers")) {
          opt.workers = static_cast<int>(config_int(vals));
        }
      } else if (item.name == "kt") {
        if (!given("--kt")) opt.kt = config_double(vals);
      } else if (item.name == "x0") {
        if (!given("--x0")) opt.x0 = config_double(vals);
      } else if (item.name == "p0") {
        if (!given("--p0")) opt.p0 = static_cast<int>(config_int(vals));
      } else if (item.name == "out") {
        if (vals.size() != 1) throw std::invalid_argument("expected one path");
        if (!given("--out")) opt.out_path = vals[0];
      } else {
        throw std::invalid_argument("unknown configuration key");
      }
    } catch (const std::exception& e) {
      std::cerr << "run: config key '" << item.fullname() << "': " << e.what()
                << "\n";
      return kExitConfigError;
    }
  }
  return 0;
}

int cmd_run(const RunOptions& opt) {
  if (opt.kappas.empty()) {
    std::cerr << "run: at least one --kappa value is required\n";
    return kExitConfigError;
  }
  TrajectoryConfig config;
  config.seed = opt.seed;
  config.trajectories = opt.trajectories;
  config.iterations = opt.iterations;
  config.record_points = opt.record;
  config.workers = opt.workers;

  std::optional<Program> program;
  try {
    program.emplace(build_program(opt));
    config.kappa = opt.kappas.front();
    check_config(*program, config);  // reject before any output exists
    for (double kappa : opt.kappas) {
      if (kappa < 0.0) throw std::invalid_argument("kappa < 0");
    }
  } catch (const std::exception& e) {
    std::cerr << "run: " << e.what() << "\n";
    return kExitConfigError;
  }

  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path);
    if (!file) {
      std::cerr << "run: cannot open " << opt.out_path << "\n";
      return kExitConfigError;
    }
  }
  std::ostream& out = opt.out_path.empty() ? std::cout : file;

  const std::string layout_name =
      program->layout ? program->layout->describe() : "none";
  write_csv_header(out);
  for (double kappa : opt.kappas) {
    config.kappa = kappa;
    const EnsembleResult ensemble = run_ensemble(*program, config);
    write_csv_rows(out, ensemble, opt.mode, kappa, layout_name);
    out.flush();
  }
  return 0;
}

int cmd_verify_codes(int n_q, int samples) {
  std::mt19937_64 rng(2026);
  std::normal_distribution<double> gauss;
  const JumpCode code = pairing_code_basis(n_q);

  std::uint64_t binom = 1;
  for (int k = 1; k <= n_q / 2; ++k) {
    binom = binom * (n_q - k + 1) / k;
  }
  std::printf("n_q %d: %zu code words (expected %llu)\n", n_q, code.size(),
              static_cast<unsigned long long>(binom / 2));
  bool ok = code.size() == binom / 2;

  double worst_gram = 0.0;
  for (std::size_t a = 0; a < code.size(); ++a) {
    const StateVector wa = code.codeword(a);
    for (std::size_t b = a; b < code.size(); ++b) {
      const double target = a == b ? 1.0 : 0.0;
      worst_gram =
          std::max(worst_gram, std::abs(overlap(wa, code.codeword(b)) - target));
    }
  }
  std::printf("orthonormality residual %.3e\n", worst_gram);
  ok = ok && worst_gram <= 1e-12;

  // Exact recovery network and the pulse-compiled one.
  double worst_exact = 0.0;
  double worst_pulsed = 0.0;
  for (int alpha = 0; alpha < n_q; ++alpha) {
    const RecoveryCircuit network = recovery_circuit(alpha, n_q);
    const GateSchedule pulses = compile_recovery(alpha, n_q);
    for (int rep = 0; rep < samples; ++rep) {
      StateVector psi(n_q);
      psi[0] = 0.0;  // the constructor yields |0...0>, not the zero vector
      for (std::uint64_t b : code.representatives()) {
        const cxd amp{gauss(rng), gauss(rng)};
        psi[b] += amp;
        psi[code.complement(b)] += amp;
      }
      normalize(psi);
      StateVector hit = psi;
      apply_jump(hit, alpha);
      normalize(hit);
      StateVector pulsed = hit;
      network.apply(hit);
      worst_exact = std::max(worst_exact, 1.0 - std::norm(overlap(psi, hit)));
      for (const Pulse& p : pulses.pulses) {
        apply_pulse(pulsed, p.hamiltonian, p.duration);
      }
      worst_pulsed =
          std::max(worst_pulsed, 1.0 - std::norm(overlap(psi, pulsed)));
    }
  }
  std::printf("worst recovery infidelity: network %.3e, pulses %.3e\n",
              worst_exact, worst_pulsed);
  ok = ok && worst_exact <= 1e-10 && worst_pulsed <= 1e-10;
  std::printf("verify-codes n_q=%d: %s\n", n_q, ok ? "ok" : "FAILED");
  return ok ? 0 : kExitVerifyFailure;
}

int cmd_tentmap_check(int nl_min, int nl_max, double kt) {
  bool ok = true;
  for (int n_L = nl_min; n_L <= nl_max; ++n_L) {
    const TentMapParams params = map_params(n_L, kt);
    const Eigen::MatrixXcd direct = oracle_step(params);
    const std::vector<LogicalGate> gates = circuit_step(params);
    const Eigen::MatrixXcd circuit = logical_unitary(gates, n_L);
    Eigen::Index mr = 0, mc = 0;
    direct.cwiseAbs().maxCoeff(&mr, &mc);
    const cxd phase = circuit(mr, mc) / direct(mr, mc);
    const double dist = (circuit - (phase / std::abs(phase)) * direct).norm();
    const ScheduleStats stats =
        schedule_stats(compile_global_program(gates, RegisterLayout({n_L})));
    std::printf(
        "n_L %d: circuit vs dense step distance %.3e (%zu gates, %zu pulses)\n",
        n_L, dist, stats.gates, stats.pulses);
    ok = ok && dist <= 1e-10;
  }
  std::printf("tentmap-check: %s\n", ok ? "ok" : "FAILED");
  return ok ? 0 : kExitVerifyFailure;
}

int cmd_compile(const std::vector<int>& registers, const std::string& mode,
                double kt, bool list_gates) {
  const int n_L = total_width(registers);
  const TentMapParams params = map_params(n_L, kt);
  const std::vector<LogicalGate> gates = circuit_step(params);
  GateSchedule schedule;
  std::string layout_name = "none";
  if (mode == "bare") {
    schedule = compile_bare_program(gates, n_L);
  } else {
    const RegisterLayout layout(registers);
    schedule = compile_global_program(gates, layout);
    layout_name = layout.describe();
  }
  const ScheduleStats stats = schedule_stats(schedule);
  std::printf("mode %s, layout %s, n_L %d\n", mode.c_str(),
              layout_name.c_str(), n_L);
  std::printf("gates %zu, pulses %zu, hamiltonian terms %zu\n", stats.gates,
              stats.pulses, stats.terms);
  std::printf("iteration duration %.9f (%.6f pi)\n", stats.duration,
              stats.duration / kPi);
  if (list_gates) {
    for (const GateSchedule::Marker& m : schedule.markers) {
      std::printf("  pulse %4zu: %s\n", m.first_pulse, m.label.c_str());
    }
  }
  return 0;
}

int cmd_compile_gate(const std::string& name, int n_L, double angle) {
  std::optional<LogicalGate> gate;
  bool two_qubit = false;
  if (name == "not") {
    gate = LogicalGate::not_gate(0);
  } else if (name == "h" || name == "hadamard") {
    gate = LogicalGate::hadamard(0);
  } else if (name == "p" || name == "phase") {
    gate = LogicalGate::phase(0, angle);
  } else if (name == "cp" || name == "cphase") {
    gate = LogicalGate::cphase(0, 1, angle);
    two_qubit = true;
  } else if (name == "cnot") {
    gate = LogicalGate::cnot(0, 1);
    two_qubit = true;
  } else {
    std::cerr << "compile: unknown gate '" << name
              << "' (not, hadamard, phase, cphase, cnot)\n";
    return kExitConfigError;
  }
  if (two_qubit && n_L < 2) {
    std::cerr << "compile: " << name << " needs --nl at least 2\n";
    return kExitConfigError;
  }
  const GateSchedule schedule = compile_gate(*gate, n_L);
  std::printf("gate %s, register of %d logical (%d physical) qubits\n",
              name.c_str(), n_L, 2 * n_L + 2);
  double total = 0.0;
  for (std::size_t i = 0; i < schedule.pulses.size(); ++i) {
    const Pulse& p = schedule.pulses[i];
    std::printf("  pulse %2zu: %-12s %9.6f pi  (%zu terms)\n", i,
                p.label.c_str(), p.duration / kPi, p.hamiltonian.terms().size());
    total += p.duration;
  }
  std::printf("total duration %.6f pi\n", total / kPi);
  return 0;
}

int cmd_analytic(int n_q, double kappa, int t, double tau_it, double kt) {
  const int n_L = n_q / 2 - 1;
  if (tau_it <= 0.0) {
    const TentMapParams params = map_params(n_L, kt);
    const RegisterLayout layout({n_L});
    tau_it =
        compile_global_program(circuit_step(params), layout).total_duration();
    std::printf("tau_it %.6f (%.4f pi, measured from the compiled circuit)\n",
                tau_it, tau_it / kPi);
  } else {
    std::printf("tau_it %.6f (%.4f pi, supplied)\n", tau_it, tau_it / kPi);
  }
  const double tau_rec = recovery_duration(n_q);
  const RegisterLayout layout({n_L});
  std::printf("tau_rec %.6f (%.4f pi)\n", tau_rec, tau_rec / kPi);
  std::printf("uncorrected fidelity f(%d) = %.6f\n", t,
              analytic_bare_fidelity(n_q, kappa, tau_it, t));
  std::printf("corrected fidelity  f(%d) = %.6f\n", t,
              block_fidelity(layout, kappa, tau_it, t));
  std::printf("mean decays over %d iterations = %.4f\n", t,
              analytic_mean_jumps(n_q, kappa, tau_it, t));
  std::printf("recovery-overlap loss rate = %.6e per unit time\n",
              block_rate(layout, kappa));
  const double bound = cnot_speed_bound(n_L, kappa);
  const double tau_cnot = 7.0 * kPi / 4.0;
  std::printf("controlled-not budget %.4f; tau_cnot %.4f is %s\n", bound,
              tau_cnot, tau_cnot < bound ? "admissible" : "NOT admissible");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for one-error-correcting jump codes driven by "
               "pulsed Hamiltonians, with a quantized tent map workload"};
  app.require_subcommand(1);

  // run ---------------------------------------------------------------
  RunOptions run_opt;
  CLI::App* run = app.add_subcommand(
      "run", "Monte Carlo fidelity curves; CSV on stdout or --out");
  run->add_option("--registers", run_opt.registers,
                  "logical width of each register, e.g. 6 or 1,1")
      ->delimiter(',');
  run->add_option("--mode", run_opt.mode, "encoded or bare")
      ->check(CLI::IsMember({"encoded", "bare"}));
  run->add_option("--kappa", run_opt.kappas, "decay rate(s) per qubit")
      ->delimiter(',');
  run->add_option("--iterations", run_opt.iterations, "map iterations");
  run->add_option("--trajectories", run_opt.trajectories,
                  "trajectories per kappa");
  run->add_option("--seed", run_opt.seed, "ensemble seed");
  run->add_option("--record", run_opt.record,
                  "iterations to record (default: all)")
      ->delimiter(',');
  run->add_option("--workers", run_opt.workers,
                  "worker threads (0: JUMPSIM_WORKERS or hardware)");
  run->add_option("--kt", run_opt.kt, "kick strength times level spacing");
  run->add_option("--x0", run_opt.x0, "initial packet position");
  run->add_option("--p0", run_opt.p0, "initial packet momentum index");
  run->add_option("--out", run_opt.out_path, "CSV output path");
  std::string run_config;
  run->add_option("--config", run_config,
                  "key = value configuration file; keys match the long "
                  "option names, command-line flags win")
      ->check(CLI::ExistingFile);

  // verify-codes ------------------------------------------------------
  int verify_nq = 0;
  int verify_samples = 100;
  CLI::App* verify = app.add_subcommand(
      "verify-codes", "Check code dimensions, orthonormality and recovery");
  verify->add_option("--nq", verify_nq, "physical qubits (default: 4, 6, 8)")
      ->check(CLI::Range(4, 16));
  verify->add_option("--samples", verify_samples,
                     "random code states per decay position");

  // tentmap-check -----------------------------------------------------
  int nl_min = 2;
  int nl_max = 6;
  double check_kt = 1.7;
  int check_nl = 0;
  CLI::App* check = app.add_subcommand(
      "tentmap-check", "Compare the gate decomposition with the dense step");
  check->add_option("--nl-min", nl_min, "smallest n_L")->check(CLI::Range(1, 10));
  check->add_option("--nl-max", nl_max, "largest n_L")->check(CLI::Range(1, 10));
  check->add_option("--nl", check_nl, "check a single n_L")
      ->check(CLI::Range(1, 10));
  check->add_option("--kt", check_kt, "kick strength times level spacing");

  // compile -----------------------------------------------------------
  std::vector<int> compile_registers = {6};
  std::string compile_mode = "encoded";
  double compile_kt = 1.7;
  bool compile_list = false;
  CLI::App* compile = app.add_subcommand(
      "compile", "Report the pulse schedule of one map iteration");
  compile->add_option("--registers", compile_registers, "register widths")
      ->delimiter(',');
  compile->add_option("--mode", compile_mode, "encoded or bare")
      ->check(CLI::IsMember({"encoded", "bare"}));
  compile->add_option("--kt", compile_kt, "kick strength times level spacing");
  compile->add_flag("--gates", compile_list, "list compiled gate markers");
  std::string compile_gate_name;
  int compile_nl = 2;
  double compile_angle = kPi / 2.0;
  compile->add_option("--gate", compile_gate_name,
                      "dump one gate's pulses instead (not, hadamard, "
                      "phase, cphase, cnot)");
  compile->add_option("--nl", compile_nl, "register width for --gate")
      ->check(CLI::Range(1, 10));
  compile->add_option("--angle", compile_angle,
                      "angle for --gate phase/cphase");

  // analytic ----------------------------------------------------------
  int ana_nq = 14;
  double ana_kappa = 0.0;
  int ana_t = 30;
  double ana_tau_it = 0.0;
  double ana_kt = 1.7;
  CLI::App* analytic = app.add_subcommand(
      "analytic", "Evaluate the closed-form fidelity and budget estimates");
  analytic->add_option("--nq", ana_nq, "physical qubits (2 n_L + 2)")
      ->check(CLI::Range(4, 24));
  analytic->add_option("--kappa", ana_kappa, "decay rate per qubit")
      ->required();
  analytic->add_option("--t", ana_t, "map iterations");
  analytic->add_option("--tau-it", ana_tau_it,
                       "iteration duration (default: measure the circuit)");
  analytic->add_option("--kt", ana_kt, "kick strength times level spacing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (run->parsed()) {
      if (!run_config.empty()) {
        const int status = apply_config_file(run_config, *run, run_opt);
        if (status != 0) return status;
      }
      return cmd_run(run_opt);
    }
    if (verify->parsed()) {
      if (verify_nq != 0) return cmd_verify_codes(verify_nq, verify_samples);
      int status = 0;
      for (int n_q : {4, 6, 8}) {
        status = std::max(status, cmd_verify_codes(n_q, verify_samples));
      }
      return status;
    }
    if (check->parsed()) {
      if (check_nl != 0) nl_min = nl_max = check_nl;
      if (nl_min > nl_max) {
        std::cerr << "tentmap-check: --nl-min exceeds --nl-max\n";
        return kExitConfigError;
      }
      return cmd_tentmap_check(nl_min, nl_max, check_kt);
    }
    if (compile->parsed()) {
      if (!compile_gate_name.empty()) {
        return cmd_compile_gate(compile_gate_name, compile_nl, compile_angle);
      }
      return cmd_compile(compile_registers, compile_mode, compile_kt,
                         compile_list);
    }
    if (analytic->parsed()) {
      if (ana_nq % 2 != 0 || ana_nq < 4) {
        std::cerr << "analytic: --nq must be even and at least 4\n";
        return kExitConfigError;
      }
      return cmd_analytic(ana_nq, ana_kappa, ana_t, ana_tau_it, ana_kt);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfigError;
}

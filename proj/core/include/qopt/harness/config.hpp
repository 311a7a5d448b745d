// Copyright 2026 The qopt Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qopt::harness {

/// Configuration problems carry the offending key path in the message.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind {
  kPhaseScaling,
  kGateDesign,
  kBenchmark,
  kRobustness,
  kCompare,
};

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

/// DE / noise-resistant DE settings shared by all experiments.
struct DeSection {
  int population_size = 30;
  double mutation_rate = 0.7;
  double crossover_rate = 0.9;
  std::int64_t max_iterations = 300;
  int init_samples = 2;
  int per_iteration_samples = 1;
  int final_samples = 10;
};

struct PsoSection {
  int population_size = 30;
  double omega = 0.729;
  double c1 = 1.494;
  double c2 = 1.494;
};

struct HillClimbSection {
  double step_sigma = 0.1;
};

struct SussadeSection {
  double f_lower = 0.1;
  double f_upper = 0.9;
  double kappa1 = 0.1;
  double kappa2 = 0.1;
  double switching_rate = 0.3;
  int subspace_size = 0;  // 0 = dimension / 3
};

struct PhaseSection {
  int n_min = 4;
  int n_max = 12;
  double sigma = 0.0;
  double eta = 0.0;        // loss during metric evaluation
  double train_eta = 0.0;  // loss during optimization
  int trials_factor = 10;  // sharpness sample size K = factor * N^2
  int metric_repeats = 10; // sharpness samples averaged for reported V_H
  int accept_reject_from = std::numeric_limits<int>::max();
  int retry_cap = 20;
  double confidence = 0.98;
  std::vector<std::string> optimizers = {"nr-de"};  // compare mode
  bool random_baseline = false;
  int baseline_policies = 20;
};

struct GateSection {
  int n_qubits = 3;
  int steps = 27;
  double dt = 1.0;
  double coupling = 2.0 * std::numbers::pi * 0.05;
  std::vector<double> detunings;  // empty = zeros
  double amplitude_bound = 2.0 * std::numbers::pi * 0.5;
  double filter_sigma = 1.0;
  std::string target = "toffoli";
  double target_fidelity = 0.0;       // 0 = no early stop
  std::int64_t max_evaluations = 0;   // 0 = unlimited
};

struct RobustnessSection {
  std::string pulse_file;
  double delta_eps_min = 0.0;
  double delta_eps_max = 0.3;
  int grid_points = 7;
  int trials = 40;
  bool apply_filter = true;
};

struct BenchmarkSection {
  std::vector<std::string> functions = {"sphere", "rosenbrock", "rastrigin"};
  int dimension = 30;
  std::vector<std::string> optimizers = {"de"};
  std::int64_t max_iterations = 1000;
  int repeats = 1;
};

struct RunConfig {
  ExperimentKind experiment = ExperimentKind::kBenchmark;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string output_dir;

  DeSection de;
  PsoSection pso;
  HillClimbSection hill_climb;
  SussadeSection sussade;
  PhaseSection phase;
  GateSection gate;
  RobustnessSection robustness;
  BenchmarkSection benchmark;

  /// Semantic validation for the selected experiment kind.
  void validate() const;
};

/// Strict parse: unknown keys are rejected with their full key path;
/// missing keys take documented defaults.
RunConfig parse_config(const std::filesystem::path& file);
RunConfig parse_config_text(const std::string& text);

/// Canonical serialization with every effective value filled in;
/// parse(serialize(c)) == c.
std::string serialize_config(const RunConfig& config);

/// FNV-1a hash of the canonical serialization.
std::uint64_t config_hash(const RunConfig& config);

}  // namespace qopt::harness

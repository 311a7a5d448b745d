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

#include "qopt/harness/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qopt::harness {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

void reject_unknown_keys(const json& object, const std::string& path,
                         std::initializer_list<const char*> known) {
  const std::set<std::string> allowed(known.begin(), known.end());
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      throw ConfigError("unknown config key: " +
                        (path.empty() ? item.key() : path + "." + item.key()));
    }
  }
}

template <typename T>
void read_field(const json& object, const std::string& path, const char* key,
                T& value) {
  if (!object.contains(key)) return;
  try {
    value = object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("invalid value for config key: " +
                      (path.empty() ? key : path + "." + key));
  }
}

void parse_de(const json& object, DeSection& de) {
  reject_unknown_keys(object, "de",
                      {"population_size", "mutation_rate", "crossover_rate",
                       "max_iterations", "init_samples",
                       "per_iteration_samples", "final_samples"});
  read_field(object, "de", "population_size", de.population_size);
  read_field(object, "de", "mutation_rate", de.mutation_rate);
  read_field(object, "de", "crossover_rate", de.crossover_rate);
  read_field(object, "de", "max_iterations", de.max_iterations);
  read_field(object, "de", "init_samples", de.init_samples);
  read_field(object, "de", "per_iteration_samples", de.per_iteration_samples);
  read_field(object, "de", "final_samples", de.final_samples);
}

void parse_pso(const json& object, PsoSection& pso) {
  reject_unknown_keys(object, "pso", {"population_size", "omega", "c1", "c2"});
  read_field(object, "pso", "population_size", pso.population_size);
  read_field(object, "pso", "omega", pso.omega);
  read_field(object, "pso", "c1", pso.c1);
  read_field(object, "pso", "c2", pso.c2);
}

void parse_hill_climb(const json& object, HillClimbSection& hc) {
  reject_unknown_keys(object, "hill_climb", {"step_sigma"});
  read_field(object, "hill_climb", "step_sigma", hc.step_sigma);
}

void parse_sussade(const json& object, SussadeSection& s) {
  reject_unknown_keys(object, "sussade",
                      {"f_lower", "f_upper", "kappa1", "kappa2",
                       "switching_rate", "subspace_size"});
  read_field(object, "sussade", "f_lower", s.f_lower);
  read_field(object, "sussade", "f_upper", s.f_upper);
  read_field(object, "sussade", "kappa1", s.kappa1);
  read_field(object, "sussade", "kappa2", s.kappa2);
  read_field(object, "sussade", "switching_rate", s.switching_rate);
  read_field(object, "sussade", "subspace_size", s.subspace_size);
}

void parse_phase(const json& object, PhaseSection& phase) {
  reject_unknown_keys(
      object, "phase",
      {"n_min", "n_max", "sigma", "eta", "train_eta", "trials_factor",
       "metric_repeats", "accept_reject_from", "retry_cap", "confidence",
       "optimizers", "random_baseline", "baseline_policies"});
  read_field(object, "phase", "n_min", phase.n_min);
  read_field(object, "phase", "n_max", phase.n_max);
  read_field(object, "phase", "sigma", phase.sigma);
  read_field(object, "phase", "eta", phase.eta);
  read_field(object, "phase", "train_eta", phase.train_eta);
  read_field(object, "phase", "trials_factor", phase.trials_factor);
  read_field(object, "phase", "metric_repeats", phase.metric_repeats);
  read_field(object, "phase", "accept_reject_from", phase.accept_reject_from);
  read_field(object, "phase", "retry_cap", phase.retry_cap);
  read_field(object, "phase", "confidence", phase.confidence);
  read_field(object, "phase", "optimizers", phase.optimizers);
  read_field(object, "phase", "random_baseline", phase.random_baseline);
  read_field(object, "phase", "baseline_policies", phase.baseline_policies);
}

void parse_gate(const json& object, GateSection& gate) {
  reject_unknown_keys(object, "gate",
                      {"n_qubits", "steps", "dt", "coupling", "detunings",
                       "amplitude_bound", "filter_sigma", "target",
                       "target_fidelity", "max_evaluations"});
  read_field(object, "gate", "n_qubits", gate.n_qubits);
  read_field(object, "gate", "steps", gate.steps);
  read_field(object, "gate", "dt", gate.dt);
  read_field(object, "gate", "coupling", gate.coupling);
  read_field(object, "gate", "detunings", gate.detunings);
  read_field(object, "gate", "amplitude_bound", gate.amplitude_bound);
  read_field(object, "gate", "filter_sigma", gate.filter_sigma);
  read_field(object, "gate", "target", gate.target);
  read_field(object, "gate", "target_fidelity", gate.target_fidelity);
  read_field(object, "gate", "max_evaluations", gate.max_evaluations);
}

void parse_robustness(const json& object, RobustnessSection& r) {
  reject_unknown_keys(object, "robustness",
                      {"pulse_file", "delta_eps_min", "delta_eps_max",
                       "grid_points", "trials", "apply_filter"});
  read_field(object, "robustness", "pulse_file", r.pulse_file);
  read_field(object, "robustness", "delta_eps_min", r.delta_eps_min);
  read_field(object, "robustness", "delta_eps_max", r.delta_eps_max);
  read_field(object, "robustness", "grid_points", r.grid_points);
  read_field(object, "robustness", "trials", r.trials);
  read_field(object, "robustness", "apply_filter", r.apply_filter);
}

void parse_benchmark(const json& object, BenchmarkSection& b) {
  reject_unknown_keys(object, "benchmark",
                      {"functions", "dimension", "optimizers",
                       "max_iterations", "repeats"});
  read_field(object, "benchmark", "functions", b.functions);
  read_field(object, "benchmark", "dimension", b.dimension);
  read_field(object, "benchmark", "optimizers", b.optimizers);
  read_field(object, "benchmark", "max_iterations", b.max_iterations);
  read_field(object, "benchmark", "repeats", b.repeats);
}

json to_json(const RunConfig& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["experiment"] = to_string(c.experiment);
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["output_dir"] = c.output_dir;
  j["de"] = {{"population_size", c.de.population_size},
             {"mutation_rate", c.de.mutation_rate},
             {"crossover_rate", c.de.crossover_rate},
             {"max_iterations", c.de.max_iterations},
             {"init_samples", c.de.init_samples},
             {"per_iteration_samples", c.de.per_iteration_samples},
             {"final_samples", c.de.final_samples}};
  j["pso"] = {{"population_size", c.pso.population_size},
              {"omega", c.pso.omega},
              {"c1", c.pso.c1},
              {"c2", c.pso.c2}};
  j["hill_climb"] = {{"step_sigma", c.hill_climb.step_sigma}};
  j["sussade"] = {{"f_lower", c.sussade.f_lower},
                  {"f_upper", c.sussade.f_upper},
                  {"kappa1", c.sussade.kappa1},
                  {"kappa2", c.sussade.kappa2},
                  {"switching_rate", c.sussade.switching_rate},
                  {"subspace_size", c.sussade.subspace_size}};
  j["phase"] = {{"n_min", c.phase.n_min},
                {"n_max", c.phase.n_max},
                {"sigma", c.phase.sigma},
                {"eta", c.phase.eta},
                {"train_eta", c.phase.train_eta},
                {"trials_factor", c.phase.trials_factor},
                {"metric_repeats", c.phase.metric_repeats},
                {"accept_reject_from", c.phase.accept_reject_from},
                {"retry_cap", c.phase.retry_cap},
                {"confidence", c.phase.confidence},
                {"optimizers", c.phase.optimizers},
                {"random_baseline", c.phase.random_baseline},
                {"baseline_policies", c.phase.baseline_policies}};
  j["gate"] = {{"n_qubits", c.gate.n_qubits},
               {"steps", c.gate.steps},
               {"dt", c.gate.dt},
               {"coupling", c.gate.coupling},
               {"detunings", c.gate.detunings},
               {"amplitude_bound", c.gate.amplitude_bound},
               {"filter_sigma", c.gate.filter_sigma},
               {"target", c.gate.target},
               {"target_fidelity", c.gate.target_fidelity},
               {"max_evaluations", c.gate.max_evaluations}};
  j["robustness"] = {{"pulse_file", c.robustness.pulse_file},
                     {"delta_eps_min", c.robustness.delta_eps_min},
                     {"delta_eps_max", c.robustness.delta_eps_max},
                     {"grid_points", c.robustness.grid_points},
                     {"trials", c.robustness.trials},
                     {"apply_filter", c.robustness.apply_filter}};
  j["benchmark"] = {{"functions", c.benchmark.functions},
                    {"dimension", c.benchmark.dimension},
                    {"optimizers", c.benchmark.optimizers},
                    {"max_iterations", c.benchmark.max_iterations},
                    {"repeats", c.benchmark.repeats}};
  return j;
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kPhaseScaling:
      return "phase-scaling";
    case ExperimentKind::kGateDesign:
      return "gate-design";
    case ExperimentKind::kBenchmark:
      return "benchmark";
    case ExperimentKind::kRobustness:
      return "robustness";
    case ExperimentKind::kCompare:
      return "compare";
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  if (name == "phase-scaling") return ExperimentKind::kPhaseScaling;
  if (name == "gate-design") return ExperimentKind::kGateDesign;
  if (name == "benchmark") return ExperimentKind::kBenchmark;
  if (name == "robustness") return ExperimentKind::kRobustness;
  if (name == "compare") return ExperimentKind::kCompare;
  throw ConfigError("unknown experiment kind: " + name);
}

void RunConfig::validate() const {
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (de.population_size < 4) {
    throw ConfigError("de.population_size must be >= 4");
  }
  if (de.init_samples < 1 || de.per_iteration_samples < 1 ||
      de.final_samples < 1) {
    throw ConfigError("de sample counts must be >= 1");
  }

  switch (experiment) {
    case ExperimentKind::kPhaseScaling:
    case ExperimentKind::kCompare: {
      if (phase.n_min < 1 || phase.n_min > phase.n_max) {
        throw ConfigError("phase.n_min must satisfy 1 <= n_min <= n_max");
      }
      if (phase.sigma < 0.0) throw ConfigError("phase.sigma must be >= 0");
      if (phase.eta < 0.0 || phase.eta >= 1.0) {
        throw ConfigError("phase.eta must lie in [0, 1)");
      }
      if (phase.train_eta < 0.0 || phase.train_eta >= 1.0) {
        throw ConfigError("phase.train_eta must lie in [0, 1)");
      }
      if (phase.trials_factor < 1) {
        throw ConfigError("phase.trials_factor must be >= 1");
      }
      if (phase.metric_repeats < 1) {
        throw ConfigError("phase.metric_repeats must be >= 1");
      }
      if (phase.retry_cap < 1) throw ConfigError("phase.retry_cap must be >= 1");
      if (!(phase.confidence > 0.0 && phase.confidence < 1.0)) {
        throw ConfigError("phase.confidence must lie in (0, 1)");
      }
      if (phase.optimizers.empty()) {
        throw ConfigError("phase.optimizers must not be empty");
      }
      for (const std::string& name : phase.optimizers) {
        if (name != "nr-de" && name != "pso" && name != "hill-climb") {
          throw ConfigError("phase.optimizers: unknown optimizer " + name);
        }
      }
      break;
    }
    case ExperimentKind::kGateDesign: {
      if (gate.n_qubits < 1) throw ConfigError("gate.n_qubits must be >= 1");
      if (gate.steps < 1) throw ConfigError("gate.steps must be >= 1");
      if (gate.dt <= 0.0) throw ConfigError("gate.dt must be > 0");
      if (gate.amplitude_bound <= 0.0) {
        throw ConfigError("gate.amplitude_bound must be > 0");
      }
      if (gate.filter_sigma < 0.0) {
        throw ConfigError("gate.filter_sigma must be >= 0");
      }
      if (gate.target != "toffoli") {
        throw ConfigError("gate.target: only \"toffoli\" is available");
      }
      if (gate.target == "toffoli" && gate.n_qubits != 3) {
        throw ConfigError("gate.target toffoli requires n_qubits = 3");
      }
      break;
    }
    case ExperimentKind::kRobustness: {
      if (robustness.pulse_file.empty()) {
        throw ConfigError("robustness.pulse_file is required");
      }
      if (robustness.grid_points < 1) {
        throw ConfigError("robustness.grid_points must be >= 1");
      }
      if (robustness.trials < 1) {
        throw ConfigError("robustness.trials must be >= 1");
      }
      if (robustness.delta_eps_min < 0.0 ||
          robustness.delta_eps_max < robustness.delta_eps_min) {
        throw ConfigError("robustness delta_eps range is invalid");
      }
      break;
    }
    case ExperimentKind::kBenchmark: {
      if (benchmark.functions.empty()) {
        throw ConfigError("benchmark.functions must not be empty");
      }
      if (benchmark.dimension < 1) {
        throw ConfigError("benchmark.dimension must be >= 1");
      }
      if (benchmark.repeats < 1) {
        throw ConfigError("benchmark.repeats must be >= 1");
      }
      for (const std::string& name : benchmark.optimizers) {
        if (name != "de" && name != "sussade" && name != "pso" &&
            name != "hill-climb") {
          throw ConfigError("benchmark.optimizers: unknown optimizer " + name);
        }
      }
      break;
    }
  }
}

RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  reject_unknown_keys(j, "",
                      {"schema_version", "experiment", "seed", "threads",
                       "output_dir", "de", "pso", "hill_climb", "sussade",
                       "phase", "gate", "robustness", "benchmark"});

  int schema_version = kSchemaVersion;
  read_field(j, "", "schema_version", schema_version);
  if (schema_version != kSchemaVersion) {
    throw ConfigError("unsupported schema_version (expected 1)");
  }
  if (!j.contains("experiment")) {
    throw ConfigError("missing required config key: experiment");
  }

  RunConfig config;
  std::string kind;
  read_field(j, "", "experiment", kind);
  config.experiment = experiment_kind_from_string(kind);
  read_field(j, "", "seed", config.seed);
  read_field(j, "", "threads", config.threads);
  read_field(j, "", "output_dir", config.output_dir);

  if (j.contains("de")) parse_de(j.at("de"), config.de);
  if (j.contains("pso")) parse_pso(j.at("pso"), config.pso);
  if (j.contains("hill_climb")) {
    parse_hill_climb(j.at("hill_climb"), config.hill_climb);
  }
  if (j.contains("sussade")) parse_sussade(j.at("sussade"), config.sussade);
  if (j.contains("phase")) parse_phase(j.at("phase"), config.phase);
  if (j.contains("gate")) parse_gate(j.at("gate"), config.gate);
  if (j.contains("robustness")) {
    parse_robustness(j.at("robustness"), config.robustness);
  }
  if (j.contains("benchmark")) {
    parse_benchmark(j.at("benchmark"), config.benchmark);
  }

  config.validate();
  return config;
}

RunConfig parse_config(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw ConfigError("cannot open config file: " + file.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
  return to_json(config).dump(2) + "\n";
}

std::uint64_t config_hash(const RunConfig& config) {
  const std::string text = serialize_config(config);
  std::uint64_t hash = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace qopt::harness

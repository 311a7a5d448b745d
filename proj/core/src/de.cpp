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

#include "qopt/de.hpp"

#include <stdexcept>

#include "de_engine.hpp"

namespace qopt {

Population de_init(const DeConfig& config, const Bounds& bounds,
                   RngStream& rng) {
  config.validate();
  bounds.validate();

  const std::size_t dim = bounds.dimension();
  Population population(static_cast<std::size_t>(config.population_size));
  for (Candidate& candidate : population) {
    candidate.position.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      // uniform() is on (0,1]; flip so periodic dimensions stay in
      // [lower, upper).
      const double u = 1.0 - rng.uniform();
      candidate.position[j] =
          bounds.lower[j] + u * (bounds.upper[j] - bounds.lower[j]);
    }
  }
  return population;
}

std::vector<double> de_donor(const Candidate& target, const Candidate& v1,
                             const Candidate& v2, const Candidate& v3,
                             const DonorSpec& spec, const Bounds& bounds,
                             RngStream& rng) {
  if (&v1 == &v2 || &v1 == &v3 || &v2 == &v3 || &v1 == &target ||
      &v2 == &target || &v3 == &target) {
    throw std::invalid_argument("de_donor: partners must be distinct");
  }
  const std::size_t dim = bounds.dimension();
  if (target.position.size() != dim || v1.position.size() != dim ||
      v2.position.size() != dim || v3.position.size() != dim) {
    throw std::invalid_argument("de_donor: dimension mismatch");
  }

  std::vector<double> donor = target.position;
  auto mutate_at = [&](std::size_t j) {
    const double r = rng.uniform();
    if (r <= spec.crossover_rate ||
        (spec.forced_coordinate && *spec.forced_coordinate == j)) {
      donor[j] = bounds.confine(
          v1.position[j] +
              spec.mutation_rate * (v2.position[j] - v3.position[j]),
          j);
    }
  };

  if (spec.active.empty()) {
    for (std::size_t j = 0; j < dim; ++j) mutate_at(j);
  } else {
    for (std::size_t j : spec.active) mutate_at(j);
  }
  return donor;
}

std::vector<double> de_donor(const Candidate& target, const Candidate& v1,
                             const Candidate& v2, const Candidate& v3,
                             double mutation_rate, double crossover_rate,
                             RngStream& rng, const Bounds& bounds) {
  DonorSpec spec;
  spec.mutation_rate = mutation_rate;
  spec.crossover_rate = crossover_rate;
  return de_donor(target, v1, v2, v3, spec, bounds, rng);
}

const Candidate& de_select(const Candidate& parent, const Candidate& child,
                           bool maximize) {
  if (!parent.evaluated() || !child.evaluated()) {
    throw std::invalid_argument("de_select: both candidates must be evaluated");
  }
  return fitness_better(child.mean_fitness, parent.mean_fitness, maximize)
             ? child
             : parent;
}

RunResult de_run(const Objective& objective, const DeConfig& config,
                 const Bounds& bounds) {
  return de_run(objective, config, bounds,
                TerminationRule::fixed_iterations(config.max_iterations));
}

RunResult de_run(const Objective& objective, const DeConfig& config,
                 const Bounds& bounds, const TerminationRule& termination) {
  if (!objective.deterministic) {
    throw std::invalid_argument(
        "de_run requires a deterministic objective; use nr_de_run for noisy "
        "fitness");
  }
  detail::EnginePlan plan;
  plan.objective = &objective;
  plan.bounds = &bounds;
  plan.de = config;
  plan.termination = termination;
  return detail::run_de_engine(plan);
}

}  // namespace qopt

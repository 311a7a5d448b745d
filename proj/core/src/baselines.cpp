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

#include "qopt/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "de_engine.hpp"
#include "qopt/nr_de.hpp"
#include "qopt/parallel.hpp"

namespace qopt {

void HillClimbConfig::validate() const {
  if (step_sigma < 0.0) {
    throw std::invalid_argument("hill climb step_sigma must be >= 0");
  }
  if (max_iterations < 0) {
    throw std::invalid_argument("max_iterations must be >= 0");
  }
}

void PsoConfig::validate() const {
  if (population_size < 1) {
    throw std::invalid_argument("pso population_size must be >= 1");
  }
  if (max_iterations < 0) {
    throw std::invalid_argument("max_iterations must be >= 0");
  }
}

RunResult hill_climb_run(const Objective& objective,
                         const HillClimbConfig& config, const Bounds& bounds) {
  return hill_climb_run(objective, config, bounds,
                        TerminationRule::fixed_iterations(
                            config.max_iterations));
}

RunResult hill_climb_run(const Objective& objective,
                         const HillClimbConfig& config, const Bounds& bounds,
                         const TerminationRule& termination) {
  config.validate();
  bounds.validate();
  if (objective.dimension != bounds.dimension()) {
    throw std::invalid_argument(
        "objective dimension does not match bounds dimension");
  }

  const std::size_t dim = objective.dimension;
  const RngStream root(config.seed);
  RngStream algo = root.child({detail::kTagAlgo});

  RunResult result;
  std::int64_t evaluations = 0;

  Candidate current;
  {
    RngStream init = root.child({detail::kTagInit});
    current.position.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const double u = 1.0 - init.uniform();
      current.position[j] =
          bounds.lower[j] + u * (bounds.upper[j] - bounds.lower[j]);
    }
    RngStream eval = root.child({detail::kTagEval, 0, 0});
    nr_update_mean_inplace(current, objective(current.position, eval));
    ++evaluations;
  }
  result.history.push_back({0, evaluations, current.mean_fitness});

  const std::int64_t max_iterations =
      std::min(config.max_iterations, termination.max_iterations);

  Candidate proposal;
  for (std::int64_t g = 1; g <= max_iterations; ++g) {
    if (termination.max_evaluations &&
        evaluations + 1 > *termination.max_evaluations) {
      break;
    }
    if (termination.target_fitness &&
        (current.mean_fitness == *termination.target_fitness ||
         fitness_better(current.mean_fitness, *termination.target_fitness,
                        config.maximize))) {
      break;
    }

    proposal.position = current.position;
    for (std::size_t j = 0; j < dim; ++j) {
      proposal.position[j] = bounds.confine(
          proposal.position[j] + algo.gaussian(0.0, config.step_sigma), j);
    }
    proposal.mean_fitness = std::numeric_limits<double>::quiet_NaN();
    proposal.sample_count = 0;

    RngStream eval = root.child(
        {detail::kTagEval, static_cast<std::uint64_t>(g), 0});
    nr_update_mean_inplace(proposal, objective(proposal.position, eval));
    ++evaluations;

    if (fitness_better(proposal.mean_fitness, current.mean_fitness,
                       config.maximize)) {
      current = proposal;
    }
    result.history.push_back({g, evaluations, current.mean_fitness});
  }

  result.best = current;
  result.evaluations = evaluations;
  result.population.push_back(std::move(current));
  return result;
}

RunResult pso_run(const Objective& objective, const PsoConfig& config,
                  const Bounds& bounds) {
  return pso_run(objective, config, bounds,
                 TerminationRule::fixed_iterations(config.max_iterations));
}

RunResult pso_run(const Objective& objective, const PsoConfig& config,
                  const Bounds& bounds, const TerminationRule& termination) {
  config.validate();
  bounds.validate();
  if (objective.dimension != bounds.dimension()) {
    throw std::invalid_argument(
        "objective dimension does not match bounds dimension");
  }

  const std::size_t np = static_cast<std::size_t>(config.population_size);
  const std::size_t dim = objective.dimension;
  const int threads = resolve_thread_count(config.threads);

  const RngStream root(config.seed);
  RngStream algo = root.child({detail::kTagAlgo});

  RunResult result;
  std::int64_t evaluations = 0;

  std::vector<std::vector<double>> positions(np);
  std::vector<std::vector<double>> velocities(np,
                                              std::vector<double>(dim, 0.0));
  std::vector<double> fitness(np);

  {
    RngStream init = root.child({detail::kTagInit});
    for (std::size_t i = 0; i < np; ++i) {
      positions[i].resize(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const double u = 1.0 - init.uniform();
        positions[i][j] =
            bounds.lower[j] + u * (bounds.upper[j] - bounds.lower[j]);
      }
    }
  }

  auto evaluate_all = [&](std::int64_t iteration) {
    parallel_for(np, threads, [&](std::size_t i) {
      RngStream stream =
          root.child({detail::kTagEval, static_cast<std::uint64_t>(iteration),
                      static_cast<std::uint64_t>(i)});
      fitness[i] = objective(positions[i], stream);
    });
    evaluations += static_cast<std::int64_t>(np);
  };

  evaluate_all(0);

  std::vector<std::vector<double>> best_positions = positions;
  std::vector<double> best_fitness = fitness;
  std::size_t global_best = 0;
  for (std::size_t i = 1; i < np; ++i) {
    if (fitness_better(best_fitness[i], best_fitness[global_best],
                       config.maximize)) {
      global_best = i;
    }
  }

  result.history.push_back({0, evaluations, best_fitness[global_best]});

  const std::int64_t max_iterations =
      std::min(config.max_iterations, termination.max_iterations);

  for (std::int64_t g = 1; g <= max_iterations; ++g) {
    if (termination.max_evaluations &&
        evaluations + static_cast<std::int64_t>(np) >
            *termination.max_evaluations) {
      break;
    }
    if (termination.target_fitness &&
        (best_fitness[global_best] == *termination.target_fitness ||
         fitness_better(best_fitness[global_best],
                        *termination.target_fitness, config.maximize))) {
      break;
    }

    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const double r1 = algo.uniform();
        const double r2 = algo.uniform();
        velocities[i][j] =
            config.omega * velocities[i][j] +
            config.c1 * r1 * (best_positions[i][j] - positions[i][j]) +
            config.c2 * r2 *
                (best_positions[global_best][j] - positions[i][j]);
        positions[i][j] = bounds.confine(positions[i][j] + velocities[i][j], j);
      }
    }

    evaluate_all(g);

    for (std::size_t i = 0; i < np; ++i) {
      if (fitness_better(fitness[i], best_fitness[i], config.maximize)) {
        best_fitness[i] = fitness[i];
        best_positions[i] = positions[i];
      }
    }
    for (std::size_t i = 0; i < np; ++i) {
      if (fitness_better(best_fitness[i], best_fitness[global_best],
                         config.maximize)) {
        global_best = i;
      }
    }

    result.history.push_back({g, evaluations, best_fitness[global_best]});
  }

  result.best.position = best_positions[global_best];
  result.best.mean_fitness = best_fitness[global_best];
  result.best.sample_count = 1;
  result.evaluations = evaluations;
  return result;
}

}  // namespace qopt

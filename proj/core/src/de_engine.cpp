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

#include "de_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "qopt/de.hpp"
#include "qopt/nr_de.hpp"
#include "qopt/parallel.hpp"

namespace qopt::detail {

namespace {

std::size_t best_index(const Population& population, bool maximize) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (fitness_better(population[i].mean_fitness,
                       population[best].mean_fitness, maximize)) {
      best = i;
    }
  }
  return best;
}

}  // namespace

RunResult run_de_engine(const EnginePlan& plan) {
  const Objective& objective = *plan.objective;
  const Bounds& bounds = *plan.bounds;
  const DeConfig& de = plan.de;

  de.validate();
  bounds.validate();
  if (objective.dimension != bounds.dimension()) {
    throw std::invalid_argument(
        "objective dimension does not match bounds dimension");
  }

  const std::size_t np = static_cast<std::size_t>(de.population_size);
  const std::size_t dim = objective.dimension;
  const int threads = resolve_thread_count(de.threads);

  const RngStream root(de.seed);
  RngStream algo = root.child({kTagAlgo});

  RunResult result;
  std::int64_t evaluations = 0;

  // Evaluates `samples` fitness draws for each listed candidate, each from
  // its own (tag, iteration, index) substream. Slots are disjoint, so the
  // wave is a deterministic parallel map.
  auto evaluate_wave = [&](Population& candidates, std::uint64_t tag,
                           std::int64_t iteration, int samples) {
    if (samples <= 0) return;
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
      RngStream stream =
          root.child({tag, static_cast<std::uint64_t>(iteration),
                      static_cast<std::uint64_t>(i)});
      for (int k = 0; k < samples; ++k) {
        nr_update_mean_inplace(candidates[i],
                               objective(candidates[i].position, stream));
      }
    });
    evaluations +=
        static_cast<std::int64_t>(candidates.size()) * samples;
  };

  // Step 1 + 2: random population, initial samples.
  RngStream init_stream = root.child({kTagInit});
  Population population = de_init(de, bounds, init_stream);
  evaluate_wave(population, kTagEval, 0, plan.init_samples);

  std::vector<std::int64_t> birth(np, 0);

  auto record = [&](std::int64_t iteration) {
    const std::size_t b = best_index(population, de.maximize);
    result.history.push_back(
        {iteration, evaluations, population[b].mean_fitness});
  };
  record(0);

  auto target_reached = [&]() {
    if (!plan.termination.target_fitness) return false;
    const double best = result.history.back().best_fitness;
    return best == *plan.termination.target_fitness ||
           fitness_better(best, *plan.termination.target_fitness, de.maximize);
  };

  SussadeState rates;
  if (plan.sussade != nullptr) {
    const SussadeConfig& sc = *plan.sussade;
    rates.f = std::clamp(de.mutation_rate, sc.f_lower, sc.f_lower + sc.f_upper);
    rates.cr = std::clamp(de.crossover_rate, 1e-12, 1.0);
  } else {
    rates.f = de.mutation_rate;
    rates.cr = de.crossover_rate;
  }

  const std::int64_t per_iteration_cost =
      static_cast<std::int64_t>(np) *
      (plan.donor_samples + plan.refine_samples);

  Population donors(np);
  std::vector<std::size_t> active;

  const std::int64_t max_iterations =
      std::min(de.max_iterations, plan.termination.max_iterations);

  for (std::int64_t g = 1; g <= max_iterations; ++g) {
    if (target_reached()) break;
    if (plan.termination.max_evaluations &&
        evaluations + per_iteration_cost > *plan.termination.max_evaluations) {
      break;
    }

    active.clear();
    if (plan.sussade != nullptr) {
      rates = adapt_rates(rates, *plan.sussade, algo);
      active = select_subspace(dim, *plan.sussade, algo);
      if (active.size() == dim) active.clear();  // full space
    }
    result.rate_history.emplace_back(rates.f, rates.cr);

    // Step 3: donors, drawn single-threaded in candidate order.
    for (std::size_t i = 0; i < np; ++i) {
      std::size_t r1, r2, r3;
      do {
        r1 = algo.below(np);
      } while (r1 == i);
      do {
        r2 = algo.below(np);
      } while (r2 == i || r2 == r1);
      do {
        r3 = algo.below(np);
      } while (r3 == i || r3 == r2 || r3 == r1);

      DonorSpec spec;
      spec.mutation_rate = rates.f;
      spec.crossover_rate = rates.cr;
      spec.active = active;
      spec.forced_coordinate = active.empty()
                                   ? algo.below(dim)
                                   : active[algo.below(active.size())];

      donors[i].position = de_donor(population[i], population[r1],
                                    population[r2], population[r3], spec,
                                    bounds, algo);
      donors[i].mean_fitness = std::numeric_limits<double>::quiet_NaN();
      donors[i].sample_count = 0;
    }

    // Step 4: evaluate donors.
    evaluate_wave(donors, kTagEval, g, plan.donor_samples);

    // Step 5: mean-based selection; an accepted child keeps only its own
    // statistics.
    for (std::size_t i = 0; i < np; ++i) {
      if (&de_select(population[i], donors[i], de.maximize) == &donors[i]) {
        population[i] = std::move(donors[i]);
        donors[i] = Candidate{};
        birth[i] = g;
      }
    }

    // Step 6: refine every current member.
    evaluate_wave(population, kTagRefine, g, plan.refine_samples);

    record(g);
  }

  // Step 8: final resampling before committing to a winner.
  evaluate_wave(population, kTagFinal, 0, plan.final_samples);

  const std::size_t winner = best_index(population, de.maximize);
  result.best = population[winner];
  result.evaluations = evaluations;
  result.population = std::move(population);
  result.birth_iteration = std::move(birth);
  return result;
}

}  // namespace qopt::detail

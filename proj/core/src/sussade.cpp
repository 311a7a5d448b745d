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

#include "qopt/sussade.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "de_engine.hpp"

namespace qopt {

std::size_t SussadeConfig::effective_subspace_size(
    std::size_t dimension) const {
  if (subspace_size > 0) return subspace_size;
  return std::max<std::size_t>(1, dimension / 3);
}

void SussadeConfig::validate(std::size_t dimension) const {
  base.validate();
  if (!(f_lower > 0.0) || !(f_upper > 0.0)) {
    throw std::invalid_argument("sussade: f_lower and f_upper must be > 0");
  }
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(kappa1) || !in_unit(kappa2) || !in_unit(switching_rate)) {
    throw std::invalid_argument(
        "sussade: kappa1, kappa2, switching_rate must lie in [0, 1]");
  }
  if (effective_subspace_size(dimension) >= dimension) {
    throw std::invalid_argument(
        "sussade: subspace_size must be smaller than the dimension");
  }
  if (!(base.crossover_rate > 0.0)) {
    throw std::invalid_argument(
        "sussade: initial crossover rate must be positive");
  }
}

SussadeState apply_rate_update(const SussadeState& state,
                               const SussadeConfig& config, double r1,
                               double r2, double r3, double r4) {
  SussadeState next = state;
  if (r2 < config.kappa1) next.f = config.f_lower + r1 * config.f_upper;
  if (r4 < config.kappa2) next.cr = r3;
  next.iteration = state.iteration + 1;
  return next;
}

SussadeState adapt_rates(const SussadeState& state, const SussadeConfig& config,
                         RngStream& rng) {
  // All four draws happen every iteration, keeping the stream aligned
  // regardless of which branches fire.
  const double r1 = rng.uniform();
  const double r2 = rng.uniform();
  const double r3 = rng.uniform();
  const double r4 = rng.uniform();
  return apply_rate_update(state, config, r1, r2, r3, r4);
}

std::vector<std::size_t> select_subspace(std::size_t dimension,
                                         const SussadeConfig& config,
                                         RngStream& rng) {
  std::vector<std::size_t> indices(dimension);
  std::iota(indices.begin(), indices.end(), std::size_t{0});

  // Switch draw on [0, 1) so switching_rate = 1 always selects the full
  // space and 0 never does.
  const double r = 1.0 - rng.uniform();
  if (r < config.switching_rate) return indices;  // full space

  const std::size_t size = config.effective_subspace_size(dimension);
  // Partial Fisher-Yates: the first `size` slots become a uniform subset.
  for (std::size_t k = 0; k < size; ++k) {
    const std::size_t pick = k + rng.below(dimension - k);
    std::swap(indices[k], indices[pick]);
  }
  indices.resize(size);
  std::sort(indices.begin(), indices.end());
  return indices;
}

RunResult sussade_run(const Objective& objective, const SussadeConfig& config,
                      const Bounds& bounds) {
  return sussade_run(objective, config, bounds,
                     TerminationRule::fixed_iterations(
                         config.base.max_iterations));
}

RunResult sussade_run(const Objective& objective, const SussadeConfig& config,
                      const Bounds& bounds, const TerminationRule& termination) {
  config.validate(objective.dimension);
  detail::EnginePlan plan;
  plan.objective = &objective;
  plan.bounds = &bounds;
  plan.de = config.base;
  plan.sussade = &config;
  plan.termination = termination;
  if (!objective.deterministic) {
    // Stochastic objectives run on the noise-resistant sampling plan.
    plan.init_samples = 2;
    plan.donor_samples = 2;
    plan.refine_samples = 1;
    plan.final_samples = 10;
  }
  return detail::run_de_engine(plan);
}

}  // namespace qopt

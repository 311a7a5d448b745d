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

#include "qopt/nr_de.hpp"

#include <cmath>
#include <stdexcept>

#include "de_engine.hpp"

namespace qopt {

void NrDeConfig::validate() const {
  base.validate();
  if (init_samples < 1 || per_iteration_samples < 1 || final_samples < 1) {
    throw std::invalid_argument("nr-de sample counts must be >= 1");
  }
}

void nr_update_mean_inplace(Candidate& candidate, double new_sample) {
  if (!std::isfinite(new_sample)) {
    throw std::domain_error("fitness sample is not finite");
  }
  if (candidate.sample_count == 0) {
    candidate.mean_fitness = new_sample;
    candidate.sample_count = 1;
    return;
  }
  const double count = static_cast<double>(candidate.sample_count);
  candidate.mean_fitness =
      (candidate.mean_fitness * count + new_sample) / (count + 1.0);
  candidate.sample_count += 1;
}

Candidate nr_update_mean(Candidate candidate, double new_sample) {
  nr_update_mean_inplace(candidate, new_sample);
  return candidate;
}

RunResult nr_de_run(const Objective& objective, const NrDeConfig& config,
                    const Bounds& bounds, const TerminationRule& termination) {
  config.validate();
  detail::EnginePlan plan;
  plan.objective = &objective;
  plan.bounds = &bounds;
  plan.de = config.base;
  plan.init_samples = config.init_samples;
  plan.donor_samples = config.init_samples;
  plan.refine_samples = config.per_iteration_samples;
  plan.final_samples = config.final_samples;
  plan.termination = termination;
  return detail::run_de_engine(plan);
}

}  // namespace qopt

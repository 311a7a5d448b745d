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

#include "qopt/types.hpp"

namespace qopt {

/// Sampling plan for noise-resistant DE. New candidates (initial members
/// and donors alike) are evaluated init_samples times; every surviving
/// member receives per_iteration_samples extra evaluations each iteration,
/// so sample counts grow with survival age; final_samples more are drawn
/// for the whole population before the winner is picked.
struct NrDeConfig {
  DeConfig base;
  int init_samples = 2;
  int per_iteration_samples = 1;
  int final_samples = 10;

  void validate() const;
};

/// Folds one more fitness sample into the candidate's running mean.
/// Throws std::domain_error on a non-finite sample.
void nr_update_mean_inplace(Candidate& candidate, double new_sample);
Candidate nr_update_mean(Candidate candidate, double new_sample);

/// Noise-resistant differential evolution: selection on running-mean
/// fitness with resampling of survivors. An accepted child replaces the
/// parent's statistics entirely. Works for stochastic objectives; on a
/// deterministic objective it finds the same best position as de_run with
/// the same config and seed.
RunResult nr_de_run(const Objective& objective, const NrDeConfig& config,
                    const Bounds& bounds, const TerminationRule& termination);

}  // namespace qopt

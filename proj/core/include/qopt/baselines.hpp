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

/// Stochastic hill climbing: a single walker proposing isotropic Gaussian
/// steps, accepting only strict improvement of the latest fitness sample.
struct HillClimbConfig {
  double step_sigma = 0.1;  // proposal std-dev, search-space units
  bool maximize = false;
  std::int64_t max_iterations = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

RunResult hill_climb_run(const Objective& objective,
                         const HillClimbConfig& config, const Bounds& bounds);
RunResult hill_climb_run(const Objective& objective,
                         const HillClimbConfig& config, const Bounds& bounds,
                         const TerminationRule& termination);

/// Global-best particle swarm. Velocities start at zero; constriction
/// defaults omega = 0.729, c1 = c2 = 1.494.
struct PsoConfig {
  int population_size = 30;
  double omega = 0.729;
  double c1 = 1.494;
  double c2 = 1.494;
  bool maximize = false;
  std::int64_t max_iterations = 1000;
  std::uint64_t seed = 0;
  int threads = 0;

  void validate() const;
};

RunResult pso_run(const Objective& objective, const PsoConfig& config,
                  const Bounds& bounds);
RunResult pso_run(const Objective& objective, const PsoConfig& config,
                  const Bounds& bounds, const TerminationRule& termination);

}  // namespace qopt

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

/// Subspace-Selective Self-Adaptive DE parameters. The mutation rate is
/// redrawn on [f_lower, f_lower + f_upper] with probability kappa1 per
/// iteration, the crossover rate on (0, 1] with probability kappa2. Each
/// iteration searches the full space with probability switching_rate,
/// otherwise a random subspace of subspace_size coordinates.
struct SussadeConfig {
  double f_lower = 0.1;       // F_l
  double f_upper = 0.9;       // F_u
  double kappa1 = 0.1;
  double kappa2 = 0.1;
  double switching_rate = 0.3;  // probability of a full-space iteration
  std::size_t subspace_size = 0;  // 0 = dimension / 3, at least 1
  DeConfig base;

  std::size_t effective_subspace_size(std::size_t dimension) const;
  void validate(std::size_t dimension) const;
};

/// Per-iteration adaptive state. f stays in [f_lower, f_lower + f_upper],
/// cr in (0, 1].
struct SussadeState {
  double f = 0.1;
  double cr = 0.9;
  std::int64_t iteration = 0;
};

/// Pure form of the rate update given the four uniform draws r1..r4 on
/// (0,1]: f' = f_lower + r1 * f_upper if r2 < kappa1, cr' = r3 if
/// r4 < kappa2.
SussadeState apply_rate_update(const SussadeState& state,
                               const SussadeConfig& config, double r1,
                               double r2, double r3, double r4);

/// Draws r1..r4 from the stream (always all four) and applies the update.
SussadeState adapt_rates(const SussadeState& state, const SussadeConfig& config,
                         RngStream& rng);

/// Active coordinate set for one iteration: all of 0..dimension-1 when the
/// switch draw r < switching_rate, otherwise a uniformly random subset of
/// subspace_size indices (ascending order).
std::vector<std::size_t> select_subspace(std::size_t dimension,
                                         const SussadeConfig& config,
                                         RngStream& rng);

/// SuSSADE run. Deterministic objectives use plain one-sample selection;
/// stochastic objectives are layered on the noise-resistant sampling plan
/// (2 samples per new candidate, 1 refinement per survivor per iteration,
/// 10 final samples).
RunResult sussade_run(const Objective& objective, const SussadeConfig& config,
                      const Bounds& bounds);
RunResult sussade_run(const Objective& objective, const SussadeConfig& config,
                      const Bounds& bounds, const TerminationRule& termination);

}  // namespace qopt

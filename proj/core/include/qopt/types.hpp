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
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "qopt/rng.hpp"

namespace qopt {

/// Box constraints with per-dimension boundary handling: periodic
/// dimensions wrap into [lower, upper), the rest clamp.
struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<bool> periodic;

  static Bounds cube(std::size_t dimension, double lo, double hi,
                     bool wrap = false);

  std::size_t dimension() const { return lower.size(); }

  /// Throws std::invalid_argument on inconsistent sizes or lower >= upper.
  void validate() const;

  /// Maps a raw coordinate back into the box for dimension j.
  double confine(double x, std::size_t j) const;

  bool contains(std::span<const double> position) const;
};

/// A search point with running-mean fitness. sample_count == 0 means the
/// candidate has not been evaluated; mean_fitness is NaN in that state.
struct Candidate {
  std::vector<double> position;
  double mean_fitness = std::numeric_limits<double>::quiet_NaN();
  std::int64_t sample_count = 0;

  bool evaluated() const { return sample_count > 0; }
};

using Population = std::vector<Candidate>;

/// Parameters shared by the differential-evolution family.
struct DeConfig {
  int population_size = 30;          // N_P
  double mutation_rate = 0.7;        // F
  double crossover_rate = 0.9;       // C_r
  bool maximize = false;
  std::int64_t max_iterations = 1000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = QOPT_THREADS env or hardware concurrency

  void validate() const;
};

/// A fitness oracle. `sample` must be a pure function of (position, stream
/// state): it may not read mutable shared state, so identical inputs give
/// identical samples. Deterministic objectives additionally ignore the
/// stream.
struct Objective {
  std::size_t dimension = 0;
  bool deterministic = false;
  std::function<double(std::span<const double>, RngStream&)> sample;

  double operator()(std::span<const double> position, RngStream& rng) const {
    return sample(position, rng);
  }
};

/// Stops an optimizer run: hard iteration cap, optional fitness target
/// (interpreted with the run's orientation), optional evaluation budget.
struct TerminationRule {
  std::int64_t max_iterations = 1000;
  std::optional<double> target_fitness;
  std::optional<std::int64_t> max_evaluations;

  static TerminationRule fixed_iterations(std::int64_t iterations) {
    TerminationRule rule;
    rule.max_iterations = iterations;
    return rule;
  }
};

struct IterationStat {
  std::int64_t iteration = 0;
  std::int64_t evaluations = 0;
  double best_fitness = 0.0;
};

/// Outcome of an optimizer run. `history` records best fitness after each
/// iteration (index 0 = initial population). Population-based runs also
/// return the final population with per-member diagnostics.
struct RunResult {
  Candidate best;
  std::vector<IterationStat> history;
  std::int64_t evaluations = 0;
  Population population;
  std::vector<std::int64_t> birth_iteration;  // iteration each member entered
  std::vector<std::pair<double, double>> rate_history;  // (F, Cr) per iteration
};

inline bool fitness_better(double lhs, double rhs, bool maximize) {
  return maximize ? lhs > rhs : lhs < rhs;
}

}  // namespace qopt

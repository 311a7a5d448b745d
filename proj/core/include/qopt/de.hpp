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

#include <optional>

#include "qopt/types.hpp"

namespace qopt {

/// Donor construction parameters. `active` restricts mutation to a subset
/// of coordinates (inactive ones copy the target); empty means all.
/// `forced_coordinate`, when set, takes the mutated value regardless of
/// the crossover draw, guaranteeing the donor differs from the target.
struct DonorSpec {
  double mutation_rate = 0.7;
  double crossover_rate = 0.9;
  std::span<const std::size_t> active{};
  std::optional<std::size_t> forced_coordinate{};
};

/// Uniformly random population of config.population_size candidates inside
/// the bounds, all unevaluated.
Population de_init(const DeConfig& config, const Bounds& bounds,
                   RngStream& rng);

/// Binomial-crossover donor: per coordinate j, takes
/// v1[j] + F * (v2[j] - v3[j]) when the crossover draw r (uniform on
/// (0,1]) satisfies r <= Cr, otherwise keeps target[j]. Mutated
/// coordinates are wrapped (periodic) or clamped back into bounds.
/// The three partners must be distinct objects, distinct from the target.
std::vector<double> de_donor(const Candidate& target, const Candidate& v1,
                             const Candidate& v2, const Candidate& v3,
                             const DonorSpec& spec, const Bounds& bounds,
                             RngStream& rng);

std::vector<double> de_donor(const Candidate& target, const Candidate& v1,
                             const Candidate& v2, const Candidate& v3,
                             double mutation_rate, double crossover_rate,
                             RngStream& rng, const Bounds& bounds);

/// Survivor selection: the child wins only if strictly better; ties keep
/// the parent. Both candidates must have been evaluated.
const Candidate& de_select(const Candidate& parent, const Candidate& child,
                           bool maximize);

/// Plain differential evolution for deterministic objectives (one fitness
/// sample per candidate, elitist selection). Best-so-far history is
/// monotone.
RunResult de_run(const Objective& objective, const DeConfig& config,
                 const Bounds& bounds);
RunResult de_run(const Objective& objective, const DeConfig& config,
                 const Bounds& bounds, const TerminationRule& termination);

}  // namespace qopt

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

#include "qopt/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qopt {

Bounds Bounds::cube(std::size_t dimension, double lo, double hi, bool wrap) {
  Bounds bounds;
  bounds.lower.assign(dimension, lo);
  bounds.upper.assign(dimension, hi);
  bounds.periodic.assign(dimension, wrap);
  bounds.validate();
  return bounds;
}

void Bounds::validate() const {
  if (lower.empty()) throw std::invalid_argument("bounds: zero dimension");
  if (lower.size() != upper.size() || lower.size() != periodic.size()) {
    throw std::invalid_argument("bounds: mismatched vector lengths");
  }
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j])) {
      throw std::invalid_argument("bounds: lower must be < upper");
    }
  }
}

double Bounds::confine(double x, std::size_t j) const {
  if (periodic[j]) {
    const double width = upper[j] - lower[j];
    double shifted = std::fmod(x - lower[j], width);
    if (shifted < 0.0) shifted += width;
    return lower[j] + shifted;
  }
  return std::clamp(x, lower[j], upper[j]);
}

bool Bounds::contains(std::span<const double> position) const {
  if (position.size() != lower.size()) return false;
  for (std::size_t j = 0; j < position.size(); ++j) {
    if (periodic[j]) {
      if (position[j] < lower[j] || position[j] >= upper[j]) return false;
    } else {
      if (position[j] < lower[j] || position[j] > upper[j]) return false;
    }
  }
  return true;
}

void DeConfig::validate() const {
  if (population_size < 4) {
    throw std::invalid_argument(
        "population_size must be >= 4 (donor needs three distinct partners)");
  }
  if (mutation_rate < 0.0 || mutation_rate > 2.0) {
    throw std::invalid_argument("mutation_rate must lie in [0, 2]");
  }
  if (crossover_rate < 0.0 || crossover_rate > 1.0) {
    throw std::invalid_argument("crossover_rate must lie in [0, 1]");
  }
  if (max_iterations < 0) {
    throw std::invalid_argument("max_iterations must be >= 0");
  }
}

}  // namespace qopt

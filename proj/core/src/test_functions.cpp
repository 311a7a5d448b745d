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

#include "qopt/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qopt {

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rosenbrock(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = 1.0 - x[i];
    sum += 100.0 * a * a + b * b;
  }
  return sum;
}

double rastrigin(std::span<const double> x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double sum = 10.0 * static_cast<double>(x.size());
  for (double v : x) sum += v * v - 10.0 * std::cos(two_pi * v);
  return sum;
}

BenchmarkProblem make_benchmark_problem(std::string_view name,
                                        std::size_t dimension) {
  if (dimension == 0) {
    throw std::invalid_argument("benchmark dimension must be >= 1");
  }

  BenchmarkProblem problem;
  problem.name = std::string(name);
  problem.optimum = 0.0;
  problem.objective.dimension = dimension;
  problem.objective.deterministic = true;

  if (name == "sphere") {
    problem.objective.sample = [](std::span<const double> x, RngStream&) {
      return sphere(x);
    };
    problem.bounds = Bounds::cube(dimension, -5.12, 5.12);
  } else if (name == "rosenbrock") {
    problem.objective.sample = [](std::span<const double> x, RngStream&) {
      return rosenbrock(x);
    };
    problem.bounds = Bounds::cube(dimension, -2.048, 2.048);
  } else if (name == "rastrigin") {
    problem.objective.sample = [](std::span<const double> x, RngStream&) {
      return rastrigin(x);
    };
    problem.bounds = Bounds::cube(dimension, -5.12, 5.12);
  } else {
    throw std::invalid_argument("unknown benchmark function: " +
                                std::string(name));
  }
  return problem;
}

}  // namespace qopt

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

#include <string>
#include <string_view>

#include "qopt/types.hpp"

namespace qopt {

double sphere(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double rastrigin(std::span<const double> x);

/// A named minimization benchmark with its conventional box and known
/// global optimum value.
struct BenchmarkProblem {
  std::string name;
  Objective objective;
  Bounds bounds;
  double optimum = 0.0;
};

/// name is one of "sphere", "rosenbrock", "rastrigin".
BenchmarkProblem make_benchmark_problem(std::string_view name,
                                        std::size_t dimension);

}  // namespace qopt

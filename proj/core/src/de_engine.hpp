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

#include "qopt/sussade.hpp"
#include "qopt/types.hpp"

namespace qopt::detail {

// Stream-path tags. Evaluation streams are keyed by (tag, iteration,
// candidate), so results are independent of thread scheduling and of how
// many samples other candidates consume.
inline constexpr std::uint64_t kTagInit = 0x01;
inline constexpr std::uint64_t kTagAlgo = 0x02;
inline constexpr std::uint64_t kTagEval = 0x03;
inline constexpr std::uint64_t kTagRefine = 0x04;
inline constexpr std::uint64_t kTagFinal = 0x05;

// One loop drives the whole DE family. The sampling plan distinguishes
// plain DE (single samples, no refinement) from the noise-resistant
// variant; an optional SussadeConfig adds rate adaptation and subspace
// switching.
struct EnginePlan {
  const Objective* objective = nullptr;
  const Bounds* bounds = nullptr;
  DeConfig de;
  int init_samples = 1;
  int donor_samples = 1;
  int refine_samples = 0;
  int final_samples = 0;
  const SussadeConfig* sussade = nullptr;
  TerminationRule termination;
};

RunResult run_de_engine(const EnginePlan& plan);

}  // namespace qopt::detail

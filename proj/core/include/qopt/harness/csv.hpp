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

#include <filesystem>
#include <string>
#include <vector>

namespace qopt::harness {

/// Header row plus string cells. Doubles are formatted with %.17g, which
/// round-trips exactly, so identical data produces identical bytes.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string format_double(double value);
std::string format_int(std::int64_t value);

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

/// Plot-ready projection of an artifact CSV. A scaling ledger becomes
/// (N, V_H, log10_N, log10_V_H) over its accepted rows; a robustness curve
/// becomes (delta_eps, F, stderr) in grid order. Empty inputs produce just
/// the header.
CsvTable make_plotdata(const CsvTable& input);

/// Reads `artifact`, converts, and writes the result (default: alongside
/// the input as <stem>_plotdata.csv). Returns the output path.
std::filesystem::path emit_plotdata(const std::filesystem::path& artifact,
                                    const std::filesystem::path& output = {});

}  // namespace qopt::harness

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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qopt {

/// 128-bit stream identity. Derived from a master seed and a path of
/// integer components (run / iteration / candidate / trial), so that any
/// piece of the computation can reconstruct exactly the stream it owns.
struct StreamId {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const StreamId&, const StreamId&) = default;
};

/// Deterministic, splittable random stream backed by the Philox4x32-10
/// counter-based generator.
///
/// Draws depend only on (master seed, path, draw index) -- never on wall
/// clock, thread identity, or sibling streams. Words are produced in
/// buffered blocks; the emitted sequence is identical for every buffer
/// size, so buffering is a pure throughput knob.
///
/// A stream is single-owner: it may be created on one thread and consumed
/// on another, but must not be shared concurrently.
class RngStream {
 public:
  /// Root stream for a master seed.
  explicit RngStream(std::uint64_t master_seed);

  /// Derives an independent child stream. Distinct paths give
  /// statistically independent streams; consuming one never affects
  /// another.
  [[nodiscard]] RngStream child(std::span<const std::uint64_t> path) const;
  [[nodiscard]] RngStream child(std::initializer_list<std::uint64_t> path) const;

  /// Next raw 64-bit word.
  std::uint64_t next_u64();

  /// Uniform variate on (0, 1].
  double uniform();
  void uniform(std::span<double> out);

  /// Unbiased integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Normal variate. sigma == 0 returns `mean` without consuming draws;
  /// sigma < 0 is invalid.
  double gaussian(double mean, double sigma);
  void gaussian(std::span<double> out, double mean, double sigma);

  /// Buffer capacity in 64-bit words (default 4096). May be changed at
  /// any time without affecting the emitted sequence.
  void set_buffer_size(std::size_t words);
  std::size_t buffer_size() const { return buffer_capacity_; }

  StreamId id() const { return id_; }

  /// Generator family tag, recorded in result metadata.
  static constexpr const char* family() { return "philox4x32-10"; }

 private:
  RngStream(StreamId id, std::size_t buffer_capacity);
  void refill();

  StreamId id_;
  std::uint64_t next_index_ = 0;  // absolute index of next word to emit
  std::vector<std::uint64_t> buffer_;
  std::size_t cursor_ = 0;      // index into buffer_
  std::size_t chunk_ = 64;      // progressive refill size, doubles to cap
  std::size_t buffer_capacity_ = 4096;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

/// One Philox4x32-10 block; exposed for known-answer tests.
void philox4x32_10(const std::uint32_t counter[4], const std::uint32_t key[2],
                   std::uint32_t out[4]);

RngStream seeded_stream(std::uint64_t master_seed,
                        std::span<const std::uint64_t> path);
RngStream seeded_stream(std::uint64_t master_seed,
                        std::initializer_list<std::uint64_t> path);

std::vector<double> draw_uniform(RngStream& stream, std::size_t count);
std::vector<double> draw_gaussian(RngStream& stream, std::size_t count,
                                  double mean, double sigma);

}  // namespace qopt

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

#include "qopt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qopt {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  ctr[0] = hi1 ^ ctr[1] ^ key[0];
  ctr[1] = lo1;
  ctr[2] = hi0 ^ ctr[3] ^ key[1];
  ctr[3] = lo0;
}

inline void philox_block(const std::uint32_t counter[4],
                         const std::uint32_t key[2], std::uint32_t out[4]) {
  std::uint32_t ctr[4] = {counter[0], counter[1], counter[2], counter[3]};
  std::uint32_t k[2] = {key[0], key[1]};
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kPhiloxW0;
      k[1] += kPhiloxW1;
    }
    philox_round(ctr, k);
  }
  out[0] = ctr[0];
  out[1] = ctr[1];
  out[2] = ctr[2];
  out[3] = ctr[3];
}

inline StreamId derive(const StreamId& parent, std::uint64_t component) {
  const std::uint32_t key[2] = {static_cast<std::uint32_t>(parent.hi),
                                static_cast<std::uint32_t>(parent.hi >> 32)};
  const std::uint32_t ctr[4] = {static_cast<std::uint32_t>(parent.lo),
                                static_cast<std::uint32_t>(parent.lo >> 32),
                                static_cast<std::uint32_t>(component),
                                static_cast<std::uint32_t>(component >> 32)};
  std::uint32_t out[4];
  philox_block(ctr, key, out);
  return StreamId{(static_cast<std::uint64_t>(out[1]) << 32) | out[0],
                  (static_cast<std::uint64_t>(out[3]) << 32) | out[2]};
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps a word to (0, 1]: 53 significant bits, never zero, can hit 1.0
// exactly.
inline double to_unit_interval(std::uint64_t word) {
  return static_cast<double>((word >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

void philox4x32_10(const std::uint32_t counter[4], const std::uint32_t key[2],
                   std::uint32_t out[4]) {
  philox_block(counter, key, out);
}

RngStream::RngStream(std::uint64_t master_seed)
    : RngStream(derive(StreamId{master_seed, 0}, master_seed), 4096) {}

RngStream::RngStream(StreamId id, std::size_t buffer_capacity)
    : id_(id), buffer_capacity_(buffer_capacity) {}

RngStream RngStream::child(std::span<const std::uint64_t> path) const {
  StreamId id = id_;
  for (std::uint64_t component : path) id = derive(id, component);
  return RngStream(id, buffer_capacity_);
}

RngStream RngStream::child(std::initializer_list<std::uint64_t> path) const {
  return child(std::span<const std::uint64_t>(path.begin(), path.size()));
}

void RngStream::set_buffer_size(std::size_t words) {
  if (words == 0) throw std::invalid_argument("rng buffer size must be >= 1");
  buffer_capacity_ = words;
  chunk_ = std::min<std::size_t>(chunk_, words);
  // Drop any unconsumed words; they are regenerated from the counter, so
  // the emitted sequence is unchanged.
  buffer_.clear();
  cursor_ = 0;
}

void RngStream::refill() {
  const std::size_t count = std::min(chunk_, buffer_capacity_);
  chunk_ = std::min(chunk_ * 2, buffer_capacity_);
  buffer_.resize(count);

  const std::uint32_t key[2] = {static_cast<std::uint32_t>(id_.hi),
                                static_cast<std::uint32_t>(id_.hi >> 32)};
  std::uint32_t ctr[4];
  ctr[2] = static_cast<std::uint32_t>(id_.lo);
  ctr[3] = static_cast<std::uint32_t>(id_.lo >> 32);

  std::size_t produced = 0;
  std::uint64_t index = next_index_;
  while (produced < count) {
    const std::uint64_t block = index / 2;
    ctr[0] = static_cast<std::uint32_t>(block);
    ctr[1] = static_cast<std::uint32_t>(block >> 32);
    std::uint32_t out[4];
    philox_block(ctr, key, out);
    const std::uint64_t words[2] = {
        (static_cast<std::uint64_t>(out[1]) << 32) | out[0],
        (static_cast<std::uint64_t>(out[3]) << 32) | out[2]};
    for (std::uint64_t lane = index % 2; lane < 2 && produced < count; ++lane) {
      buffer_[produced++] = words[lane];
      ++index;
    }
  }
  cursor_ = 0;
}

std::uint64_t RngStream::next_u64() {
  if (cursor_ >= buffer_.size()) refill();
  ++next_index_;
  return buffer_[cursor_++];
}

double RngStream::uniform() { return to_unit_interval(next_u64()); }

void RngStream::uniform(std::span<double> out) {
  for (double& value : out) value = uniform();
}

std::uint64_t RngStream::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(n) requires n >= 1");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t word = next_u64();
    if (word >= threshold) return word % n;
  }
}

double RngStream::gaussian(double mean, double sigma) {
  if (sigma < 0.0) throw std::invalid_argument("gaussian sigma must be >= 0");
  if (sigma == 0.0) return mean;
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return mean + sigma * cached_gaussian_;
  }
  // Box-Muller on (0, 1] uniforms; u1 > 0 keeps the log finite.
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = kTwoPi * u2;
  cached_gaussian_ = radius * std::sin(angle);
  has_cached_gaussian_ = true;
  return mean + sigma * radius * std::cos(angle);
}

void RngStream::gaussian(std::span<double> out, double mean, double sigma) {
  for (double& value : out) value = gaussian(mean, sigma);
}

RngStream seeded_stream(std::uint64_t master_seed,
                        std::span<const std::uint64_t> path) {
  return RngStream(master_seed).child(path);
}

RngStream seeded_stream(std::uint64_t master_seed,
                        std::initializer_list<std::uint64_t> path) {
  return RngStream(master_seed).child(path);
}

std::vector<double> draw_uniform(RngStream& stream, std::size_t count) {
  std::vector<double> values(count);
  stream.uniform(values);
  return values;
}

std::vector<double> draw_gaussian(RngStream& stream, std::size_t count,
                                  double mean, double sigma) {
  std::vector<double> values(count);
  stream.gaussian(values, mean, sigma);
  return values;
}

}  // namespace qopt

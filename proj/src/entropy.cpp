// Copyright 2026 The fdasig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fdasig/entropy.hpp"

#include <random>
#include <string>

#include "fdasig/errors.hpp"

namespace fdasig {

namespace {

std::vector<std::uint8_t> be64(std::uint64_t v) {
  std::vector<std::uint8_t> b(8);
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (56 - 8 * i));
  return b;
}

std::vector<std::uint8_t> labelled(std::uint64_t seed, std::string_view label) {
  std::vector<std::uint8_t> s = be64(seed);
  s.insert(s.end(), label.begin(), label.end());
  return s;
}

}  // namespace

std::uint64_t EntropySource::next_u64() {
  std::uint8_t b[8];
  fill(b);
  std::uint64_t v = 0;
  for (std::uint8_t x : b) v = (v << 8) | x;
  return v;
}

std::uint64_t EntropySource::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below requires a positive bound");
  // Largest multiple of bound representable as a count of 2^64 outcomes.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

BitString EntropySource::random_bits(std::size_t bit_len) {
  std::vector<std::uint8_t> buf(bytes_for_bits(bit_len));
  fill(buf);
  clear_pad_bits(buf, bit_len);
  return BitString(bit_len, std::move(buf));
}

DeterministicEntropy::DeterministicEntropy(std::span<const std::uint8_t> seed) {
  prefix_ = {'D', 'R', 'B', 'G', 0x00};
  prefix_.insert(prefix_.end(), seed.begin(), seed.end());
}

DeterministicEntropy::DeterministicEntropy(std::uint64_t seed)
    : DeterministicEntropy(std::span<const std::uint8_t>(be64(seed))) {}

DeterministicEntropy::DeterministicEntropy(std::uint64_t seed, std::string_view stream_label)
    : DeterministicEntropy(std::span<const std::uint8_t>(labelled(seed, stream_label))) {}

void DeterministicEntropy::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (pool_used_ == pool_.size()) {
      const auto ctr = be64(block_++);
      const std::span<const std::uint8_t> parts[] = {prefix_, ctr};
      pool_ = sha_.digest(parts);
      pool_used_ = 0;
    }
    byte = pool_[pool_used_++];
  }
}

void SystemEntropy::fill(std::span<std::uint8_t> out) {
  try {
    std::random_device rd;
    for (std::size_t i = 0; i < out.size();) {
      auto v = rd();
      for (std::size_t k = 0; k < sizeof(v) && i < out.size(); ++k, ++i) {
        out[i] = static_cast<std::uint8_t>(v >> (8 * k));
      }
    }
  } catch (const std::exception& e) {
    throw EntropyError(std::string("system entropy unavailable: ") + e.what());
  }
}

}  // namespace fdasig

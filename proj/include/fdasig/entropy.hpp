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

#ifndef FDASIG_ENTROPY_HPP
#define FDASIG_ENTROPY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "fdasig/bitstring.hpp"
#include "fdasig/sha256.hpp"

namespace fdasig {

/// Source of uniformly random bytes for key generation and adversary sampling.
/// Implementations throw EntropyError when they cannot deliver.
class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;

  std::uint64_t next_u64();
  /// Uniform integer in [0, bound). Rejection sampling, so the result does
  /// not depend on any standard-library distribution implementation.
  std::uint64_t uniform_below(std::uint64_t bound);
  BitString random_bits(std::size_t bit_len);
};

/// Deterministic byte stream SHA-256("DRBG" || 0x00 || seed || be64(block)),
/// block = 0, 1, ... Reproducible across platforms; for tests, the CLI and
/// experiments. Not a substitute for true randomness in deployments.
class DeterministicEntropy final : public EntropySource {
 public:
  explicit DeterministicEntropy(std::span<const std::uint8_t> seed);
  explicit DeterministicEntropy(std::uint64_t seed);
  DeterministicEntropy(std::uint64_t seed, std::string_view stream_label);

  void fill(std::span<std::uint8_t> out) override;

 private:
  std::vector<std::uint8_t> prefix_;
  std::uint64_t block_ = 0;
  Sha256Digest pool_{};
  std::size_t pool_used_ = pool_.size();
  Sha256 sha_;
};

/// std::random_device backed source.
class SystemEntropy final : public EntropySource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

}  // namespace fdasig

#endif  // FDASIG_ENTROPY_HPP

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

#ifndef FDASIG_SHA256_HPP
#define FDASIG_SHA256_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>

namespace fdasig {

using Sha256Digest = std::array<std::uint8_t, 32>;

/// Reusable FIPS 180-4 SHA-256 context. Not thread-safe; give each thread its
/// own instance.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  /// Digest of the concatenation of `parts`.
  Sha256Digest digest(std::span<const std::span<const std::uint8_t>> parts);
  Sha256Digest digest(std::span<const std::uint8_t> data);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fdasig

#endif  // FDASIG_SHA256_HPP

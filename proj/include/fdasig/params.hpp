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

#ifndef FDASIG_PARAMS_HPP
#define FDASIG_PARAMS_HPP

#include <cstddef>
#include <cstdint>
#include <variant>

namespace fdasig {

/// (n, delta) for the single-bit Lamport scheme. Secret elements carry
/// n + delta bits, public elements n bits.
struct LamportParams {
  unsigned n = 0;
  unsigned delta = 0;

  /// Throws InvalidParams unless n >= 1.
  static LamportParams make(unsigned n, unsigned delta);

  std::size_t sk_bits() const { return std::size_t{n} + delta; }
  std::size_t pk_bits() const { return n; }

  friend bool operator==(const LamportParams&, const LamportParams&) = default;
};

/// (n, delta, L, nu) for the Winternitz scheme plus the derived quantities
/// w = 2^nu, l1 = L / nu, l2 = floor(log2(l1 (w - 1)) / nu) + 1 and l = l1 + l2.
/// Only derive_wots_params fills these consistently.
struct WotsParams {
  unsigned n = 0;
  unsigned delta = 0;
  unsigned L = 0;
  unsigned nu = 0;
  unsigned w = 0;
  unsigned l1 = 0;
  unsigned l2 = 0;
  unsigned l = 0;

  /// Bit length of a chain value sitting at position `a` (0 = secret element,
  /// w - 1 = public element): n + delta (w - 1 - a).
  std::size_t bits_at(unsigned a) const {
    return std::size_t{n} + std::size_t{delta} * (w - 1 - a);
  }
  std::size_t sk_bits() const { return bits_at(0); }
  std::size_t pk_bits() const { return n; }

  friend bool operator==(const WotsParams&, const WotsParams&) = default;
};

/// Largest block width accepted; chain indices must fit the oracle's one-byte
/// index field.
inline constexpr unsigned kMaxNu = 8;

/// Throws InvalidParams if n < 1, L < 1, nu < 1, nu > kMaxNu, or L % nu != 0.
WotsParams derive_wots_params(unsigned n, unsigned delta, unsigned L, unsigned nu);

using SchemeParams = std::variant<LamportParams, WotsParams>;

}  // namespace fdasig

#endif  // FDASIG_PARAMS_HPP

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

#ifndef FDASIG_ORACLE_HPP
#define FDASIG_ORACLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fdasig/bitstring.hpp"
#include "fdasig/params.hpp"
#include "fdasig/sha256.hpp"

namespace fdasig {

/// Per-key randomizer r of the Winternitz function family.
using Seed = std::array<std::uint8_t, 16>;

/// Domain-separation tag for the hash oracle. Either the Lamport function H
/// (label "LAM", no seed, no index) or one step f_r^(i) of a Winternitz chain
/// (label "WOTS-F", seed r, index i >= 1).
class OracleTag {
 public:
  static OracleTag lamport();
  /// Throws IndexError unless 1 <= index <= 255.
  static OracleTag wots_step(const Seed& r, unsigned index);

  std::string_view label() const;
  const std::optional<Seed>& seed() const { return seed_; }
  std::optional<unsigned> index() const { return index_; }

 private:
  OracleTag() = default;
  bool wots_ = false;
  std::optional<Seed> seed_;
  std::optional<unsigned> index_;
};

/// Random-oracle-style evaluation. Output is the first `out_bits` bits of
///   SHA-256(T || be32(0)) || SHA-256(T || be32(1)) || ...
/// with T = label || 0x00 || r (or nothing) || u8(index or 0)
///          || be64(out_bits) || be64(x.size()) || x.bytes().
/// Deterministic in (tag, x, out_bits); widths are independent oracles.
BitString oracle_eval(const OracleTag& tag, const BitString& x, std::size_t out_bits);

/// oracle_eval with the tag and both widths fixed, evaluated over raw payload
/// buffers. Used by exhaustive search where the per-call allocation of
/// oracle_eval dominates. Not thread-safe; one instance per thread.
class PreparedOracle {
 public:
  PreparedOracle(const OracleTag& tag, std::size_t in_bits, std::size_t out_bits);

  std::size_t in_bits() const { return in_bits_; }
  std::size_t out_bits() const { return out_bits_; }

  /// `in` must hold bytes_for_bits(in_bits()) bytes with zero pad bits; `out`
  /// receives bytes_for_bits(out_bits()) bytes with zero pad bits.
  void eval(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

  BitString operator()(const BitString& x);

 private:
  std::size_t in_bits_;
  std::size_t out_bits_;
  std::vector<std::uint8_t> buf_;  // T || be32(counter)
  std::size_t payload_offset_;
  Sha256 sha_;
};

/// One step f_r^(i): {0,1}^(n + delta (w - i)) -> {0,1}^(n + delta (w - i - 1)).
/// Throws IndexError unless 1 <= i <= w - 1 and DomainError on a wrong input
/// length.
BitString f_step(const WotsParams& params, const Seed& r, unsigned i, const BitString& x);

/// Applies f^(from + 1), ..., f^(to) to a value sitting at chain position
/// `from`. chain(p, r, 0, b, sk) is F_r^(b)(sk); from == to is the identity.
BitString chain(const WotsParams& params, const Seed& r, unsigned from, unsigned to,
                const BitString& x);

/// The composed map chain(params, r, from, to, .) specialised for repeated
/// evaluation over raw buffers. Not thread-safe.
class PreparedChain {
 public:
  PreparedChain(const WotsParams& params, const Seed& r, unsigned from, unsigned to);

  std::size_t in_bits() const { return in_bits_; }
  std::size_t out_bits() const { return out_bits_; }

  void eval(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);

 private:
  std::size_t in_bits_;
  std::size_t out_bits_;
  std::vector<PreparedOracle> steps_;
  std::vector<std::uint8_t> scratch_a_;
  std::vector<std::uint8_t> scratch_b_;
};

}  // namespace fdasig

#endif  // FDASIG_ORACLE_HPP

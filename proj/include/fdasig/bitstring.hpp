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

#ifndef FDASIG_BITSTRING_HPP
#define FDASIG_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fdasig {

/// Arbitrary-length bit sequence, packed MSB-first within each byte.
///
/// The payload always holds exactly ceil(size() / 8) bytes and every pad bit
/// past size() in the last byte is zero, so two BitStrings are equal iff
/// their bits are equal and byte-wise comparison of payloads is exact.
class BitString {
 public:
  BitString() = default;

  /// Throws DomainError if the payload length or pad bits are inconsistent
  /// with `bit_len`.
  BitString(std::size_t bit_len, std::vector<std::uint8_t> payload);

  static BitString zeros(std::size_t bit_len);

  /// The `bit_len` low-order bits of `value`, most significant first.
  /// Requires bit_len <= 64.
  static BitString from_uint(std::uint64_t value, std::size_t bit_len);

  /// Parses lowercase or uppercase hex of exactly ceil(bit_len / 8) bytes.
  /// Throws DomainError on bad digits, wrong length, or nonzero pad bits.
  static BitString from_hex(std::string_view hex, std::size_t bit_len);

  std::size_t size() const noexcept { return bit_len_; }
  bool empty() const noexcept { return bit_len_ == 0; }
  std::span<const std::uint8_t> bytes() const noexcept { return payload_; }

  bool bit(std::size_t k) const;
  BitString with_bit_flipped(std::size_t k) const;

  /// Inverse of from_uint. Requires size() <= 64.
  std::uint64_t to_uint() const;

  /// Lowercase hex of the payload.
  std::string to_hex() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::size_t bit_len_ = 0;
  std::vector<std::uint8_t> payload_;
};

BitString pack_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> unpack_bits(const BitString& s);

constexpr std::size_t bytes_for_bits(std::size_t bits) { return (bits + 7) / 8; }

/// Writes the `bit_len` low bits of `value` MSB-first into `out`, which must
/// hold exactly bytes_for_bits(bit_len) bytes.
void write_uint_msb_first(std::uint64_t value, std::size_t bit_len,
                          std::span<std::uint8_t> out);

/// Zeroes the pad bits of a payload buffer holding `bits` bits.
void clear_pad_bits(std::span<std::uint8_t> payload, std::size_t bits);

}  // namespace fdasig

#endif  // FDASIG_BITSTRING_HPP

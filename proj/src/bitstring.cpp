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

#include "fdasig/bitstring.hpp"

#include <utility>

#include "fdasig/errors.hpp"

namespace fdasig {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::uint8_t pad_mask(std::size_t bits) {
  const std::size_t used = bits % 8;
  return used == 0 ? 0xFF : static_cast<std::uint8_t>(0xFF << (8 - used));
}

}  // namespace

void write_uint_msb_first(std::uint64_t value, std::size_t bit_len,
                          std::span<std::uint8_t> out) {
  // Left-align so the value's most significant bit lands in bit 0.
  const std::size_t nbytes = out.size();
  const std::size_t shift = nbytes * 8 - bit_len;
  for (std::size_t i = 0; i < nbytes; ++i) {
    const std::size_t lsb = (nbytes - 1 - i) * 8;  // weight of this byte's low bit
    std::uint64_t chunk;
    if (lsb >= shift) {
      chunk = lsb - shift < 64 ? value >> (lsb - shift) : 0;
    } else {
      chunk = value << (shift - lsb);
    }
    out[i] = static_cast<std::uint8_t>(chunk);
  }
}

void clear_pad_bits(std::span<std::uint8_t> payload, std::size_t bits) {
  if (!payload.empty()) payload.back() &= pad_mask(bits);
}

BitString::BitString(std::size_t bit_len, std::vector<std::uint8_t> payload)
    : bit_len_(bit_len), payload_(std::move(payload)) {
  if (payload_.size() != bytes_for_bits(bit_len_)) {
    throw DomainError("payload of " + std::to_string(payload_.size()) +
                      " bytes cannot hold exactly " + std::to_string(bit_len_) + " bits");
  }
  if (!payload_.empty() && (payload_.back() & ~pad_mask(bit_len_)) != 0) {
    throw DomainError("nonzero pad bits");
  }
}

BitString BitString::zeros(std::size_t bit_len) {
  return BitString(bit_len, std::vector<std::uint8_t>(bytes_for_bits(bit_len), 0));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t bit_len) {
  if (bit_len > 64) throw DomainError("from_uint supports at most 64 bits");
  if (bit_len < 64 && (value >> bit_len) != 0) {
    throw DomainError("value does not fit in " + std::to_string(bit_len) + " bits");
  }
  std::vector<std::uint8_t> out(bytes_for_bits(bit_len), 0);
  write_uint_msb_first(value, bit_len, out);
  return BitString(bit_len, std::move(out));
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_len) {
  const std::size_t nbytes = bytes_for_bits(bit_len);
  if (hex.size() != 2 * nbytes) {
    throw DomainError("expected " + std::to_string(2 * nbytes) + " hex digits for " +
                      std::to_string(bit_len) + " bits, got " + std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> out(nbytes);
  for (std::size_t i = 0; i < nbytes; ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw DomainError("invalid hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return BitString(bit_len, std::move(out));
}

bool BitString::bit(std::size_t k) const {
  if (k >= bit_len_) throw IndexError("bit index out of range");
  return (payload_[k / 8] >> (7 - k % 8)) & 1;
}

BitString BitString::with_bit_flipped(std::size_t k) const {
  if (k >= bit_len_) throw IndexError("bit index out of range");
  BitString copy = *this;
  copy.payload_[k / 8] ^= static_cast<std::uint8_t>(1u << (7 - k % 8));
  return copy;
}

std::uint64_t BitString::to_uint() const {
  if (bit_len_ > 64) throw DomainError("to_uint supports at most 64 bits");
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < bit_len_; ++k) v = (v << 1) | (bit(k) ? 1u : 0u);
  return v;
}

std::string BitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * payload_.size());
  for (std::uint8_t b : payload_) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

BitString pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out(bytes_for_bits(bits.size()), 0);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] > 1) throw DomainError("pack_bits expects 0/1 values");
    if (bits[k]) out[k / 8] |= static_cast<std::uint8_t>(1u << (7 - k % 8));
  }
  return BitString(bits.size(), std::move(out));
}

std::vector<std::uint8_t> unpack_bits(const BitString& s) {
  std::vector<std::uint8_t> bits(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) bits[k] = s.bit(k) ? 1 : 0;
  return bits;
}

}  // namespace fdasig

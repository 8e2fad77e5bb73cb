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

#include <gtest/gtest.h>

#include <random>

#include "fdasig/errors.hpp"

namespace fdasig {
namespace {

TEST(PackBitsTest, Empty) {
  const BitString s = pack_bits({});
  EXPECT_EQ(s.size(), 0u);
  EXPECT_TRUE(s.bytes().empty());
}

TEST(PackBitsTest, MsbFirst) {
  const std::vector<std::uint8_t> bits = {1, 0, 1, 1};
  const BitString s = pack_bits(bits);
  EXPECT_EQ(s.size(), 4u);
  ASSERT_EQ(s.bytes().size(), 1u);
  EXPECT_EQ(s.bytes()[0], 0xB0);
}

TEST(PackBitsTest, PadBitsAreZero) {
  const std::vector<std::uint8_t> bits(9, 1);
  const BitString s = pack_bits(bits);
  EXPECT_EQ(s.size(), 9u);
  ASSERT_EQ(s.bytes().size(), 2u);
  EXPECT_EQ(s.bytes()[0], 0xFF);
  EXPECT_EQ(s.bytes()[1], 0x80);
}

TEST(PackBitsTest, RejectsNonBinary) {
  const std::vector<std::uint8_t> bits = {0, 2};
  EXPECT_THROW(pack_bits(bits), DomainError);
}

TEST(PackBitsTest, RoundTripRandomLengths) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = gen() % 10001;
    std::vector<std::uint8_t> bits(len);
    for (auto& b : bits) b = gen() & 1;
    const BitString s = pack_bits(bits);
    ASSERT_EQ(s.bytes().size(), (len + 7) / 8);
    ASSERT_EQ(unpack_bits(s), bits);
    ASSERT_EQ(BitString::from_hex(s.to_hex(), len), s);
  }
}

TEST(BitStringTest, ConstructorEnforcesInvariants) {
  EXPECT_THROW(BitString(9, {0xFF}), DomainError);
  EXPECT_THROW(BitString(4, {0xB1}), DomainError);
  EXPECT_NO_THROW(BitString(4, {0xB0}));
}

TEST(BitStringTest, FromUintMatchesBitOrder) {
  const BitString s = BitString::from_uint(0b1011, 4);
  EXPECT_EQ(s, pack_bits(std::vector<std::uint8_t>{1, 0, 1, 1}));
  EXPECT_EQ(BitString::from_uint(0x1FF, 9).to_hex(), "ff80");
  EXPECT_EQ(BitString::from_uint(0x1234, 13).to_uint(), 0x1234u);
  EXPECT_THROW(BitString::from_uint(16, 4), DomainError);

  std::mt19937_64 gen(11);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t len = 1 + gen() % 64;
    const std::uint64_t v = len == 64 ? gen() : gen() & ((std::uint64_t{1} << len) - 1);
    const BitString s = BitString::from_uint(v, len);
    ASSERT_EQ(s.to_uint(), v);
    for (std::size_t k = 0; k < len; ++k) ASSERT_EQ(s.bit(k), ((v >> (len - 1 - k)) & 1) == 1);
  }
}

TEST(BitStringTest, FromHexRejectsMalformed) {
  EXPECT_THROW(BitString::from_hex("abc", 12), DomainError);  // odd digit count
  EXPECT_THROW(BitString::from_hex("zz", 8), DomainError);
  EXPECT_THROW(BitString::from_hex("ff", 4), DomainError);  // pad bits set
  EXPECT_EQ(BitString::from_hex("AB", 8).to_hex(), "ab");
}

TEST(BitStringTest, FlipBit) {
  const BitString s = BitString::zeros(10);
  const BitString t = s.with_bit_flipped(9);
  EXPECT_NE(s, t);
  EXPECT_TRUE(t.bit(9));
  EXPECT_EQ(t.with_bit_flipped(9), s);
  EXPECT_THROW(s.with_bit_flipped(10), IndexError);
}

}  // namespace
}  // namespace fdasig

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

#include "fdasig/oracle.hpp"

#include <gtest/gtest.h>

#include <map>

#include "fdasig/entropy.hpp"
#include "fdasig/errors.hpp"
#include "fdasig/stats.hpp"

namespace fdasig {
namespace {

Seed counting_seed() {
  Seed r{};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint8_t>(i);
  return r;
}

TEST(Sha256Test, KnownAnswer) {
  Sha256 sha;
  const std::uint8_t abc[] = {'a', 'b', 'c'};
  const auto d = sha.digest(abc);
  const BitString s(256, {d.begin(), d.end()});
  EXPECT_EQ(s.to_hex(), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

// Expected values computed with Python hashlib from the byte layout
// label || 0x00 || r || u8(index) || be64(out_bits) || be64(in_bits) || payload.
TEST(OracleTest, KnownAnswers) {
  EXPECT_EQ(oracle_eval(OracleTag::lamport(), BitString::from_uint(0b1011, 4), 12).to_hex(),
            "a560");
  EXPECT_EQ(oracle_eval(OracleTag::lamport(), BitString(), 8).to_hex(), "be");
  const BitString x = BitString::from_hex("abcd", 16);
  EXPECT_EQ(oracle_eval(OracleTag::wots_step(counting_seed(), 3), x, 300).to_hex(),
            "6ac8e3ebd90857469c1eae7375862951ee8a3160d9d732335567e75819e6f3121b34353fefb0");
}

TEST(OracleTest, Deterministic) {
  const BitString x = BitString::from_hex("0123456789", 37 + 3);
  EXPECT_EQ(oracle_eval(OracleTag::lamport(), x, 77), oracle_eval(OracleTag::lamport(), x, 77));
}

TEST(OracleTest, OutputWidthsAreIndependentOracles) {
  DeterministicEntropy rng(42);
  int differing = 0;
  for (int i = 0; i < 100; ++i) {
    const BitString x = rng.random_bits(24);
    const auto a = oracle_eval(OracleTag::lamport(), x, 8);
    const auto b = oracle_eval(OracleTag::lamport(), x, 16);
    if (a.bytes()[0] != b.bytes()[0]) ++differing;
  }
  EXPECT_GE(differing, 1);
}

TEST(OracleTest, TagsSeparateDomains) {
  const BitString x = BitString::from_hex("abcd", 16);
  const auto lam = oracle_eval(OracleTag::lamport(), x, 64);
  const auto f1 = oracle_eval(OracleTag::wots_step(counting_seed(), 1), x, 64);
  const auto f2 = oracle_eval(OracleTag::wots_step(counting_seed(), 2), x, 64);
  Seed other = counting_seed();
  other[0] ^= 1;
  const auto f1_other = oracle_eval(OracleTag::wots_step(other, 1), x, 64);
  EXPECT_NE(lam, f1);
  EXPECT_NE(f1, f2);
  EXPECT_NE(f1, f1_other);
}

TEST(OracleTest, PreparedOracleMatchesOracleEval) {
  DeterministicEntropy rng(3);
  PreparedOracle prepared(OracleTag::wots_step(counting_seed(), 5), 19, 300);
  for (int i = 0; i < 50; ++i) {
    const BitString x = rng.random_bits(19);
    EXPECT_EQ(prepared(x), oracle_eval(OracleTag::wots_step(counting_seed(), 5), x, 300));
  }
}

TEST(OracleTest, TagIndexRange) {
  EXPECT_THROW(OracleTag::wots_step(counting_seed(), 0), IndexError);
  EXPECT_THROW(OracleTag::wots_step(counting_seed(), 256), IndexError);
  EXPECT_EQ(OracleTag::lamport().label(), "LAM");
  EXPECT_EQ(OracleTag::wots_step(counting_seed(), 1).label(), "WOTS-F");
}

// Exhaustive image census: preimage counts of the 8-bit -> 8-bit oracle against
// Bin(2^8, 2^-8).
TEST(OracleTest, ExhaustiveImageCensusIsBinomial) {
  std::map<std::uint64_t, std::uint64_t> preimages;
  for (std::uint64_t x = 0; x < 256; ++x) {
    ++preimages[oracle_eval(OracleTag::lamport(), BitString::from_uint(x, 8), 8).to_uint()];
  }
  std::vector<std::uint64_t> observed(8, 0);
  for (std::uint64_t y = 0; y < 256; ++y) {
    const auto it = preimages.find(y);
    const std::uint64_t c = it == preimages.end() ? 0 : it->second;
    ++observed[std::min<std::uint64_t>(c, 7)];
  }
  std::vector<double> probs = binomial_pmf(256, 1.0 / 256, 6);
  double head = 0;
  for (double p : probs) head += p;
  probs.push_back(1.0 - head);
  const auto chi = chi_square_gof(observed, probs);
  EXPECT_GT(chi.p_value, 0.01) << "statistic " << chi.statistic << " dof " << chi.dof;
}

TEST(ChainTest, StepLengths) {
  const WotsParams p = derive_wots_params(6, 1, 4, 2);
  const BitString x = BitString::zeros(9);
  EXPECT_EQ(f_step(p, counting_seed(), 1, x).size(), 8u);

  const WotsParams flat = derive_wots_params(6, 0, 4, 2);
  EXPECT_EQ(f_step(flat, counting_seed(), 2, BitString::zeros(6)).size(), 6u);

  EXPECT_THROW(f_step(p, counting_seed(), 1, BitString::zeros(8)), DomainError);
  EXPECT_THROW(f_step(p, counting_seed(), 0, x), IndexError);
  EXPECT_THROW(f_step(p, counting_seed(), 4, x), IndexError);
}

TEST(ChainTest, LengthDisciplineAllSteps) {
  const WotsParams p = derive_wots_params(5, 3, 8, 4);
  DeterministicEntropy rng(9);
  for (unsigned i = 1; i < p.w; ++i) {
    const BitString x = rng.random_bits(p.bits_at(i - 1));
    EXPECT_EQ(f_step(p, counting_seed(), i, x).size() + p.delta, x.size());
  }
}

TEST(ChainTest, IdentityAndRangeErrors) {
  const WotsParams p = derive_wots_params(6, 1, 4, 2);
  const BitString x = BitString::from_uint(0x55, 8);
  EXPECT_EQ(chain(p, counting_seed(), 1, 1, x), x);
  EXPECT_THROW(chain(p, counting_seed(), 2, 1, BitString::zeros(7)), IndexError);
  EXPECT_THROW(chain(p, counting_seed(), 0, 4, BitString::zeros(9)), IndexError);
  EXPECT_THROW(chain(p, counting_seed(), 0, 2, BitString::zeros(8)), DomainError);
}

TEST(ChainTest, Composable) {
  const WotsParams p = derive_wots_params(7, 2, 8, 2);
  DeterministicEntropy rng(17);
  const Seed r = counting_seed();
  for (int trial = 0; trial < 20; ++trial) {
    for (unsigned a = 0; a < p.w; ++a) {
      const BitString x = rng.random_bits(p.bits_at(a));
      for (unsigned b = a; b < p.w; ++b) {
        for (unsigned c = b; c < p.w; ++c) {
          ASSERT_EQ(chain(p, r, a, c, x), chain(p, r, b, c, chain(p, r, a, b, x)));
        }
      }
    }
  }
}

TEST(ChainTest, PreparedChainMatchesChain) {
  const WotsParams p = derive_wots_params(6, 2, 4, 2);
  DeterministicEntropy rng(5);
  for (unsigned a = 0; a < p.w; ++a) {
    for (unsigned b = a; b < p.w; ++b) {
      PreparedChain pc(p, counting_seed(), a, b);
      const BitString x = rng.random_bits(p.bits_at(a));
      std::vector<std::uint8_t> out(bytes_for_bits(p.bits_at(b)));
      pc.eval(x.bytes(), out);
      EXPECT_EQ(BitString(p.bits_at(b), out), chain(p, counting_seed(), a, b, x));
    }
  }
}

}  // namespace
}  // namespace fdasig

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

#include "fdasig/format.hpp"

#include <gtest/gtest.h>

#include "fdasig/errors.hpp"
#include "format_corpus.hpp"

namespace fdasig {
namespace {

using testing::corrupted_files;
using testing::round_trips;

constexpr FileKind kAllKinds[] = {FileKind::kSecretKey, FileKind::kPublicKey, FileKind::kSignature,
                                  FileKind::kPof1, FileKind::kPof2};

TEST(FormatTest, RoundTripRandomStructures) {
  DeterministicEntropy rng(1);
  for (FileKind kind : kAllKinds) {
    for (int i = 0; i < 100; ++i) ASSERT_TRUE(round_trips(kind, rng)) << file_kind_name(kind) << i;
  }
}

TEST(FormatTest, CanonicalFilesParse) {
  const KeyPair kp = parse_secret_key(testing::kLamportSk);
  const auto& lam = std::get<LamportKeyPair>(kp);
  EXPECT_EQ(lam.sk0, BitString::from_hex("a2f0", 12));
  EXPECT_EQ(lam.pk1, BitString::from_hex("6c", 8));
  EXPECT_EQ(serialize(kp), testing::kLamportSk);

  const SignedMessage sm = parse_signature(testing::kLamportSig);
  EXPECT_EQ(sm.message, lamport_message(1));
  EXPECT_TRUE(verify(public_key(kp), sm.sigma, sm.message));

  const PublicKey pk = parse_public_key(testing::kWotsPk);
  const SignedMessage wsm = parse_signature(testing::kWotsSig);
  EXPECT_EQ(wsm.message, BitString::from_uint(5, 4));
  EXPECT_TRUE(verify(pk, wsm.sigma, wsm.message));
  EXPECT_EQ(serialize(wsm), testing::kWotsSig);
}

TEST(FormatTest, PeekKind) {
  EXPECT_EQ(peek_kind(testing::kLamportSk), FileKind::kSecretKey);
  EXPECT_EQ(peek_kind(testing::kWotsPk), FileKind::kPublicKey);
  EXPECT_EQ(peek_kind(testing::kWotsSig), FileKind::kSignature);
  EXPECT_THROW(peek_kind("FDA-SIG v1\nkind: letter\n"), FormatError);
}

TEST(FormatTest, CorruptedFilesRejected) {
  const auto corpus = corrupted_files();
  EXPECT_GE(corpus.size(), 20u);
  for (const auto& c : corpus) {
    try {
      c.parse(c.text);
      ADD_FAILURE() << c.name << ": accepted";
    } catch (const FormatError&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << c.name << ": wrong exception " << e.what();
    }
  }
}

TEST(FormatTest, ErrorsCarryLineNumbers) {
  try {
    parse_secret_key(testing::replace_once(testing::kLamportSk, "v1", "v2"));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_NE(std::string(e.what()).find("unsupported version"), std::string::npos);
  }
  try {
    parse_secret_key(testing::replace_once(testing::kLamportSk, "sk.0: a2f0", "sk.0: a2f"));
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 6u);
  }
}

TEST(FormatTest, SchemeMismatchInEvidenceRejected) {
  DeterministicEntropy rng(2);
  const KeyPair kp = keygen(LamportParams::make(8, 2), rng);
  const PofEvidenceII e{public_key(kp), sign(kp, lamport_message(0)),
                        sign(kp, lamport_message(0)), lamport_message(0)};
  const std::string text = serialize(e);
  EXPECT_EQ(parse_pof2(text), e);
  EXPECT_THROW(parse_pof1(text), FormatError);
}

}  // namespace
}  // namespace fdasig

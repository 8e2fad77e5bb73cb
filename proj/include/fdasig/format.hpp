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

#ifndef FDASIG_FORMAT_HPP
#define FDASIG_FORMAT_HPP

#include <string>
#include <string_view>

#include "fdasig/pof.hpp"

namespace fdasig {

// Line-oriented text format shared by keys, signatures and evidence:
//
//   FDA-SIG v1
//   kind: <secret-key|public-key|signature|pof-1|pof-2>
//   scheme: <lamport|wots>
//   n: <dec>
//   delta: <dec>
//   L: <dec>          (wots only)
//   nu: <dec>         (wots only)
//   <field>: <lowercase hex of the MSB-first payload>   ...
//
// Field lengths are implied by the parameters (and, for signature elements,
// by the message). LF line endings, a final LF, no trailing whitespace.
//
// Fields per kind (lamport / wots):
//   secret-key  sk.0 sk.1 pk.0 pk.1      / r sk.1..sk.l pk.1..pk.l
//   public-key  pk.0 pk.1                / r pk.1..pk.l
//   signature   sigma message            / sigma.1..sigma.l message
//   pof-2       pk, sigma_star, sigma_tilde_star, message_star
//   pof-1       pk, sigma_star, message, message_star
// where pk expands to the public-key fields and the sigma fields are indexed
// like the signature's.

enum class FileKind { kSecretKey, kPublicKey, kSignature, kPof1, kPof2 };

struct SignedMessage {
  SchemeParams params;
  BitString message;
  Signature sigma;

  friend bool operator==(const SignedMessage&, const SignedMessage&) = default;
};

std::string_view file_kind_name(FileKind k);

std::string serialize(const KeyPair& kp);
std::string serialize(const PublicKey& pk);
std::string serialize(const SignedMessage& sm);
std::string serialize(const PofEvidenceI& e);
std::string serialize(const PofEvidenceII& e);

// Parsers throw FormatError with the offending line number. Secret-key files
// whose public part does not match the secret part are rejected.
FileKind peek_kind(std::string_view text);
KeyPair parse_secret_key(std::string_view text);
PublicKey parse_public_key(std::string_view text);
SignedMessage parse_signature(std::string_view text);
PofEvidenceI parse_pof1(std::string_view text);
PofEvidenceII parse_pof2(std::string_view text);

}  // namespace fdasig

#endif  // FDASIG_FORMAT_HPP

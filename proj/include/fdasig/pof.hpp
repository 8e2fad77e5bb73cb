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

#ifndef FDASIG_POF_HPP
#define FDASIG_POF_HPP

#include <optional>

#include "fdasig/scheme.hpp"

namespace fdasig {

/// One signature valid for two different messages.
struct PofEvidenceI {
  PublicKey pk;
  Signature sigma_star;
  BitString message;
  BitString message_star;

  friend bool operator==(const PofEvidenceI&, const PofEvidenceI&) = default;
};

/// Two different signatures valid for the same message. Everything needed to
/// check it is public; sk is never involved.
struct PofEvidenceII {
  PublicKey pk;
  Signature sigma_tilde_star;  // the legitimate signer's signature of message_star
  Signature sigma_star;        // the forged one
  BitString message_star;

  friend bool operator==(const PofEvidenceII&, const PofEvidenceII&) = default;
};

/// Assembles a type-I evidence set without checking it. Neither scheme here
/// digests messages, so such sets only come from outside (e.g. digest-wrapped
/// deployments) and are audited with verify_pof1.
PofEvidenceI make_pof1(PublicKey pk, Signature sigma_star, BitString message,
                       BitString message_star);

bool verify_pof1(const PofEvidenceI& e);
bool verify_pof2(const PofEvidenceII& e);

struct DetectionOutcome {
  enum class Kind {
    kEvidence,            // legitimate signature differs: evidence is set
    kUndetectable,        // forger reproduced the legitimate signature exactly
    kNotAValidSignature,  // (message_star, sigma_star) does not verify
  };

  Kind kind;
  std::optional<PofEvidenceII> evidence;
};

/// Signer-side check of a presented (message_star, sigma_star): re-signs
/// message_star with sk and compares.
DetectionOutcome detect_forgery(const KeyPair& kp, const BitString& message_star,
                                const Signature& sigma_star);

}  // namespace fdasig

#endif  // FDASIG_POF_HPP

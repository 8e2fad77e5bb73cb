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

#include "fdasig/pof.hpp"

#include <utility>

namespace fdasig {

PofEvidenceI make_pof1(PublicKey pk, Signature sigma_star, BitString message,
                       BitString message_star) {
  return {std::move(pk), std::move(sigma_star), std::move(message), std::move(message_star)};
}

bool verify_pof1(const PofEvidenceI& e) {
  if (e.message == e.message_star) return false;
  return verify(e.pk, e.sigma_star, e.message) && verify(e.pk, e.sigma_star, e.message_star);
}

bool verify_pof2(const PofEvidenceII& e) {
  if (e.sigma_tilde_star == e.sigma_star) return false;
  return verify(e.pk, e.sigma_tilde_star, e.message_star) &&
         verify(e.pk, e.sigma_star, e.message_star);
}

DetectionOutcome detect_forgery(const KeyPair& kp, const BitString& message_star,
                                const Signature& sigma_star) {
  const PublicKey pk = public_key(kp);
  if (!verify(pk, sigma_star, message_star)) {
    return {DetectionOutcome::Kind::kNotAValidSignature, std::nullopt};
  }
  Signature legitimate = sign(kp, message_star);
  if (legitimate == sigma_star) return {DetectionOutcome::Kind::kUndetectable, std::nullopt};
  return {DetectionOutcome::Kind::kEvidence,
          PofEvidenceII{pk, std::move(legitimate), sigma_star, message_star}};
}

}  // namespace fdasig

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

#ifndef FDASIG_SCENARIO_HPP
#define FDASIG_SCENARIO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fdasig/adversary.hpp"
#include "fdasig/pof.hpp"

namespace fdasig {

// Three-party replay: signer S, adversary A, receiver R. Channels between
// parties are authentic in-process deliveries.
//   step 0  S generates keys, publishes pk to A and R
//   step 1  A has S sign a message M of its choice; S returns (M, sigma)
//   step 2  A forges (M*, sigma*) and presents it to R
//   step 3  R forwards (M*, sigma*) to S for confirmation
//   step 4  S re-signs M*; on a mismatch it sends evidence E to R (and to A
//           when notify_adversary is set)

enum class Party { kSigner, kAdversary, kReceiver };

enum class Item { kSecretKey, kPublicKey, kKnownPair, kForgedPair, kEvidence };

enum class AdversaryMode {
  kFreshPreimage,  // exhaustive-search forgery
  kExactSk,        // adversary holds sk itself and signs M* honestly
};

struct ScenarioEvent {
  unsigned step = 0;
  Party sender;
  Party receiver;
  Item payload;
};

struct ScenarioOptions {
  AdversaryMode mode = AdversaryMode::kFreshPreimage;
  bool notify_adversary = false;
  bool receiver_sees_known_pair = false;  // optional step-1 copy of (M, sigma) to R
  ForgeryBudget budget;
};

using Holdings = std::array<std::set<Item>, 3>;  // indexed by Party

struct ScenarioLog {
  std::vector<ScenarioEvent> events;
  std::array<Holdings, 5> holdings;  // after each step 0..4
  DetectionOutcome::Kind outcome = DetectionOutcome::Kind::kUndetectable;
  std::optional<PofEvidenceII> evidence;
  BitString message;
  BitString message_star;
  Signature sigma;
  Signature sigma_star;
};

ScenarioLog run_scenario(const SchemeParams& params, std::uint64_t seed,
                         const ScenarioOptions& options);

std::string_view party_name(Party p);
std::string_view item_name(Item i);
std::string format_scenario(const ScenarioLog& log);

}  // namespace fdasig

#endif  // FDASIG_SCENARIO_HPP

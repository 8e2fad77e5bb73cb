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

#include "fdasig/scenario.hpp"

#include <sstream>

#include "fdasig/errors.hpp"

namespace fdasig {

namespace {

class Ledger {
 public:
  explicit Ledger(ScenarioLog& log) : log_(log) {}

  void grant(Party p, Item i) { current_[static_cast<std::size_t>(p)].insert(i); }

  void send(unsigned step, Party from, Party to, Item payload) {
    log_.events.push_back({step, from, to, payload});
    grant(to, payload);
  }

  void close_step(unsigned step) { log_.holdings[step] = current_; }

 private:
  ScenarioLog& log_;
  Holdings current_;
};

}  // namespace

ScenarioLog run_scenario(const SchemeParams& params, std::uint64_t seed,
                         const ScenarioOptions& options) {
  ScenarioLog log;
  Ledger ledger(log);
  DeterministicEntropy signer_rng(seed, "scenario-signer");
  DeterministicEntropy adversary_rng(seed, "scenario-adversary");

  // Step 0.
  const KeyPair kp = keygen(params, signer_rng);
  const PublicKey pk = public_key(kp);
  ledger.grant(Party::kSigner, Item::kSecretKey);
  ledger.grant(Party::kSigner, Item::kPublicKey);
  ledger.send(0, Party::kSigner, Party::kAdversary, Item::kPublicKey);
  ledger.send(0, Party::kSigner, Party::kReceiver, Item::kPublicKey);
  ledger.close_step(0);

  // Step 1.
  log.message = adversary_rng.random_bits(message_bits(params));
  log.sigma = sign(kp, log.message);
  ledger.grant(Party::kSigner, Item::kKnownPair);
  ledger.send(1, Party::kSigner, Party::kAdversary, Item::kKnownPair);
  if (options.receiver_sees_known_pair) {
    ledger.send(1, Party::kSigner, Party::kReceiver, Item::kKnownPair);
  }
  ledger.close_step(1);

  // Step 2.
  do {
    log.message_star = adversary_rng.random_bits(message_bits(params));
  } while (log.message_star == log.message);
  if (options.mode == AdversaryMode::kExactSk) {
    log.sigma_star = sign(kp, log.message_star);
  } else {
    log.sigma_star = forge(pk, log.message, log.sigma, log.message_star, options.budget,
                           adversary_rng);
  }
  ledger.grant(Party::kAdversary, Item::kForgedPair);
  ledger.send(2, Party::kAdversary, Party::kReceiver, Item::kForgedPair);
  ledger.close_step(2);

  // Step 3.
  ledger.send(3, Party::kReceiver, Party::kSigner, Item::kForgedPair);
  ledger.close_step(3);

  // Step 4.
  DetectionOutcome outcome = detect_forgery(kp, log.message_star, log.sigma_star);
  log.outcome = outcome.kind;
  if (outcome.kind == DetectionOutcome::Kind::kEvidence) {
    log.evidence = std::move(outcome.evidence);
    ledger.grant(Party::kSigner, Item::kEvidence);
    ledger.send(4, Party::kSigner, Party::kReceiver, Item::kEvidence);
    if (options.notify_adversary) {
      ledger.send(4, Party::kSigner, Party::kAdversary, Item::kEvidence);
    }
  }
  ledger.close_step(4);
  return log;
}

std::string_view party_name(Party p) {
  switch (p) {
    case Party::kSigner: return "S";
    case Party::kAdversary: return "A";
    case Party::kReceiver: return "R";
  }
  return "?";
}

std::string_view item_name(Item i) {
  switch (i) {
    case Item::kSecretKey: return "sk";
    case Item::kPublicKey: return "pk";
    case Item::kKnownPair: return "(M, sigma)";
    case Item::kForgedPair: return "(M*, sigma*)";
    case Item::kEvidence: return "E";
  }
  return "?";
}

std::string format_scenario(const ScenarioLog& log) {
  std::ostringstream os;
  for (const auto& e : log.events) {
    os << "step " << e.step << ": " << party_name(e.sender) << " -> " << party_name(e.receiver)
       << "  " << item_name(e.payload) << "\n";
  }
  for (unsigned step = 0; step < log.holdings.size(); ++step) {
    os << "holdings after step " << step << ":";
    for (Party p : {Party::kSigner, Party::kAdversary, Party::kReceiver}) {
      os << "  " << party_name(p) << "{";
      bool first = true;
      for (Item i : log.holdings[step][static_cast<std::size_t>(p)]) {
        os << (first ? "" : ", ") << item_name(i);
        first = false;
      }
      os << "}";
    }
    os << "\n";
  }
  os << "outcome: "
     << (log.outcome == DetectionOutcome::Kind::kEvidence ? "evidence delivered"
                                                           : "forgery undetectable")
     << "\n";
  return os.str();
}

}  // namespace fdasig

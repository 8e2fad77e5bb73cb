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

#ifndef FDASIG_ADVERSARY_HPP
#define FDASIG_ADVERSARY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "fdasig/entropy.hpp"
#include "fdasig/scheme.hpp"

namespace fdasig {

// Exhaustive-search forgers for toy hash widths. They scan the whole input
// space of a one-way map and pick uniformly among all preimages of a target,
// which is the adversary model the detection bounds are stated for.

inline constexpr unsigned kMaxBudgetBits = 28;

struct ForgeryBudget {
  unsigned max_domain_bits = kMaxBudgetBits;

  /// Throws InvalidParams if max_domain_bits > kMaxBudgetBits.
  static ForgeryBudget make(unsigned max_domain_bits);
  /// Throws BudgetExceeded if a scan over 2^domain_bits inputs is not allowed.
  void require(std::size_t domain_bits) const;
};

/// A one-way map to invert: the Lamport H, or a W-OTS+ chain segment
/// chain(r, from, to, .) whose inputs live at position `from`.
class OracleSpec {
 public:
  static OracleSpec lamport(const LamportParams& params);
  static OracleSpec chain_segment(const WotsParams& params, const Seed& r, unsigned from,
                                  unsigned to);

  std::size_t domain_bits() const { return domain_bits_; }
  std::size_t image_bits() const { return image_bits_; }

  /// Reference evaluation through oracle_eval / chain.
  BitString operator()(const BitString& x) const;

 private:
  friend class OracleSpecEvaluator;
  OracleSpec() = default;

  std::optional<LamportParams> lamport_;
  std::optional<WotsParams> wots_;
  Seed r_{};
  unsigned from_ = 0;
  unsigned to_ = 0;
  std::size_t domain_bits_ = 0;
  std::size_t image_bits_ = 0;
};

struct PreimageSet {
  BitString target;
  std::size_t domain_bits = 0;
  std::vector<BitString> members;  // ascending input order

  std::size_t count() const { return members.size(); }
};

/// Scans all 2^domain_bits inputs and returns every x with spec(x) == y0.
/// Members come back in ascending order regardless of `threads`.
/// Throws BudgetExceeded, DomainError (domain_bits or y0 length not matching
/// the oracle) or EmptyPreimageSet.
PreimageSet enumerate_preimages(const OracleSpec& spec, const BitString& y0,
                                std::size_t domain_bits, const ForgeryBudget& budget,
                                unsigned threads = 1);

BitString sample_preimage(const PreimageSet& ps, EntropySource& rng);

/// sigma* for target = 1 - known: a uniformly chosen preimage of pk_target.
LamportSignature forge_lamport(const LamportPublicKey& pk, std::uint8_t known_message,
                               const LamportSignature& known_sig, std::uint8_t target_message,
                               const ForgeryBudget& budget, EntropySource& rng);

/// Per position: advance the known chain value where the target digit is not
/// smaller, otherwise invert chain(r, b*_i, w - 1, .) onto pk_i by exhaustive
/// search and sample uniformly.
WotsSignature forge_wots(const WotsPublicKey& pk, const BitString& known_message,
                         const WotsSignature& known_sig, const BitString& target_message,
                         const ForgeryBudget& budget, EntropySource& rng);

Signature forge(const PublicKey& pk, const BitString& known_message, const Signature& known_sig,
                const BitString& target_message, const ForgeryBudget& budget,
                EntropySource& rng);

}  // namespace fdasig

#endif  // FDASIG_ADVERSARY_HPP

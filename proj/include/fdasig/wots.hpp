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

#ifndef FDASIG_WOTS_HPP
#define FDASIG_WOTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fdasig/bitstring.hpp"
#include "fdasig/entropy.hpp"
#include "fdasig/oracle.hpp"
#include "fdasig/params.hpp"

namespace fdasig {

struct WotsPublicKey {
  WotsParams params;
  Seed r{};
  std::vector<BitString> pk;

  friend bool operator==(const WotsPublicKey&, const WotsPublicKey&) = default;
};

/// Invariant: pk[i] == chain(params, r, 0, w - 1, sk[i]) for every i < l.
struct WotsKeyPair {
  WotsParams params;
  Seed r{};
  std::vector<BitString> sk;
  std::vector<BitString> pk;

  WotsPublicKey public_key() const { return {params, r, pk}; }
  friend bool operator==(const WotsKeyPair&, const WotsKeyPair&) = default;
};

/// sigma[i] sits at chain position b_i and so carries n + delta (w - 1 - b_i) bits.
struct WotsSignature {
  std::vector<BitString> sigma;
  friend bool operator==(const WotsSignature&, const WotsSignature&) = default;
};

using Digits = std::vector<unsigned>;

/// Splits an L-bit message into l1 nu-bit blocks, MSB-first.
Digits to_base_w(const BitString& message, const WotsParams& params);

struct Checksum {
  std::uint64_t value = 0;
  Digits digits;  // exactly l2 base-w digits, most significant first
};

/// C = sum (w - 1 - m_i). Throws DomainError on a digit outside [0, w).
Checksum checksum(std::span<const unsigned> digits, const WotsParams& params);

/// Message digits followed by checksum digits (l entries).
struct ExtendedDigits {
  Digits b;
  unsigned l1 = 0;

  std::span<const unsigned> message_part() const { return std::span(b).first(l1); }
  std::span<const unsigned> checksum_part() const { return std::span(b).subspan(l1); }
};

ExtendedDigits extend(const BitString& message, const WotsParams& params);

WotsKeyPair wots_keygen(const WotsParams& params, EntropySource& entropy);

/// sigma_i = F_r^(b_i)(sk_i). Throws DomainError if message.size() != L.
WotsSignature wots_sign(const WotsKeyPair& kp, const BitString& message);

/// True iff chain(r, b_i, w - 1, sigma_i) == pk_i for every i. A signature
/// with the wrong element count or element lengths is rejected, not thrown
/// on; a message of the wrong length throws DomainError.
bool wots_verify(const WotsPublicKey& pk, const WotsSignature& sig, const BitString& message);

}  // namespace fdasig

#endif  // FDASIG_WOTS_HPP

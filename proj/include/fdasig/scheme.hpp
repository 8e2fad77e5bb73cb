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

#ifndef FDASIG_SCHEME_HPP
#define FDASIG_SCHEME_HPP

#include <string_view>
#include <variant>

#include "fdasig/lamport.hpp"
#include "fdasig/params.hpp"
#include "fdasig/wots.hpp"

namespace fdasig {

// Scheme-agnostic view over the two one-time schemes. Messages are always
// BitStrings; a Lamport message is a 1-bit string.

enum class Scheme { kLamport, kWots };

using PublicKey = std::variant<LamportPublicKey, WotsPublicKey>;
using KeyPair = std::variant<LamportKeyPair, WotsKeyPair>;
using Signature = std::variant<LamportSignature, WotsSignature>;

std::string_view scheme_name(Scheme s);
Scheme scheme_of(const SchemeParams& p);
Scheme scheme_of(const PublicKey& pk);

SchemeParams params_of(const PublicKey& pk);
SchemeParams params_of(const KeyPair& kp);
PublicKey public_key(const KeyPair& kp);

/// Message length in bits: 1 for Lamport, L for W-OTS+.
std::size_t message_bits(const SchemeParams& p);

BitString lamport_message(std::uint8_t m);

KeyPair keygen(const SchemeParams& params, EntropySource& entropy);

/// Throws DomainError if the message length does not fit the scheme.
Signature sign(const KeyPair& kp, const BitString& message);

/// Total function: any structural mismatch (scheme kinds, lengths, counts)
/// yields false.
bool verify(const PublicKey& pk, const Signature& sig, const BitString& message);

}  // namespace fdasig

#endif  // FDASIG_SCHEME_HPP

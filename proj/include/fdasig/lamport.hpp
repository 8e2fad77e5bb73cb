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

#ifndef FDASIG_LAMPORT_HPP
#define FDASIG_LAMPORT_HPP

#include <cstdint>

#include "fdasig/bitstring.hpp"
#include "fdasig/entropy.hpp"
#include "fdasig/params.hpp"

namespace fdasig {

// Single-bit Lamport one-time signature with an (n + delta)-bit preimage
// space: sk_i uniform in {0,1}^(n+delta), pk_i = H(sk_i), sigma = sk_m.

struct LamportPublicKey {
  LamportParams params;
  BitString pk0;
  BitString pk1;

  const BitString& operator[](std::uint8_t m) const { return m == 0 ? pk0 : pk1; }
  friend bool operator==(const LamportPublicKey&, const LamportPublicKey&) = default;
};

struct LamportKeyPair {
  LamportParams params;
  BitString sk0;
  BitString sk1;
  BitString pk0;
  BitString pk1;

  LamportPublicKey public_key() const { return {params, pk0, pk1}; }
  friend bool operator==(const LamportKeyPair&, const LamportKeyPair&) = default;
};

struct LamportSignature {
  BitString sigma;
  friend bool operator==(const LamportSignature&, const LamportSignature&) = default;
};

/// H: the "LAM" oracle truncated to n bits.
BitString lamport_hash(const LamportParams& params, const BitString& x);

LamportKeyPair lamport_keygen(const LamportParams& params, EntropySource& entropy);

/// Throws DomainError unless m is 0 or 1.
LamportSignature lamport_sign(const LamportKeyPair& kp, std::uint8_t m);

/// Throws DomainError on a signature of the wrong length or m outside {0, 1}.
bool lamport_verify(const LamportPublicKey& pk, const LamportSignature& sig, std::uint8_t m);

}  // namespace fdasig

#endif  // FDASIG_LAMPORT_HPP

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

#include "fdasig/scheme.hpp"

#include "fdasig/errors.hpp"

namespace fdasig {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint8_t single_bit(const BitString& message) {
  if (message.size() != 1) throw DomainError("Lamport messages are exactly one bit");
  return message.bit(0) ? 1 : 0;
}

}  // namespace

std::string_view scheme_name(Scheme s) { return s == Scheme::kLamport ? "lamport" : "wots"; }

Scheme scheme_of(const SchemeParams& p) {
  return std::holds_alternative<LamportParams>(p) ? Scheme::kLamport : Scheme::kWots;
}

Scheme scheme_of(const PublicKey& pk) {
  return std::holds_alternative<LamportPublicKey>(pk) ? Scheme::kLamport : Scheme::kWots;
}

SchemeParams params_of(const PublicKey& pk) {
  return std::visit([](const auto& k) -> SchemeParams { return k.params; }, pk);
}

SchemeParams params_of(const KeyPair& kp) {
  return std::visit([](const auto& k) -> SchemeParams { return k.params; }, kp);
}

PublicKey public_key(const KeyPair& kp) {
  return std::visit([](const auto& k) -> PublicKey { return k.public_key(); }, kp);
}

std::size_t message_bits(const SchemeParams& p) {
  return std::visit(Overloaded{[](const LamportParams&) -> std::size_t { return 1; },
                               [](const WotsParams& w) -> std::size_t { return w.L; }},
                    p);
}

BitString lamport_message(std::uint8_t m) {
  if (m > 1) throw DomainError("Lamport messages are single bits");
  return BitString::from_uint(m, 1);
}

KeyPair keygen(const SchemeParams& params, EntropySource& entropy) {
  return std::visit(
      Overloaded{[&](const LamportParams& p) -> KeyPair { return lamport_keygen(p, entropy); },
                 [&](const WotsParams& p) -> KeyPair { return wots_keygen(p, entropy); }},
      params);
}

Signature sign(const KeyPair& kp, const BitString& message) {
  return std::visit(Overloaded{[&](const LamportKeyPair& k) -> Signature {
                                 return lamport_sign(k, single_bit(message));
                               },
                               [&](const WotsKeyPair& k) -> Signature {
                                 return wots_sign(k, message);
                               }},
                    kp);
}

bool verify(const PublicKey& pk, const Signature& sig, const BitString& message) {
  if (message.size() != message_bits(params_of(pk))) return false;
  if (const auto* lpk = std::get_if<LamportPublicKey>(&pk)) {
    const auto* lsig = std::get_if<LamportSignature>(&sig);
    if (lsig == nullptr || lsig->sigma.size() != lpk->params.sk_bits()) return false;
    if (lpk->pk0.size() != lpk->params.pk_bits() || lpk->pk1.size() != lpk->params.pk_bits()) {
      return false;
    }
    return lamport_verify(*lpk, *lsig, single_bit(message));
  }
  const auto& wpk = std::get<WotsPublicKey>(pk);
  const auto* wsig = std::get_if<WotsSignature>(&sig);
  return wsig != nullptr && wots_verify(wpk, *wsig, message);
}

}  // namespace fdasig

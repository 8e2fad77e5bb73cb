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

#include "fdasig/wots.hpp"

#include "fdasig/errors.hpp"

namespace fdasig {

Digits to_base_w(const BitString& message, const WotsParams& params) {
  if (message.size() != params.L) {
    throw DomainError("message must have exactly L = " + std::to_string(params.L) + " bits");
  }
  Digits m(params.l1, 0);
  for (unsigned i = 0; i < params.l1; ++i) {
    unsigned v = 0;
    for (unsigned k = 0; k < params.nu; ++k) v = (v << 1) | (message.bit(i * params.nu + k) ? 1u : 0u);
    m[i] = v;
  }
  return m;
}

Checksum checksum(std::span<const unsigned> digits, const WotsParams& params) {
  Checksum c;
  for (unsigned d : digits) {
    if (d >= params.w) throw DomainError("digit outside [0, w)");
    c.value += params.w - 1 - d;
  }
  c.digits.assign(params.l2, 0);
  std::uint64_t rest = c.value;
  for (unsigned i = params.l2; i-- > 0;) {
    c.digits[i] = static_cast<unsigned>(rest % params.w);
    rest /= params.w;
  }
  // Unreachable while l2 is derived as floor(log2(l1 (w-1)) / nu) + 1.
  if (rest != 0) throw InvalidParams("checksum does not fit in l2 digits");
  return c;
}

ExtendedDigits extend(const BitString& message, const WotsParams& params) {
  ExtendedDigits e;
  e.l1 = params.l1;
  e.b = to_base_w(message, params);
  const Checksum c = checksum(e.b, params);
  e.b.insert(e.b.end(), c.digits.begin(), c.digits.end());
  return e;
}

WotsKeyPair wots_keygen(const WotsParams& params, EntropySource& entropy) {
  WotsKeyPair kp;
  kp.params = params;
  entropy.fill(kp.r);
  kp.sk.reserve(params.l);
  kp.pk.reserve(params.l);
  for (unsigned i = 0; i < params.l; ++i) {
    kp.sk.push_back(entropy.random_bits(params.sk_bits()));
    kp.pk.push_back(chain(params, kp.r, 0, params.w - 1, kp.sk.back()));
  }
  return kp;
}

WotsSignature wots_sign(const WotsKeyPair& kp, const BitString& message) {
  const ExtendedDigits e = extend(message, kp.params);
  WotsSignature sig;
  sig.sigma.reserve(kp.params.l);
  for (unsigned i = 0; i < kp.params.l; ++i) {
    sig.sigma.push_back(chain(kp.params, kp.r, 0, e.b[i], kp.sk[i]));
  }
  return sig;
}

bool wots_verify(const WotsPublicKey& pk, const WotsSignature& sig, const BitString& message) {
  const WotsParams& p = pk.params;
  const ExtendedDigits e = extend(message, p);
  if (sig.sigma.size() != p.l || pk.pk.size() != p.l) return false;
  for (unsigned i = 0; i < p.l; ++i) {
    if (sig.sigma[i].size() != p.bits_at(e.b[i])) return false;
  }
  for (unsigned i = 0; i < p.l; ++i) {
    if (chain(p, pk.r, e.b[i], p.w - 1, sig.sigma[i]) != pk.pk[i]) return false;
  }
  return true;
}

}  // namespace fdasig

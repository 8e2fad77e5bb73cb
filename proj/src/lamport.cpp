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

#include "fdasig/lamport.hpp"

#include "fdasig/errors.hpp"
#include "fdasig/oracle.hpp"

namespace fdasig {

namespace {

void check_bit(std::uint8_t m) {
  if (m > 1) throw DomainError("Lamport messages are single bits");
}

}  // namespace

BitString lamport_hash(const LamportParams& params, const BitString& x) {
  if (x.size() != params.sk_bits()) throw DomainError("H expects n + delta bits");
  return oracle_eval(OracleTag::lamport(), x, params.pk_bits());
}

LamportKeyPair lamport_keygen(const LamportParams& params, EntropySource& entropy) {
  LamportKeyPair kp;
  kp.params = params;
  kp.sk0 = entropy.random_bits(params.sk_bits());
  kp.sk1 = entropy.random_bits(params.sk_bits());
  kp.pk0 = lamport_hash(params, kp.sk0);
  kp.pk1 = lamport_hash(params, kp.sk1);
  return kp;
}

LamportSignature lamport_sign(const LamportKeyPair& kp, std::uint8_t m) {
  check_bit(m);
  return {m == 0 ? kp.sk0 : kp.sk1};
}

bool lamport_verify(const LamportPublicKey& pk, const LamportSignature& sig, std::uint8_t m) {
  check_bit(m);
  if (sig.sigma.size() != pk.params.sk_bits()) {
    throw DomainError("Lamport signature must carry n + delta bits");
  }
  return lamport_hash(pk.params, sig.sigma) == pk[m];
}

}  // namespace fdasig

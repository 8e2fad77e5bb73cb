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

#include "fdasig/adversary.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <variant>

#include "fdasig/errors.hpp"
#include "fdasig/oracle.hpp"

namespace fdasig {

ForgeryBudget ForgeryBudget::make(unsigned max_domain_bits) {
  if (max_domain_bits > kMaxBudgetBits) {
    throw InvalidParams("max_domain_bits is capped at " + std::to_string(kMaxBudgetBits));
  }
  return ForgeryBudget{max_domain_bits};
}

void ForgeryBudget::require(std::size_t domain_bits) const {
  if (domain_bits > max_domain_bits) {
    throw BudgetExceeded("exhaustive search over " + std::to_string(domain_bits) +
                         " bits exceeds the budget of " + std::to_string(max_domain_bits) +
                         " bits");
  }
}

OracleSpec OracleSpec::lamport(const LamportParams& params) {
  OracleSpec s;
  s.lamport_ = params;
  s.domain_bits_ = params.sk_bits();
  s.image_bits_ = params.pk_bits();
  return s;
}

OracleSpec OracleSpec::chain_segment(const WotsParams& params, const Seed& r, unsigned from,
                                     unsigned to) {
  if (from > to || to > params.w - 1) throw IndexError("invalid chain segment");
  OracleSpec s;
  s.wots_ = params;
  s.r_ = r;
  s.from_ = from;
  s.to_ = to;
  s.domain_bits_ = params.bits_at(from);
  s.image_bits_ = params.bits_at(to);
  return s;
}

BitString OracleSpec::operator()(const BitString& x) const {
  if (lamport_) return oracle_eval(OracleTag::lamport(), x, image_bits_);
  return chain(*wots_, r_, from_, to_, x);
}

// Buffer-level evaluator; one per worker thread.
class OracleSpecEvaluator {
 public:
  explicit OracleSpecEvaluator(const OracleSpec& spec) {
    if (spec.lamport_) {
      impl_.emplace<PreparedOracle>(OracleTag::lamport(), spec.domain_bits_, spec.image_bits_);
    } else {
      impl_.emplace<PreparedChain>(*spec.wots_, spec.r_, spec.from_, spec.to_);
    }
  }

  void eval(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
    std::visit(
        [&](auto& e) {
          if constexpr (!std::is_same_v<std::decay_t<decltype(e)>, std::monostate>) e.eval(in, out);
        },
        impl_);
  }

 private:
  std::variant<std::monostate, PreparedOracle, PreparedChain> impl_;
};

namespace {

std::vector<std::uint64_t> scan_range(const OracleSpec& spec, const BitString& y0,
                                      std::uint64_t lo, std::uint64_t hi) {
  OracleSpecEvaluator eval(spec);
  const std::size_t d = spec.domain_bits();
  std::vector<std::uint8_t> in(bytes_for_bits(d));
  std::vector<std::uint8_t> out(bytes_for_bits(spec.image_bits()));
  const auto target = y0.bytes();
  std::vector<std::uint64_t> hits;
  for (std::uint64_t x = lo; x < hi; ++x) {
    write_uint_msb_first(x, d, in);
    eval.eval(in, out);
    if (std::equal(out.begin(), out.end(), target.begin())) hits.push_back(x);
  }
  return hits;
}

}  // namespace

PreimageSet enumerate_preimages(const OracleSpec& spec, const BitString& y0,
                                std::size_t domain_bits, const ForgeryBudget& budget,
                                unsigned threads) {
  budget.require(domain_bits);
  if (domain_bits != spec.domain_bits()) {
    throw DomainError("domain_bits " + std::to_string(domain_bits) +
                      " does not match the map's input width " +
                      std::to_string(spec.domain_bits()));
  }
  if (y0.size() != spec.image_bits()) throw DomainError("target has the wrong length");

  const std::uint64_t total = std::uint64_t{1} << domain_bits;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
  std::vector<std::vector<std::uint64_t>> parts(threads);
  if (threads == 1) {
    parts[0] = scan_range(spec, y0, 0, total);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = total * t / threads;
      const std::uint64_t hi = total * (t + 1) / threads;
      workers.emplace_back([&, t, lo, hi] { parts[t] = scan_range(spec, y0, lo, hi); });
    }
  }

  PreimageSet ps;
  ps.target = y0;
  ps.domain_bits = domain_bits;
  for (const auto& part : parts) {
    for (std::uint64_t x : part) ps.members.push_back(BitString::from_uint(x, domain_bits));
  }
  if (ps.members.empty()) throw EmptyPreimageSet("target has no preimage in the domain");
  return ps;
}

BitString sample_preimage(const PreimageSet& ps, EntropySource& rng) {
  if (ps.members.empty()) throw EmptyPreimageSet("cannot sample from an empty preimage set");
  return ps.members[rng.uniform_below(ps.members.size())];
}

LamportSignature forge_lamport(const LamportPublicKey& pk, std::uint8_t known_message,
                               const LamportSignature& /*known_sig*/,
                               std::uint8_t target_message, const ForgeryBudget& budget,
                               EntropySource& rng) {
  if (known_message > 1 || target_message > 1) throw DomainError("Lamport messages are bits");
  if (known_message == target_message) throw DomainError("target must differ from the known message");
  const auto spec = OracleSpec::lamport(pk.params);
  const auto ps = enumerate_preimages(spec, pk[target_message], spec.domain_bits(), budget);
  return {sample_preimage(ps, rng)};
}

WotsSignature forge_wots(const WotsPublicKey& pk, const BitString& known_message,
                         const WotsSignature& known_sig, const BitString& target_message,
                         const ForgeryBudget& budget, EntropySource& rng) {
  const WotsParams& p = pk.params;
  if (known_message == target_message) throw DomainError("target must differ from the known message");
  const ExtendedDigits known = extend(known_message, p);
  const ExtendedDigits target = extend(target_message, p);
  if (known_sig.sigma.size() != p.l) throw DomainError("known signature has the wrong element count");

  for (unsigned i = 0; i < p.l; ++i) {
    if (target.b[i] < known.b[i]) budget.require(p.bits_at(target.b[i]));
  }

  WotsSignature forged;
  forged.sigma.reserve(p.l);
  for (unsigned i = 0; i < p.l; ++i) {
    const unsigned b = known.b[i];
    const unsigned b_star = target.b[i];
    if (b_star >= b) {
      forged.sigma.push_back(chain(p, pk.r, b, b_star, known_sig.sigma[i]));
    } else {
      const auto spec = OracleSpec::chain_segment(p, pk.r, b_star, p.w - 1);
      const auto ps = enumerate_preimages(spec, pk.pk[i], spec.domain_bits(), budget);
      forged.sigma.push_back(sample_preimage(ps, rng));
    }
  }
  return forged;
}

Signature forge(const PublicKey& pk, const BitString& known_message, const Signature& known_sig,
                const BitString& target_message, const ForgeryBudget& budget,
                EntropySource& rng) {
  if (const auto* lpk = std::get_if<LamportPublicKey>(&pk)) {
    if (known_message.size() != 1 || target_message.size() != 1) {
      throw DomainError("Lamport messages are exactly one bit");
    }
    const auto* lsig = std::get_if<LamportSignature>(&known_sig);
    if (lsig == nullptr) throw DomainError("known signature is not a Lamport signature");
    return forge_lamport(*lpk, known_message.bit(0), *lsig, target_message.bit(0), budget, rng);
  }
  const auto* wsig = std::get_if<WotsSignature>(&known_sig);
  if (wsig == nullptr) throw DomainError("known signature is not a W-OTS+ signature");
  return forge_wots(std::get<WotsPublicKey>(pk), known_message, *wsig, target_message, budget,
                    rng);
}

}  // namespace fdasig

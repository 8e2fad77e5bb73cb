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

#include "fdasig/oracle.hpp"

#include <algorithm>
#include <string>

#include "fdasig/errors.hpp"

namespace fdasig {

namespace {

void put_be(std::vector<std::uint8_t>& buf, std::uint64_t v, int nbytes) {
  for (int i = nbytes - 1; i >= 0; --i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::vector<std::uint8_t> tag_header(const OracleTag& tag, std::size_t in_bits,
                                     std::size_t out_bits) {
  std::vector<std::uint8_t> t;
  const auto label = tag.label();
  t.insert(t.end(), label.begin(), label.end());
  t.push_back(0x00);
  if (tag.seed()) t.insert(t.end(), tag.seed()->begin(), tag.seed()->end());
  t.push_back(static_cast<std::uint8_t>(tag.index().value_or(0)));
  put_be(t, out_bits, 8);
  put_be(t, in_bits, 8);
  return t;
}

// buf = T || 4 counter bytes; fills `out` from the digest stream.
void squeeze(Sha256& sha, std::vector<std::uint8_t>& buf, std::size_t out_bits,
             std::span<std::uint8_t> out) {
  const std::size_t ctr_at = buf.size() - 4;
  std::size_t written = 0;
  for (std::uint32_t counter = 0; written < out.size(); ++counter) {
    buf[ctr_at + 0] = static_cast<std::uint8_t>(counter >> 24);
    buf[ctr_at + 1] = static_cast<std::uint8_t>(counter >> 16);
    buf[ctr_at + 2] = static_cast<std::uint8_t>(counter >> 8);
    buf[ctr_at + 3] = static_cast<std::uint8_t>(counter);
    const Sha256Digest d = sha.digest(buf);
    const std::size_t take = std::min(d.size(), out.size() - written);
    std::copy_n(d.begin(), take, out.begin() + static_cast<std::ptrdiff_t>(written));
    written += take;
  }
  clear_pad_bits(out, out_bits);
}

Sha256& thread_sha() {
  thread_local Sha256 sha;
  return sha;
}

}  // namespace

OracleTag OracleTag::lamport() { return OracleTag{}; }

OracleTag OracleTag::wots_step(const Seed& r, unsigned index) {
  if (index < 1 || index > 255) {
    throw IndexError("chain index " + std::to_string(index) + " outside [1, 255]");
  }
  OracleTag t;
  t.wots_ = true;
  t.seed_ = r;
  t.index_ = index;
  return t;
}

std::string_view OracleTag::label() const { return wots_ ? "WOTS-F" : "LAM"; }

BitString oracle_eval(const OracleTag& tag, const BitString& x, std::size_t out_bits) {
  if (out_bits < 1) throw DomainError("out_bits must be positive");
  std::vector<std::uint8_t> buf = tag_header(tag, x.size(), out_bits);
  buf.insert(buf.end(), x.bytes().begin(), x.bytes().end());
  buf.resize(buf.size() + 4);
  std::vector<std::uint8_t> out(bytes_for_bits(out_bits));
  squeeze(thread_sha(), buf, out_bits, out);
  return BitString(out_bits, std::move(out));
}

PreparedOracle::PreparedOracle(const OracleTag& tag, std::size_t in_bits, std::size_t out_bits)
    : in_bits_(in_bits), out_bits_(out_bits) {
  if (out_bits < 1) throw DomainError("out_bits must be positive");
  buf_ = tag_header(tag, in_bits, out_bits);
  payload_offset_ = buf_.size();
  buf_.resize(buf_.size() + bytes_for_bits(in_bits) + 4);
}

void PreparedOracle::eval(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  std::copy(in.begin(), in.end(), buf_.begin() + static_cast<std::ptrdiff_t>(payload_offset_));
  squeeze(sha_, buf_, out_bits_, out);
}

BitString PreparedOracle::operator()(const BitString& x) {
  if (x.size() != in_bits_) throw DomainError("input length does not match prepared oracle");
  std::vector<std::uint8_t> out(bytes_for_bits(out_bits_));
  eval(x.bytes(), out);
  return BitString(out_bits_, std::move(out));
}

BitString f_step(const WotsParams& params, const Seed& r, unsigned i, const BitString& x) {
  if (i < 1 || i > params.w - 1) {
    throw IndexError("chain step " + std::to_string(i) + " outside [1, w-1]");
  }
  if (x.size() != params.bits_at(i - 1)) {
    throw DomainError("f^(" + std::to_string(i) + ") expects " +
                      std::to_string(params.bits_at(i - 1)) + " bits, got " +
                      std::to_string(x.size()));
  }
  return oracle_eval(OracleTag::wots_step(r, i), x, params.bits_at(i));
}

BitString chain(const WotsParams& params, const Seed& r, unsigned from, unsigned to,
                const BitString& x) {
  if (from > to || to > params.w - 1) {
    throw IndexError("chain range [" + std::to_string(from) + ", " + std::to_string(to) +
                     "] invalid for w = " + std::to_string(params.w));
  }
  if (x.size() != params.bits_at(from)) {
    throw DomainError("chain position " + std::to_string(from) + " holds " +
                      std::to_string(params.bits_at(from)) + "-bit values, got " +
                      std::to_string(x.size()));
  }
  BitString v = x;
  for (unsigned i = from + 1; i <= to; ++i) v = f_step(params, r, i, v);
  return v;
}

PreparedChain::PreparedChain(const WotsParams& params, const Seed& r, unsigned from,
                             unsigned to) {
  if (from > to || to > params.w - 1) throw IndexError("invalid chain range");
  in_bits_ = params.bits_at(from);
  out_bits_ = params.bits_at(to);
  for (unsigned i = from + 1; i <= to; ++i) {
    steps_.emplace_back(OracleTag::wots_step(r, i), params.bits_at(i - 1), params.bits_at(i));
  }
  scratch_a_.resize(bytes_for_bits(in_bits_));
  scratch_b_.resize(bytes_for_bits(in_bits_));
}

void PreparedChain::eval(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if (steps_.empty()) {
    std::copy(in.begin(), in.end(), out.begin());
    return;
  }
  std::copy(in.begin(), in.end(), scratch_a_.begin());
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    auto& step = steps_[s];
    std::span<const std::uint8_t> src(scratch_a_.data(), bytes_for_bits(step.in_bits()));
    std::span<std::uint8_t> dst(scratch_b_.data(), bytes_for_bits(step.out_bits()));
    step.eval(src, dst);
    std::swap(scratch_a_, scratch_b_);
  }
  std::copy_n(scratch_a_.begin(), bytes_for_bits(out_bits_), out.begin());
}

}  // namespace fdasig

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

#include "fdasig/sha256.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace fdasig {

namespace {

const EVP_MD* sha256_md() {
  static EVP_MD* md = EVP_MD_fetch(nullptr, "SHA256", nullptr);
  if (md == nullptr) throw std::runtime_error("SHA-256 unavailable in libcrypto");
  return md;
}

}  // namespace

struct Sha256::Impl {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  ~Impl() { EVP_MD_CTX_free(ctx); }
};

Sha256::Sha256() : impl_(std::make_unique<Impl>()) {
  if (impl_->ctx == nullptr) throw std::bad_alloc();
}
Sha256::~Sha256() = default;
Sha256::Sha256(Sha256&&) noexcept = default;
Sha256& Sha256::operator=(Sha256&&) noexcept = default;

Sha256Digest Sha256::digest(std::span<const std::span<const std::uint8_t>> parts) {
  Sha256Digest out{};
  unsigned int len = 0;
  bool ok = EVP_DigestInit_ex2(impl_->ctx, sha256_md(), nullptr) == 1;
  for (auto part : parts) {
    ok = ok && EVP_DigestUpdate(impl_->ctx, part.data(), part.size()) == 1;
  }
  ok = ok && EVP_DigestFinal_ex(impl_->ctx, out.data(), &len) == 1;
  if (!ok || len != out.size()) throw std::runtime_error("SHA-256 computation failed");
  return out;
}

Sha256Digest Sha256::digest(std::span<const std::uint8_t> data) {
  const std::span<const std::uint8_t> parts[] = {data};
  return digest(parts);
}

}  // namespace fdasig

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

#include "fdasig/params.hpp"

#include <bit>
#include <string>

#include "fdasig/errors.hpp"

namespace fdasig {

LamportParams LamportParams::make(unsigned n, unsigned delta) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  return LamportParams{n, delta};
}

WotsParams derive_wots_params(unsigned n, unsigned delta, unsigned L, unsigned nu) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  if (L < 1) throw InvalidParams("L must be at least 1");
  if (nu < 1 || nu > kMaxNu) {
    throw InvalidParams("nu must be in [1, " + std::to_string(kMaxNu) + "]");
  }
  if (L % nu != 0) {
    throw InvalidParams("L = " + std::to_string(L) + " is not a multiple of nu = " +
                        std::to_string(nu));
  }
  WotsParams p;
  p.n = n;
  p.delta = delta;
  p.L = L;
  p.nu = nu;
  p.w = 1u << nu;
  p.l1 = L / nu;
  // floor(log2(x) / nu) == floor(floor(log2(x)) / nu) for integer nu > 0.
  const std::uint64_t max_checksum = std::uint64_t{p.l1} * (p.w - 1);
  const unsigned log2_floor = static_cast<unsigned>(std::bit_width(max_checksum)) - 1;
  p.l2 = log2_floor / nu + 1;
  p.l = p.l1 + p.l2;
  return p;
}

}  // namespace fdasig

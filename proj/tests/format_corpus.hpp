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

#ifndef FDASIG_TESTS_FORMAT_CORPUS_HPP
#define FDASIG_TESTS_FORMAT_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "fdasig/format.hpp"
#include "fdasig/pof.hpp"

namespace fdasig::testing {

struct CorruptFile {
  std::string name;
  std::string text;
  std::function<void(std::string_view)> parse;
};

inline std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  if (pos == std::string::npos) throw std::logic_error("corpus anchor missing: " + from);
  return s.replace(pos, from.size(), to);
}

inline const std::string kLamportSk =
    "FDA-SIG v1\nkind: secret-key\nscheme: lamport\nn: 8\ndelta: 4\n"
    "sk.0: a2f0\nsk.1: 6680\npk.0: 45\npk.1: 6c\n";

inline const std::string kLamportSig =
    "FDA-SIG v1\nkind: signature\nscheme: lamport\nn: 8\ndelta: 4\nsigma: 6680\nmessage: 80\n";

inline const std::string kWotsSig =
    "FDA-SIG v1\nkind: signature\nscheme: wots\nn: 6\ndelta: 2\nL: 4\nnu: 2\n"
    "sigma.1: 9800\nsigma.2: 14c0\nsigma.3: 8a80\nsigma.4: 6240\nmessage: 50\n";

inline const std::string kWotsPk =
    "FDA-SIG v1\nkind: public-key\nscheme: wots\nn: 6\ndelta: 2\nL: 4\nnu: 2\n"
    "r: f3f10b14cb6e6149ddf3ca1155cbbb8c\npk.1: 98\npk.2: a8\npk.3: 1c\npk.4: 98\n";

/// Hand-corrupted variants of valid files; every one must raise FormatError.
inline std::vector<CorruptFile> corrupted_files() {
  const auto sk = [](std::string_view t) { parse_secret_key(t); };
  const auto pk = [](std::string_view t) { parse_public_key(t); };
  const auto sig = [](std::string_view t) { parse_signature(t); };
  const auto pof2 = [](std::string_view t) { parse_pof2(t); };
  std::string crlf;
  for (char c : kLamportSk) crlf += c == '\n' ? std::string("\r\n") : std::string(1, c);
  return {
      {"empty", "", sk},
      {"future version", replace_once(kLamportSk, "v1", "v2"), sk},
      {"missing header", kLamportSk.substr(11), sk},
      {"no final newline", kLamportSk.substr(0, kLamportSk.size() - 1), sk},
      {"crlf", crlf, sk},
      {"trailing space", replace_once(kLamportSk, "pk.0: 45", "pk.0: 45 "), sk},
      {"blank line", replace_once(kLamportSk, "pk.0", "\npk.0"), sk},
      {"truncated hex", replace_once(kLamportSk, "sk.0: a2f0", "sk.0: a2f"), sk},
      {"uppercase hex", replace_once(kLamportSk, "sk.0: a2f0", "sk.0: A2F0"), sk},
      {"non-hex digit", replace_once(kLamportSk, "sk.1: 6680", "sk.1: 66g0"), sk},
      {"pad bits set", replace_once(kLamportSk, "sk.0: a2f0", "sk.0: a2f1"), sk},
      {"unknown scheme", replace_once(kLamportSk, "lamport", "merkle"), sk},
      {"kind mismatch", kWotsPk, sk},
      {"non-canonical decimal", replace_once(kLamportSk, "n: 8", "n: 08"), sk},
      {"overflowing decimal", replace_once(kLamportSk, "n: 8", "n: 99999999999999999999"), sk},
      {"zero n", replace_once(kLamportSk, "n: 8", "n: 0"), sk},
      {"missing field", replace_once(kLamportSk, "pk.1: 6c\n", ""), sk},
      {"duplicate field", replace_once(kLamportSk, "pk.1: 6c\n", "pk.1: 6c\npk.1: 6c\n"), sk},
      {"unknown field", kLamportSk + "comment: 00\n", sk},
      {"swapped fields",
       replace_once(kLamportSk, "sk.0: a2f0\nsk.1: 6680", "sk.1: 6680\nsk.0: a2f0"), sk},
      {"public part mismatch", replace_once(kLamportSk, "pk.0: 45", "pk.0: 46"), sk},
      {"nu out of range", replace_once(kWotsPk, "nu: 2", "nu: 9"), pk},
      {"L not a multiple of nu", replace_once(kWotsPk, "L: 4", "L: 5"), pk},
      {"short seed", replace_once(kWotsPk, "r: f3f1", "r: f3"), pk},
      {"missing chain element", replace_once(kWotsSig, "sigma.4: 6240\n", ""), sig},
      {"message too long", replace_once(kLamportSig, "message: 80", "message: 8000"), sig},
      {"message pad bits", replace_once(kLamportSig, "message: 80", "message: c0"), sig},
      {"wrong element length", replace_once(kWotsSig, "sigma.1: 9800", "sigma.1: 98"), sig},
      {"truncated evidence", kWotsPk, pof2},
  };
}

inline SchemeParams random_params(EntropySource& rng) {
  if (rng.uniform_below(2) == 0) {
    return LamportParams::make(1 + static_cast<unsigned>(rng.uniform_below(24)),
                               static_cast<unsigned>(rng.uniform_below(9)));
  }
  const auto nu = 1 + static_cast<unsigned>(rng.uniform_below(4));
  return derive_wots_params(1 + static_cast<unsigned>(rng.uniform_below(16)),
                            static_cast<unsigned>(rng.uniform_below(5)),
                            nu * (1 + static_cast<unsigned>(rng.uniform_below(4))), nu);
}

inline Signature random_like(const Signature& sig, EntropySource& rng) {
  return std::visit(
      [&](const auto& s) -> Signature {
        auto out = s;
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LamportSignature>) {
          out.sigma = rng.random_bits(s.sigma.size());
        } else {
          for (auto& e : out.sigma) e = rng.random_bits(e.size());
        }
        return out;
      },
      sig);
}

/// Serializes a random structure of the given kind, parses it back and
/// re-serializes. Returns false on any difference.
inline bool round_trips(FileKind kind, EntropySource& rng) {
  const SchemeParams params = random_params(rng);
  const KeyPair kp = keygen(params, rng);
  const PublicKey pk = public_key(kp);
  const std::size_t L = message_bits(params);
  const BitString m = rng.random_bits(L);
  BitString m2 = rng.random_bits(L);
  switch (kind) {
    case FileKind::kSecretKey: {
      const std::string text = serialize(kp);
      const KeyPair back = parse_secret_key(text);
      return back == kp && serialize(back) == text;
    }
    case FileKind::kPublicKey: {
      const std::string text = serialize(pk);
      const PublicKey back = parse_public_key(text);
      return back == pk && serialize(back) == text;
    }
    case FileKind::kSignature: {
      const SignedMessage sm{params, m, sign(kp, m)};
      const std::string text = serialize(sm);
      const SignedMessage back = parse_signature(text);
      return back == sm && serialize(back) == text;
    }
    case FileKind::kPof1: {
      const PofEvidenceI e = make_pof1(pk, sign(kp, m), m, m2);
      const std::string text = serialize(e);
      const PofEvidenceI back = parse_pof1(text);
      return back == e && serialize(back) == text;
    }
    case FileKind::kPof2: {
      const Signature legit = sign(kp, m2);
      const PofEvidenceII e{pk, legit, random_like(legit, rng), m2};
      const std::string text = serialize(e);
      const PofEvidenceII back = parse_pof2(text);
      return back == e && serialize(back) == text;
    }
  }
  return false;
}

}  // namespace fdasig::testing

#endif  // FDASIG_TESTS_FORMAT_CORPUS_HPP

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

#include "fdasig/format.hpp"

#include <charconv>
#include <optional>
#include <utility>
#include <vector>

#include "fdasig/errors.hpp"

namespace fdasig {

namespace {

constexpr std::string_view kMagic = "FDA-SIG";
constexpr std::string_view kVersion = "v1";

struct Field {
  std::string name;
  std::string value;
  std::size_t line;
};

struct Document {
  FileKind kind;
  SchemeParams params;
  std::vector<Field> fields;
};

// ---- writing --------------------------------------------------------------

class Writer {
 public:
  Writer(FileKind kind, const SchemeParams& params) {
    out_ += std::string(kMagic) + " " + std::string(kVersion) + "\n";
    line("kind", file_kind_name(kind));
    line("scheme", scheme_name(scheme_of(params)));
    std::visit(
        [&](const auto& p) {
          line("n", std::to_string(p.n));
          line("delta", std::to_string(p.delta));
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, WotsParams>) {
            line("L", std::to_string(p.L));
            line("nu", std::to_string(p.nu));
          }
        },
        params);
  }

  void line(std::string_view name, std::string_view value) {
    out_ += name;
    out_ += ": ";
    out_ += value;
    out_ += '\n';
  }
  void bits(std::string_view name, const BitString& b) { line(name, b.to_hex()); }
  void seed(const Seed& r) { bits("r", BitString(r.size() * 8, {r.begin(), r.end()})); }

  void public_key(const PublicKey& pk) {
    if (const auto* l = std::get_if<LamportPublicKey>(&pk)) {
      bits("pk.0", l->pk0);
      bits("pk.1", l->pk1);
    } else {
      const auto& w = std::get<WotsPublicKey>(pk);
      seed(w.r);
      for (std::size_t i = 0; i < w.pk.size(); ++i) bits("pk." + std::to_string(i + 1), w.pk[i]);
    }
  }

  void signature(std::string_view prefix, const Signature& sig) {
    if (const auto* l = std::get_if<LamportSignature>(&sig)) {
      bits(prefix, l->sigma);
    } else {
      const auto& w = std::get<WotsSignature>(sig);
      for (std::size_t i = 0; i < w.sigma.size(); ++i) {
        bits(std::string(prefix) + "." + std::to_string(i + 1), w.sigma[i]);
      }
    }
  }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

// ---- reading --------------------------------------------------------------

std::optional<unsigned> parse_decimal(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) return std::nullopt;
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::pair<std::string_view, std::size_t>> split_lines(std::string_view text) {
  if (text.empty()) throw FormatError(0, "empty file");
  if (text.back() != '\n') throw FormatError(0, "missing trailing LF");
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t start = 0;
  std::size_t no = 1;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view l = text.substr(start, end - start);
    if (l.find('\r') != std::string_view::npos) throw FormatError(no, "CR characters are not allowed");
    if (l.empty()) throw FormatError(no, "empty line");
    if (l.back() == ' ' || l.back() == '\t') throw FormatError(no, "trailing whitespace");
    lines.emplace_back(l, no);
    start = end + 1;
    ++no;
  }
  return lines;
}

std::pair<std::string, std::string> split_field(std::string_view line, std::size_t no) {
  const std::size_t colon = line.find(": ");
  if (colon == std::string_view::npos || colon == 0) {
    throw FormatError(no, "expected 'name: value'");
  }
  return {std::string(line.substr(0, colon)), std::string(line.substr(colon + 2))};
}

Document read_document(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto next = [&](std::string_view what) -> std::pair<std::string_view, std::size_t> {
    if (i >= lines.size()) throw FormatError(lines.size() + 1, "unexpected end of file, expected " + std::string(what));
    return lines[i++];
  };

  const auto [magic, magic_no] = next("header");
  if (magic.substr(0, kMagic.size() + 1) != std::string(kMagic) + " ") {
    throw FormatError(magic_no, "missing 'FDA-SIG v1' header");
  }
  if (magic.substr(kMagic.size() + 1) != kVersion) {
    throw FormatError(magic_no, "unsupported version '" + std::string(magic.substr(kMagic.size() + 1)) + "'");
  }

  auto expect = [&](std::string_view name) -> std::pair<std::string, std::size_t> {
    const auto [l, no] = next(name);
    auto [key, value] = split_field(l, no);
    if (key != name) throw FormatError(no, "expected field '" + std::string(name) + "', got '" + key + "'");
    return {value, no};
  };
  auto expect_uint = [&](std::string_view name) {
    const auto [value, no] = expect(name);
    const auto v = parse_decimal(value);
    if (!v) throw FormatError(no, "'" + std::string(name) + "' must be a canonical decimal integer");
    return std::pair{*v, no};
  };

  Document doc{};
  const auto [kind, kind_no] = expect("kind");
  if (kind == "secret-key") doc.kind = FileKind::kSecretKey;
  else if (kind == "public-key") doc.kind = FileKind::kPublicKey;
  else if (kind == "signature") doc.kind = FileKind::kSignature;
  else if (kind == "pof-1") doc.kind = FileKind::kPof1;
  else if (kind == "pof-2") doc.kind = FileKind::kPof2;
  else throw FormatError(kind_no, "unknown kind '" + kind + "'");

  const auto [scheme, scheme_no] = expect("scheme");
  if (scheme != "lamport" && scheme != "wots") {
    throw FormatError(scheme_no, "unknown scheme '" + scheme + "'");
  }
  const auto [n, n_no] = expect_uint("n");
  const auto [delta, delta_no] = expect_uint("delta");
  try {
    if (scheme == "lamport") {
      doc.params = LamportParams::make(n, delta);
    } else {
      const auto [L, L_no] = expect_uint("L");
      const auto [nu, nu_no] = expect_uint("nu");
      doc.params = derive_wots_params(n, delta, L, nu);
    }
  } catch (const InvalidParams& e) {
    throw FormatError(n_no, std::string("invalid parameters: ") + e.what());
  }

  while (i < lines.size()) {
    const auto [l, no] = lines[i++];
    auto [key, value] = split_field(l, no);
    doc.fields.push_back({std::move(key), std::move(value), no});
  }
  return doc;
}

// Consumes the fields of a Document in order, checking names and lengths.
class FieldReader {
 public:
  explicit FieldReader(const Document& doc) : doc_(doc) {}

  const Field& take(const std::string& name) {
    if (pos_ >= doc_.fields.size()) {
      const std::size_t line = doc_.fields.empty() ? 0 : doc_.fields.back().line + 1;
      throw FormatError(line, "missing field '" + name + "'");
    }
    const Field& f = doc_.fields[pos_++];
    if (f.name != name) throw FormatError(f.line, "expected field '" + name + "', got '" + f.name + "'");
    return f;
  }

  static BitString decode(const Field& f, std::size_t bits) {
    for (char c : f.value) {
      if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) {
        throw FormatError(f.line, "'" + f.name + "' is not lowercase hex");
      }
    }
    try {
      return BitString::from_hex(f.value, bits);
    } catch (const DomainError& e) {
      throw FormatError(f.line, "'" + f.name + "': " + e.what());
    }
  }

  BitString bits(const std::string& name, std::size_t bits) { return decode(take(name), bits); }

  Seed seed() {
    const BitString b = bits("r", 128);
    Seed r{};
    std::copy(b.bytes().begin(), b.bytes().end(), r.begin());
    return r;
  }

  void finish() const {
    if (pos_ != doc_.fields.size()) {
      throw FormatError(doc_.fields[pos_].line, "unexpected field '" + doc_.fields[pos_].name + "'");
    }
  }

  PublicKey public_key() {
    if (const auto* p = std::get_if<LamportParams>(&doc_.params)) {
      LamportPublicKey pk{*p, bits("pk.0", p->pk_bits()), bits("pk.1", p->pk_bits())};
      return pk;
    }
    const auto& p = std::get<WotsParams>(doc_.params);
    WotsPublicKey pk{p, seed(), {}};
    for (unsigned i = 1; i <= p.l; ++i) pk.pk.push_back(bits("pk." + std::to_string(i), p.pk_bits()));
    return pk;
  }

  // Signature element fields are collected now and decoded once the message
  // they depend on has been read.
  std::vector<const Field*> signature_fields(const std::string& prefix) {
    std::vector<const Field*> out;
    if (std::holds_alternative<LamportParams>(doc_.params)) {
      out.push_back(&take(prefix));
    } else {
      const auto& p = std::get<WotsParams>(doc_.params);
      for (unsigned i = 1; i <= p.l; ++i) out.push_back(&take(prefix + "." + std::to_string(i)));
    }
    return out;
  }

  BitString message(const std::string& name) {
    return bits(name, message_bits(doc_.params));
  }

  Signature decode_signature(const std::vector<const Field*>& fields, const BitString& message) const {
    if (const auto* p = std::get_if<LamportParams>(&doc_.params)) {
      return LamportSignature{decode(*fields[0], p->sk_bits())};
    }
    const auto& p = std::get<WotsParams>(doc_.params);
    const ExtendedDigits e = extend(message, p);
    WotsSignature sig;
    for (unsigned i = 0; i < p.l; ++i) sig.sigma.push_back(decode(*fields[i], p.bits_at(e.b[i])));
    return sig;
  }

 private:
  const Document& doc_;
  std::size_t pos_ = 0;
};

Document read_kind(std::string_view text, FileKind expected) {
  Document doc = read_document(text);
  if (doc.kind != expected) {
    throw FormatError(2, "expected kind '" + std::string(file_kind_name(expected)) + "', got '" +
                             std::string(file_kind_name(doc.kind)) + "'");
  }
  return doc;
}

}  // namespace

std::string_view file_kind_name(FileKind k) {
  switch (k) {
    case FileKind::kSecretKey: return "secret-key";
    case FileKind::kPublicKey: return "public-key";
    case FileKind::kSignature: return "signature";
    case FileKind::kPof1: return "pof-1";
    case FileKind::kPof2: return "pof-2";
  }
  return "?";
}

std::string serialize(const KeyPair& kp) {
  Writer w(FileKind::kSecretKey, params_of(kp));
  if (const auto* l = std::get_if<LamportKeyPair>(&kp)) {
    w.bits("sk.0", l->sk0);
    w.bits("sk.1", l->sk1);
    w.bits("pk.0", l->pk0);
    w.bits("pk.1", l->pk1);
  } else {
    const auto& k = std::get<WotsKeyPair>(kp);
    w.seed(k.r);
    for (std::size_t i = 0; i < k.sk.size(); ++i) w.bits("sk." + std::to_string(i + 1), k.sk[i]);
    for (std::size_t i = 0; i < k.pk.size(); ++i) w.bits("pk." + std::to_string(i + 1), k.pk[i]);
  }
  return w.take();
}

std::string serialize(const PublicKey& pk) {
  Writer w(FileKind::kPublicKey, params_of(pk));
  w.public_key(pk);
  return w.take();
}

std::string serialize(const SignedMessage& sm) {
  Writer w(FileKind::kSignature, sm.params);
  w.signature("sigma", sm.sigma);
  w.bits("message", sm.message);
  return w.take();
}

std::string serialize(const PofEvidenceI& e) {
  Writer w(FileKind::kPof1, params_of(e.pk));
  w.public_key(e.pk);
  w.signature("sigma_star", e.sigma_star);
  w.bits("message", e.message);
  w.bits("message_star", e.message_star);
  return w.take();
}

std::string serialize(const PofEvidenceII& e) {
  Writer w(FileKind::kPof2, params_of(e.pk));
  w.public_key(e.pk);
  w.signature("sigma_star", e.sigma_star);
  w.signature("sigma_tilde_star", e.sigma_tilde_star);
  w.bits("message_star", e.message_star);
  return w.take();
}

FileKind peek_kind(std::string_view text) { return read_document(text).kind; }

KeyPair parse_secret_key(std::string_view text) {
  const Document doc = read_kind(text, FileKind::kSecretKey);
  FieldReader in(doc);
  if (const auto* p = std::get_if<LamportParams>(&doc.params)) {
    LamportKeyPair kp;
    kp.params = *p;
    kp.sk0 = in.bits("sk.0", p->sk_bits());
    kp.sk1 = in.bits("sk.1", p->sk_bits());
    const Field& f0 = in.take("pk.0");
    const Field& f1 = in.take("pk.1");
    kp.pk0 = FieldReader::decode(f0, p->pk_bits());
    kp.pk1 = FieldReader::decode(f1, p->pk_bits());
    in.finish();
    if (lamport_hash(*p, kp.sk0) != kp.pk0) throw FormatError(f0.line, "pk.0 does not match sk.0");
    if (lamport_hash(*p, kp.sk1) != kp.pk1) throw FormatError(f1.line, "pk.1 does not match sk.1");
    return kp;
  }
  const auto& p = std::get<WotsParams>(doc.params);
  WotsKeyPair kp;
  kp.params = p;
  kp.r = in.seed();
  for (unsigned i = 1; i <= p.l; ++i) kp.sk.push_back(in.bits("sk." + std::to_string(i), p.sk_bits()));
  std::vector<std::size_t> pk_lines;
  for (unsigned i = 1; i <= p.l; ++i) {
    const Field& f = in.take("pk." + std::to_string(i));
    kp.pk.push_back(FieldReader::decode(f, p.pk_bits()));
    pk_lines.push_back(f.line);
  }
  in.finish();
  for (unsigned i = 0; i < p.l; ++i) {
    if (chain(p, kp.r, 0, p.w - 1, kp.sk[i]) != kp.pk[i]) {
      throw FormatError(pk_lines[i], "pk." + std::to_string(i + 1) + " does not match sk." +
                                         std::to_string(i + 1));
    }
  }
  return kp;
}

PublicKey parse_public_key(std::string_view text) {
  const Document doc = read_kind(text, FileKind::kPublicKey);
  FieldReader in(doc);
  PublicKey pk = in.public_key();
  in.finish();
  return pk;
}

SignedMessage parse_signature(std::string_view text) {
  const Document doc = read_kind(text, FileKind::kSignature);
  FieldReader in(doc);
  const auto sig_fields = in.signature_fields("sigma");
  SignedMessage sm;
  sm.params = doc.params;
  sm.message = in.message("message");
  in.finish();
  sm.sigma = in.decode_signature(sig_fields, sm.message);
  return sm;
}

PofEvidenceI parse_pof1(std::string_view text) {
  const Document doc = read_kind(text, FileKind::kPof1);
  FieldReader in(doc);
  PofEvidenceI e;
  e.pk = in.public_key();
  const auto sig_fields = in.signature_fields("sigma_star");
  e.message = in.message("message");
  e.message_star = in.message("message_star");
  in.finish();
  // A type-I signature has to fit both messages; lengths follow the first.
  e.sigma_star = in.decode_signature(sig_fields, e.message);
  return e;
}

PofEvidenceII parse_pof2(std::string_view text) {
  const Document doc = read_kind(text, FileKind::kPof2);
  FieldReader in(doc);
  PofEvidenceII e;
  e.pk = in.public_key();
  const auto star_fields = in.signature_fields("sigma_star");
  const auto tilde_fields = in.signature_fields("sigma_tilde_star");
  e.message_star = in.message("message_star");
  in.finish();
  e.sigma_star = in.decode_signature(star_fields, e.message_star);
  e.sigma_tilde_star = in.decode_signature(tilde_fields, e.message_star);
  return e;
}

}  // namespace fdasig

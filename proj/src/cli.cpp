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

#include "fdasig/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "fdasig/adversary.hpp"
#include "fdasig/analysis.hpp"
#include "fdasig/errors.hpp"
#include "fdasig/format.hpp"
#include "fdasig/scenario.hpp"

namespace fdasig::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct SchemeFlags {
  std::string scheme;
  unsigned n = 0;
  unsigned delta = 0;
  std::optional<unsigned> L;
  std::optional<unsigned> nu;

  void add_to(CLI::App* app) {
    app->add_option("--scheme", scheme, "lamport or wots")
        ->required()
        ->check(CLI::IsMember({"lamport", "wots"}));
    app->add_option("--n", n, "hash output length in bits")->required();
    app->add_option("--delta", delta, "preimage excess in bits")->required();
    app->add_option("--L", L, "message length in bits (wots)");
    app->add_option("--nu", nu, "block width in bits (wots)");
  }

  SchemeParams params() const {
    if (scheme == "lamport") {
      if (L || nu) throw UsageError("--L and --nu only apply to --scheme wots");
      return LamportParams::make(n, delta);
    }
    if (!L || !nu) throw UsageError("--scheme wots requires --L and --nu");
    return derive_wots_params(n, delta, *L, *nu);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << contents) || !out.flush()) throw UsageError("cannot write '" + path + "'");
}

std::vector<std::uint8_t> parse_seed_bytes(const std::string& hex) {
  if (hex.empty() || hex.size() % 2 != 0) throw UsageError("--seed must be a non-empty even-length hex string");
  try {
    const BitString b = BitString::from_hex(hex, hex.size() * 4);
    return {b.bytes().begin(), b.bytes().end()};
  } catch (const DomainError&) {
    throw UsageError("--seed must be hex");
  }
}

std::uint64_t parse_seed_u64(const std::string& hex) {
  if (hex.empty() || hex.size() > 16) throw UsageError("--seed must be 1 to 16 hex digits");
  std::uint64_t v = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw UsageError("--seed must be hex");
    v = (v << 4) | static_cast<std::uint64_t>(d);
  }
  return v;
}

/// Lamport: "0" or "1". W-OTS+: payload hex of exactly L bits.
BitString parse_message(const std::string& text, const SchemeParams& params) {
  if (std::holds_alternative<LamportParams>(params)) {
    if (text == "0") return lamport_message(0);
    if (text == "1") return lamport_message(1);
    throw UsageError("Lamport messages are '0' or '1'");
  }
  const std::size_t bits = message_bits(params);
  try {
    return BitString::from_hex(text, bits);
  } catch (const DomainError& e) {
    throw UsageError("message must be hex of exactly " + std::to_string(bits) + " bits: " + e.what());
  }
}

AdversaryMode parse_mode(const std::string& s) {
  return s == "exact-sk" ? AdversaryMode::kExactSk : AdversaryMode::kFreshPreimage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-time hash-based signatures with proof-of-forgery", "fdasig"};
  app.require_subcommand(1);

  // keygen
  SchemeFlags kg_scheme;
  std::string kg_seed, kg_sk_out, kg_pk_out;
  auto* keygen_cmd = app.add_subcommand("keygen", "generate a one-time key pair");
  kg_scheme.add_to(keygen_cmd);
  keygen_cmd->add_option("--seed", kg_seed, "hex entropy seed")->required();
  keygen_cmd->add_option("--sk-out", kg_sk_out)->required();
  keygen_cmd->add_option("--pk-out", kg_pk_out)->required();

  // sign
  std::string sg_sk, sg_message, sg_out;
  auto* sign_cmd = app.add_subcommand("sign", "sign a message");
  sign_cmd->add_option("--sk", sg_sk)->required();
  sign_cmd->add_option("--message", sg_message, "0/1 (lamport) or hex (wots)")->required();
  sign_cmd->add_option("--out", sg_out)->required();

  // verify
  std::string vf_pk, vf_sig, vf_message;
  auto* verify_cmd = app.add_subcommand("verify", "verify a signature (exit 0 valid, 1 invalid)");
  verify_cmd->add_option("--pk", vf_pk)->required();
  verify_cmd->add_option("--sig", vf_sig)->required();
  verify_cmd->add_option("--message", vf_message)->required();

  // forge
  std::string fg_pk, fg_known_message, fg_known_sig, fg_target, fg_seed, fg_out;
  unsigned fg_budget = kMaxBudgetBits;
  auto* forge_cmd = app.add_subcommand("forge", "exhaustive-search forgery at toy sizes");
  forge_cmd->add_option("--pk", fg_pk)->required();
  forge_cmd->add_option("--known-message", fg_known_message)->required();
  forge_cmd->add_option("--known-sig", fg_known_sig)->required();
  forge_cmd->add_option("--target-message", fg_target)->required();
  forge_cmd->add_option("--max-domain-bits", fg_budget)->required();
  forge_cmd->add_option("--seed", fg_seed)->required();
  forge_cmd->add_option("--out", fg_out)->required();

  // detect
  std::string dt_sk, dt_message, dt_sig, dt_pof_out;
  auto* detect_cmd = app.add_subcommand(
      "detect", "signer-side forgery check (0 evidence written, 4 undetectable, 1 not valid)");
  detect_cmd->add_option("--sk", dt_sk)->required();
  detect_cmd->add_option("--message", dt_message)->required();
  detect_cmd->add_option("--sig", dt_sig)->required();
  detect_cmd->add_option("--pof-out", dt_pof_out)->required();

  // verify-pof
  std::string vp_pof;
  auto* verify_pof_cmd = app.add_subcommand("verify-pof", "check proof-of-forgery evidence");
  verify_pof_cmd->add_option("--pof", vp_pof)->required();

  // experiment
  SchemeFlags ex_scheme;
  std::uint64_t ex_trials = 0;
  std::string ex_seed, ex_csv;
  unsigned ex_budget = kMaxBudgetBits;
  unsigned ex_threads = 0;
  auto* experiment_cmd = app.add_subcommand("experiment", "Monte Carlo forgery-detection experiment");
  ex_scheme.add_to(experiment_cmd);
  experiment_cmd->add_option("--trials", ex_trials)->required()->check(CLI::PositiveNumber);
  experiment_cmd->add_option("--seed", ex_seed)->required();
  experiment_cmd->add_option("--csv", ex_csv);
  experiment_cmd->add_option("--max-domain-bits", ex_budget);
  experiment_cmd->add_option("--threads", ex_threads);

  // scenario
  SchemeFlags sc_scheme;
  std::string sc_mode, sc_seed;
  bool sc_notify = false;
  bool sc_receiver_known = false;
  unsigned sc_budget = kMaxBudgetBits;
  auto* scenario_cmd = app.add_subcommand("scenario", "replay the signer/adversary/receiver protocol");
  sc_scheme.add_to(scenario_cmd);
  scenario_cmd->add_option("--adversary-mode", sc_mode)
      ->required()
      ->check(CLI::IsMember({"fresh", "exact-sk"}));
  scenario_cmd->add_flag("--notify-adversary", sc_notify);
  scenario_cmd->add_flag("--receiver-sees-known-pair", sc_receiver_known);
  scenario_cmd->add_option("--seed", sc_seed)->required();
  scenario_cmd->add_option("--max-domain-bits", sc_budget);

  // bounds
  unsigned bd_n = 0, bd_delta = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "print detection-probability bounds");
  bounds_cmd->add_option("--n", bd_n)->required();
  bounds_cmd->add_option("--delta", bd_delta)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*keygen_cmd) {
      const SchemeParams params = kg_scheme.params();
      const auto seed = parse_seed_bytes(kg_seed);
      DeterministicEntropy entropy(seed);
      const KeyPair kp = keygen(params, entropy);
      write_file(kg_sk_out, serialize(kp));
      write_file(kg_pk_out, serialize(public_key(kp)));
      return kOk;
    }

    if (*sign_cmd) {
      const KeyPair kp = parse_secret_key(read_file(sg_sk));
      const SchemeParams params = params_of(kp);
      const BitString m = parse_message(sg_message, params);
      err << "note: one-time key; signing any second message forfeits its security\n";
      write_file(sg_out, serialize(SignedMessage{params, m, sign(kp, m)}));
      return kOk;
    }

    if (*verify_cmd) {
      const PublicKey pk = parse_public_key(read_file(vf_pk));
      const SignedMessage sm = parse_signature(read_file(vf_sig));
      const BitString m = parse_message(vf_message, params_of(pk));
      const bool ok = sm.params == params_of(pk) && verify(pk, sm.sigma, m);
      out << (ok ? "valid" : "invalid") << "\n";
      return ok ? kOk : kInvalid;
    }

    if (*forge_cmd) {
      const PublicKey pk = parse_public_key(read_file(fg_pk));
      const SchemeParams params = params_of(pk);
      const SignedMessage known = parse_signature(read_file(fg_known_sig));
      const BitString known_m = parse_message(fg_known_message, params);
      const BitString target_m = parse_message(fg_target, params);
      if (known_m == target_m) throw UsageError("--target-message must differ from --known-message");
      if (known.params != params || !verify(pk, known.sigma, known_m)) {
        err << "known signature does not verify under the public key\n";
        return kInvalid;
      }
      const ForgeryBudget budget = ForgeryBudget::make(fg_budget);
      DeterministicEntropy rng(parse_seed_bytes(fg_seed));
      const Signature forged = forge(pk, known_m, known.sigma, target_m, budget, rng);
      write_file(fg_out, serialize(SignedMessage{params, target_m, forged}));
      return kOk;
    }

    if (*detect_cmd) {
      const KeyPair kp = parse_secret_key(read_file(dt_sk));
      const SchemeParams params = params_of(kp);
      const SignedMessage presented = parse_signature(read_file(dt_sig));
      const BitString m_star = parse_message(dt_message, params);
      if (presented.params != params) {
        out << "not a valid signature under this key\n";
        return kInvalid;
      }
      const DetectionOutcome outcome = detect_forgery(kp, m_star, presented.sigma);
      switch (outcome.kind) {
        case DetectionOutcome::Kind::kEvidence:
          write_file(dt_pof_out, serialize(*outcome.evidence));
          out << "forgery detected; evidence written to " << dt_pof_out << "\n";
          return kOk;
        case DetectionOutcome::Kind::kUndetectable:
          out << "forgery undetectable: presented signature equals the legitimate one\n";
          return kUndetectable;
        case DetectionOutcome::Kind::kNotAValidSignature:
          out << "not a valid signature under this key\n";
          return kInvalid;
      }
    }

    if (*verify_pof_cmd) {
      const std::string text = read_file(vp_pof);
      bool ok = false;
      switch (peek_kind(text)) {
        case FileKind::kPof1: ok = verify_pof1(parse_pof1(text)); break;
        case FileKind::kPof2: ok = verify_pof2(parse_pof2(text)); break;
        default: throw UsageError("'" + vp_pof + "' is not a proof-of-forgery file");
      }
      out << (ok ? "valid evidence" : "invalid evidence") << "\n";
      return ok ? kOk : kInvalid;
    }

    if (*experiment_cmd) {
      ExperimentConfig config;
      config.params = ex_scheme.params();
      config.trials = ex_trials;
      config.master_seed = parse_seed_u64(ex_seed);
      config.budget = ForgeryBudget::make(ex_budget);
      config.threads = ex_threads;
      const ExperimentReport report = run_fda_experiment(config);
      out << format_report(report);
      if (!ex_csv.empty()) write_file(ex_csv, csv_header() + csv_row(report));
      return report.verdict ? kOk : kInvalid;
    }

    if (*scenario_cmd) {
      ScenarioOptions options;
      options.mode = parse_mode(sc_mode);
      options.notify_adversary = sc_notify;
      options.receiver_sees_known_pair = sc_receiver_known;
      options.budget = ForgeryBudget::make(sc_budget);
      const ScenarioLog log = run_scenario(sc_scheme.params(), parse_seed_u64(sc_seed), options);
      out << format_scenario(log);
      return log.outcome == DetectionOutcome::Kind::kEvidence ? kOk : kUndetectable;
    }

    if (*bounds_cmd) {
      const BoundsReport b = fda_bounds(bd_n, bd_delta);
      std::ostringstream os;
      os.precision(6);
      os << "n: " << b.n << "\ndelta: " << b.delta << "\nlower: " << b.lower
         << "\nupper: " << b.upper << "\nexact_expectation: " << b.exact_expectation << "\n";
      out << os.str();
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace fdasig::cli

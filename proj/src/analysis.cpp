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

#include "fdasig/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>
#include <variant>

#include "fdasig/errors.hpp"
#include "fdasig/oracle.hpp"
#include "fdasig/pof.hpp"

namespace fdasig {

double exact_expectation(unsigned n, unsigned delta) {
  // E[1/(1+X)], X ~ Bin(m, p), equals (1 - (1-p)^(m+1)) / ((m+1) p); here m+1 = 2^(n+delta).
  const double domain = std::ldexp(1.0, static_cast<int>(n + delta));
  const double p = std::ldexp(1.0, -static_cast<int>(n));
  return -std::expm1(domain * std::log1p(-p)) / std::ldexp(1.0, static_cast<int>(delta));
}

double exact_expectation_by_summation(unsigned n, unsigned delta) {
  const std::uint64_t trials = (std::uint64_t{1} << (n + delta)) - 1;
  const double p = std::ldexp(1.0, -static_cast<int>(n));
  const double mean = static_cast<double>(trials) * p;
  const double odds = p / (1.0 - p);
  double pmf = std::exp(static_cast<double>(trials) * std::log1p(-p));
  double sum = 0.0;
  for (std::uint64_t k = 0; k <= trials; ++k) {
    sum += pmf / static_cast<double>(k + 1);
    if (k > mean && pmf < 1e-300) break;
    pmf *= static_cast<double>(trials - k) / static_cast<double>(k + 1) * odds;
  }
  return sum;
}

BoundsReport fda_bounds(unsigned n, unsigned delta) {
  if (n < 1) throw InvalidParams("n must be at least 1");
  BoundsReport b;
  b.n = n;
  b.delta = delta;
  b.lower = std::exp(-std::ldexp(1.0, static_cast<int>(delta)));
  b.upper = kUpperBoundConstant * std::ldexp(1.0, -static_cast<int>(delta));
  b.exact_expectation = exact_expectation(n, delta);
  return b;
}

double bound_constant(double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("bound_constant needs k in (0, 1)");
  return 1.0 / ((1.0 - k) * (1.0 - k)) + 1.0 / k;
}

BoundConstantMinimum minimize_bound_constant(double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-9;
  double b = 1.0 - 1e-9;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = bound_constant(c);
  double fd = bound_constant(d);
  while (b - a > tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = bound_constant(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = bound_constant(d);
    }
  }
  const double k = (a + b) / 2.0;
  return {k, bound_constant(k)};
}

namespace {

struct TrialResult {
  bool undetected = false;
  bool evidence_ok = false;
  std::vector<std::uint8_t> position_match;
};

BitString different_message(const BitString& m, EntropySource& rng) {
  for (;;) {
    BitString candidate = rng.random_bits(m.size());
    if (candidate != m) return candidate;
  }
}

TrialResult run_trial(const SchemeParams& params, std::uint64_t seed,
                      const ForgeryBudget& budget) {
  DeterministicEntropy rng(seed, "fda-trial");
  const KeyPair kp = keygen(params, rng);
  const PublicKey pk = public_key(kp);

  // One chosen-message query, then a forgery on a different message.
  const BitString m = rng.random_bits(message_bits(params));
  const Signature sigma = sign(kp, m);
  const BitString m_star = different_message(m, rng);
  const Signature sigma_star = forge(pk, m, sigma, m_star, budget, rng);

  const DetectionOutcome outcome = detect_forgery(kp, m_star, sigma_star);
  TrialResult r;
  if (outcome.kind == DetectionOutcome::Kind::kNotAValidSignature) {
    throw Error("adversary produced a non-verifying forgery");
  }
  r.undetected = outcome.kind == DetectionOutcome::Kind::kUndetectable;
  if (outcome.evidence) r.evidence_ok = verify_pof2(*outcome.evidence);

  if (const auto* wstar = std::get_if<WotsSignature>(&sigma_star)) {
    const auto& legit = r.undetected ? *wstar
                                     : std::get<WotsSignature>(outcome.evidence->sigma_tilde_star);
    for (std::size_t i = 0; i < wstar->sigma.size(); ++i) {
      r.position_match.push_back(wstar->sigma[i] == legit.sigma[i] ? 1 : 0);
    }
  }
  return r;
}

std::string describe(const SchemeParams& params) {
  std::ostringstream os;
  std::visit(
      [&](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, LamportParams>) {
          os << "lamport n=" << p.n << " delta=" << p.delta;
        } else {
          os << "wots n=" << p.n << " delta=" << p.delta << " L=" << p.L << " nu=" << p.nu
             << " (w=" << p.w << " l1=" << p.l1 << " l2=" << p.l2 << ")";
        }
      },
      params);
  return os.str();
}

std::pair<unsigned, unsigned> n_delta(const SchemeParams& params) {
  return std::visit([](const auto& p) { return std::pair{p.n, p.delta}; }, params);
}

std::size_t max_search_bits(const SchemeParams& params) {
  return std::visit([](const auto& p) -> std::size_t { return p.sk_bits(); }, params);
}

}  // namespace

ExperimentReport run_fda_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw InvalidParams("trials must be at least 1");
  config.budget.require(max_search_bits(config.params));

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, config.trials));

  std::vector<TrialResult> results(config.trials);
  auto work = [&](unsigned worker) {
    for (std::uint64_t t = worker; t < config.trials; t += threads) {
      results[t] = run_trial(config.params, config.master_seed ^ t, config.budget);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ExperimentReport r;
  r.params = config.params;
  r.trials = config.trials;
  for (const auto& t : results) {
    if (t.undetected) {
      ++r.undetected;
    } else {
      ++r.detected;
      if (t.evidence_ok) ++r.evidence_verified;
    }
    if (r.position_matches.size() < t.position_match.size()) {
      r.position_matches.resize(t.position_match.size(), 0);
    }
    for (std::size_t i = 0; i < t.position_match.size(); ++i) r.position_matches[i] += t.position_match[i];
  }
  const double trials = static_cast<double>(r.trials);
  r.undetected_rate = static_cast<double>(r.undetected) / trials;
  r.std_error = std::sqrt(r.undetected_rate * (1.0 - r.undetected_rate) / trials);
  r.ci_low = std::max(0.0, r.undetected_rate - 1.96 * r.std_error);
  r.ci_high = std::min(1.0, r.undetected_rate + 1.96 * r.std_error);
  const auto [n, delta] = n_delta(config.params);
  r.bounds = fda_bounds(n, delta);
  r.verdict = r.undetected_rate < r.bounds.upper + 3.0 * r.std_error;
  return r;
}

std::string format_report(const ExperimentReport& r) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "scheme:            " << describe(r.params) << "\n";
  os << "trials:            " << r.trials << "\n";
  os << "undetected:        " << r.undetected << "\n";
  os << "detected:          " << r.detected << " (evidence verified: " << r.evidence_verified
     << ")\n";
  os << "undetected rate:   " << r.undetected_rate << " +- " << r.std_error << " (95% CI ["
     << r.ci_low << ", " << r.ci_high << "])\n";
  os << "lower bound:       " << r.bounds.lower << "\n";
  os << "upper bound:       " << r.bounds.upper << "\n";
  os << "exact expectation: " << r.bounds.exact_expectation << "\n";
  if (!r.position_matches.empty()) {
    os << "position matches: ";
    for (auto c : r.position_matches) os << ' ' << c;
    os << "\n";
  }
  os << "verdict:           " << (r.verdict ? "pass" : "fail") << "\n";
  return os.str();
}

std::string csv_header() {
  return "n,delta,trials,undetected_rate,ci_low,ci_high,lower,upper,verdict\n";
}

std::string csv_row(const ExperimentReport& r) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << r.bounds.n << ',' << r.bounds.delta << ',' << r.trials << ',' << r.undetected_rate << ','
     << r.ci_low << ',' << r.ci_high << ',' << r.bounds.lower << ',' << r.bounds.upper << ','
     << (r.verdict ? "pass" : "fail") << "\n";
  return os.str();
}

CensusReport preimage_census(unsigned n, unsigned delta, std::uint64_t instances,
                             std::uint64_t seed, const ForgeryBudget& budget) {
  const LamportParams params = LamportParams::make(n, delta);
  budget.require(params.sk_bits());
  if (instances < 1) throw InvalidParams("instances must be at least 1");

  CensusReport r;
  r.n = n;
  r.delta = delta;
  r.instances = instances;
  // The Lamport oracle is a single fixed function; a fresh keyed step
  // function per instance gives independent draws of f.
  const WotsParams step = derive_wots_params(n, delta, 1, 1);
  DeterministicEntropy rng(seed, "census");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < instances; ++i) {
    Seed key;
    rng.fill(key);
    const auto spec = OracleSpec::chain_segment(step, key, 0, 1);
    const BitString x0 = rng.random_bits(params.sk_bits());
    const BitString y0 = spec(x0);
    const std::size_t count = enumerate_preimages(spec, y0, spec.domain_bits(), budget).count();
    ++r.histogram[count];
    sum += static_cast<double>(count);
    sum_sq += static_cast<double>(count) * static_cast<double>(count);
  }
  const double k = static_cast<double>(instances);
  r.mean = sum / k;
  const double var = instances > 1 ? (sum_sq - k * r.mean * r.mean) / (k - 1.0) : 0.0;
  r.mean_std_error = std::sqrt(std::max(var, 0.0) / k);

  const std::uint64_t trials = (std::uint64_t{1} << params.sk_bits()) - 1;
  const double p = std::ldexp(1.0, -static_cast<int>(n));
  r.model_mean = 1.0 + static_cast<double>(trials) * p;

  // Categories N = 1 .. max_n, the last one absorbing the model's upper tail.
  const std::size_t max_n = std::max<std::size_t>(r.histogram.rbegin()->first,
                                                  static_cast<std::size_t>(r.model_mean * 3 + 10));
  const std::vector<double> pmf = binomial_pmf(trials, p, max_n - 1);
  r.model_pmf.assign(max_n + 1, 0.0);
  std::vector<double> probs(max_n);
  std::vector<std::uint64_t> observed(max_n, 0);
  double head = 0.0;
  for (std::size_t N = 1; N <= max_n; ++N) {
    r.model_pmf[N] = pmf[N - 1];
    probs[N - 1] = pmf[N - 1];
    head += pmf[N - 1];
  }
  probs.back() += std::max(0.0, 1.0 - head);
  for (const auto& [N, c] : r.histogram) observed[N - 1] += c;
  r.chi_square = chi_square_gof(observed, probs);
  return r;
}

std::string format_census(const CensusReport& r) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "preimage census n=" << r.n << " delta=" << r.delta << " instances=" << r.instances
     << "\n";
  os << "   N  observed  model\n";
  for (const auto& [N, c] : r.histogram) {
    os << std::setw(4) << N << "  " << std::setw(8) << c << "  "
       << (N < r.model_pmf.size() ? r.model_pmf[N] * static_cast<double>(r.instances) : 0.0)
       << "\n";
  }
  os << "mean N: " << r.mean << " +- " << r.mean_std_error << " (model " << r.model_mean << ")\n";
  os << "chi-square: " << r.chi_square.statistic << " on " << r.chi_square.dof
     << " dof, p = " << r.chi_square.p_value << "\n";
  return os.str();
}

}  // namespace fdasig

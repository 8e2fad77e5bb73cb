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

#ifndef FDASIG_ANALYSIS_HPP
#define FDASIG_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fdasig/adversary.hpp"
#include "fdasig/params.hpp"
#include "fdasig/stats.hpp"

namespace fdasig {

/// Probability that a uniformly chosen preimage of y0 = f(x0) is x0 itself,
/// for f: {0,1}^(n+delta) -> {0,1}^n a random function.
struct BoundsReport {
  unsigned n = 0;
  unsigned delta = 0;
  double lower = 0.0;              // exp(-2^delta)
  double upper = 0.0;              // 5.22 * 2^-delta
  double exact_expectation = 0.0;  // E[1 / (1 + Bin(2^-n, 2^(n+delta) - 1))]
};

inline constexpr double kUpperBoundConstant = 5.22;

BoundsReport fda_bounds(unsigned n, unsigned delta);

/// Closed form (1 - (1 - 2^-n)^(2^(n+delta))) / 2^delta.
double exact_expectation(unsigned n, unsigned delta);

/// The same expectation by summing 1/(1+k) Pr(Bin = k) over k = 0 .. 2^(n+delta) - 1.
/// Intended for n + delta <= 24.
double exact_expectation_by_summation(unsigned n, unsigned delta);

/// 1/(1-k)^2 + 1/k: coefficient of 2^-delta obtained by splitting the
/// preimage-count sum at N0 = k 2^delta. Throws DomainError outside (0, 1).
double bound_constant(double k);

struct BoundConstantMinimum {
  double k = 0.0;
  double value = 0.0;
};

/// Golden-section minimisation of bound_constant over (0, 1).
BoundConstantMinimum minimize_bound_constant(double tolerance = 1e-12);

struct ExperimentConfig {
  SchemeParams params;
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  ForgeryBudget budget;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ExperimentReport {
  SchemeParams params;
  std::uint64_t trials = 0;
  std::uint64_t undetected = 0;  // forger reproduced Sign(sk, M*) exactly
  std::uint64_t detected = 0;
  std::uint64_t evidence_verified = 0;  // detected trials whose evidence passed verify_pof2
  double undetected_rate = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;  // 95 % normal-approximation interval
  double ci_high = 0.0;
  BoundsReport bounds;
  bool verdict = false;  // undetected_rate < bounds.upper + 3 std_error

  /// W-OTS+ only, diagnostic: per position, trials where the forged element
  /// equalled the legitimate one.
  std::vector<std::uint64_t> position_matches;
};

/// Forgery-detection experiment: per trial, keygen, one chosen-message query,
/// an exhaustive-search forgery on a uniformly chosen different message, and
/// signer-side detection. Trial t draws from DeterministicEntropy(master_seed
/// ^ t), so the report depends only on the config, not on scheduling.
ExperimentReport run_fda_experiment(const ExperimentConfig& config);

std::string format_report(const ExperimentReport& r);
std::string csv_header();
std::string csv_row(const ExperimentReport& r);

struct CensusReport {
  unsigned n = 0;
  unsigned delta = 0;
  std::uint64_t instances = 0;
  std::map<std::size_t, std::uint64_t> histogram;  // N -> instances
  std::vector<double> model_pmf;                    // model_pmf[N], N >= 1
  double mean = 0.0;
  double mean_std_error = 0.0;
  double model_mean = 0.0;  // 1 + (2^(n+delta) - 1) 2^-n
  ChiSquareResult chi_square;
};

/// Per instance draws a fresh seed r and x0, enumerates the preimages of
/// f_r(x0) for the step function f_r: {0,1}^(n+delta) -> {0,1}^n and
/// compares the counts with 1 + Bin(2^-n, 2^(n+delta) - 1).
CensusReport preimage_census(unsigned n, unsigned delta, std::uint64_t instances,
                             std::uint64_t seed, const ForgeryBudget& budget = {});

std::string format_census(const CensusReport& r);

}  // namespace fdasig

#endif  // FDASIG_ANALYSIS_HPP

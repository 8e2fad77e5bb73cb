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

#include <gtest/gtest.h>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "fdasig/errors.hpp"
#include "fdasig/stats.hpp"

namespace fdasig {
namespace {

double pmf_sum_oracle(unsigned n, unsigned delta) {
  const double trials = std::ldexp(1.0, static_cast<int>(n + delta)) - 1;
  boost::math::binomial_distribution<double> dist(trials, std::ldexp(1.0, -static_cast<int>(n)));
  double sum = 0;
  for (double k = 0; k <= trials; ++k) sum += boost::math::pdf(dist, k) / (k + 1);
  return sum;
}

TEST(BoundsTest, ReferenceValues) {
  EXPECT_NEAR(fda_bounds(10, 0).lower, 0.368, 5e-4);
  EXPECT_NEAR(fda_bounds(8, 4).upper, 0.32625, 1e-12);
  EXPECT_NEAR(fda_bounds(10, 0).exact_expectation, 0.6324, 2e-4);
  EXPECT_NEAR(fda_bounds(10, 0).exact_expectation, pmf_sum_oracle(10, 0), 1e-12);
}

TEST(BoundsTest, ClosedFormMatchesSummation) {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned delta = 0; delta <= 6; ++delta) {
      EXPECT_NEAR(exact_expectation(n, delta), exact_expectation_by_summation(n, delta), 1e-12)
          << n << ' ' << delta;
    }
  }
  for (unsigned n : {4u, 8u}) {
    for (unsigned delta : {0u, 3u, 6u}) {
      EXPECT_NEAR(exact_expectation(n, delta), pmf_sum_oracle(n, delta), 1e-12);
    }
  }
}

TEST(BoundsTest, ExactInsideBracket) {
  for (unsigned n = 4; n <= 16; n += 4) {
    for (unsigned delta = 0; delta <= 10; ++delta) {
      const auto b = fda_bounds(n, delta);
      EXPECT_LT(b.exact_expectation, b.upper);
      EXPECT_LT(b.exact_expectation, std::ldexp(1.0, -static_cast<int>(delta)) + 1e-15);
      EXPECT_GT(b.exact_expectation, b.lower);
    }
  }
}

TEST(BoundConstantTest, Values) {
  EXPECT_NEAR(bound_constant(0.36), 5.219, 5e-4);
  EXPECT_GT(bound_constant(1e-9), 1e8);
  EXPECT_GT(bound_constant(1 - 1e-5), 1e9);
  EXPECT_THROW(bound_constant(0.0), DomainError);
  EXPECT_THROW(bound_constant(1.0), DomainError);
  EXPECT_THROW(bound_constant(-0.5), DomainError);
}

TEST(BoundConstantTest, MinimumAgreesWithGridAndStationarity) {
  const auto m = minimize_bound_constant();
  double grid_best = 1e300;
  for (int i = 1; i < 100000; ++i) grid_best = std::min(grid_best, bound_constant(i / 100000.0));
  EXPECT_NEAR(m.value, grid_best, 1e-8);
  EXPECT_NEAR(2 * m.k * m.k, std::pow(1 - m.k, 3), 1e-6);
  EXPECT_NEAR(m.k, 0.361, 1e-3);
  EXPECT_GE(m.value, 5.21);
  EXPECT_LE(m.value, 5.22);
}

TEST(StatsTest, BinomialPmfMatchesBoost) {
  const auto pmf = binomial_pmf(255, 1.0 / 256, 12);
  boost::math::binomial_distribution<double> dist(255, 1.0 / 256);
  for (std::size_t k = 0; k <= 12; ++k) EXPECT_NEAR(pmf[k], boost::math::pdf(dist, k), 1e-14);
  const auto small = binomial_pmf(2, 0.5, 4);
  EXPECT_EQ(small, (std::vector<double>{0.25, 0.5, 0.25, 0.0, 0.0}));
}

TEST(StatsTest, ChiSquareHandComputed) {
  const std::vector<std::uint64_t> exact = {10, 20, 30, 40};
  const std::vector<double> p4 = {0.1, 0.2, 0.3, 0.4};
  const auto zero = chi_square_gof(exact, p4);
  EXPECT_EQ(zero.statistic, 0.0);
  EXPECT_EQ(zero.dof, 3u);
  EXPECT_NEAR(zero.p_value, 1.0, 1e-12);

  const std::vector<std::uint64_t> coin = {20, 30};
  const std::vector<double> half = {0.5, 0.5};
  const auto two = chi_square_gof(coin, half);
  EXPECT_NEAR(two.statistic, 2.0, 1e-12);
  EXPECT_EQ(two.dof, 1u);
  EXPECT_NEAR(two.p_value, 0.157299207050285, 1e-9);
}

TEST(StatsTest, ChiSquarePoolsSmallBins) {
  const std::vector<std::uint64_t> obs = {1, 49, 50};
  const std::vector<double> p = {0.01, 0.49, 0.5};
  const auto r = chi_square_gof(obs, p);
  EXPECT_EQ(r.bins, 2u);
  EXPECT_EQ(r.dof, 1u);
  EXPECT_NEAR(r.statistic, 0.0, 1e-12);
}

ExperimentConfig small_config(unsigned threads) {
  ExperimentConfig c;
  c.params = LamportParams::make(8, 2);
  c.trials = 200;
  c.master_seed = 0x1234;
  c.threads = threads;
  return c;
}

void expect_same(const ExperimentReport& a, const ExperimentReport& b) {
  EXPECT_EQ(a.undetected, b.undetected);
  EXPECT_EQ(a.detected, b.detected);
  EXPECT_EQ(a.evidence_verified, b.evidence_verified);
  EXPECT_EQ(a.position_matches, b.position_matches);
  EXPECT_EQ(format_report(a), format_report(b));
}

TEST(ExperimentTest, DeterministicAcrossThreads) {
  const auto serial = run_fda_experiment(small_config(1));
  expect_same(serial, run_fda_experiment(small_config(3)));
  expect_same(serial, run_fda_experiment(small_config(8)));
  EXPECT_EQ(serial.undetected + serial.detected, 200u);
  EXPECT_EQ(serial.evidence_verified, serial.detected);
}

TEST(ExperimentTest, SeedChangesOutcome) {
  auto c = small_config(1);
  const auto a = run_fda_experiment(c);
  c.master_seed = 0x9999;
  EXPECT_NE(format_report(a), format_report(run_fda_experiment(c)));
}

TEST(ExperimentTest, ReportFields) {
  const auto r = run_fda_experiment(small_config(1));
  EXPECT_DOUBLE_EQ(r.undetected_rate, double(r.undetected) / 200);
  EXPECT_DOUBLE_EQ(r.std_error, std::sqrt(r.undetected_rate * (1 - r.undetected_rate) / 200));
  EXPECT_LE(r.ci_low, r.undetected_rate);
  EXPECT_GE(r.ci_high, r.undetected_rate);
  EXPECT_EQ(r.verdict, r.undetected_rate < r.bounds.upper + 3 * r.std_error);
  EXPECT_EQ(csv_header(), "n,delta,trials,undetected_rate,ci_low,ci_high,lower,upper,verdict\n");
  EXPECT_EQ(csv_row(r).rfind("8,2,200,", 0), 0u);
}

TEST(ExperimentTest, WotsEvidenceSound) {
  ExperimentConfig c;
  c.params = derive_wots_params(6, 1, 4, 2);
  c.trials = 200;
  c.master_seed = 7;
  c.threads = 1;
  const auto r = run_fda_experiment(c);
  EXPECT_EQ(r.evidence_verified, r.detected);
  EXPECT_EQ(r.position_matches.size(), 4u);
  EXPECT_LT(r.undetected_rate, 2.61 + 3 * r.std_error);
}

TEST(ExperimentTest, BudgetPropagates) {
  ExperimentConfig c;
  c.params = LamportParams::make(8, 8);
  c.budget = ForgeryBudget::make(12);
  EXPECT_THROW(run_fda_experiment(c), BudgetExceeded);
}

TEST(CensusTest, ZeroDeltaMatchesModel) {
  const auto r = preimage_census(8, 0, 1000, 11);
  EXPECT_EQ(r.instances, 1000u);
  const double p1 = std::pow(1 - 1.0 / 256, 255);
  EXPECT_NEAR(p1, 0.369, 5e-4);
  EXPECT_NEAR(r.model_pmf.at(1), p1, 1e-12);
  const double observed = r.histogram.count(1) ? r.histogram.at(1) / 1000.0 : 0.0;
  EXPECT_NEAR(observed, p1, 3 * std::sqrt(p1 * (1 - p1) / 1000));
  EXPECT_NEAR(r.mean, r.model_mean, 3 * r.mean_std_error);
  EXPECT_GT(r.chi_square.p_value, 0.01);
}

TEST(CensusTest, DeltaTwoMean) {
  const auto r = preimage_census(8, 2, 1000, 12);
  EXPECT_NEAR(r.model_mean, 1 + 1023.0 / 256, 1e-12);
  EXPECT_NEAR(r.mean, r.model_mean, 3 * r.mean_std_error);
  EXPECT_GT(r.chi_square.p_value, 0.01);
  EXPECT_NE(format_census(r).find("chi-square"), std::string::npos);
}

TEST(CensusTest, BudgetRespected) {
  EXPECT_THROW(preimage_census(8, 8, 10, 1, ForgeryBudget::make(12)), BudgetExceeded);
}

}  // namespace
}  // namespace fdasig

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

#include "fdasig/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <numeric>

#include "fdasig/errors.hpp"

namespace fdasig {

std::vector<double> binomial_pmf(std::uint64_t trials, double p, std::size_t kmax) {
  if (!(p >= 0.0 && p < 1.0)) throw DomainError("binomial success probability must be in [0, 1)");
  std::vector<double> pmf(kmax + 1, 0.0);
  pmf[0] = std::exp(static_cast<double>(trials) * std::log1p(-p));
  const double odds = p / (1.0 - p);
  for (std::size_t k = 0; k < kmax && k < trials; ++k) {
    pmf[k + 1] = pmf[k] * static_cast<double>(trials - k) / static_cast<double>(k + 1) * odds;
  }
  return pmf;
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.empty()) {
    throw DomainError("chi-square needs matching, non-empty category vectors");
  }
  const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));

  std::vector<double> obs_bins;
  std::vector<double> exp_bins;
  double o = 0.0;
  double e = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    o += static_cast<double>(observed[k]);
    e += probabilities[k] * total;
    if (e >= 5.0) {
      obs_bins.push_back(o);
      exp_bins.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (obs_bins.empty()) {
      obs_bins.push_back(o);
      exp_bins.push_back(e);
    } else {
      obs_bins.back() += o;
      exp_bins.back() += e;
    }
  }

  ChiSquareResult r;
  r.bins = static_cast<unsigned>(obs_bins.size());
  for (std::size_t i = 0; i < obs_bins.size(); ++i) {
    if (exp_bins[i] <= 0.0) continue;
    const double diff = obs_bins[i] - exp_bins[i];
    r.statistic += diff * diff / exp_bins[i];
  }
  r.dof = r.bins > 0 ? r.bins - 1 : 0;
  if (r.dof > 0) {
    boost::math::chi_squared_distribution<double> dist(r.dof);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  }
  return r;
}

}  // namespace fdasig

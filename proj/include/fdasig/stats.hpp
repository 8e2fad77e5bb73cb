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

#ifndef FDASIG_STATS_HPP
#define FDASIG_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace fdasig {

/// Bin(trials, p) pmf for k = 0 .. kmax, by the ratio recurrence from
/// (1 - p)^trials. Entries past `trials` are zero.
std::vector<double> binomial_pmf(std::uint64_t trials, double p, std::size_t kmax);

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned bins = 0;  // after pooling
  unsigned dof = 0;   // bins - 1
  double p_value = 1.0;
};

/// Pearson goodness of fit of category counts against model probabilities.
/// The last category should carry the model's whole upper tail. Adjacent
/// categories are pooled left to right until each expected count is >= 5,
/// a short remainder joining the previous bin.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> probabilities);

}  // namespace fdasig

#endif  // FDASIG_STATS_HPP

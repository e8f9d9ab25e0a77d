// Copyright (c) 2026 The mbuw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MBUW_GOODNESS_OF_FIT_HPP
#define MBUW_GOODNESS_OF_FIT_HPP

#include <cstddef>
#include <functional>

#include "mbuw/estimation.hpp"
#include "mbuw/unit_data.hpp"

namespace mbuw {

/// The score battery attached to a fit. hqic_standard is the textbook
/// 2L + 2k ln(ln n); hqic_reference is the 2 ln(ln(n (k + 2L))) variant that
/// matches the bundled reference tables cell for cell. Note the test below
/// ignores the Lilliefors effect (the cdf's parameters were estimated from
/// the same data), deliberately, to stay comparable with the reference
/// tables; p-values are mildly optimistic.
struct GofReport {
  double ks_stat = 0.0;
  double ks_pvalue = 0.0;
  bool reject_at_05 = false;  // ks_pvalue < 0.05
  double aic = 0.0;
  double aicc = 0.0;  // >= aic
  double bic = 0.0;
  double hqic_standard = 0.0;
  double hqic_reference = 0.0;
  std::size_t n = 0;
  int k = 0;
  double ll_magnitude = 0.0;
};

/// Two-sided Kolmogorov-Smirnov distance
/// D = max_i max(i/n - F(y_(i)), F(y_(i)) - (i-1)/n) over the sorted sample.
/// Ties contribute identically whatever their input order.
double ks_statistic(const UnitData& data,
                    const std::function<double(double)>& cdf);

struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
  bool reject_at_05 = false;
};

/// D plus its exact finite-sample p-value, p = 1 - P(D_n <= D).
KsResult ks_test(const UnitData& data,
                 const std::function<double(double)>& cdf);

struct InfoCriteria {
  double aic = 0.0;
  double aicc = 0.0;
  double bic = 0.0;
  double hqic_standard = 0.0;
  double hqic_reference = 0.0;
};

/// Penalized scores from L = |log-likelihood|:
///   aic  = 2k + 2L
///   aicc = aic + 2k(k+1)/(n-k-1)
///   bic  = 2L + k ln n
///   hqic_standard  = 2L + 2k ln(ln n)
///   hqic_reference = 2 ln(ln(n (k + 2L)))
/// Requires n > k + 1 (the aicc correction is undefined otherwise).
InfoCriteria info_criteria(double ll_magnitude, std::size_t n, int k);

/// The cdf y -> F(y; estimates) induced by a fit (handles the identified
/// single-parameter MBUW fit as well).
std::function<double(double)> fitted_cdf(const FitResult& fit);

/// K-S test of the fitted cdf against the data, combined with
/// info_criteria(|log L|, n, k). Callers should only feed converged fits.
GofReport gof_report(const FitResult& fit, const UnitData& data);

}  // namespace mbuw

#endif  // MBUW_GOODNESS_OF_FIT_HPP

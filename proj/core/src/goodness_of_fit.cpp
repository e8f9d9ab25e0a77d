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

#include "mbuw/goodness_of_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "mbuw/special_functions.hpp"

namespace mbuw {

double ks_statistic(const UnitData& data,
                    const std::function<double(double)>& cdf) {
  std::vector<double> sorted = data.values();
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    if (!std::isfinite(f) || f < 0.0 || f > 1.0)
      throw std::domain_error("ks_statistic: cdf must map into [0, 1]");
    d = std::max(d, (i + 1) / n - f);
    d = std::max(d, f - i / n);
  }
  return d;
}

KsResult ks_test(const UnitData& data,
                 const std::function<double(double)>& cdf) {
  KsResult r;
  r.statistic = ks_statistic(data, cdf);
  r.p_value =
      1.0 - kolmogorov_cdf(static_cast<int>(data.n()), r.statistic);
  r.reject_at_05 = r.p_value < 0.05;
  return r;
}

InfoCriteria info_criteria(double ll_magnitude, std::size_t n, int k) {
  if (k < 1) throw std::domain_error("info_criteria: k must be >= 1");
  if (n <= static_cast<std::size_t>(k) + 1)
    throw std::domain_error(
        "info_criteria: n must exceed k + 1 (aicc undefined)");
  const double L = ll_magnitude;
  const double nn = static_cast<double>(n);
  InfoCriteria c;
  c.aic = 2.0 * k + 2.0 * L;
  c.aicc = c.aic + 2.0 * k * (k + 1.0) / (nn - k - 1.0);
  c.bic = 2.0 * L + k * std::log(nn);
  c.hqic_standard = 2.0 * L + 2.0 * k * std::log(std::log(nn));
  c.hqic_reference = 2.0 * std::log(std::log(nn * (k + 2.0 * L)));
  return c;
}

std::function<double(double)> fitted_cdf(const FitResult& fit) {
  if (fit.kind == ModelKind::MBUW && fit.estimates.size() == 1) {
    // identified single-parameter fit carries a directly
    const CoreParam a(fit.estimates[0]);
    return [a](double y) { return mbuw_cdf(a, y); };
  }
  const ModelKind kind = fit.kind;
  const std::vector<double> theta = fit.estimates;
  return [kind, theta](double y) { return model_cdf(kind, theta, y); };
}

GofReport gof_report(const FitResult& fit, const UnitData& data) {
  const KsResult ks = ks_test(data, fitted_cdf(fit));
  const double L = fit.ll_magnitude();
  const InfoCriteria c = info_criteria(L, data.n(), fit.k());
  GofReport r;
  r.ks_stat = ks.statistic;
  r.ks_pvalue = ks.p_value;
  r.reject_at_05 = ks.reject_at_05;
  r.aic = c.aic;
  r.aicc = c.aicc;
  r.bic = c.bic;
  r.hqic_standard = c.hqic_standard;
  r.hqic_reference = c.hqic_reference;
  r.n = data.n();
  r.k = fit.k();
  r.ll_magnitude = L;
  return r;
}

}  // namespace mbuw

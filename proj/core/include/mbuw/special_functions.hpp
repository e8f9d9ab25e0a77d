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

#ifndef MBUW_SPECIAL_FUNCTIONS_HPP
#define MBUW_SPECIAL_FUNCTIONS_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

// Self-contained special functions and quadrature. Everything here is a pure
// function of its arguments and safe for unrestricted concurrent use.

namespace mbuw {

/// Result of an adaptive quadrature run.
struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // finite and >= 0
  std::int64_t evaluations = 0;     // >= 1
};

/// Thrown when the evaluation budget runs out before the error tolerance is
/// met. Carries the partial result accumulated so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

/// ln Gamma(x) for x > 0. Relative error below 1e-13 on [0.5, 200].
double log_gamma(double x);

/// ln B(p, q) = ln Gamma(p) + ln Gamma(q) - ln Gamma(p+q).
double log_beta(double p, double q);

/// Regularized incomplete beta function I_x(p, q), continued-fraction
/// evaluation with the symmetry switch at x = p/(p+q). Monotone nondecreasing
/// in x, absolute error <= 1e-12.
double regularized_incomplete_beta(double x, double p, double q);

/// ln(1 - e^w) for w < 0, stable for w near 0 and for very negative w.
double log1mexp(double w);

/// P(D_n <= d) for the one-sample Kolmogorov-Smirnov statistic
/// D_n = sup |F_n - F| under a continuous null. Exact (Marsaglia-Tsang-Wang
/// matrix method) for n <= 140; Kolmogorov limiting series with the Stephens
/// correction above.
double kolmogorov_cdf(int n, double d);

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over (lo, hi).
/// Integrand evaluations stay strictly inside the open interval, so
/// integrable endpoint singularities are fine. Subdivides the panel with the
/// largest error estimate until the total estimate drops below tol; throws
/// QuadratureError (with the partial result) if the evaluation budget is
/// exhausted first.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double tol,
                           std::int64_t max_evaluations = 200000);

}  // namespace mbuw

#endif  // MBUW_SPECIAL_FUNCTIONS_HPP

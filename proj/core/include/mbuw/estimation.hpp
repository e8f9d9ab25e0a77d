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

#ifndef MBUW_ESTIMATION_HPP
#define MBUW_ESTIMATION_HPP

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mbuw/distributions.hpp"
#include "mbuw/unit_data.hpp"

// Maximum-likelihood fitting by derivative-free simplex search, with numeric
// observed information for standard errors. Everything is deterministic:
// same data and config give bit-identical results.

namespace mbuw {

struct OptimizerConfig {
  int max_iterations = 10000;
  double simplex_tolerance = 1e-10;  // function-value spread at termination
  int restarts = 2;                  // re-converge from the incumbent
};

struct NelderMeadResult {
  std::vector<double> x;
  double fval = 0.0;
  bool converged = false;
  int iterations = 0;
};

using Matrix = std::vector<std::vector<double>>;

/// 95% CI multiplier (normal quantile at 0.975).
inline constexpr double kCi95Multiplier = 1.959964;

/// Condition-number cutoff above which standard errors are declared
/// unavailable. Non-identified fits (the MBUW alpha^beta ridge) measure
/// 1e7-1e9 here while healthy two-parameter fits stay near 1e3.
inline constexpr double kHessianConditionLimit = 1e6;

struct FitResult {
  ModelKind kind = ModelKind::MBUW;
  std::vector<double> estimates;  // natural parameter space
  double nll = 0.0;               // minimized negative log-likelihood
  std::optional<Matrix> vcov;     // inverse observed information, if usable
  std::optional<std::vector<double>> se;
  std::optional<std::vector<std::pair<double, double>>> ci95;
  bool converged = false;
  int iterations = 0;
  double hessian_condition = 0.0;

  double log_likelihood() const { return -nll; }
  /// |log-likelihood|, the quantity the reference tables penalize.
  double ll_magnitude() const { return nll < 0.0 ? -nll : nll; }
  int k() const { return static_cast<int>(estimates.size()); }
};

/// -sum log f(y_i; theta), through the stable log-density forms. Returns
/// +infinity (a sentinel the optimizer can retreat from, not an exception)
/// when the density vanishes at a data point; throws on parameters outside
/// the model's domain.
double nll(ModelKind kind, std::span<const double> theta,
           const UnitData& data);

/// Starting point for the simplex search. MBUW/MBUR invert the mean formula
/// ybar = 6/((2+a)(3+a)) to a0 = (-5 + sqrt(1 + 24/ybar))/2; Beta uses
/// method of moments with a (1,1) fallback; Kumaraswamy starts at (1,1);
/// Topp-Leone and Unit-Lindley match the sample mean by bisection.
std::vector<double> init_params(ModelKind kind, const UnitData& data);

/// Standard Nelder-Mead (reflection 1, expansion 2, contraction 0.5,
/// shrink 0.5). Terminates when the simplex function-value spread drops
/// below cfg.simplex_tolerance, then re-converges from the incumbent
/// cfg.restarts times. Never returns a point worse than its start; reports
/// converged=false instead of failing.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> x0, const OptimizerConfig& cfg);

/// Central second differences with per-coordinate step
/// h_j = max(1e-4 |x_j|, 1e-6), symmetrized. Non-finite entries propagate to
/// the caller, which flags derived quantities unavailable.
Matrix numeric_hessian(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& x);

/// Full fit: init_params, simplex search on the log-parameter scale
/// (positivity by construction), then the observed information in natural
/// space. vcov/se/ci95 are flagged unavailable when the Hessian's condition
/// number exceeds kHessianConditionLimit or any vcov diagonal is
/// non-positive. Requires n >= k + 1.
FitResult fit(ModelKind kind, const UnitData& data,
              const OptimizerConfig& cfg = {});

/// The identified single-parameter MBUW fit on log a. The two-parameter
/// MBUW likelihood depends on (alpha, beta) only through a = alpha^beta, so
/// this is the parameterization with a meaningful standard error; estimates
/// holds the single value a.
FitResult fit_mbuw_core(const UnitData& data, const OptimizerConfig& cfg = {});

/// Eigenvalues of a symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> symmetric_eigenvalues(const Matrix& m);
/// Gauss-Jordan inverse; nullopt if singular to machine precision.
std::optional<Matrix> invert_matrix(const Matrix& m);

}  // namespace mbuw

#endif  // MBUW_ESTIMATION_HPP

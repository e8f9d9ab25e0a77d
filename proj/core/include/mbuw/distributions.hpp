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

#ifndef MBUW_DISTRIBUTIONS_HPP
#define MBUW_DISTRIBUTIONS_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mbuw/unit_data.hpp"

// Closed-form kernels for the median-based unit Weibull (MBUW) family and the
// comparison models on (0, 1). Every MBUW formula depends on the shape pair
// (alpha, beta) only through the core parameter a = alpha^beta, so the kernels
// take a directly; the (alpha, beta) surface is an input-layer convenience.
//
// All functions are pure; the samplers are deterministic given their seed.

namespace mbuw {

/// Shape pair (alpha, beta), both positive and finite.
struct ShapeParams {
  double alpha;
  double beta;
  ShapeParams(double alpha_in, double beta_in);
};

/// The identifiable scalar a = alpha^beta that the MBUW kernels act on.
struct CoreParam {
  double a;
  explicit CoreParam(double a_in);
};

/// a = alpha^beta via one canonical exponentiation path (std::pow). Overflow
/// to infinity or underflow to zero is rejected, not clamped. MBUR maps
/// through the same operation with beta fixed at 2.
CoreParam core(const ShapeParams& params);

enum class ModelKind { MBUW, MBUR, Beta, Kumaraswamy, ToppLeone, UnitLindley };

/// Number of free parameters: MBUW 2, MBUR 1, Beta 2, Kumaraswamy 2,
/// Topp-Leone 1, Unit-Lindley 1.
int param_count(ModelKind kind);
std::string_view model_name(ModelKind kind);
/// Parses "mbuw", "mbur", "beta", "kumaraswamy", "topp_leone", "unit_lindley".
ModelKind model_from_name(std::string_view name);

// MBUW kernels. pdf/hazard/log_pdf require y in the open interval (0,1);
// the cdf accepts the closed interval (the density may diverge at 0 when
// a > 2, the hazard at 1).

/// f(y) = (6/a) (1 - y^(1/a)) y^(2/a - 1)
double mbuw_pdf(CoreParam p, double y);

/// ln f(y) = ln 6 - ln a + ln(1 - e^w) + (2/a - 1) ln y with w = ln(y)/a,
/// evaluated through log1mexp so it stays finite where the naive
/// 1 - y^(1/a) underflows.
double mbuw_log_pdf(CoreParam p, double y);

/// F(y) = 3 y^(2/a) - 2 y^(3/a)
double mbuw_cdf(CoreParam p, double y);

/// S(y) = 1 - F(y), computed as (1-t)^2 (1+2t) with t = y^(1/a) so it keeps
/// precision near y = 1.
double mbuw_survival(CoreParam p, double y);

/// h(y) = f(y)/S(y). Throws std::overflow_error if the survival underflows
/// to zero instead of returning a silent infinity.
double mbuw_hazard(CoreParam p, double y);

/// rh(y) = f(y)/F(y), evaluated in log space (both parts underflow together
/// for small y and small a).
double mbuw_reversed_hazard(CoreParam p, double y);

/// Inverse of the cdf: the real root t of 3t^2 - 2t^3 = u in [0,1], via
/// t = 0.5 - 0.5 (cos(phi) - sqrt(3) sin(phi)), phi = arccos(1-2u)/3, then
/// y = t^a. Q(0.5) = 0.5^a (median identity).
double mbuw_quantile(CoreParam p, double u);

/// n inverse-transform draws from a seeded 64-bit Mersenne Twister
/// (std::mt19937_64; uniforms are ((x >> 11) + 0.5) * 2^-53, strictly inside
/// (0,1)). Identical seed, identical output, on any platform.
UnitData mbuw_sample(CoreParam p, std::size_t n, std::uint64_t seed);

/// Derivation oracle: each draw is the median m of three Weibull(alpha, beta)
/// variates mapped through y = exp(-m^beta). The scale alpha enters only via
/// the parent distribution, which makes the output law exactly MBUW with
/// a = alpha^beta; mapping exp(-(m/alpha)^beta) instead would collapse to
/// a = 1 for every parameter choice.
UnitData mbuw_sample_median_of_three(const ShapeParams& params, std::size_t n,
                                     std::uint64_t seed);

/// E(y^r) = 6 / ((2 + r a)(3 + r a))
double mbuw_raw_moment(CoreParam p, int r);

/// Variance as one rational expression in a,
/// (78 a^2 + 60 a^3 + 6 a^4) / ((6 + 10a + 4a^2)(6 + 5a + a^2)^2);
/// algebraically equal to E(y^2) - E(y)^2.
double mbuw_variance_rational(CoreParam p);

struct MomentSummary {
  double mean;      // in (0,1)
  double variance;  // > 0, below mean(1-mean)
  double skewness;
  double kurtosis;
  double cv;        // sqrt(variance)/mean
};

/// Mean, variance, skewness, kurtosis (standard fourth-central-moment
/// expansion E(y^4) - 4 mu E(y^3) + 6 mu^2 E(y^2) - 3 mu^4 over sigma^4) and
/// coefficient of variation, all from the closed-form raw moments.
MomentSummary mbuw_moment_summary(CoreParam p);

/// Unnormalized truncated moment int_0^t y^r f(y) dy =
/// 6 t^(2/a + r)/(2 + r a) - 6 t^(3/a + r)/(3 + r a), for t in (0, 1].
/// r = 0 recovers the cdf; t = 1 recovers the raw moment.
double mbuw_incomplete_moment(CoreParam p, int r, double t);

// Unified dispatch across all six models. theta is the parameter vector in
// the model's natural order: (alpha, beta) for MBUW/Beta/Kumaraswamy,
// (alpha) for MBUR, (theta) for Topp-Leone and Unit-Lindley. MBUR delegates
// to the MBUW kernels with a = alpha^2, bit for bit.
double model_pdf(ModelKind kind, std::span<const double> theta, double y);
double model_log_pdf(ModelKind kind, std::span<const double> theta, double y);
double model_cdf(ModelKind kind, std::span<const double> theta, double y);

/// Inverse cdf. Closed form for MBUW, MBUR, Kumaraswamy and Topp-Leone;
/// Beta and Unit-Lindley fall back to bisection on the cdf (still well past
/// the 1e-10 roundtrip mark).
double model_quantile(ModelKind kind, std::span<const double> theta, double u);

/// Inverse-transform draws from any model, same uniform stream as
/// mbuw_sample.
UnitData model_sample(ModelKind kind, std::span<const double> theta,
                      std::size_t n, std::uint64_t seed);

}  // namespace mbuw

#endif  // MBUW_DISTRIBUTIONS_HPP

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

#include "mbuw/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mbuw/special_functions.hpp"

namespace mbuw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLnSqrtPi = 0.5723649429247000870717136756765294;

double guarded(double v) { return std::isnan(v) ? kInf : v; }

void check_config(const OptimizerConfig& cfg) {
  if (cfg.max_iterations < 1)
    throw std::invalid_argument("OptimizerConfig: max_iterations must be >= 1");
  if (!(cfg.simplex_tolerance > 0.0))
    throw std::invalid_argument(
        "OptimizerConfig: simplex_tolerance must be positive");
  if (cfg.restarts < 0)
    throw std::invalid_argument("OptimizerConfig: restarts must be >= 0");
}

}  // namespace

double nll(ModelKind kind, std::span<const double> theta,
           const UnitData& data) {
  double sum = 0.0;
  for (double y : data) {
    const double lp = model_log_pdf(kind, theta, y);
    if (lp == -kInf) return kInf;  // density vanished at a data point
    sum += lp;
  }
  return std::isnan(sum) ? kInf : -sum;
}

namespace {

// Topp-Leone mean: 1 - int_0^1 (2y - y^2)^theta dy
//                = 1 - sqrt(pi) Gamma(theta+1) / (2 Gamma(theta+3/2)).
double topp_leone_mean(double theta) {
  return 1.0 - std::exp(kLnSqrtPi + log_gamma(theta + 1.0) -
                        std::log(2.0) - log_gamma(theta + 1.5));
}

// Unit-Lindley mean: substituting x = y/(1-y) reduces E[Y] to
// theta^2/(1+theta) int_0^inf x e^(-theta x) dx = 1/(1+theta).
double unit_lindley_mean(double theta) { return 1.0 / (1.0 + theta); }

// Bisection on log(theta) for a monotone mean function.
double match_mean(const std::function<double(double)>& mean, double target) {
  double lo = std::log(1e-6), hi = std::log(1e6);
  const bool increasing = mean(std::exp(hi)) > mean(std::exp(lo));
  if (!increasing) target = -target;
  auto g = [&](double u) {
    const double m = mean(std::exp(u));
    return increasing ? m : -m;
  };
  if (g(lo) >= target) return std::exp(lo);
  if (g(hi) <= target) return std::exp(hi);
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < target ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace

std::vector<double> init_params(ModelKind kind, const UnitData& data) {
  if (data.n() < 2)
    throw std::invalid_argument("init_params: need at least two observations");
  const double m = data.mean();
  switch (kind) {
    case ModelKind::MBUW:
    case ModelKind::MBUR: {
      const double a0 = 0.5 * (-5.0 + std::sqrt(1.0 + 24.0 / m));
      if (kind == ModelKind::MBUW) return {a0, 1.0};
      return {std::sqrt(a0)};
    }
    case ModelKind::Beta: {
      double v = 0.0;
      for (double y : data) v += (y - m) * (y - m);
      v /= static_cast<double>(data.n());
      const double c = m * (1.0 - m) / v - 1.0;
      if (!std::isfinite(c) || c <= 0.0) return {1.0, 1.0};
      return {m * c, (1.0 - m) * c};
    }
    case ModelKind::Kumaraswamy:
      return {1.0, 1.0};
    case ModelKind::ToppLeone:
      return {match_mean(topp_leone_mean, m)};
    case ModelKind::UnitLindley:
      return {match_mean(unit_lindley_mean, m)};
  }
  throw std::invalid_argument("init_params: unknown model kind");
}

namespace {

struct SimplexPoint {
  std::vector<double> x;
  double f;
};

// One converge-to-tolerance pass; returns iterations used.
int nelder_mead_run(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<SimplexPoint>& simplex, const OptimizerConfig& cfg,
    bool& converged) {
  const std::size_t d = simplex[0].x.size();
  auto order = [&] {
    std::sort(simplex.begin(), simplex.end(),
              [](const SimplexPoint& a, const SimplexPoint& b) {
                return a.f < b.f;
              });
  };
  order();
  converged = false;
  int iter = 0;
  while (iter < cfg.max_iterations) {
    if (simplex.back().f - simplex.front().f <= cfg.simplex_tolerance) {
      converged = true;
      break;
    }
    ++iter;
    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        centroid[j] += simplex[i].x[j] / static_cast<double>(d);
    const std::vector<double>& worst = simplex.back().x;

    auto blend = [&](double coef) {
      std::vector<double> p(d);
      for (std::size_t j = 0; j < d; ++j)
        p[j] = centroid[j] + coef * (centroid[j] - worst[j]);
      return p;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = guarded(objective(xr));
    if (fr < simplex.front().f) {
      std::vector<double> xe = blend(2.0);
      const double fe = guarded(objective(xe));
      if (fe < fr)
        simplex.back() = {std::move(xe), fe};
      else
        simplex.back() = {std::move(xr), fr};
    } else if (fr < simplex[d - 1].f) {
      simplex.back() = {std::move(xr), fr};
    } else {
      const bool outside = fr < simplex.back().f;
      std::vector<double> xc = blend(outside ? 0.5 : -0.5);
      const double fc = guarded(objective(xc));
      if ((outside && fc <= fr) || (!outside && fc < simplex.back().f)) {
        simplex.back() = {std::move(xc), fc};
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i <= d; ++i) {
          for (std::size_t j = 0; j < d; ++j)
            simplex[i].x[j] =
                simplex[0].x[j] + 0.5 * (simplex[i].x[j] - simplex[0].x[j]);
          simplex[i].f = guarded(objective(simplex[i].x));
        }
      }
    }
    order();
  }
  return iter;
}

std::vector<SimplexPoint> initial_simplex(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& x0) {
  const std::size_t d = x0.size();
  std::vector<SimplexPoint> simplex;
  simplex.reserve(d + 1);
  simplex.push_back({x0, guarded(objective(x0))});
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<double> p = x0;
    p[j] += (std::fabs(p[j]) > 1e-12) ? 0.05 * std::fabs(p[j]) : 0.00025;
    simplex.push_back({p, guarded(objective(p))});
  }
  return simplex;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    std::vector<double> x0, const OptimizerConfig& cfg) {
  check_config(cfg);
  if (x0.empty())
    throw std::invalid_argument("nelder_mead: empty starting point");
  NelderMeadResult result;
  result.x = x0;
  result.fval = guarded(objective(x0));
  if (!std::isfinite(result.fval)) return result;  // converged = false

  auto simplex = initial_simplex(objective, x0);
  bool converged = false;
  result.iterations = nelder_mead_run(objective, simplex, cfg, converged);
  for (int r = 0; r < cfg.restarts; ++r) {
    auto restarted = initial_simplex(objective, simplex[0].x);
    result.iterations +=
        nelder_mead_run(objective, restarted, cfg, converged);
    if (restarted[0].f <= simplex[0].f) simplex = std::move(restarted);
  }
  if (simplex[0].f <= result.fval) {
    result.x = simplex[0].x;
    result.fval = simplex[0].f;
  }
  result.converged = converged;
  return result;
}

Matrix numeric_hessian(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& x) {
  const std::size_t k = x.size();
  std::vector<double> h(k);
  for (std::size_t j = 0; j < k; ++j)
    h[j] = std::max(1e-4 * std::fabs(x[j]), 1e-6);
  auto shifted = [&](std::initializer_list<std::pair<std::size_t, double>>
                         moves) {
    std::vector<double> p = x;
    for (const auto& [idx, delta] : moves) p[idx] += delta;
    return objective(p);
  };
  Matrix H(k, std::vector<double>(k, 0.0));
  const double f0 = objective(x);
  for (std::size_t i = 0; i < k; ++i) {
    H[i][i] =
        (shifted({{i, h[i]}}) - 2.0 * f0 + shifted({{i, -h[i]}})) /
        (h[i] * h[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      const double v = (shifted({{i, h[i]}, {j, h[j]}}) -
                        shifted({{i, h[i]}, {j, -h[j]}}) -
                        shifted({{i, -h[i]}, {j, h[j]}}) +
                        shifted({{i, -h[i]}, {j, -h[j]}})) /
                       (4.0 * h[i] * h[j]);
      H[i][j] = H[j][i] = v;  // symmetric by construction
    }
  }
  return H;
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
  const std::size_t k = m.size();
  Matrix a = m;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-300) break;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t i = 0; i < k; ++i) {
          const double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < k; ++i) {
          const double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  std::vector<double> ev(k);
  for (std::size_t i = 0; i < k; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::optional<Matrix> invert_matrix(const Matrix& m) {
  const std::size_t k = m.size();
  Matrix a = m;
  Matrix inv(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    if (!(std::fabs(a[pivot][col]) > 1e-300)) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const double d = a[col][col];
    for (std::size_t j = 0; j < k; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const double factor = a[r][col];
      for (std::size_t j = 0; j < k; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

FitResult finish_fit(ModelKind kind, std::vector<double> estimates,
                     const std::function<double(const std::vector<double>&)>&
                         natural_objective,
                     const NelderMeadResult& nm) {
  FitResult res;
  res.kind = kind;
  res.estimates = std::move(estimates);
  res.nll = nm.fval;
  res.converged = nm.converged;
  res.iterations = nm.iterations;

  const Matrix H = numeric_hessian(natural_objective, res.estimates);
  bool finite = true;
  for (const auto& row : H)
    for (double v : row) finite = finite && std::isfinite(v);
  if (!finite) {
    res.hessian_condition = std::numeric_limits<double>::quiet_NaN();
    return res;
  }

  const std::vector<double> ev = symmetric_eigenvalues(H);
  double abs_min = kInf, abs_max = 0.0;
  for (double v : ev) {
    abs_min = std::min(abs_min, std::fabs(v));
    abs_max = std::max(abs_max, std::fabs(v));
  }
  res.hessian_condition = abs_min == 0.0 ? kInf : abs_max / abs_min;

  const auto vcov = invert_matrix(H);
  if (!vcov || res.hessian_condition > kHessianConditionLimit) return res;
  for (std::size_t j = 0; j < vcov->size(); ++j)
    if (!((*vcov)[j][j] > 0.0)) return res;  // mirrors "cannot be estimated"

  res.vcov = *vcov;
  std::vector<double> se;
  std::vector<std::pair<double, double>> ci;
  for (std::size_t j = 0; j < vcov->size(); ++j) {
    se.push_back(std::sqrt((*vcov)[j][j]));
    ci.emplace_back(res.estimates[j] - kCi95Multiplier * se.back(),
                    res.estimates[j] + kCi95Multiplier * se.back());
  }
  res.se = std::move(se);
  res.ci95 = std::move(ci);
  return res;
}

}  // namespace

FitResult fit(ModelKind kind, const UnitData& data,
              const OptimizerConfig& cfg) {
  check_config(cfg);
  const int k = param_count(kind);
  if (data.n() < static_cast<std::size_t>(k) + 1)
    throw std::invalid_argument("fit: need at least k + 1 observations");

  const std::vector<double> theta0 = init_params(kind, data);
  auto log_objective = [&](const std::vector<double>& u) {
    std::vector<double> theta(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) theta[j] = std::exp(u[j]);
    try {
      return nll(kind, theta, data);
    } catch (const std::exception&) {
      return kInf;
    }
  };
  std::vector<double> u0(theta0.size());
  for (std::size_t j = 0; j < theta0.size(); ++j) u0[j] = std::log(theta0[j]);

  NelderMeadResult nm = nelder_mead(log_objective, u0, cfg);
  std::vector<double> estimates(nm.x.size());
  for (std::size_t j = 0; j < nm.x.size(); ++j)
    estimates[j] = std::exp(nm.x[j]);

  auto natural_objective = [&](const std::vector<double>& theta) {
    try {
      return nll(kind, theta, data);
    } catch (const std::exception&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  return finish_fit(kind, std::move(estimates), natural_objective, nm);
}

FitResult fit_mbuw_core(const UnitData& data, const OptimizerConfig& cfg) {
  check_config(cfg);
  if (data.n() < 2)
    throw std::invalid_argument("fit_mbuw_core: need at least 2 observations");
  const double a0 = init_params(ModelKind::MBUW, data)[0];
  auto log_objective = [&](const std::vector<double>& u) {
    const double theta[2] = {std::exp(u[0]), 1.0};
    try {
      return nll(ModelKind::MBUW, theta, data);
    } catch (const std::exception&) {
      return kInf;
    }
  };
  NelderMeadResult nm = nelder_mead(log_objective, {std::log(a0)}, cfg);
  auto natural_objective = [&](const std::vector<double>& av) {
    const double theta[2] = {av[0], 1.0};
    try {
      return nll(ModelKind::MBUW, theta, data);
    } catch (const std::exception&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  return finish_fit(ModelKind::MBUW, {std::exp(nm.x[0])}, natural_objective,
                    nm);
}

}  // namespace mbuw

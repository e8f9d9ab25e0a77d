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

#include <cmath>
#include <limits>
#include <thread>

#include "doctest.h"
#include "mbuw/datasets.hpp"

TEST_SUITE_BEGIN("estimation");

using namespace mbuw;

TEST_CASE("nll basic values") {
  const UnitData half({0.5});
  const std::vector<double> mbuw_one = {1.0, 1.0};
  CHECK(nll(ModelKind::MBUW, mbuw_one, half) ==
        doctest::Approx(-std::log(1.5)).epsilon(1e-14));
  const UnitData some({0.2, 0.4, 0.9});
  const std::vector<double> uniform = {1.0, 1.0};
  CHECK(nll(ModelKind::Beta, uniform, some) ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("nll matches the tabled dwellings value for MBUR") {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const std::vector<double> alpha = {2.2834};
  const double v = nll(ModelKind::MBUR, alpha, d);
  CHECK(v == doctest::Approx(-74.2925).epsilon(0.0007));  // |err| < 0.05
}

TEST_CASE("init_params closed-form inversion") {
  // mean exactly 0.5 -> a0 = (-5 + 7)/2 = 1
  const UnitData sym({0.4, 0.6});
  CHECK(init_params(ModelKind::MBUW, sym) ==
        std::vector<double>{1.0, 1.0});
  CHECK(init_params(ModelKind::MBUR, sym)[0] ==
        doctest::Approx(1.0).epsilon(1e-12));

  // smaller mean -> larger a0, monotonically
  const UnitData small({0.01, 0.01 + 1e-9});
  const UnitData tiny({0.001, 0.001 + 1e-9});
  CHECK(init_params(ModelKind::MBUW, tiny)[0] >
        init_params(ModelKind::MBUW, small)[0]);

  // dwellings: recompute the closed form from the sample mean
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const double m = d.mean();
  const double a0 = 0.5 * (-5.0 + std::sqrt(1.0 + 24.0 / m));
  CHECK(init_params(ModelKind::MBUW, d) == std::vector<double>{a0, 1.0});
  CHECK(init_params(ModelKind::MBUR, d)[0] ==
        doctest::Approx(std::sqrt(a0)).epsilon(1e-14));
}

TEST_CASE("init_params survives degenerate data") {
  const UnitData flat({0.3, 0.3, 0.3, 0.3});
  for (ModelKind k :
       {ModelKind::MBUW, ModelKind::MBUR, ModelKind::Beta,
        ModelKind::Kumaraswamy, ModelKind::ToppLeone, ModelKind::UnitLindley}) {
    const std::vector<double> p = init_params(k, flat);
    CHECK(p.size() == static_cast<std::size_t>(param_count(k)));
    for (double v : p) {
      CHECK(std::isfinite(v));
      CHECK(v > 0.0);
    }
  }
  CHECK_THROWS_AS(init_params(ModelKind::Beta, UnitData({0.5})),
                  std::invalid_argument);
}

TEST_CASE("init_params moment matching for one-parameter models") {
  // Topp-Leone(theta=1) has mean 1 - 2/3 ... target its own mean back
  const UnitData d({0.2, 0.3, 0.4, 0.25, 0.35});
  for (ModelKind k : {ModelKind::ToppLeone, ModelKind::UnitLindley}) {
    const double theta = init_params(k, d)[0];
    CHECK(std::isfinite(theta));
    CHECK(theta > 0.0);
  }
  // Unit-Lindley mean is 1/(1+theta); mean 0.25 -> theta = 3
  const UnitData q({0.2, 0.3});
  CHECK(init_params(ModelKind::UnitLindley, q)[0] ==
        doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("nelder_mead quadratic bowl") {
  const auto objective = [](const std::vector<double>& x) {
    return (x[0] - 3.0) * (x[0] - 3.0);
  };
  OptimizerConfig cfg;
  cfg.simplex_tolerance = 1e-16;  // f-spread tol; 1e-16 pins x to ~1e-8
  const NelderMeadResult r = nelder_mead(objective, {0.0}, cfg);
  CHECK(r.converged);
  CHECK(std::fabs(r.x[0] - 3.0) <= 1e-6);
  CHECK(r.fval <= 1e-12);
}

TEST_CASE("nelder_mead flat ridge like the alpha^beta surface") {
  const auto objective = [](const std::vector<double>& x) {
    const double g = x[0] * x[1] - 5.0;
    return g * g;
  };
  const NelderMeadResult r = nelder_mead(objective, {1.0, 1.0}, {});
  CHECK(r.fval <= 1e-12);
  CHECK(r.x[0] * r.x[1] == doctest::Approx(5.0).epsilon(1e-5));
}

TEST_CASE("nelder_mead never worsens its start and flags non-convergence") {
  const auto objective = [](const std::vector<double>& x) {
    return std::sin(7.0 * x[0]) + 0.1 * x[0] * x[0];
  };
  OptimizerConfig one_step;
  one_step.max_iterations = 1;
  one_step.restarts = 0;
  const NelderMeadResult r = nelder_mead(objective, {2.0}, one_step);
  CHECK_FALSE(r.converged);
  CHECK(r.fval <= objective({2.0}));
  // infinite start: give up immediately rather than failing
  const auto inf_obj = [](const std::vector<double>&) {
    return std::numeric_limits<double>::infinity();
  };
  const NelderMeadResult r2 = nelder_mead(inf_obj, {1.0}, {});
  CHECK_FALSE(r2.converged);
}

TEST_CASE("nelder_mead recovers the tabled dwellings MBUR estimate") {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const auto objective = [&](const std::vector<double>& u) {
    const std::vector<double> alpha = {std::exp(u[0])};
    return nll(ModelKind::MBUR, alpha, d);
  };
  const std::vector<double> u0 = {
      std::log(init_params(ModelKind::MBUR, d)[0])};
  const NelderMeadResult r = nelder_mead(objective, u0, {});
  CHECK(r.converged);
  CHECK(std::exp(r.x[0]) == doctest::Approx(2.2834).epsilon(0.01 / 2.2834));
}

TEST_CASE("numeric_hessian on known quadratics") {
  const auto square = [](const std::vector<double>& x) {
    return x[0] * x[0];
  };
  const Matrix h1 = numeric_hessian(square, {1.7});
  CHECK(h1[0][0] == doctest::Approx(2.0).epsilon(1e-6));

  const auto quad = [](const std::vector<double>& x) {
    return x[0] * x[0] + 3.0 * x[1] * x[1] + x[0] * x[1];
  };
  const Matrix h2 = numeric_hessian(quad, {0.0, 0.0});
  CHECK(h2[0][0] == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(h2[1][1] == doctest::Approx(6.0).epsilon(1e-5));
  CHECK(h2[0][1] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(h2[0][1] == h2[1][0]);
}

TEST_CASE("linear algebra helpers") {
  const Matrix m = {{2.0, 1.0}, {1.0, 6.0}};
  const auto ev = symmetric_eigenvalues(m);
  // eigenvalues of [[2,1],[1,6]] are 4 -/+ sqrt(5)
  CHECK(ev[0] == doctest::Approx(4.0 - std::sqrt(5.0)).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(4.0 + std::sqrt(5.0)).epsilon(1e-12));
  const auto inv = invert_matrix(m);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == doctest::Approx(6.0 / 11.0).epsilon(1e-12));
  CHECK((*inv)[0][1] == doctest::Approx(-1.0 / 11.0).epsilon(1e-12));
  CHECK((*inv)[1][1] == doctest::Approx(2.0 / 11.0).epsilon(1e-12));
  const Matrix singular = {{1.0, 2.0}, {2.0, 4.0}};
  CHECK_FALSE(invert_matrix(singular).has_value());
}

TEST_CASE("fit MBUR on dwellings reproduces the tabled column") {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const FitResult r = fit(ModelKind::MBUR, d);
  CHECK(r.converged);
  CHECK(r.estimates[0] == doctest::Approx(2.2834).epsilon(0.01 / 2.2834));
  CHECK(r.ll_magnitude() == doctest::Approx(74.2925).epsilon(0.0007));
  REQUIRE(r.se.has_value());
  // Honest observed-information SE (the reference table's 0.006 carries an
  // extra 1/sqrt(n); see the fit documentation).
  CHECK((*r.se)[0] == doctest::Approx(0.1386).epsilon(0.02));
  REQUIRE(r.ci95.has_value());
  CHECK((*r.ci95)[0].first ==
        doctest::Approx(r.estimates[0] - 1.959964 * (*r.se)[0]).epsilon(1e-12));
  CHECK(r.hessian_condition == doctest::Approx(1.0));
}

TEST_CASE("fit MBUW two-parameter ridge flags SE unavailable") {
  for (DatasetId id : {DatasetId::SupportNetwork, DatasetId::VoterTurnout}) {
    const UnitData& d = builtin(id).data;
    const FitResult r = fit(ModelKind::MBUW, d);
    CHECK(r.converged);
    CHECK_FALSE(r.se.has_value());
    CHECK_FALSE(r.vcov.has_value());
    CHECK_FALSE(r.ci95.has_value());
    CHECK(r.hessian_condition > kHessianConditionLimit);
  }
}

TEST_CASE("fit MBUW agrees with MBUR through the ridge identity") {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const FitResult w = fit(ModelKind::MBUW, d);
  const FitResult r = fit(ModelKind::MBUR, d);
  const double a_w = std::pow(w.estimates[0], w.estimates[1]);
  const double a_r = r.estimates[0] * r.estimates[0];
  CHECK(std::fabs(a_w - a_r) / a_r <= 0.005);
  // the likelihood is identified only through a = alpha^beta
  const std::vector<double> ridge_point = {a_w, 1.0};
  CHECK(nll(ModelKind::MBUW, w.estimates, d) ==
        doctest::Approx(nll(ModelKind::MBUW, ridge_point, d)).epsilon(1e-8));
  // dataset-1 MBUW hessian condition is large (the ridge)
  CHECK(w.hessian_condition > 1e6);
}

TEST_CASE("fit is deterministic") {
  const UnitData& d = builtin(DatasetId::Flood).data;
  const FitResult a = fit(ModelKind::Beta, d);
  const FitResult b = fit(ModelKind::Beta, d);
  CHECK(a.estimates == b.estimates);
  CHECK(a.nll == b.nll);
  CHECK(a.iterations == b.iterations);
  REQUIRE(a.se.has_value());
  REQUIRE(b.se.has_value());
  CHECK(*a.se == *b.se);
}

TEST_CASE("fit vcov is symmetric positive semi-definite when available") {
  for (DatasetId id : {DatasetId::Dwellings, DatasetId::Flood,
                       DatasetId::UnitCapacity}) {
    const UnitData& d = builtin(id).data;
    for (ModelKind k : {ModelKind::Beta, ModelKind::Kumaraswamy,
                        ModelKind::MBUR}) {
      const FitResult r = fit(k, d);
      if (!r.vcov.has_value()) continue;
      const Matrix& v = *r.vcov;
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
          CHECK(v[i][j] == doctest::Approx(v[j][i]).epsilon(1e-10));
      for (double ev : symmetric_eigenvalues(v)) CHECK(ev >= -1e-10);
    }
  }
}

TEST_CASE("fit requires enough data") {
  CHECK_THROWS_AS(fit(ModelKind::Beta, UnitData({0.5, 0.6})),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit(ModelKind::MBUR, UnitData({0.5})),
                  std::invalid_argument);
}

TEST_CASE("identified single-parameter MBUW fit") {
  const UnitData& d = builtin(DatasetId::Dwellings).data;
  const FitResult r = fit_mbuw_core(d);
  CHECK(r.converged);
  CHECK(r.k() == 1);
  // same core parameter as the MBUR fit, and a usable standard error
  const FitResult mbur = fit(ModelKind::MBUR, d);
  CHECK(r.estimates[0] ==
        doctest::Approx(mbur.estimates[0] * mbur.estimates[0]).epsilon(1e-4));
  REQUIRE(r.se.has_value());
  REQUIRE(mbur.se.has_value());
  // delta method ties the two observed-information routes together:
  // a = alpha^2 gives se_a = 2 alpha se_alpha at the optimum
  CHECK((*r.se)[0] == doctest::Approx(2.0 * mbur.estimates[0] *
                                      (*mbur.se)[0])
                          .epsilon(1e-3));
}

TEST_CASE("topp-leone and unit-lindley are fit-capable") {
  const UnitData& d = builtin(DatasetId::VoterTurnout).data;
  for (ModelKind k : {ModelKind::ToppLeone, ModelKind::UnitLindley}) {
    const FitResult r = fit(k, d);
    CHECK(r.converged);
    CHECK(r.k() == 1);
    CHECK(std::isfinite(r.nll));
    REQUIRE(r.se.has_value());
    CHECK((*r.se)[0] > 0.0);
  }
  // synthetic recovery: Topp-Leone(theta = 2) data
  const UnitData tl = model_sample(ModelKind::ToppLeone,
                                   std::vector<double>{2.0}, 5000, 31);
  const FitResult rt = fit(ModelKind::ToppLeone, tl);
  CHECK(std::fabs(rt.estimates[0] - 2.0) / 2.0 <= 0.1);
  // synthetic recovery: Unit-Lindley(theta = 1.5) data
  const UnitData ul = model_sample(ModelKind::UnitLindley,
                                   std::vector<double>{1.5}, 5000, 32);
  const FitResult ru = fit(ModelKind::UnitLindley, ul);
  CHECK(std::fabs(ru.estimates[0] - 1.5) / 1.5 <= 0.1);
}

TEST_CASE("kernels and fits are safe to run concurrently") {
  const UnitData& d = builtin(DatasetId::Flood).data;
  const FitResult serial = fit(ModelKind::MBUR, d);
  std::vector<std::thread> workers;
  std::vector<FitResult> results(4);
  std::vector<double> quantiles(4);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      results[t] = fit(ModelKind::MBUR, d);
      quantiles[t] = mbuw_quantile(CoreParam(1.0 + t), 0.25);
    });
  for (std::thread& w : workers) w.join();
  for (int t = 0; t < 4; ++t) {
    CHECK(results[t].estimates == serial.estimates);
    CHECK(results[t].nll == serial.nll);
    CHECK(quantiles[t] == mbuw_quantile(CoreParam(1.0 + t), 0.25));
  }
}

TEST_CASE("synthetic MBUR recovery within 5 percent") {
  const double alpha_true = 1.5;
  const double a_true = alpha_true * alpha_true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const UnitData sample = mbuw_sample(CoreParam(a_true), 10000, seed);
    const FitResult r = fit(ModelKind::MBUR, sample);
    const double a_hat = r.estimates[0] * r.estimates[0];
    CHECK(std::fabs(a_hat - a_true) / a_true <= 0.05);
  }
}

TEST_SUITE_END();

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

// Acceptance suite. Each criterion prints exactly one PASS/FAIL line (plus
// indented detail); the process exit code is the number of failed criteria.
//
// Two criteria are expected to stay red against the reference tables; their
// detail blocks explain why the tabled cells cannot be reproduced by any
// self-consistent estimator. Everything else must pass.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mbuw/datasets.hpp"
#include "mbuw/distributions.hpp"
#include "mbuw/estimation.hpp"
#include "mbuw/goodness_of_fit.hpp"
#include "mbuw/special_functions.hpp"
#include "reference_results.hpp"

using namespace mbuw;

namespace {

int g_failures = 0;

void criterion(const std::string& name,
               const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail += std::string("exception: ") + e.what();
  }
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name.c_str());
  if (!detail.empty()) {
    std::istringstream in(detail);
    std::string line;
    while (std::getline(in, line))
      std::printf("      %s\n", line.c_str());
  }
  if (!ok) ++g_failures;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// fits shared across the table-reproduction criteria
struct Fits {
  std::map<std::pair<std::string, std::string>, FitResult> fit;
  std::map<std::pair<std::string, std::string>, GofReport> gof;

  const FitResult& at(const std::string& ds, const std::string& model) const {
    return fit.at({ds, model});
  }
  const GofReport& gof_at(const std::string& ds,
                          const std::string& model) const {
    return gof.at({ds, model});
  }
};

Fits fit_everything() {
  Fits all;
  for (const auto& table : tools::kReferenceTables) {
    const NamedDataset* ds = find_builtin(table.dataset);
    for (const auto& ref : table.fits) {
      const ModelKind kind = model_from_name(ref.model);
      FitResult f = fit(kind, ds->data);
      all.gof.insert({{table.dataset, ref.model}, gof_report(f, ds->data)});
      all.fit.insert({{table.dataset, ref.model}, std::move(f)});
    }
  }
  return all;
}

// ---------------------------------------------------------------------------

void group_closed_form_oracles() {
  criterion("1.1 quantile median identity Q(0.5; a) = 0.5^a (1e-12 rel)",
            [](std::string& detail) {
              bool ok = true;
              for (double a : {0.01, 0.1, 1.0, 5.21392, 50.0}) {
                const double q = mbuw_quantile(CoreParam(a), 0.5);
                const double want = std::pow(0.5, a);
                if (std::fabs(q - want) > 1e-12 * want) {
                  ok = false;
                  detail += "a=" + num(a) + ": " + num(q) + " vs " +
                            num(want) + "\n";
                }
              }
              return ok;
            });

  criterion("1.2 cdf(quantile(u)) roundtrip <= 1e-10 on 99 x 5 grid",
            [](std::string& detail) {
              double worst = 0.0;
              for (double a : {0.01, 0.1, 1.0, 5.21392, 50.0}) {
                const CoreParam p(a);
                for (int i = 1; i <= 99; ++i) {
                  const double u = i / 100.0;
                  worst = std::max(
                      worst,
                      std::fabs(mbuw_cdf(p, mbuw_quantile(p, u)) - u));
                }
              }
              detail = "max |cdf(Q(u)) - u| = " + num(worst);
              return worst <= 1e-10;
            });

  criterion(
      "1.3 pdf normalization = 1 +- 1e-8 for all six models, 23 points",
      [](std::string& detail) {
        struct Point {
          ModelKind kind;
          std::vector<double> theta;
        };
        const std::vector<Point> grid = {
            {ModelKind::MBUW, {0.7, 0.5}},
            {ModelKind::MBUW, {1.0, 1.0}},
            {ModelKind::MBUW, {2.0, 1.7}},
            {ModelKind::MBUW, {6.636, 0.8726}},
            {ModelKind::MBUR, {0.5}},
            {ModelKind::MBUR, {1.0}},
            {ModelKind::MBUR, {2.2834}},
            {ModelKind::Beta, {0.4798, 9.3996}},
            {ModelKind::Beta, {2.0, 2.0}},
            {ModelKind::Beta, {21.7353, 2.4061}},
            {ModelKind::Beta, {0.7, 2.0}},
            {ModelKind::Kumaraswamy, {0.57, 6.2579}},
            {ModelKind::Kumaraswamy, {1.0, 1.0}},
            {ModelKind::Kumaraswamy, {16.5447, 2.772}},
            {ModelKind::Kumaraswamy, {3.3777, 12.0057}},
            {ModelKind::ToppLeone, {0.5}},
            {ModelKind::ToppLeone, {1.0}},
            {ModelKind::ToppLeone, {2.0}},
            {ModelKind::UnitLindley, {0.5}},
            {ModelKind::UnitLindley, {1.0}},
            {ModelKind::UnitLindley, {2.5}},
            // a = 2^3.5 ~ 11.3: y^(-0.82) singularity at 0, still resolvable
            // in doubles (a >~ 70 would park visible mass below the smallest
            // positive double and no quadrature could see it)
            {ModelKind::MBUW, {2.0, 3.5}},
            {ModelKind::MBUR, {1.7886}},
        };
        double worst = 0.0;
        for (const Point& pt : grid) {
          const double mass =
              integrate(
                  [&](double y) { return model_pdf(pt.kind, pt.theta, y); },
                  0.0, 1.0, 1e-9, 2000000)
                  .value;
          worst = std::max(worst, std::fabs(mass - 1.0));
        }
        detail = "points: " + std::to_string(grid.size()) +
                 ", max |mass - 1| = " + num(worst);
        return grid.size() >= 20 && worst <= 1e-8;
      });

  criterion(
      "1.4 raw moments vs quadrature (1e-8 rel); rational variance (1e-12)",
      [](std::string& detail) {
        double worst_m = 0.0, worst_v = 0.0;
        for (double a : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
          const CoreParam p(a);
          for (int r = 1; r <= 4; ++r) {
            const double quad =
                integrate(
                    [&](double y) {
                      return std::pow(y, r) * mbuw_pdf(p, y);
                    },
                    0.0, 1.0, 1e-11, 2000000)
                    .value;
            worst_m = std::max(
                worst_m,
                std::fabs(mbuw_raw_moment(p, r) - quad) / std::fabs(quad));
          }
          const double v1 = mbuw_variance_rational(p);
          const double v2 = mbuw_moment_summary(p).variance;
          worst_v = std::max(worst_v, std::fabs(v1 - v2) / v2);
        }
        detail = "max moment rel err = " + num(worst_m) +
                 ", max variance-form rel gap = " + num(worst_v);
        return worst_m <= 1e-8 && worst_v <= 1e-12;
      });

  criterion(
      "1.5 a = 1 collapse to Beta(2,2): sup diff <= 1e-14, skew = 0, "
      "var = 0.05",
      [](std::string& detail) {
        const CoreParam one(1.0);
        double sup = 0.0;
        for (int i = 1; i <= 1000; ++i) {
          const double y = i / 1001.0;
          sup = std::max(sup,
                         std::fabs(mbuw_pdf(one, y) - 6.0 * y * (1.0 - y)));
        }
        const MomentSummary s = mbuw_moment_summary(one);
        detail = "sup pdf diff = " + num(sup) + ", skew = " +
                 num(s.skewness) + ", var = " + num(s.variance);
        return sup <= 1e-14 && std::fabs(s.skewness) <= 1e-12 &&
               std::fabs(s.variance - 0.05) <= 1e-14;
      });

  criterion(
      "1.6 median-of-three Weibull oracle sampler: K-S p > 0.001 at n=1e5, "
      "3 settings",
      [](std::string& detail) {
        struct Setting {
          double alpha, beta;
        };
        const Setting settings[] = {{1.0, 1.0}, {2.2834, 2.0}, {1.7, 0.7}};
        bool ok = true;
        std::uint64_t seed = 20240501;
        for (const Setting& s : settings) {
          const ShapeParams sp(s.alpha, s.beta);
          const CoreParam a = core(sp);
          const UnitData sample =
              mbuw_sample_median_of_three(sp, 100000, seed++);
          const KsResult ks =
              ks_test(sample, [&](double y) { return mbuw_cdf(a, y); });
          detail += "alpha=" + num(s.alpha) + " beta=" + num(s.beta) +
                    ": p = " + num(ks.p_value) + "\n";
          ok = ok && ks.p_value > 0.001;
        }
        return ok;
      });
}

// ---------------------------------------------------------------------------

void group_table_reproduction() {
  const Fits all = fit_everything();

  criterion(
      "2.1 dwellings: mbur alpha/|ll|/aic/ks/hqic; beta and kumaraswamy "
      "estimates and beta aic",
      [&](std::string& detail) {
        bool ok = true;
        const FitResult& mbur = all.at("dwellings", "mbur");
        const GofReport& g = all.gof_at("dwellings", "mbur");
        auto check = [&](const char* what, double got, double want,
                         double tol) {
          const bool pass = std::fabs(got - want) <= tol;
          if (!pass)
            detail += std::string(what) + ": " + num(got) + " vs " +
                      num(want) + " (tol " + num(tol) + ")\n";
          ok = ok && pass;
        };
        check("mbur alpha", mbur.estimates[0], 2.2834, 0.01);
        check("mbur |ll|", mbur.ll_magnitude(), 74.2925, 0.05);
        check("mbur aic", g.aic, 150.585, 0.1);
        check("mbur ks", g.ks_stat, 0.1794, 0.002);
        check("mbur hqic_ref", g.hqic_reference, 4.2950, 0.001);
        const FitResult& beta = all.at("dwellings", "beta");
        check("beta alpha", beta.estimates[0], 0.4798, 0.01 * 0.4798);
        check("beta beta", beta.estimates[1], 9.3996, 0.01 * 9.3996);
        check("beta aic", all.gof_at("dwellings", "beta").aic, 161.3608, 0.1);
        const FitResult& kum = all.at("dwellings", "kumaraswamy");
        check("kumaraswamy alpha", kum.estimates[0], 0.5700, 0.01 * 0.5700);
        check("kumaraswamy beta", kum.estimates[1], 6.2579, 0.01 * 6.2579);
        return ok;
      });

  criterion(
      "2.2 datasets 2-6: mbur alpha (+-0.01), aic (+-0.1), ks (+-0.003)",
      [&](std::string& detail) {
        struct Want {
          const char* ds;
          double alpha, aic, ks;
        };
        const Want wants[] = {
            {"support_network", 0.3591, 62.079, 0.1309},
            {"voter_turnout", 0.6832, 46.1377, 0.1364},
            {"flood", 1.0443, 14.9233, 0.3202},
            {"pump_failures", 1.7886, 41.862, 0.1584},
            {"unit_capacity", 1.6243, 17.2158, 0.1518},
        };
        bool ok = true;
        for (const Want& w : wants) {
          const FitResult& f = all.at(w.ds, "mbur");
          const GofReport& g = all.gof_at(w.ds, "mbur");
          if (std::fabs(f.estimates[0] - w.alpha) > 0.01) {
            ok = false;
            detail += std::string(w.ds) + " alpha: " +
                      num(f.estimates[0]) + " vs " + num(w.alpha) + "\n";
          }
          if (std::fabs(g.aic - w.aic) > 0.1) {
            ok = false;
            detail += std::string(w.ds) + " aic: " + num(g.aic) + " vs " +
                      num(w.aic) + "\n";
          }
          if (std::fabs(g.ks_stat - w.ks) > 0.003) {
            ok = false;
            detail += std::string(w.ds) + " ks: " + num(g.ks_stat) +
                      " vs tabled " + num(w.ks) + "\n";
          }
        }
        if (!ok && detail.find("unit_capacity ks") != std::string::npos) {
          detail +=
              "analysis: the unit_capacity tabled K-S cell (0.1518) is the "
              "one-sided statistic\nmax(i/n - F); the two-sided sup distance "
              "is 0.1786, whose exact p-value (0.4074)\nis precisely the "
              "tabled p. No two-sided statistic reproduces the 0.1518 cell;\n"
              "this check keeps the two-sided definition and reports the "
              "gap.\n";
        }
        return ok;
      });

  criterion(
      "2.3 ridge identity: |a_mbuw - a_mbur|/a_mbur <= 0.005 and "
      "AIC gap = 2 +- 0.01 on all six datasets",
      [&](std::string& detail) {
        bool ok = true;
        for (const auto& table : tools::kReferenceTables) {
          const FitResult& w = all.at(table.dataset, "mbuw");
          const FitResult& r = all.at(table.dataset, "mbur");
          const double a_w = std::pow(w.estimates[0], w.estimates[1]);
          const double a_r = r.estimates[0] * r.estimates[0];
          const double rel = std::fabs(a_w - a_r) / a_r;
          const double gap = all.gof_at(table.dataset, "mbuw").aic -
                             all.gof_at(table.dataset, "mbur").aic;
          detail += std::string(table.dataset) + ": core rel gap " +
                    num(rel) + ", aic gap " + num(gap) + "\n";
          ok = ok && rel <= 0.005 && std::fabs(gap - 2.0) <= 0.01;
        }
        return ok;
      });

  criterion(
      "2.4 reference hqic formula reproduces >= 10 tabled cells to 5e-3 "
      "(incl. 4.3097 and 3.456)",
      [&](std::string& detail) {
        int matched = 0, total = 0;
        for (const auto& table : tools::kReferenceTables)
          for (const auto& ref : table.fits) {
            ++total;
            const double h =
                info_criteria(ref.ll_magnitude, table.n,
                              std::isnan(ref.est2) ? 1 : 2)
                    .hqic_reference;
            if (std::fabs(h - ref.hqic) <= 5e-3) ++matched;
          }
        const double anchor1 = info_criteria(78.6804, 35, 2).hqic_reference;
        const double anchor2 = info_criteria(6.4617, 20, 1).hqic_reference;
        detail = "matched " + std::to_string(matched) + "/" +
                 std::to_string(total) + " cells; anchors " + num(anchor1) +
                 " (4.3097), " + num(anchor2) + " (3.456)";
        return matched >= 10 && std::fabs(anchor1 - 4.3097) <= 5e-3 &&
               std::fabs(anchor2 - 3.456) <= 5e-3;
      });

  criterion("2.5 aicc - aic gap reproduces dwellings beta 0.375 exactly",
            [&](std::string& detail) {
              const GofReport& g = all.gof_at("dwellings", "beta");
              const double gap = g.aicc - g.aic;
              detail = "gap = " + num(gap) + " (2k(k+1)/(n-k-1) = 12/32)";
              return std::fabs(gap - 0.375) <= 1e-12;
            });

  criterion(
      "2.6 mbuw two-parameter fits on datasets 2 and 3 flag SE unavailable",
      [&](std::string& detail) {
        bool ok = true;
        for (const char* ds : {"support_network", "voter_turnout"}) {
          const FitResult& f = all.at(ds, "mbuw");
          detail += std::string(ds) + ": condition " +
                    num(f.hessian_condition) + ", se " +
                    (f.se ? "available" : "unavailable") + "\n";
          ok = ok && !f.se.has_value();
        }
        return ok;
      });

  criterion(
      "2.7 K-S p-values within 0.03 of all 24 tabled cells; flood mbur "
      "p = 0.0253 +- 0.01 with the verdict contradiction flagged",
      [&](std::string& detail) {
        bool ok = true;
        double worst = 0.0;
        for (const auto& table : tools::kReferenceTables)
          for (const auto& ref : table.fits) {
            const GofReport& g = all.gof_at(table.dataset, ref.model);
            const double gap = std::fabs(g.ks_pvalue - ref.pvalue);
            worst = std::max(worst, gap);
            if (gap > 0.03) {
              ok = false;
              detail += std::string(table.dataset) + "/" + ref.model +
                        ": p " + num(g.ks_pvalue) + " vs " +
                        num(ref.pvalue) + "\n";
            }
          }
        const GofReport& flood = all.gof_at("flood", "mbur");
        detail += "worst p gap = " + num(worst) + "; flood mbur p = " +
                  num(flood.ks_pvalue) + ", rejects at 5%: " +
                  (flood.reject_at_05 ? "yes" : "no") +
                  " (reference verdict says fail to reject)\n";
        ok = ok && std::fabs(flood.ks_pvalue - 0.0253) <= 0.01 &&
             flood.reject_at_05;
        return ok;
      });

  criterion(
      "2.8 dwellings mbur CI half-width within +-50% of the tabled "
      "(2.27164, 2.29516)",
      [&](std::string& detail) {
        const FitResult& f = all.at("dwellings", "mbur");
        if (!f.se) {
          detail = "se unavailable";
          return false;
        }
        const double half = kCi95Multiplier * (*f.se)[0];
        const tools::ReferenceCi& ci = tools::kReferenceMburCi[0];
        const double ref_half = 0.5 * (ci.hi - ci.lo);
        detail = "observed-information half-width = " + num(half) +
                 ", tabled half-width = " + num(ref_half) + "\n";
        const bool ok = std::fabs(half - ref_half) <= 0.5 * ref_half;
        if (!ok) {
          detail +=
              "analysis: the reference SE rows equal sqrt(Var/n) -- an "
              "extra 1/n -- and the\ndwellings CI half-width (0.01176) is "
              "identical to voter_turnout's, i.e. the cell\nis also "
              "cross-wired. The honest observed-information SE here is "
              "0.1386 (stable\nacross finite-difference steps 1e-2..1e-5 and "
              "confirmed by the likelihood profile:\nnll rises ~0.51 at "
              "alpha +- 0.14, matching H = 52). For datasets 2-6 the "
              "tabled\nVar rows agree with this library's vcov to print "
              "precision; only the derived SE/CI\nrows carry the 1/sqrt(n) "
              "bug. No sqrt(vcov_jj)-based CI can land within 50% of\nthe "
              "tabled half-width; the honest interval is reported and the "
              "gap recorded here.\n";
        }
        return ok;
      });
}

// ---------------------------------------------------------------------------

void group_estimator_sanity() {
  criterion(
      "3.1 synthetic MBUR recovery: |a_hat - a|/a <= 5% at n = 1e4, 20 seeds",
      [](std::string& detail) {
        const double alpha_true = 1.5;
        const double a_true = alpha_true * alpha_true;
        double worst = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
          const UnitData sample = mbuw_sample(CoreParam(a_true), 10000, seed);
          const FitResult f = fit(ModelKind::MBUR, sample);
          const double a_hat = f.estimates[0] * f.estimates[0];
          worst = std::max(worst, std::fabs(a_hat - a_true) / a_true);
        }
        detail = "worst relative error = " + num(worst);
        return worst <= 0.05;
      });
}

// ---------------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void group_determinism() {
  criterion("4.1 repeated `reproduce all` runs emit byte-identical CSV",
            [](std::string& detail) {
              const std::string a = "/tmp/mbuw_acceptance_repro_a.csv";
              const std::string b = "/tmp/mbuw_acceptance_repro_b.csv";
              const std::string base = std::string(MBUW_CLI_PATH) +
                                       " reproduce --scope all --out ";
              if (std::system((base + a + " >/dev/null").c_str()) != 0)
                return false;
              if (std::system((base + b + " >/dev/null").c_str()) != 0)
                return false;
              const std::string ca = slurp(a), cb = slurp(b);
              std::remove(a.c_str());
              std::remove(b.c_str());
              detail = std::to_string(ca.size()) + " bytes each";
              return !ca.empty() && ca == cb;
            });
}

}  // namespace

int main(int argc, char** argv) {
  const std::string group = argc > 1 ? argv[1] : "all";
  if (group == "closed_form_oracles" || group == "all")
    group_closed_form_oracles();
  if (group == "table_reproduction" || group == "all")
    group_table_reproduction();
  if (group == "estimator_sanity" || group == "all") group_estimator_sanity();
  if (group == "determinism" || group == "all") group_determinism();
  if (g_failures > 0)
    std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}

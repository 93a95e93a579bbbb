#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cfdim/cf/consistency.hpp"
#include "cfdim/cf/inequalities.hpp"
#include "cfdim/cover/grid_oracle.hpp"
#include "cfdim/cover/iterations.hpp"
#include "cfdim/cover/profile.hpp"
#include "cfdim/empirics/geometry.hpp"
#include "cfdim/empirics/lemma51.hpp"
#include "cfdim/empirics/sampler.hpp"
#include "cfdim/pressure/solver.hpp"

namespace cfdim::checks {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string detail;
  std::string counterexample;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckOutcome> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

namespace detail {

inline CheckOutcome from_sweep(const cf::SweepReport& r, const std::string& range) {
  return {r.name + " " + range, r.passed(), r.checked, r.failures, range, r.counterexample};
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace detail

/// Exact continued-fraction sweeps.
inline SuiteResult cf_inequalities_suite() {
  SuiteResult s{"cf-inequalities", {}};
  auto range = [](std::size_t l, cf::Digit d) {
    return "(length<=" + std::to_string(l) + ", digits<=" + std::to_string(d) + ")";
  };
  s.checks.push_back(detail::from_sweep(cf::sweep_determinant({12, 4}), range(12, 4)));
  s.checks.push_back(detail::from_sweep(cf::sweep_determinant({8, 10}), range(8, 10)));
  s.checks.push_back(detail::from_sweep(cf::sweep_deletion_ratio({8, 6}), range(8, 6)));
  s.checks.push_back(detail::from_sweep(cf::sweep_concatenation({5, 5}), range(5, 5)));
  s.checks.push_back(detail::from_sweep(cf::sweep_growth({12, 4}), range(12, 4)));
  s.checks.push_back(detail::from_sweep(cf::sweep_growth_all_ones(64), "(all-ones, n<=64)"));
  s.checks.push_back(detail::from_sweep(cf::sweep_cylinder_nesting({5, 8}), range(5, 8) + " + one digit"));
  s.checks.push_back(detail::from_sweep(cf::sweep_expand_roundtrip({6, 8}), range(6, 8)));
  return s;
}

/// Enumeration against operator sums, the closed-form root and monotonicity
/// of the finite roots.
inline SuiteResult pressure_oracles_suite(unsigned workers = 1) {
  using namespace pressure;
  SuiteResult s{"pressure-oracles", {}};
  {
    CheckOutcome c{"operator matches enumeration (rel <= 1e-8; M<=4, m<=6, s in {0.55,0.7,0.9})"};
    double worst = 0;
    for (std::uint64_t M = 1; M <= 4; ++M)
      for (std::size_t m = 1; m <= 6; ++m)
        for (double sv : {0.55, 0.7, 0.9}) {
          ++c.checked;
          const auto a = cylinder_sum_enum(Alphabet::full(M), m, sv, {10'000'000, workers});
          const auto b = cylinder_sum_operator(Alphabet::full(M), m, sv);
          const double rel = static_cast<double>(std::fabs(b.value / a.value - 1));
          worst = std::max(worst, rel);
          if (!(rel <= 1e-8) && c.failures++ == 0)
            c.counterexample = "M=" + std::to_string(M) + " m=" + std::to_string(m) + " s=" + detail::fmt(sv);
        }
    c.passed = c.failures == 0;
    c.detail = "worst relative difference " + detail::fmt(worst);
    s.checks.push_back(c);
  }
  {
    const double r = s_B_finite(1, 5, 2.0, {1, 0}, 1e-13);
    s.checks.push_back({"closed-form root M=1 n=5 B=2 equals 5/16", std::fabs(r - 0.3125) <= 1e-10, 1,
                        std::fabs(r - 0.3125) <= 1e-10 ? 0u : 1u, "root " + detail::fmt(r), {}});
  }
  {
    CheckOutcome c{"defect strictly decreasing in s (20-point grid, B in {1.5,2,8})"};
    for (double B : {1.5, 2.0, 8.0})
      for (std::uint64_t M : {1, 3, 6}) {
        long double prev = 0;
        for (int i = 0; i <= 19; ++i) {
          const double sv = 0.05 + 0.05 * i;
          const auto dv = defect(Alphabet::full(M), 3, B, Potential::linear_gap({1, 0}), sv);
          if (i > 0) {
            ++c.checked;
            if (!(dv < prev) && c.failures++ == 0)
              c.counterexample = "B=" + detail::fmt(B) + " M=" + std::to_string(M) + " s=" + detail::fmt(sv);
          }
          prev = dv;
        }
      }
    c.passed = c.failures == 0;
    s.checks.push_back(c);
  }
  {
    // At n = 1 and B near 1 the root exceeds 1.2 (1 + 2^(-2s) = 1.1^(2s-1) at
    // s = 1.30), so the range bound is checked from n = 2.
    CheckOutcome c{"s_B(M,n) in (0,1.2) for n>=2, moves away from 1/2 as B grows, nondecreasing in M (M<=8, n<=6)"};
    const std::vector<double> Bs{1.1, 2.0, 8.0, 64.0};
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<std::vector<double>> grid;
      for (double B : Bs) {
        std::vector<double> row;
        for (std::uint64_t M = 1; M <= 8; ++M) row.push_back(s_B_finite(M, n, B, {1, 0}, 1e-10));
        grid.push_back(row);
      }
      for (std::size_t i = 0; i < Bs.size(); ++i)
        for (std::size_t M = 0; M < 8; ++M) {
          const double v = grid[i][M];
          bool ok = v > 0 && (n == 1 || v < 1.2);
          // Raising B pushes the root away from 1/2 from either side; only
          // roots above 1/2 (sum of 1/q over words > 1) decrease.
          if (i > 0) ok = ok && (v >= 0.5 ? v <= grid[i - 1][M] + 1e-9 : v + 1e-9 >= grid[i - 1][M]);
          if (M > 0) ok = ok && v + 1e-9 >= grid[i][M - 1];
          ++c.checked;
          if (!ok && c.failures++ == 0)
            c.counterexample = "n=" + std::to_string(n) + " B=" + detail::fmt(Bs[i]) + " M=" + std::to_string(M + 1);
        }
    }
    c.passed = c.failures == 0;
    s.checks.push_back(c);
  }
  return s;
}

/// Equalization of the cover terms, the profile relations and the grid oracle.
inline SuiteResult cover_prop31_suite(unsigned workers = 1) {
  using namespace cover;
  SuiteResult s{"cover-prop31", {}};
  CheckOutcome oracle{"grid oracle <= equalized + slack"};
  CheckOutcome equal{"equalized terms equal within 1e-9"};
  CheckOutcome rel{"relations (s-recursion, product identity, budget) within 1e-9"};
  for (std::size_t n : {2, 3})
    for (double sv : {0.6, 0.8})
      for (double B : {2.0, 4.0})
        for (std::uint64_t d : {1, 2}) {
          const auto p = equalized_cover(n, sv, B, d);
          const auto terms = cover_log_terms(p);
          const auto tag = "n=" + std::to_string(n) + " s=" + detail::fmt(sv) + " B=" + detail::fmt(B) +
                           " d=" + std::to_string(d);
          ++equal.checked;
          const double spread = *std::max_element(terms.begin(), terms.end()) - *std::min_element(terms.begin(), terms.end());
          if (!(spread <= 1e-9 * std::max(1.0, std::fabs(terms[0]))) && equal.failures++ == 0) equal.counterexample = tag;
          const auto g = supremum_grid_oracle(n, sv, B, d, n == 2 ? 400 : 100, workers);
          ++oracle.checked;
          if (!(g.value <= cover_value(p) + g.slack) && oracle.failures++ == 0)
            oracle.counterexample = tag + " oracle " + detail::fmt(g.value) + " > " + detail::fmt(cover_value(p)) +
                                    " + " + detail::fmt(g.slack);
          for (std::size_t k = 1; k < n; ++k) {
            ++rel.checked;
            const double lhs = sv * p.logA[k], rhs = sv * p.logA[0] + (1 - sv) * p.logA[k - 1];
            if (!(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, std::fabs(lhs))) && rel.failures++ == 0)
              rel.counterexample = tag + " k=" + std::to_string(k);
          }
        }
  for (auto* c : {&oracle, &equal, &rel}) {
    c->passed = c->failures == 0;
    s.checks.push_back(*c);
  }
  return s;
}

inline SuiteResult lemma51_suite() {
  SuiteResult s{"lemma51", {}};
  const std::vector<double> grid{10, 100, 1000, 10000};
  for (unsigned k : {1u, 2u, 3u})
    for (double sv : {0.6, 0.8}) {
      const auto r = empirics::lemma51_ratio(k, sv, grid);
      s.checks.push_back({"decade growth < 3 and exact count match, k=" + std::to_string(k) + " s=" + detail::fmt(sv),
                          r.passed.value_or(false), r.rows.size(), r.passed.value_or(false) ? 0u : 1u,
                          "max growth " + detail::fmt(r.metrics.at("max_growth")), {}});
    }
  return s;
}

inline SuiteResult cantor_geometry_suite() {
  SuiteResult s{"cantor-geometry", {}};
  auto add = [&](const std::string& tag, const empirics::GeometryResult& g) {
    for (const auto* c : {&g.length_crosscheck, &g.sandwich_J1, &g.sandwich_J3, &g.sandwich_J4, &g.gap}) {
      if (c->checked == 0) continue;
      std::string detail;
      if (c == &g.gap && g.min_gap_ratio >= 0)
        detail = "min M*gap/|J| = " + cfdim::to_string(g.min_gap_ratio);
      s.checks.push_back({c->name + " [" + tag + "]", c->passed(), c->checked, c->failures, detail, c->counterexample});
    }
  };
  add("M=2 depth=2", empirics::cantor_geometry_check(2, 2, empirics::RangeProfile::uniform(2)));
  add("M=3 depth=3 a_2 in [5,10]",
      empirics::cantor_geometry_check(3, 3, empirics::RangeProfile::uniform(3).with_large(2, 5)));
  add("M=3 depth=4 a_3 = 2", empirics::cantor_geometry_check(3, 4, empirics::RangeProfile::uniform(3).with_fixed(3, 2)));
  return s;
}

/// Digit-1 frequencies of uniform samples against 1/k - 1/(k+1), and
/// reproducibility of the sample stream.
inline SuiteResult sampler_suite(std::size_t samples = 100'000, unsigned workers = 1) {
  SuiteResult s{"sampler", {}};
  empirics::SampleConfig cfg{2024, samples, 1, 64};
  const auto batch = empirics::draw_batch(cfg, 1, workers);
  std::map<cf::Digit, std::uint64_t> hist;
  std::uint64_t ok = 0;
  for (const auto& b : batch)
    if (b) {
      ++hist[(*b)[0]];
      ++ok;
    }
  for (cf::Digit k = 1; k <= 5; ++k) {
    const double p = 1.0 / static_cast<double>(k) - 1.0 / static_cast<double>(k + 1);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(ok));
    const double freq = static_cast<double>(hist[k]) / static_cast<double>(ok);
    const double z = (freq - p) / se;
    s.checks.push_back({"P(a_1=" + std::to_string(k) + ") within 3 standard errors", std::fabs(z) <= 3.0, ok,
                        std::fabs(z) <= 3.0 ? 0u : 1u,
                        "freq " + detail::fmt(freq) + " vs " + detail::fmt(p) + " (z=" + detail::fmt(z) + ")", {}});
  }
  const auto again = empirics::draw_batch({2024, 256, 50, 0}, 50, 1);
  const auto threaded = empirics::draw_batch({2024, 256, 50, 0}, 50, 4);
  s.checks.push_back({"identical samples across repeat and worker count", again == threaded, 256,
                      again == threaded ? 0u : 1u, {}, {}});
  return s;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cf-inequalities", "pressure-oracles", "cover-prop31",
                                              "lemma51",         "cantor-geometry",  "sampler"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, unsigned workers = 1) {
  if (name == "cf-inequalities") return cf_inequalities_suite();
  if (name == "pressure-oracles") return pressure_oracles_suite(workers);
  if (name == "cover-prop31") return cover_prop31_suite(workers);
  if (name == "lemma51") return lemma51_suite();
  if (name == "cantor-geometry") return cantor_geometry_suite();
  if (name == "sampler") return sampler_suite(100'000, workers);
  throw validation_error("unknown check suite '" + name + "'");
}

}  // namespace cfdim::checks

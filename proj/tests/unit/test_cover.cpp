#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cfdim/cover/grid_oracle.hpp"
#include "cfdim/cover/iterations.hpp"
#include "cfdim/cover/profile.hpp"

using namespace cfdim;
using namespace cfdim::cover;

namespace {

std::vector<double> s_grid() { return {0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95}; }

double rel(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::max(std::fabs(a), std::fabs(b))); }

}  // namespace

TEST(Iterations, Seeds) {
  for (double s : {0.1, 0.5, 0.9}) {
    EXPECT_EQ(h_iter(s, 1)[1], s);
    EXPECT_EQ(f_iter(s, 1)[1], s);
    EXPECT_DOUBLE_EQ(f_iter(s, 2)[2], s * s);
  }
}

TEST(Iterations, HalfValues) {
  EXPECT_DOUBLE_EQ(h_iter(0.5, 2)[2], 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(f_iter(0.5, 3)[3], 1.0 / 6.0);
}

TEST(Iterations, DomainErrors) {
  EXPECT_THROW(h_iter(0.0, 3), domain_error);
  EXPECT_THROW(h_iter(1.0, 3), domain_error);
  EXPECT_THROW(f_iter(-0.1, 3), domain_error);
  EXPECT_THROW(h_iter(0.5, 0), validation_error);
}

TEST(Iterations, PropertyHStrictlyDecreasingWithinRange) {
  for (double s = 0.05; s < 1.0; s += 0.05) {
    const auto h = h_iter(s, 50);
    for (std::size_t l = 1; l <= 50; ++l) {
      EXPECT_GT(h[l], 0.0);
      EXPECT_LE(h[l], s);
      if (l > 1) EXPECT_LT(h[l], h[l - 1]) << "s=" << s << " l=" << l;
    }
  }
}

TEST(Iterations, PropertyFWithinRangeAndConverges) {
  for (double s = 0.05; s < 1.0; s += 0.05) {
    // Below 1/2 the iterates decay geometrically; 100 steps stay clear of underflow.
    const auto f = f_iter(s, s > 0.5 ? 400 : 100);
    for (double v : f.values) {
      EXPECT_GT(v, 0.0);
      EXPECT_LE(v, s);
    }
    if (s > 0.5 + 1e-9) EXPECT_NEAR(f.back(), 2 * s - 1, 1e-9) << "s=" << s;
  }
}

TEST(Iterations, ScalarFormAgreesAndExtendsPastOne) {
  for (double s : {0.3, 0.6, 0.9})
    for (std::size_t m : {1, 2, 5})
      EXPECT_DOUBLE_EQ(f_m(s, m), f_iter(s, m)[m]);
  EXPECT_EQ(f_m(0.0, 3), 0.0);
  EXPECT_GT(f_m(1.4, 6), 0.4);
}

TEST(Equalized, TwoTermHandSolution) {
  // s = 3/4: r = 1/3, c_1 = 1, c_2 = 4/3, so log A_1 = (6/7) log 2.
  const auto p = equalized_cover(2, 0.75, 2.0, 1);
  EXPECT_NEAR(p.logA[0], 6.0 / 7.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(p.logA[1], 8.0 / 7.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(std::exp(p.logA[0]) * std::exp(p.logA[1]), 4.0, 1e-12);
}

TEST(Equalized, DomainErrors) {
  EXPECT_THROW(equalized_cover(3, 0.5, 2.0, 1), domain_error);
  EXPECT_THROW(equalized_cover(3, 0.4, 2.0, 1), domain_error);
  EXPECT_THROW(equalized_cover(3, 1.0, 2.0, 1), domain_error);
  EXPECT_THROW(equalized_cover(3, 0.7, 1.0, 1), validation_error);
  EXPECT_THROW(equalized_cover(0, 0.7, 2.0, 1), validation_error);
}

TEST(Equalized, SingleTerm) {
  for (double B : {2.0, 5.0})
    for (std::uint64_t d : {1, 3}) {
      const auto p = equalized_cover(1, 0.7, B, d);
      EXPECT_NEAR(cover_value(p), std::pow(B, -0.7 * static_cast<double>(d)), 1e-14);
    }
}

TEST(Equalized, PropertyInvariants) {
  for (std::size_t n = 1; n <= 30; ++n)
    for (double s : s_grid())
      for (double B : {1.5, 2.0, 16.0})
        for (std::uint64_t d : {1, 2, 3}) {
          const auto p = equalized_cover(n, s, B, d);
          ASSERT_EQ(p.logA.size(), n);
          double acc = 0;
          for (std::size_t k = 0; k < n; ++k) {
            acc += p.logA[k];
            EXPECT_LE(rel(p.logAlpha[k], acc), 1e-12);
            if (k > 0) EXPECT_GE(p.logA[k], p.logA[k - 1] - 1e-12);
          }
          EXPECT_LE(rel(acc, static_cast<double>(d * n) * std::log(B)), 1e-12);
          // s log A_{k+1} = s log A_1 + (1 - s) log A_k
          for (std::size_t k = 1; k < n; ++k)
            EXPECT_LE(rel(s * p.logA[k], s * p.logA[0] + (1 - s) * p.logA[k - 1]), 1e-9);
          // (A_1...A_k)^(1-2s) = A_1^(-sk) A_k^(1-s)
          for (std::size_t k = 1; k <= n; ++k)
            EXPECT_LE(rel((1 - 2 * s) * p.logAlpha[k - 1],
                          -s * static_cast<double>(k) * p.logA[0] + (1 - s) * p.logA[k - 1]),
                      1e-9)
                << "n=" << n << " s=" << s << " k=" << k;
          const auto t = cover_log_terms(p);
          const auto [lo, hi] = std::minmax_element(t.begin(), t.end());
          EXPECT_LE(*hi - *lo, 1e-9 * std::max(1.0, std::fabs(*lo)));
        }
}

TEST(Equalized, PropertySinglePerturbationLowersTheMinimum) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (double s : {0.6, 0.75, 0.9}) {
      const auto p = equalized_cover(n, s, 4.0, 1);
      const double base = cover_log_value(p);
      std::vector<double> free(p.logA.begin(), p.logA.end() - 1);
      for (std::size_t k = 0; k + 1 < n; ++k)
        for (double delta : {-0.1, 0.1}) {
          auto moved = free;
          moved[k] += delta;
          EXPECT_LT(cover_log_value(make_profile(n, s, 4.0, 1, moved)), base) << "n=" << n << " k=" << k + 1;
        }
    }
}

TEST(Equalized, RandomProfilesNeverBeatEqualized) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + rng() % 6;
    const double s = 0.55 + 0.4 * std::uniform_real_distribution<double>()(rng);
    const double B = 1.5 + 30 * std::uniform_real_distribution<double>()(rng);
    const auto eq = equalized_cover(n, s, B, 1);
    std::vector<double> free(n - 1);
    std::uniform_real_distribution<double> u(0, eq.budget() / static_cast<double>(n - 1));
    for (auto& v : free) v = u(rng);
    EXPECT_LE(cover_log_value(make_profile(n, s, B, 1, free)), cover_log_value(eq) + 1e-12);
  }
}

TEST(Equalized, FirstCoordinateApproachesLimit) {
  for (double s : {0.6, 0.8})
    for (std::uint64_t d : {1, 2}) {
      const double target = (2 - 1 / s) * static_cast<double>(d) * std::log(2.0);
      double prev = std::numeric_limits<double>::infinity();
      for (std::size_t n : {5, 10, 20, 40}) {
        const double gap = std::fabs(equalized_cover(n, s, 2.0, d).logA[0] - target);
        EXPECT_LT(gap, prev) << "n=" << n;
        EXPECT_LE(gap * static_cast<double>(n), 10.0);
        prev = gap;
      }
    }
}

TEST(Equalized, TwoVariableSupMinIsH2) {
  // sup over log a_1 of min{-s x, ((1-s) x - s y)/2} equals -h_2(s) y.
  for (double s : {0.6, 0.75, 0.9}) {
    const double h2 = h_iter(s, 2)[2];
    for (double y = 0.5; y <= 8.0; y += 0.5) {
      double best = -std::numeric_limits<double>::infinity();
      for (int i = 0; i <= 20000; ++i) {
        const double x = y * i / 20000.0;
        best = std::max(best, std::min(-s * x, ((1 - s) * x - s * y) / 2));
      }
      EXPECT_NEAR(best, -h2 * y, y * 1e-4);
    }
  }
}

TEST(GridOracle, ExamplesNearEqualized) {
  const auto g2 = supremum_grid_oracle(2, 0.7, 2.0, 1, 400);
  EXPECT_NEAR(g2.value, cover_value(equalized_cover(2, 0.7, 2.0, 1)), 1e-2);
  const auto g3 = supremum_grid_oracle(3, 0.8, 4.0, 2, 100);
  EXPECT_NEAR(g3.value, cover_value(equalized_cover(3, 0.8, 4.0, 2)), 5e-2);
  EXPECT_EQ(g3.points, 100u * 100u);
}

TEST(GridOracle, PropertyNeverExceedsEqualizedPlusSlack) {
  for (std::size_t n : {1, 2, 3})
    for (double s : {0.6, 0.8})
      for (double B : {2.0, 4.0})
        for (std::uint64_t d : {1, 2}) {
          const auto g = supremum_grid_oracle(n, s, B, d, 60);
          EXPECT_LE(g.value, cover_value(equalized_cover(n, s, B, d)) + g.slack);
          EXPECT_LE(g.value, cover_value(equalized_cover(n, s, B, d)) + 1e-12);
        }
}

TEST(GridOracle, WorkerCountDoesNotChangeResult) {
  const auto a = supremum_grid_oracle(3, 0.7, 3.0, 1, 80, 1);
  const auto b = supremum_grid_oracle(3, 0.7, 3.0, 1, 80, 8);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.argmax, b.argmax);
  EXPECT_EQ(a.slack, b.slack);
}

TEST(GridOracle, Budget) {
  EXPECT_THROW(supremum_grid_oracle(5, 0.7, 2.0, 1, 10), budget_exceeded);
  EXPECT_THROW(supremum_grid_oracle(4, 0.7, 2.0, 1, 1000, 1, 1000), budget_exceeded);
  EXPECT_THROW(supremum_grid_oracle(3, 0.7, 2.0, 1, 1), validation_error);
}

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cfdim/cf/intervals.hpp"
#include "cfdim/empirics/experiments.hpp"
#include "cfdim/empirics/geometry.hpp"
#include "cfdim/empirics/lemma51.hpp"

using namespace cfdim;
using namespace cfdim::empirics;
using cfdim::cf::Digit;
using cfdim::cf::LinearIndex;

TEST(Summary, KnownValues) {
  const auto s = summarize({4, 1, 3, 2});
  EXPECT_EQ(s.count, 4u);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.median, 2.5);
  EXPECT_DOUBLE_EQ(s.q25, 1.75);
  EXPECT_DOUBLE_EQ(s.q75, 3.25);
  EXPECT_DOUBLE_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.max, 4);
  EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-15);
}

TEST(Report, NumbersRoundTrip) {
  EXPECT_EQ(std::stod(format_number(0.1)), 0.1);
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  ExperimentReport r;
  r.name = "x";
  r.values = {1.5, 2.5};
  r.summary = summarize(r.values);
  r.passed = true;
  const auto j = to_json(r);
  EXPECT_EQ(j["name"], "x");
  EXPECT_EQ(j["values"].size(), 2u);
  EXPECT_FALSE(to_json(r, false).contains("values"));
  std::ostringstream os;
  write_csv(os, r);
  EXPECT_NE(os.str().find("sample,value\n0,1.5\n1,2.5\n"), std::string::npos);
}

TEST(Sampler, SeedsAreStable) {
  // Published splitmix64 test vector for state 0 after one step.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_NE(sample_seed(1, 0), sample_seed(1, 1));
  EXPECT_NE(sample_seed(1, 0), sample_seed(2, 0));
}

TEST(Sampler, EnclosureIsDyadicAndInterior) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto e = draw_enclosure(7, i, 100);
    EXPECT_EQ(e.width(), Rational(BigInt(1), BigInt(1) << 100));
    EXPECT_GT(e.lo, 0);
    EXPECT_LT(e.hi, 1);
  }
}

TEST(Sampler, DeterministicAcrossWorkers) {
  const SampleConfig cfg{99, 64, 40, 0};
  const auto a = draw_batch(cfg, 40, 1);
  const auto b = draw_batch(cfg, 40, 8);
  const auto c = draw_batch(cfg, 40, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Sampler, BudgetAndValidation) {
  EXPECT_THROW(draw_batch(SampleConfig{1, 10, 5, 0}, 6), budget_exceeded);
  EXPECT_THROW(draw_batch(SampleConfig{1, 0, 5, 0}, 5), validation_error);
}

TEST(Sampler, ShortEnclosuresAreDiscardedNotGuessed) {
  // 16 random bits certify only a handful of digits.
  const SampleConfig cfg{5, 50, 40, 16};
  const auto r = geometric_mean_experiment(cfg, 40);
  EXPECT_EQ(r.discarded, 50u);
  EXPECT_TRUE(r.values.empty());
  EXPECT_FALSE(*r.passed);
}

TEST(GeometricMean, GoldenMeanIsOne) {
  const auto w = cf::expand(cf::golden_conjugate_enclosure(), 100);
  for (std::size_t n : {1, 10, 100}) EXPECT_DOUBLE_EQ(geometric_mean(w.digits(), n), 1.0);
}

TEST(GeometricMean, SpreadShrinksWithDepth) {
  const SampleConfig short_cfg{3, 60, 100, 0}, long_cfg{3, 60, 3000, 0};
  const auto a = geometric_mean_experiment(short_cfg, 100);
  const auto b = geometric_mean_experiment(long_cfg, 3000);
  EXPECT_LT(b.summary.stddev, a.summary.stddev);
  EXPECT_EQ(a.discarded, 0u);
  EXPECT_NEAR(b.summary.mean, kKhintchine, 0.1);
}

TEST(MixedMean, ConstantDigits) {
  const std::vector<Digit> threes(400, 3);
  for (std::size_t n : {1, 5, 10}) EXPECT_DOUBLE_EQ(mixed_mean(threes, LinearIndex(2, 1), n), 3.0);
  EXPECT_THROW(mixed_mean(threes, LinearIndex(2, 1), 20), validation_error);
}

TEST(MixedMean, PicksEveryFthDigit) {
  std::vector<Digit> d(12, 1);
  d[2] = 4;   // a_3
  d[5] = 16;  // a_6
  // n = 2, f(2) = 3: digits a_3 and a_6.
  EXPECT_DOUBLE_EQ(mixed_mean(d, LinearIndex(1, 1), 2), 8.0);
}

TEST(MixedMean, ExploratoryReport) {
  const auto r = mixed_geometric_mean(SampleConfig{1, 20, 1000, 0}, LinearIndex{}, 10);
  EXPECT_FALSE(r.passed.has_value());
  EXPECT_FALSE(r.target.has_value());
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.back().find("no convergence is claimed"), std::string::npos);
  EXPECT_EQ(r.values.size(), 20u);
}

TEST(Limsup, TrivialRateAlwaysHolds) {
  const auto r = limsup_event_frequency(SampleConfig{2, 40, 100, 0}, dimension::GrowthSpec::poly(1, 0), 100);
  for (const auto& row : r.rows) EXPECT_EQ(row[1], 1.0);
  for (double v : r.values) EXPECT_EQ(v, 99.0);
}

TEST(Limsup, FasterRateIsRarer) {
  const SampleConfig cfg{4, 200, 1000, 0};
  const auto lin = limsup_event_frequency(cfg, dimension::GrowthSpec::poly(1, 1), 1000);
  const auto cub = limsup_event_frequency(cfg, dimension::GrowthSpec::poly(1, 3), 1000);
  EXPECT_GE(lin.metrics.at("fraction_at_least_1"), 0.9);
  EXPECT_LT(cub.metrics.at("fraction_at_least_1"), lin.metrics.at("fraction_at_least_1"));
  EXPECT_LE(lin.metrics.at("fraction_at_least_8"), lin.metrics.at("fraction_at_least_1"));
}

TEST(Limsup, IntegralRatesCompareExactly) {
  // psi(n) = 3^n; a_2 = 9 and a_3 = 27 sit exactly on the threshold.
  const std::vector<Digit> d{5, 9, 27, 80};
  const auto psi = dimension::GrowthSpec::exponential(3);
  EXPECT_TRUE(event_holds(d, psi, EventKind::single_digit, 1));
  EXPECT_TRUE(event_holds(d, psi, EventKind::single_digit, 2));
  EXPECT_TRUE(event_holds(d, psi, EventKind::single_digit, 3));
  EXPECT_FALSE(event_holds(d, psi, EventKind::single_digit, 4));
  // f(2) = 2: a_2 a_4 = 720 >= 9^2.
  EXPECT_TRUE(event_holds(d, psi, EventKind::linear_gap_product, 2));
  const std::vector<Digit> low{1, 8, 1, 10};
  EXPECT_FALSE(event_holds(low, psi, EventKind::linear_gap_product, 2));  // 80 < 81
  const auto table = dimension::GrowthSpec::from_table({std::log(3.0), 2 * std::log(3.0), 3 * std::log(3.0),
                                                        4 * std::log(3.0)});
  EXPECT_TRUE(event_holds(d, table, EventKind::single_digit, 1));
  EXPECT_FALSE(event_holds(d, table, EventKind::single_digit, 4));
}

TEST(Lemma51, TupleCountsAgree) {
  for (unsigned k : {1u, 2u, 3u}) EXPECT_EQ(tuple_counts_enumerated(k, 500), tuple_counts_sieve(k, 500));
  // Ordered pairs with product 12: divisors of 12.
  EXPECT_EQ(tuple_counts_sieve(2, 13)[12], 6u);
  EXPECT_EQ(tuple_counts_sieve(3, 9)[8], 10u);
}

TEST(Lemma51, SingleDigitIntegralBounds) {
  // sum_{a<N} a^-s lies between the integrals of x^-s over [1, N] and [0, N-1] shifted by 1.
  for (double s : {0.6, 0.8})
    for (double N : {10.0, 1000.0, 10000.0}) {
      const auto c = tuple_counts_sieve(1, static_cast<std::uint64_t>(N));
      const double lhs = lemma51_lhs(c, s);
      EXPECT_GE(lhs, (std::pow(N, 1 - s) - 1) / (1 - s));
      EXPECT_LE(lhs, 1 + (std::pow(N - 1, 1 - s) - 1) / (1 - s));
    }
  const auto r = lemma51_ratio(1, 0.6, {10, 100, 1000, 10000});
  EXPECT_NEAR(r.values.back() * (1 - 0.6), 1.0, 0.05);
}

TEST(Lemma51, BelowTwoOnlyTheOnesTuple) {
  for (unsigned k : {1u, 2u, 3u}) {
    const double phi = 1.5, s = 0.7;
    const auto r = lemma51_ratio(k, s, {phi});
    EXPECT_DOUBLE_EQ(r.rows[0][2], 1.0);
    EXPECT_NEAR(r.values[0], std::pow(phi, s - 1) * std::pow(std::log(phi), 1.0 - k), 1e-12);
  }
}

TEST(Lemma51, DecadeGrowthBounded) {
  for (unsigned k : {2u, 3u})
    for (double s : {0.6, 0.8}) {
      const auto r = lemma51_ratio(k, s, {10, 100, 1000, 10000});
      EXPECT_TRUE(*r.passed) << "k=" << k << " s=" << s;
      EXPECT_LT(r.metrics.at("max_growth"), 3.0);
    }
}

TEST(Lemma51, Validation) {
  EXPECT_THROW(lemma51_ratio(4, 0.6, {10}), validation_error);
  EXPECT_THROW(lemma51_ratio(2, 1.0, {10}), validation_error);
  EXPECT_THROW(lemma51_ratio(2, 0.6, {100, 10}), validation_error);
  EXPECT_THROW(lemma51_ratio(3, 0.6, {1e6}, 1000), budget_exceeded);
}

TEST(Geometry, FullRangeSandwich) {
  const auto g = cantor_geometry_check(2, 2, RangeProfile::uniform(2));
  EXPECT_TRUE(g.length_crosscheck.passed());
  EXPECT_TRUE(g.sandwich_J4.passed());
  EXPECT_GT(g.sandwich_J4.checked, 0u);
}

TEST(Geometry, LargeRangeSandwich) {
  const auto g = cantor_geometry_check(3, 3, RangeProfile::uniform(3).with_large(2, 5));
  EXPECT_TRUE(g.length_crosscheck.passed());
  EXPECT_TRUE(g.sandwich_J1.passed());
  EXPECT_GT(g.sandwich_J1.checked, 0u);
}

TEST(Geometry, FixedTwoSandwich) {
  const auto g = cantor_geometry_check(3, 4, RangeProfile::uniform(3).with_fixed(3, 2));
  EXPECT_TRUE(g.sandwich_J3.passed());
  EXPECT_GT(g.sandwich_J3.checked, 0u);
}

TEST(Geometry, GapRatioMatchesDirectConstruction) {
  // Order-1 intervals for M = 2: J(a) = union over b in {1,2} of cl I_2(a, b).
  // Their gap relative to |J| is computed here from cylinders alone.
  std::vector<std::pair<Rational, Rational>> J;
  for (Digit a = 1; a <= 2; ++a) {
    const auto c1 = cf::cylinder(cf::Word{a, 1}), c2 = cf::cylinder(cf::Word{a, 2});
    J.push_back({std::min(c1.lo, c2.lo), std::max(c1.hi, c2.hi)});
  }
  std::sort(J.begin(), J.end());
  const Rational gap = J[1].first - J[0].second;
  const Rational ratio = std::min(2 * gap / (J[0].second - J[0].first), 2 * gap / (J[1].second - J[1].first));
  const auto g = cantor_geometry_check(2, 1, RangeProfile::uniform(2));
  EXPECT_EQ(g.min_gap_ratio, ratio);
}

TEST(Geometry, BudgetAndValidation) {
  EXPECT_THROW(cantor_geometry_check(50, 6, RangeProfile::uniform(50)), budget_exceeded);
  EXPECT_THROW(RangeProfile::uniform(0), validation_error);
  EXPECT_THROW(RangeProfile::uniform(2).with_large(0, 3), validation_error);
}

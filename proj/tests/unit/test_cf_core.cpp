#include <gtest/gtest.h>

#include <random>

#include "cfdim/cf/consistency.hpp"
#include "cfdim/cf/convergents.hpp"
#include "cfdim/cf/expand.hpp"
#include "cfdim/cf/inequalities.hpp"
#include "cfdim/cf/intervals.hpp"

using namespace cfdim;
using namespace cfdim::cf;

namespace {

Rational R(long a, long b) { return Rational(BigInt(a), BigInt(b)); }

Word random_word(std::mt19937_64& rng, std::size_t max_len, Digit max_digit) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<Digit> dig(1, max_digit);
  std::vector<Digit> d(len(rng));
  for (auto& a : d) a = dig(rng);
  return Word(std::move(d));
}

// Image of x under the first n steps of the Gauss map, or nullopt if it hits 0.
std::optional<std::vector<Digit>> gauss_digits(Rational x, std::size_t n) {
  std::vector<Digit> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (x == 0) return std::nullopt;
    const Rational inv = 1 / x;
    const BigInt a = boost::multiprecision::numerator(inv) / boost::multiprecision::denominator(inv);
    out.push_back(a.convert_to<Digit>());
    x = inv - Rational(a);
  }
  return out;
}

}  // namespace

TEST(Word, RejectsZeroDigit) {
  EXPECT_THROW(Word({1, 0, 2}), validation_error);
  Word w{3};
  EXPECT_THROW(w.push_back(0), validation_error);
}

TEST(Word, EditingHelpers) {
  const Word w{4, 5, 6};
  EXPECT_EQ(w.at(2), 5u);
  EXPECT_EQ(w.prefix(2).str(), Word({4, 5}).str());
  EXPECT_EQ(w.without(2).str(), Word({4, 6}).str());
  EXPECT_EQ(concat(Word{1}, Word{2, 3}).str(), Word({1, 2, 3}).str());
  EXPECT_THROW(w.without(0), validation_error);
  EXPECT_THROW(w.prefix(4), validation_error);
}

TEST(LinearIndex, RequiresPositiveSlope) {
  EXPECT_THROW(LinearIndex(0, 1), validation_error);
  EXPECT_EQ(LinearIndex(3, 2)(4), 14u);
}

TEST(Convergents, AllOnesGiveFibonacci) {
  EXPECT_EQ(continuant(Word{1, 1, 1, 1, 1}).q_cur, BigInt(8));
}

TEST(Convergents, TwoTwo) {
  const auto st = continuant(Word{2, 2});
  EXPECT_EQ(st.value(), R(2, 5));
}

TEST(Convergents, PiPrefix) {
  const auto cs = convergents(Word{7, 15, 1});
  ASSERT_EQ(cs.size(), 4u);
  EXPECT_EQ(cs[1].q_cur, BigInt(7));
  EXPECT_EQ(cs[2].q_cur, BigInt(106));
  EXPECT_EQ(cs[3].q_cur, BigInt(113));
  EXPECT_EQ(cs[3].p_cur, BigInt(16));
}

TEST(Convergents, SeedState) {
  const auto cs = convergents(Word{});
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].p_prev, BigInt(1));
  EXPECT_EQ(cs[0].p_cur, BigInt(0));
  EXPECT_EQ(cs[0].q_prev, BigInt(0));
  EXPECT_EQ(cs[0].q_cur, BigInt(1));
}

TEST(Convergents, PropertyDeterminantAndGrowth) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 30, 1000);
    const auto st = continuant(w);
    const BigInt sign = w.size() % 2 == 0 ? BigInt(1) : BigInt(-1);
    EXPECT_EQ(st.determinant(), sign) << w.str();
    EXPECT_GE(st.q_cur, st.q_prev);
    EXPECT_GE(st.q_cur * st.q_cur, BigInt(1) << (w.size() - 1));
  }
}

TEST(Cylinder, LengthOne) {
  const auto c = cylinder(Word{1});
  EXPECT_EQ(c.lo, R(1, 2));
  EXPECT_EQ(c.hi, R(1, 1));
  EXPECT_FALSE(c.lo_closed);
  EXPECT_EQ(c.length(), R(1, 2));
}

TEST(Cylinder, DigitTwoOrientation) {
  // {x : a_1(x) = 2} = (1/3, 1/2]: 1/2 = [2], 1/3 = [3].
  const auto c = cylinder(Word{2});
  EXPECT_EQ(c.lo, R(1, 3));
  EXPECT_EQ(c.hi, R(1, 2));
  EXPECT_EQ(c.length(), R(1, 6));
  EXPECT_TRUE(c.contains(R(1, 2)));
  EXPECT_FALSE(c.contains(R(1, 3)));
  EXPECT_EQ(gauss_digits(R(1, 2), 1)->front(), 2u);
  EXPECT_EQ(gauss_digits(R(1, 3), 1)->front(), 3u);
}

TEST(Cylinder, PropertyLengthAndMembership) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 8, 9);
    const auto c = cylinder(w);
    const auto st = continuant(w);
    EXPECT_EQ(c.length() * Rational(st.q_cur * (st.q_cur + st.q_prev)), Rational(1));
    EXPECT_EQ(c.length(), cylinder_length(w));
    // Interior points follow the Gauss map through w.
    for (int j = 1; j < 4; ++j) {
      const Rational x = c.lo + c.length() * R(j, 4);
      const auto dg = gauss_digits(x, w.size());
      ASSERT_TRUE(dg.has_value());
      EXPECT_EQ(Word(*dg).str(), w.str());
      EXPECT_TRUE(c.contains(x));
    }
    // Closed endpoint belongs to w's cylinder, open one does not.
    const Rational closed_end = c.lo_closed ? c.lo : c.hi;
    const Rational open_end = c.lo_closed ? c.hi : c.lo;
    EXPECT_TRUE(c.contains(closed_end));
    EXPECT_FALSE(c.contains(open_end));
  }
}

TEST(FundamentalInterval, OrderZero) {
  for (Digit M : {1u, 2u, 5u}) {
    const auto j = fundamental_interval(Word{}, 1, M);
    EXPECT_EQ(j.length(), R(M, M + 1));
    EXPECT_EQ(j.length(), fundamental_length_formula(Word{}, 1, M));
  }
}

TEST(FundamentalInterval, UnionOfThreeCylinders) {
  const auto j = fundamental_interval(Word{1}, 2, 4);
  Rational lo = cylinder(Word{1, 2}).lo, hi = cylinder(Word{1, 2}).hi;
  for (Digit a = 2; a <= 4; ++a) {
    const auto c = cylinder(Word{1, a});
    lo = std::min(lo, c.lo);
    hi = std::max(hi, c.hi);
  }
  EXPECT_EQ(j.lo, lo);
  EXPECT_EQ(j.hi, hi);
  EXPECT_EQ(j.length(), fundamental_length_formula(Word{1}, 2, 4));
}

TEST(FundamentalInterval, EmptyRangeRejected) {
  EXPECT_THROW(fundamental_interval(Word{1}, 3, 2), validation_error);
  EXPECT_THROW(fundamental_interval(Word{1}, 0, 2), validation_error);
}

TEST(FundamentalInterval, PropertyLargeRangeSandwich) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<Digit> Adist(1, 500);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 6, 20);
    const Digit A = Adist(rng);
    const auto j = fundamental_interval(w, A, 2 * A);
    const BigInt q = continuant(w).q_cur;
    EXPECT_EQ(j.length(), fundamental_length_formula(w, A, 2 * A));
    EXPECT_LE(Rational(BigInt(1), 32 * BigInt(A) * q * q), j.length());
    EXPECT_LE(j.length(), Rational(BigInt(1), BigInt(A) * q * q));
  }
}

TEST(Expand, GoldenConjugate) {
  EXPECT_EQ(expand(golden_conjugate_enclosure(), 6).str(), Word({1, 1, 1, 1, 1, 1}).str());
}

TEST(Expand, TerminatingRational) {
  const auto w = expand(R(2, 5), 3);
  EXPECT_EQ(w.str(), Word({2, 2}).str());
}

TEST(Expand, PiMinusThree) {
  EXPECT_EQ(expand(pi_minus_3_enclosure(), 4).str(), Word({7, 15, 1, 292}).str());
}

TEST(Expand, PrecisionExhaustedInsteadOfWrongDigits) {
  // pi - 3 to 8 decimals cannot certify 20 digits.
  EXPECT_THROW(expand(pi_minus_3_enclosure(8), 20), precision_exhausted);
  const auto partial = expand_certified(pi_minus_3_enclosure(8), 20);
  EXPECT_FALSE(partial.complete);
  ASSERT_GE(partial.digits.size(), 2u);
  EXPECT_EQ(partial.digits[0], 7u);
  EXPECT_EQ(partial.digits[1], 15u);
}

TEST(Expand, ParseReal) {
  EXPECT_EQ(expand(parse_real("2/5"), 5).str(), Word({2, 2}).str());
  EXPECT_EQ(expand(parse_real("0.25"), 5).str(), Word({4}).str());
  EXPECT_EQ(expand(parse_real("pi"), 4).str(), Word({7, 15, 1, 292}).str());
  EXPECT_THROW(expand(parse_real("3/2"), 3), validation_error);
  EXPECT_THROW(parse_real("abc"), validation_error);
}

TEST(Expand, CanonicalLastDigit) {
  // [2, 1] = [3]: the canonical form ends in a digit >= 2.
  EXPECT_EQ(expand(continuant(Word{2, 1}).value(), 5).str(), Word({3}).str());
}

TEST(Expand, PropertyRoundTrip) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(rng, 12, 50);
    const auto c = cylinder(w);
    const Rational mid = (c.lo + c.hi) / 2;
    EXPECT_EQ(expand(mid, w.size()).str(), w.str());
    EXPECT_EQ(expand(RationalInterval{c.lo + c.length() / 4, c.hi - c.length() / 4}, w.size()).str(), w.str());
  }
}

TEST(Sweeps, SmallRangesPass) {
  EXPECT_TRUE(sweep_determinant({6, 4}).passed());
  EXPECT_TRUE(sweep_growth({6, 4}).passed());
  EXPECT_TRUE(sweep_growth_all_ones(64).passed());
  EXPECT_TRUE(sweep_deletion_ratio({5, 4}).passed());
  EXPECT_TRUE(sweep_concatenation({3, 3}).passed());
  EXPECT_TRUE(sweep_cylinder_nesting({4, 5}).passed());
  EXPECT_TRUE(sweep_expand_roundtrip({4, 5}).passed());
}

TEST(Sweeps, CountsAreExhaustive) {
  // 3 + 9 + 27 words of length 1..3 over {1,2,3}.
  EXPECT_EQ(sweep_determinant({3, 3}).checked, 39u);
  // deletion: sum over lengths of length * 3^length.
  EXPECT_EQ(sweep_deletion_ratio({3, 3}).checked, 3u + 18u + 81u);
  // concatenation: all ordered pairs.
  EXPECT_EQ(sweep_concatenation({2, 2}).checked, 36u);
}

TEST(Sweeps, RangeTooLargeRejected) {
  EXPECT_THROW(sweep_determinant({40, 1000}), validation_error);
}

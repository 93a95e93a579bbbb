#pragma once

#include <limits>
#include <string>
#include <string_view>

#include "cfdim/cf/word.hpp"
#include "cfdim/support/bigint.hpp"
#include "cfdim/support/errors.hpp"

namespace cfdim::cf {

/// Closed rational enclosure [lo, hi] of a real number.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
};

namespace detail {

// 300 significant digits of pi.
inline constexpr std::string_view kPiDigits =
    "3141592653589793238462643383279502884197169399375105820974944592307816406286"
    "2089986280348253421170679821480865132823066470938446095505822317253594081284"
    "8111745028410270193852110555964462294895493038196442881097566593344612847564"
    "823378678316527120190914564856692346034861045432664821339360726024914127";

inline BigInt pow10(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

inline Digit to_digit(const BigInt& q) {
  if (q > BigInt(std::numeric_limits<Digit>::max()))
    throw error("partial quotient exceeds the 64-bit digit range");
  return q.convert_to<Digit>();
}

}  // namespace detail

/// Certified enclosure of pi - 3 using `digits` decimals (<= 299).
inline RationalInterval pi_minus_3_enclosure(unsigned digits = 100) {
  if (digits < 1 || digits + 1 > detail::kPiDigits.size())
    throw validation_error("pi enclosure supports 1..299 decimals");
  const BigInt scale = detail::pow10(digits);
  BigInt truncated(std::string(detail::kPiDigits.substr(0, digits + 1)));
  truncated -= 3 * scale;
  return {Rational(truncated, scale), Rational(truncated + 1, scale)};
}

/// Enclosure of sqrt(n) from an integer square root at 10^-digits resolution.
inline RationalInterval sqrt_enclosure(const BigInt& n, unsigned digits) {
  const BigInt scale = detail::pow10(digits);
  const BigInt r = boost::multiprecision::sqrt(BigInt(n * scale * scale));
  if (r * r == n * scale * scale) return RationalInterval::point(Rational(r, scale));
  return {Rational(r, scale), Rational(r + 1, scale)};
}

/// Enclosure of (sqrt(5) - 1) / 2 = [1, 1, 1, ...].
inline RationalInterval golden_conjugate_enclosure(unsigned digits = 60) {
  const auto s = sqrt_enclosure(5, digits);
  return {(s.lo - 1) / 2, (s.hi - 1) / 2};
}

/// Exact expansion of a rational in (0, 1) by the Gauss map. Stops after n
/// digits or when the expansion terminates; terminating expansions come out in
/// canonical form (last digit >= 2 whenever the length is >= 2), since
/// [a_1, ..., a_k] = [a_1, ..., a_k - 1, 1] is never produced by the map.
inline Word expand(const Rational& x, std::size_t n) {
  if (x <= 0 || x >= 1) throw validation_error("expand requires 0 < x < 1");
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  Word w;
  BigInt q, r;
  while (w.size() < n && num != 0) {
    boost::multiprecision::divide_qr(den, num, q, r);
    w.push_back(detail::to_digit(q));
    den = std::move(num);
    num = std::move(r);
  }
  return w;
}

/// Result of expanding an enclosure: the digits shared by every point of it.
struct CertifiedExpansion {
  std::vector<Digit> digits;
  bool complete = false;  // all requested digits were certified
};

/// Runs the Gauss map on both endpoints of a closed enclosure. A digit is
/// emitted only when both endpoints produce it, which places the whole
/// enclosure inside one cylinder (cylinders are intervals and the digit map is
/// monotone on each branch). Stops at the first disagreement or when an
/// endpoint's expansion terminates.
inline CertifiedExpansion expand_certified(const RationalInterval& x, std::size_t n) {
  if (x.lo <= 0 || x.hi >= 1 || x.lo > x.hi)
    throw validation_error("enclosure must satisfy 0 < lo <= hi < 1");
  CertifiedExpansion out;
  out.digits.reserve(n);
  BigInt ln = boost::multiprecision::numerator(x.lo), ld = boost::multiprecision::denominator(x.lo);
  BigInt hn = boost::multiprecision::numerator(x.hi), hd = boost::multiprecision::denominator(x.hi);
  BigInt qa, ra, qb, rb;
  while (out.digits.size() < n) {
    if (ln == 0 || hn == 0) return out;
    boost::multiprecision::divide_qr(ld, ln, qa, ra);
    boost::multiprecision::divide_qr(hd, hn, qb, rb);
    if (qa != qb) return out;
    if (qa > BigInt(std::numeric_limits<Digit>::max())) return out;
    out.digits.push_back(qa.convert_to<Digit>());
    ld = std::move(ln);
    ln = std::move(ra);
    hd = std::move(hn);
    hn = std::move(rb);
  }
  out.complete = true;
  return out;
}

/// Expansion of an enclosure that must certify all n digits; a degenerate
/// (point) enclosure behaves like the exact rational expansion.
inline Word expand(const RationalInterval& x, std::size_t n) {
  if (x.lo == x.hi) return expand(x.lo, n);
  auto r = expand_certified(x, n);
  if (!r.complete)
    throw precision_exhausted("enclosure certifies only " + std::to_string(r.digits.size()) +
                                  " of " + std::to_string(n) + " digits",
                              r.digits.size());
  return Word(std::move(r.digits));
}

/// Parses "p/q", a decimal literal such as "0.4142", "pi[:digits]" (pi - 3)
/// or "golden[:digits]" (golden ratio - 1).
inline RationalInterval parse_real(const std::string& text) {
  auto digits_after_colon = [&](unsigned dflt) -> unsigned {
    const auto pos = text.find(':');
    return pos == std::string::npos ? dflt : static_cast<unsigned>(std::stoul(text.substr(pos + 1)));
  };
  try {
    if (text.rfind("pi", 0) == 0) return pi_minus_3_enclosure(digits_after_colon(100));
    if (text.rfind("golden", 0) == 0) return golden_conjugate_enclosure(digits_after_colon(60));
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      return RationalInterval::point(
          Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))));
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      const BigInt whole(text.substr(0, dot).empty() ? std::string("0") : text.substr(0, dot));
      const BigInt scale = detail::pow10(static_cast<unsigned>(frac.size()));
      return RationalInterval::point(Rational(whole * scale + BigInt(frac), scale));
    }
  } catch (const validation_error&) {
    throw;
  } catch (const std::exception&) {
  }
  throw validation_error("cannot parse real '" + text + "'");
}

}  // namespace cfdim::cf

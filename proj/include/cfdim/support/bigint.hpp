#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace cfdim {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Natural log of a positive big integer in extended precision.
inline long double log_bigint(const BigInt& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.backend().data());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * 0.693147180559945309417232121458176568L;
}

/// Natural log of a positive unsigned 128-bit integer.
inline long double log_u128(unsigned __int128 v) {
  return std::log(static_cast<long double>(v));
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

inline long double to_long_double(const Rational& r) {
  return static_cast<long double>(r.convert_to<double>());
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace cfdim

#pragma once

#include <cassert>

#include "cfdim/cf/convergents.hpp"
#include "cfdim/support/errors.hpp"

namespace cfdim::cf {

/// I_n(a_1..a_n) = {x : a_1(x)=a_1, ..., a_n(x)=a_n}.
///
/// For even n the interval is [p_n/q_n, (p_n+p_{n-1})/(q_n+q_{n-1})); for odd n
/// it is ((p_n+p_{n-1})/(q_n+q_{n-1}), p_n/q_n]. `lo_closed` records which end
/// belongs to the set.
struct CylinderInterval {
  Rational lo;
  Rational hi;
  bool odd = false;  // word length parity
  bool lo_closed = true;

  Rational length() const { return hi - lo; }

  bool contains(const Rational& x) const {
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = lo_closed ? x < hi : x <= hi;
    return above && below;
  }

  bool contains_closure(const Rational& lo2, const Rational& hi2) const {
    return lo <= lo2 && hi2 <= hi;
  }
};

inline CylinderInterval cylinder(const Word& w) {
  if (w.empty()) throw validation_error("cylinder needs a word of length >= 1");
  const auto st = continuant(w);
  Rational conv(st.p_cur, st.q_cur);
  Rational mediant(st.p_cur + st.p_prev, st.q_cur + st.q_prev);
  CylinderInterval c;
  c.odd = (w.size() % 2) == 1;
  if (c.odd) {
    c.lo = std::move(mediant);
    c.hi = std::move(conv);
    c.lo_closed = false;
  } else {
    c.lo = std::move(conv);
    c.hi = std::move(mediant);
    c.lo_closed = true;
  }
  assert(c.lo < c.hi);
  return c;
}

/// 1 / (q_n (q_n + q_{n-1})).
inline Rational cylinder_length(const Word& w) {
  const auto st = continuant(w);
  return Rational(BigInt(1), st.q_cur * (st.q_cur + st.q_prev));
}

/// Closed union of cl I_{n+1}(w, a) over next_lo <= a <= next_hi.
struct FundamentalInterval {
  Word base;
  Digit next_lo = 1;
  Digit next_hi = 1;
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
};

/// Point [a_1, ..., a_n + 1/u] for u in [1, inf); u -> inf gives p_n/q_n.
inline Rational point_at(const ConvergentState<BigInt>& st, const BigInt& u) {
  return Rational(st.p_cur * u + st.p_prev, st.q_cur * u + st.q_prev);
}

inline FundamentalInterval fundamental_interval(const Word& w, Digit next_lo, Digit next_hi) {
  if (next_lo < 1 || next_lo > next_hi)
    throw validation_error("fundamental interval needs 1 <= lo <= hi");
  const auto st = continuant(w);
  // The union sweeps the tail value u = a_{n+1} + y over [next_lo, next_hi + 1].
  Rational a = point_at(st, BigInt(next_lo));
  Rational b = point_at(st, BigInt(next_hi) + 1);
  FundamentalInterval j{w, next_lo, next_hi, {}, {}};
  if (a < b) {
    j.lo = std::move(a);
    j.hi = std::move(b);
  } else {
    j.lo = std::move(b);
    j.hi = std::move(a);
  }
  return j;
}

/// (hi - lo + 1) / (((hi+1) q_n + q_{n-1}) (lo q_n + q_{n-1})).
inline Rational fundamental_length_formula(const Word& w, Digit next_lo, Digit next_hi) {
  const auto st = continuant(w);
  const BigInt lo(next_lo), hi(next_hi);
  return Rational(hi - lo + 1, ((hi + 1) * st.q_cur + st.q_prev) * (lo * st.q_cur + st.q_prev));
}

}  // namespace cfdim::cf

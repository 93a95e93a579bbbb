#pragma once

#include <span>
#include <type_traits>
#include <vector>

#include "cfdim/cf/word.hpp"
#include "cfdim/support/bigint.hpp"

namespace cfdim::cf {

/// (p_{n-1}, p_n, q_{n-1}, q_n) for a word of length n, advanced by
/// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}.
///
/// The default seed is the empty word: p_{-1}=1, p_0=0, q_{-1}=0, q_0=1.
/// `Int` may be a fixed-width type for sweeps whose range is bounded up front.
template <typename Int = BigInt>
struct ConvergentState {
  Int p_prev{1};
  Int p_cur{0};
  Int q_prev{0};
  Int q_cur{1};
  std::size_t length = 0;

  void step(Digit a) {
    const Int ai = static_cast<Int>(a);
    Int p_next = ai * p_cur + p_prev;
    Int q_next = ai * q_cur + q_prev;
    p_prev = std::move(p_cur);
    p_cur = std::move(p_next);
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
    ++length;
  }

  ConvergentState advanced(Digit a) const {
    ConvergentState s = *this;
    s.step(a);
    return s;
  }

  /// p_{n-1} q_n - p_n q_{n-1}; equals (-1)^n.
  Int determinant() const { return p_prev * q_cur - p_cur * q_prev; }

  Rational value() const
    requires std::is_same_v<Int, BigInt>
  {
    return Rational(p_cur, q_cur);
  }
};

/// Final state after consuming all of `w`.
template <typename Int = BigInt>
ConvergentState<Int> continuant(const Word& w) {
  ConvergentState<Int> s;
  for (Digit a : w) s.step(a);
  return s;
}

/// States after 0, 1, ..., n digits (n + 1 entries; entry 0 is the seed).
template <typename Int = BigInt>
std::vector<ConvergentState<Int>> convergents(const Word& w) {
  std::vector<ConvergentState<Int>> out;
  out.reserve(w.size() + 1);
  ConvergentState<Int> s;
  out.push_back(s);
  for (Digit a : w) {
    s.step(a);
    out.push_back(s);
  }
  return out;
}

/// q_n of a digit sequence.
template <typename Int = BigInt>
Int q_of(std::span<const Digit> digits) {
  Int q_prev{0}, q{1};
  for (Digit a : digits) {
    Int next = static_cast<Int>(a) * q + q_prev;
    q_prev = std::move(q);
    q = std::move(next);
  }
  return q;
}

}  // namespace cfdim::cf

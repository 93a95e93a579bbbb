#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cfdim/cf/convergents.hpp"
#include "cfdim/support/errors.hpp"

namespace cfdim::cf {

/// Outcome of one exhaustive sweep. All comparisons are exact integer ones.
struct SweepReport {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0 && checked > 0; }
};

/// Exhaustive word range: every word of length 1..max_length with digits in
/// 1..max_digit.
struct SweepRange {
  std::size_t max_length;
  Digit max_digit;
};

namespace detail {

using i128 = __int128;

// q_n <= (max_digit + 1)^n; products of two such values must fit in i128.
inline void require_fits(const SweepRange& r, unsigned bits) {
  const double log2q = static_cast<double>(r.max_length) * std::log2(static_cast<double>(r.max_digit) + 1.0);
  if (2.0 * log2q + 2.0 >= bits)
    throw validation_error("sweep range too large for exact fixed-width arithmetic");
}

inline std::string word_str(const std::vector<Digit>& d) { return Word(d).str(); }

// Depth-first traversal; `visit` sees every prefix once, with the state after it.
template <typename Visit>
void walk(const SweepRange& r, std::vector<Digit>& digits, const ConvergentState<i128>& st, Visit& visit) {
  if (digits.size() == r.max_length) return;
  for (Digit a = 1; a <= r.max_digit; ++a) {
    auto next = st.advanced(a);
    digits.push_back(a);
    visit(digits, next);
    walk(r, digits, next, visit);
    digits.pop_back();
  }
}

}  // namespace detail

/// p_{n-1} q_n - p_n q_{n-1} = (-1)^n and q_n >= q_{n-1} >= 1, over every word
/// in the range.
inline SweepReport sweep_determinant(const SweepRange& r) {
  detail::require_fits(r, 126);
  SweepReport rep{"determinant (-1)^n", 0, 0, {}};
  std::vector<Digit> digits;
  auto visit = [&](const std::vector<Digit>& d, const ConvergentState<detail::i128>& st) {
    ++rep.checked;
    const detail::i128 expected = (d.size() % 2 == 0) ? 1 : -1;
    const bool ok = st.determinant() == expected && st.q_cur >= st.q_prev && st.q_prev >= 1;
    if (!ok && rep.failures++ == 0) rep.counterexample = detail::word_str(d);
  };
  detail::walk(r, digits, ConvergentState<detail::i128>{}, visit);
  return rep;
}

/// q_n^2 >= 2^(n-1) over every word in the range.
inline SweepReport sweep_growth(const SweepRange& r) {
  detail::require_fits(r, 126);
  SweepReport rep{"q_n >= 2^((n-1)/2)", 0, 0, {}};
  std::vector<Digit> digits;
  auto visit = [&](const std::vector<Digit>& d, const ConvergentState<detail::i128>& st) {
    ++rep.checked;
    if (st.q_cur * st.q_cur < (detail::i128{1} << (d.size() - 1)) && rep.failures++ == 0)
      rep.counterexample = detail::word_str(d);
  };
  detail::walk(r, digits, ConvergentState<detail::i128>{}, visit);
  return rep;
}

/// q_n^2 >= 2^(n-1) on the all-ones word (the slowest-growing continuant) for
/// n = 1..max_n, in big-integer arithmetic.
inline SweepReport sweep_growth_all_ones(std::size_t max_n) {
  SweepReport rep{"q_n >= 2^((n-1)/2), all-ones word", 0, 0, {}};
  ConvergentState<BigInt> st;
  for (std::size_t n = 1; n <= max_n; ++n) {
    st.step(1);
    ++rep.checked;
    if (st.q_cur * st.q_cur < (BigInt(1) << (n - 1)) && rep.failures++ == 0)
      rep.counterexample = "n=" + std::to_string(n);
  }
  return rep;
}

/// (a_k + 1)/2 <= q_n(w) / q_{n-1}(w without a_k) <= a_k + 1 for every word in
/// the range and every deletion position k.
inline SweepReport sweep_deletion_ratio(const SweepRange& r) {
  detail::require_fits(r, 126);
  SweepReport rep{"deletion ratio (a_k+1)/2 <= q_n/q_{n-1}' <= a_k+1", 0, 0, {}};
  std::vector<Digit> digits, reduced;
  auto visit = [&](const std::vector<Digit>& d, const ConvergentState<detail::i128>& st) {
    for (std::size_t k = 0; k < d.size(); ++k) {
      reduced.assign(d.begin(), d.end());
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
      const detail::i128 q_del = q_of<detail::i128>(reduced);
      const detail::i128 ak1 = static_cast<detail::i128>(d[k]) + 1;
      ++rep.checked;
      const bool ok = ak1 * q_del <= 2 * st.q_cur && st.q_cur <= ak1 * q_del;
      if (!ok && rep.failures++ == 0)
        rep.counterexample = detail::word_str(d) + " k=" + std::to_string(k + 1);
    }
  };
  detail::walk(r, digits, ConvergentState<detail::i128>{}, visit);
  return rep;
}

/// q_n(u) q_k(v) <= q_{n+k}(uv) <= 2 q_n(u) q_k(v) for all pairs of words u, v
/// drawn from the range.
inline SweepReport sweep_concatenation(const SweepRange& r) {
  detail::require_fits(SweepRange{2 * r.max_length, r.max_digit}, 126);
  SweepReport rep{"concatenation q_n q_k <= q_{n+k} <= 2 q_n q_k", 0, 0, {}};
  struct Entry {
    std::vector<Digit> digits;
    ConvergentState<detail::i128> state;
  };
  std::vector<Entry> words;
  std::vector<Digit> digits;
  auto collect = [&](const std::vector<Digit>& d, const ConvergentState<detail::i128>& st) {
    words.push_back({d, st});
  };
  detail::walk(r, digits, ConvergentState<detail::i128>{}, collect);
  for (const auto& u : words) {
    for (const auto& v : words) {
      auto st = u.state;
      for (Digit a : v.digits) st.step(a);
      const detail::i128 prod = u.state.q_cur * v.state.q_cur;
      ++rep.checked;
      if ((st.q_cur < prod || st.q_cur > 2 * prod) && rep.failures++ == 0)
        rep.counterexample = detail::word_str(u.digits) + " . " + detail::word_str(v.digits);
    }
  }
  return rep;
}

}  // namespace cfdim::cf

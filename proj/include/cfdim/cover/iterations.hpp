#pragma once

#include <cstddef>
#include <vector>

#include "cfdim/support/errors.hpp"

namespace cfdim::cover {

/// Values of a scalar recursion seeded at s; values[k] holds the (k+1)-th term.
struct IterationTable {
  double seed = 0;
  std::vector<double> values;

  double operator[](std::size_t one_based) const { return values.at(one_based - 1); }
  double back() const { return values.back(); }
};

inline void require_open_unit(double s) {
  if (!(s > 0.0 && s < 1.0)) throw domain_error("iteration seed s must lie in (0, 1)");
}

/// h_1 = s, h_l = s h_{l-1} / (1 - s + l h_{l-1}).
inline IterationTable h_iter(double s, std::size_t L) {
  require_open_unit(s);
  if (L < 1) throw validation_error("h_iter needs L >= 1");
  IterationTable t{s, {}};
  t.values.reserve(L);
  double h = s;
  t.values.push_back(h);
  for (std::size_t l = 2; l <= L; ++l) {
    h = s * h / (1.0 - s + static_cast<double>(l) * h);
    t.values.push_back(h);
  }
  return t;
}

/// f_1 = s, f_{k+1} = s f_k / (1 - s + f_k).
inline IterationTable f_iter(double s, std::size_t m) {
  require_open_unit(s);
  if (m < 1) throw validation_error("f_iter needs m >= 1");
  IterationTable t{s, {}};
  t.values.reserve(m);
  double f = s;
  t.values.push_back(f);
  for (std::size_t k = 2; k <= m; ++k) {
    f = s * f / (1.0 - s + f);
    t.values.push_back(f);
  }
  return t;
}

/// f_m(s) for any s >= 0, used inside pressure root brackets that extend past
/// s = 1. The recursion stays well defined there: f_k > s - 1 implies
/// f_{k+1} > s - 1, so every denominator is positive.
inline double f_m(double s, std::size_t m) {
  if (s <= 0.0) return 0.0;
  double f = s;
  for (std::size_t k = 2; k <= m; ++k) f = s * f / (1.0 - s + f);
  return f;
}

}  // namespace cfdim::cover

#pragma once

#include "cfdim/cf/expand.hpp"
#include "cfdim/cf/inequalities.hpp"
#include "cfdim/cf/intervals.hpp"

namespace cfdim::cf {

namespace detail {

template <typename Visit>
void walk_words(const SweepRange& r, Word& w, Visit& visit) {
  if (w.size() == r.max_length) return;
  for (Digit a = 1; a <= r.max_digit; ++a) {
    w.push_back(a);
    visit(w);
    walk_words(r, w, visit);
    w = w.prefix(w.size() - 1);
  }
}

}  // namespace detail

/// closure(I(w a)) lies inside closure(I(w)) for every w in the range and every
/// appended digit a <= max_digit.
inline SweepReport sweep_cylinder_nesting(const SweepRange& r) {
  SweepReport rep{"cylinder nesting", 0, 0, {}};
  Word w;
  auto visit = [&](const Word& v) {
    const auto outer = cylinder(v);
    for (Digit a = 1; a <= r.max_digit; ++a) {
      ++rep.checked;
      const auto inner = cylinder(v.extended(a));
      const bool ok = outer.lo <= inner.lo && inner.hi <= outer.hi;
      if (!ok && rep.failures++ == 0) rep.counterexample = v.extended(a).str();
    }
  };
  detail::walk_words(r, w, visit);
  return rep;
}

/// The midpoint of every cylinder in the range expands to a word with that
/// cylinder's word as prefix.
inline SweepReport sweep_expand_roundtrip(const SweepRange& r) {
  SweepReport rep{"expand/cylinder roundtrip", 0, 0, {}};
  Word w;
  auto visit = [&](const Word& v) {
    ++rep.checked;
    const auto c = cylinder(v);
    const Rational mid = (c.lo + c.hi) / 2;
    const auto back = expand(mid, v.size());
    if (!(back == v) && rep.failures++ == 0) rep.counterexample = v.str() + " -> " + back.str();
  };
  detail::walk_words(r, w, visit);
  return rep;
}

}  // namespace cfdim::cf

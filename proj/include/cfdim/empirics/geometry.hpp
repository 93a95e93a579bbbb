#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cfdim/cf/intervals.hpp"
#include "cfdim/empirics/report.hpp"

namespace cfdim::empirics {

using cf::Digit;
using cf::Word;

/// Admissible digit range at each position of a miniature Cantor set.
/// Positions are 1-based; unspecified positions use [1, M].
struct RangeProfile {
  enum class Kind { full, large, fixed };
  struct Slot {
    Digit lo = 1, hi = 1;
    Kind kind = Kind::full;
    Digit A = 0;  // large: range [A, 2A]
  };

  std::uint64_t M = 2;
  std::vector<std::pair<std::size_t, Slot>> overrides;

  static RangeProfile uniform(std::uint64_t M) {
    if (M < 1) throw validation_error("M must be >= 1");
    return RangeProfile{M, {}};
  }
  RangeProfile& with_large(std::size_t position, Digit A) {
    if (position < 1 || A < 1) throw validation_error("large position needs position >= 1 and A >= 1");
    overrides.push_back({position, Slot{A, 2 * A, Kind::large, A}});
    return *this;
  }
  RangeProfile& with_fixed(std::size_t position, Digit value) {
    if (position < 1 || value < 1) throw validation_error("fixed position needs position >= 1 and value >= 1");
    overrides.push_back({position, Slot{value, value, Kind::fixed, 0}});
    return *this;
  }

  Slot at(std::size_t position) const {
    for (auto it = overrides.rbegin(); it != overrides.rend(); ++it)
      if (it->first == position) return it->second;
    return Slot{1, M, Kind::full, 0};
  }

  std::string str() const {
    std::string s = "M=" + std::to_string(M);
    for (const auto& [pos, slot] : overrides)
      s += "; a_" + std::to_string(pos) + " in [" + std::to_string(slot.lo) + "," + std::to_string(slot.hi) + "]";
    return s;
  }
};

struct GeometryCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string counterexample;
  bool passed() const { return failures == 0; }
};

struct GeometryResult {
  GeometryCheck length_crosscheck{"length-crosscheck"};
  GeometryCheck sandwich_J1{"sandwich-large-range"};
  GeometryCheck sandwich_J3{"sandwich-fixed-two"};
  GeometryCheck sandwich_J4{"sandwich-full-range"};
  GeometryCheck gap{"gap-over-length"};
  Rational min_gap_ratio{-1};  // min over intervals of M g / |J|; -1 if no gaps
  std::uint64_t intervals = 0;
  ExperimentReport report;

  bool passed() const {
    return length_crosscheck.passed() && sandwich_J1.passed() && sandwich_J3.passed() && sandwich_J4.passed() &&
           gap.passed();
  }
};

namespace detail {

inline void record(GeometryCheck& c, bool ok, const std::string& what) {
  ++c.checked;
  if (ok) return;
  if (c.failures++ == 0) c.counterexample = what;
}

inline std::vector<Word> words_of_order(const RangeProfile& prof, std::size_t n) {
  std::vector<Word> out{Word{}};
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const auto slot = prof.at(pos);
    std::vector<Word> next;
    for (const auto& w : out)
      for (Digit a = slot.lo; a <= slot.hi; ++a) next.push_back(w.extended(a));
    out = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Enumerates every fundamental interval of orders 1..depth of the miniature
/// set and checks, in exact rationals: the union-of-cylinders length against
/// the closed formula; the length sandwiches for full [1,M], large [A,2A] and
/// fixed [2,2] next-digit ranges; and M g_n >= |J_n| for the gap to the
/// nearest other interval of the same order.
inline GeometryResult cantor_geometry_check(std::uint64_t M, std::size_t depth, RangeProfile profile,
                                            std::uint64_t budget = 100'000) {
  if (M < 1) throw validation_error("M must be >= 1");
  if (depth < 1) throw validation_error("depth must be >= 1");
  profile.M = M;
  long double total = 0, layer = 1;
  for (std::size_t pos = 1; pos <= depth; ++pos) {
    const auto slot = profile.at(pos);
    layer *= static_cast<long double>(slot.hi - slot.lo + 1);
    total += layer;
  }
  if (total > static_cast<long double>(budget))
    throw budget_exceeded("geometry check would enumerate " + std::to_string(static_cast<double>(total)) + " intervals");

  GeometryResult res;
  const Rational Mq(M);
  for (std::size_t n = 1; n <= depth; ++n) {
    const auto next = profile.at(n + 1);
    struct Entry {
      Rational lo, hi, len;
      std::string word;
    };
    std::vector<Entry> entries;
    for (const auto& w : detail::words_of_order(profile, n)) {
      const auto J = cf::fundamental_interval(w, next.lo, next.hi);
      const Rational len = J.hi - J.lo;
      const auto label = w.str() + " next in [" + std::to_string(next.lo) + "," + std::to_string(next.hi) + "]";

      Rational ulo, uhi;
      bool first = true, contiguous = true;
      std::vector<std::pair<Rational, Rational>> pieces;
      for (Digit a = next.lo; a <= next.hi; ++a) {
        const auto c = cf::cylinder(w.extended(a));
        pieces.push_back({c.lo, c.hi});
        if (first || c.lo < ulo) ulo = c.lo;
        if (first || c.hi > uhi) uhi = c.hi;
        first = false;
      }
      std::sort(pieces.begin(), pieces.end());
      for (std::size_t i = 1; i < pieces.size(); ++i)
        if (pieces[i].first != pieces[i - 1].second) contiguous = false;
      detail::record(res.length_crosscheck,
                     contiguous && ulo == J.lo && uhi == J.hi && len == cf::fundamental_length_formula(w, next.lo, next.hi),
                     label);

      const auto conv = cf::convergents<BigInt>(w).back();
      const Rational q2(conv.q_cur * conv.q_cur);
      switch (next.kind) {
        case RangeProfile::Kind::large: {
          const Rational A(next.A);
          detail::record(res.sandwich_J1, Rational(1) / (32 * A * q2) <= len && len <= Rational(1) / (A * q2), label);
          break;
        }
        case RangeProfile::Kind::fixed:
          if (next.lo == 2)
            detail::record(res.sandwich_J3, Rational(1) / (32 * q2) <= len && len <= Rational(1) / (4 * q2), label);
          break;
        case RangeProfile::Kind::full:
          detail::record(res.sandwich_J4, Rational(1) / (6 * q2) <= len && len <= Rational(1) / q2, label);
          break;
      }
      entries.push_back({J.lo, J.hi, len, label});
    }
    res.intervals += entries.size();

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::optional<Rational> g;
      if (i > 0) g = entries[i].lo - entries[i - 1].hi;
      if (i + 1 < entries.size()) {
        const Rational right = entries[i + 1].lo - entries[i].hi;
        if (!g || right < *g) g = right;
      }
      if (!g) continue;
      const Rational ratio = Mq * *g / entries[i].len;
      if (res.min_gap_ratio < 0 || ratio < res.min_gap_ratio) res.min_gap_ratio = ratio;
      detail::record(res.gap, ratio >= 1,
                     entries[i].word + ": gap " + cfdim::to_string(*g) + " < |J|/M = " + cfdim::to_string(entries[i].len / Mq));
    }
  }

  auto& r = res.report;
  r.name = "cantor-geometry";
  r.statistic = "exact length and gap checks on fundamental intervals";
  r.config = json{{"M", M}, {"depth", depth}, {"profile", profile.str()}};
  r.columns = {"check", "checked", "failures"};
  double idx = 0;
  for (const auto* c : {&res.length_crosscheck, &res.sandwich_J1, &res.sandwich_J3, &res.sandwich_J4, &res.gap}) {
    r.rows.push_back({idx++, static_cast<double>(c->checked), static_cast<double>(c->failures)});
    r.metrics[c->name + "_failures"] = static_cast<double>(c->failures);
    r.notes.push_back(c->name + ": " + std::to_string(c->checked) + " checked, " + std::to_string(c->failures) +
                      " failed" + (c->failures ? "; first: " + c->counterexample : ""));
  }
  r.metrics["intervals"] = static_cast<double>(res.intervals);
  if (res.min_gap_ratio >= 0) r.metrics["min_M_gap_over_length"] = to_long_double(res.min_gap_ratio);
  r.passed = res.passed();
  return res;
}

}  // namespace cfdim::empirics

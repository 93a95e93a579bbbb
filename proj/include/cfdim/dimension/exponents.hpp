#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "cfdim/dimension/growth.hpp"

namespace cfdim::dimension {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Growth exponents of psi: log B = liminf log psi/(dn), log b = liminf log log psi/(dn^2).
struct Exponents {
  double B = 1;
  double b = 1;
  std::size_t horizon = 0;
  bool exact = false;                 // closed-form extraction, no estimation
  std::vector<double> log_B_trace;    // running min of log psi/(dn) over [n, N]
  std::vector<double> log_b_trace;    // same for log log psi/(dn^2); NaN when undefined
  std::size_t skipped_b = 0;          // n with psi(n) <= e
  std::vector<std::string> diagnostics;

  static Exponents closed(double B, double b) {
    Exponents e;
    e.B = B;
    e.b = b;
    e.exact = true;
    return e;
  }
};

struct ExponentThresholds {
  double log_B_floor = 1e-2;   // estimated log B below this is read as B = 1
  double log_b_floor = 1e-2;   // tail min of the b-quotient at or above this means B = infinity
  double b_divergence = 2.0;   // tail growth factor of the b-quotient read as b = infinity
};

namespace detail {

inline std::vector<double> tail_min(const std::vector<double>& q) {
  std::vector<double> out(q.size());
  double m = kInfinity;
  for (std::size_t i = q.size(); i-- > 0;) {
    if (!std::isnan(q[i])) m = std::min(m, q[i]);
    out[i] = m;
  }
  return out;
}

}  // namespace detail

/// Exact exponents for closed forms; finite-horizon liminf estimates (min
/// over n in [N/2, N]) for tables.
inline Exponents exponents_from_psi(const GrowthSpec& spec, std::size_t N,
                                    const ExponentThresholds& th = {}) {
  if (N < 10) throw validation_error("exponent horizon N must be >= 10");
  if (spec.kind == GrowthSpec::Kind::table && spec.table_size() < N)
    throw validation_error("psi table covers n <= " + std::to_string(spec.table_size()) + " but N = " +
                           std::to_string(N));
  const double d = static_cast<double>(spec.index.d);

  Exponents e;
  switch (spec.kind) {
    case GrowthSpec::Kind::poly:
      e = Exponents::closed(1.0, 1.0);
      break;
    case GrowthSpec::Kind::exp:
      e = Exponents::closed(spec.beta, 1.0);
      break;
    case GrowthSpec::Kind::dexp:
      e = spec.beta > 1.0 ? Exponents::closed(kInfinity, spec.beta) : Exponents::closed(1.0, 1.0);
      break;
    case GrowthSpec::Kind::table:
      break;
  }

  std::vector<double> qB(N), qb(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const double nn = static_cast<double>(n);
    qB[n - 1] = spec.log_psi(n) / (d * nn);
    if (auto ll = spec.log_log_psi(n)) {
      qb[n - 1] = *ll / (d * nn * nn);
    } else {
      qb[n - 1] = std::numeric_limits<double>::quiet_NaN();
      ++e.skipped_b;
    }
  }
  e.horizon = N;
  e.log_B_trace = detail::tail_min(qB);
  e.log_b_trace = detail::tail_min(qb);
  if (e.skipped_b) e.diagnostics.push_back(std::to_string(e.skipped_b) + " n with psi(n) <= e skipped in b-quotient");
  if (e.exact) return e;

  const std::size_t half = std::max<std::size_t>(1, N / 2);
  const double log_B = e.log_B_trace[half - 1];
  const double log_b = e.log_b_trace[half - 1];
  const bool b_defined = std::isfinite(log_b);

  if (b_defined && log_b >= th.log_b_floor) {
    e.B = kInfinity;
    bool nondecreasing = true;
    std::size_t first = half - 1;
    while (first < N && std::isnan(qb[first])) ++first;
    for (std::size_t i = first + 1; i < N; ++i)
      if (!std::isnan(qb[i]) && qb[i] < qb[i - 1]) nondecreasing = false;
    if (nondecreasing && first < N && qb[N - 1] >= th.b_divergence * qb[first]) {
      e.b = kInfinity;
      e.diagnostics.push_back("b-quotient grows over [N/2, N]; read as b = infinity");
    } else {
      e.b = std::exp(log_b);
    }
  } else if (log_B < th.log_B_floor) {
    e.B = 1.0;
    e.diagnostics.push_back("log B estimate " + std::to_string(log_B) + " below floor; read as B = 1");
  } else {
    e.B = std::exp(log_B);
  }
  e.diagnostics.push_back("finite-horizon estimate; liminf not certified");
  return e;
}

}  // namespace cfdim::dimension

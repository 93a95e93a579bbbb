#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "cfdim/support/errors.hpp"

namespace cfdim::cover {

inline constexpr double kSLower = 0.5 + 1e-6;
inline constexpr double kSUpper = 1.0 - 1e-9;

/// A cover profile in log space. logAlpha[k-1] = logA[0] + ... + logA[k-1],
/// and logAlpha[n-1] = d n log B.
struct CoverProfile {
  std::size_t n = 0;
  double s = 0;
  double B = 0;
  std::uint64_t d = 1;
  std::vector<double> logA;
  std::vector<double> logAlpha;

  double budget() const { return static_cast<double>(d) * static_cast<double>(n) * std::log(B); }
};

inline void require_cover_domain(double s, double B, std::uint64_t d) {
  if (!(s > kSLower && s < kSUpper)) throw domain_error("cover profiles need s in (1/2 + 1e-6, 1 - 1e-9)");
  if (!(B > 1.0) || !std::isfinite(B)) throw validation_error("cover profiles need finite B > 1");
  if (d < 1) throw validation_error("cover profiles need d >= 1");
}

/// Profile with the given A_1..A_{n-1}; A_n absorbs the remaining budget.
inline CoverProfile make_profile(std::size_t n, double s, double B, std::uint64_t d,
                                 const std::vector<double>& logA_free) {
  if (n < 1) throw validation_error("cover profiles need n >= 1");
  if (logA_free.size() != n - 1) throw validation_error("expected n - 1 free log A values");
  if (!(B > 1.0) || !std::isfinite(B)) throw validation_error("cover profiles need finite B > 1");
  CoverProfile p{n, s, B, d, logA_free, {}};
  double acc = 0;
  for (double a : logA_free) {
    acc += a;
    p.logAlpha.push_back(acc);
  }
  p.logA.push_back(p.budget() - acc);
  p.logAlpha.push_back(p.budget());
  return p;
}

/// Equalized profile: log A_k = c_k log A_1 with c_k = (1 - r^k)/(2 - 1/s),
/// r = (1 - s)/s, and log A_1 fixed by sum_k log A_k = d n log B.
inline CoverProfile equalized_cover(std::size_t n, double s, double B, std::uint64_t d) {
  require_cover_domain(s, B, d);
  if (n < 1) throw validation_error("cover profiles need n >= 1");
  const double r = (1.0 - s) / s;
  const double denom = 2.0 - 1.0 / s;
  std::vector<double> c(n);
  double rk = 1.0, total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    rk *= r;
    c[k] = (1.0 - rk) / denom;
    total += c[k];
  }
  CoverProfile p{n, s, B, d, {}, {}};
  const double logA1 = p.budget() / total;
  double acc = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = k + 1 == n ? p.budget() - acc : c[k] * logA1;
    p.logA.push_back(a);
    acc += a;
    p.logAlpha.push_back(k + 1 == n ? p.budget() : acc);
  }
  return p;
}

/// The n bracketed log terms ((1-s) log a_{k-1} - s log a_k)/k, log a_0 = 0,
/// where the last term uses log a_n = d n log B.
inline std::vector<double> cover_log_terms(const CoverProfile& p) {
  if (p.logAlpha.size() != p.n || p.n == 0) throw validation_error("malformed cover profile");
  std::vector<double> terms(p.n);
  double prev = 0;
  for (std::size_t k = 1; k <= p.n; ++k) {
    const double cur = k == p.n ? p.budget() : p.logAlpha[k - 1];
    terms[k - 1] = ((1.0 - p.s) * prev - p.s * cur) / static_cast<double>(k);
    prev = cur;
  }
  return terms;
}

inline double cover_log_value(const CoverProfile& p) {
  const auto t = cover_log_terms(p);
  return *std::min_element(t.begin(), t.end());
}

inline double cover_value(const CoverProfile& p) { return std::exp(cover_log_value(p)); }

}  // namespace cfdim::cover

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace cfdim::pressure {

enum class ExtrapolationModel {
  /// n: s = (s_inf + a/n)/(1 + c/n) through the last three depths.
  /// M: s = s_inf + poly_3((M + 1/2)^-(2 s_inf - 1)) on the last four alphabet
  ///    sizes, with s_inf solved self-consistently on [s(M_max), 1].
  power_tail,
  /// n: s = s_inf + c/n on the last two depths.
  /// M: s = s_inf + c_1/M + c_2/M^2 on the last three sizes.
  richardson_inverse,
  /// Aitken delta-squared (s = s_inf + c rho^k) in both directions.
  geometric,
};

inline std::string to_string(ExtrapolationModel m) {
  switch (m) {
    case ExtrapolationModel::power_tail:
      return "power-tail";
    case ExtrapolationModel::richardson_inverse:
      return "richardson";
    case ExtrapolationModel::geometric:
      return "geometric";
  }
  return {};
}

struct Extrapolation {
  double limit = 0;
  double uncertainty = 0;   // spread between two overlapping windows; heuristic
  bool degenerate = false;  // model could not be fitted; fell back to the last sample
};

namespace detail {

// Interpolating polynomial through (h_i, y_i), evaluated at h = 0.
inline double neville_at_zero(std::span<const double> h, std::span<const double> y) {
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = 0; i + level < n; ++i)
      p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
  return p[0];
}

// (a + b h)/(1 + c h) through three points, evaluated at h = 0. Rejected when
// singular or when the pole lies between 0 and the sampled h.
inline bool pade11(std::span<const double> h, std::span<const double> y, double& out) {
  if (y.size() < 3) return false;
  const auto hs = h.subspan(h.size() - 3);
  const auto ys = y.subspan(y.size() - 3);
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = 1.0;
    m[i][1] = hs[i];
    m[i][2] = -hs[i] * ys[i];
    m[i][3] = ys[i];
  }
  for (int c = 0; c < 3; ++c) {
    int p = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[p][c])) p = r;
    std::swap(m[c], m[p]);
    if (m[c][c] == 0.0) return false;
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  const double a = m[0][3] / m[0][0], cc = m[2][3] / m[2][2];
  const double hmax = std::max({hs[0], hs[1], hs[2]});
  if (!std::isfinite(a) || !std::isfinite(cc) || (cc < 0.0 && -1.0 / cc <= hmax)) return false;
  out = a;
  return true;
}

inline bool aitken(std::span<const double> y, double& out) {
  if (y.size() < 3) return false;
  const double a = y[y.size() - 3], b = y[y.size() - 2], c = y.back();
  const double d1 = b - a, d2 = c - b;
  if (d2 == 0.0) {
    out = c;
    return true;
  }
  if (d1 == 0.0) return false;
  const double ratio = d2 / d1;
  if (!(ratio > 0.0 && ratio < 1.0)) return false;
  out = c - d2 * d2 / (d2 - d1);
  return true;
}

inline bool inverse_poly(std::span<const double> x, std::span<const double> y, std::size_t points, double& out) {
  const std::size_t k = std::min(points, y.size());
  if (k < 2) return false;
  std::vector<double> h;
  for (std::size_t i = y.size() - k; i < y.size(); ++i) h.push_back(1.0 / x[i]);
  out = neville_at_zero(h, y.subspan(y.size() - k));
  return std::isfinite(out);
}

// Largest L in [y_last, 1] with L = P_L(0), where P_L interpolates y against
// (x + 1/2)^-(2L - 1) on the last `points` samples.
inline bool power_tail(std::span<const double> x, std::span<const double> y, std::size_t points, double& out) {
  const std::size_t k = std::min(points, y.size());
  if (k < 2) return false;
  const auto xs = x.subspan(x.size() - k);
  const auto ys = y.subspan(y.size() - k);
  auto g = [&](double L) {
    std::vector<double> h;
    for (double m : xs) h.push_back(std::pow(m + 0.5, -(2.0 * L - 1.0)));
    return neville_at_zero(h, ys) - L;
  };
  const double lo = std::max(ys.back(), 0.5) + 1e-9, hi = 1.0;
  if (!(lo < hi)) return false;
  constexpr int kScan = 400;
  double right = hi, g_right = g(hi);
  for (int i = kScan - 1; i >= 0; --i) {
    const double left = lo + (hi - lo) * i / kScan;
    const double g_left = g(left);
    if (std::isfinite(g_left) && std::isfinite(g_right) && (g_left > 0) != (g_right > 0)) {
      double a = left, b = right, ga = g_left;
      for (int it = 0; it < 100 && b - a > 1e-14; ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = g(mid);
        if ((gm > 0) == (ga > 0)) {
          a = mid;
          ga = gm;
        } else {
          b = mid;
        }
      }
      out = 0.5 * (a + b);
      return true;
    }
    right = left;
    g_right = g_left;
  }
  return false;
}

}  // namespace detail

/// Depth direction. For the Pade model the uncertainty is its distance to
/// the two-point line; otherwise it compares with the fit one depth earlier.
inline Extrapolation extrapolate_depth(std::span<const double> n, std::span<const double> y,
                                       ExtrapolationModel model) {
  Extrapolation e;
  if (y.empty()) return e;
  e.limit = y.back();
  auto line = [&](std::size_t count, double& out) {
    return detail::inverse_poly(n.first(count), y.first(count), 2, out);
  };
  auto fit = [&](std::size_t count, double& out) {
    if (model == ExtrapolationModel::geometric) return detail::aitken(y.first(count), out);
    return line(count, out);
  };
  double cur = 0, alt = 0;
  if (model == ExtrapolationModel::power_tail && y.size() >= 3) {
    std::vector<double> h;
    for (double v : n) h.push_back(1.0 / v);
    if (detail::pade11(h, y, cur) && line(y.size(), alt)) {
      e.limit = cur;
      e.uncertainty = std::fabs(cur - alt);
      return e;
    }
  }
  if (!fit(y.size(), cur)) {
    e.degenerate = true;
    e.uncertainty = y.size() >= 2 ? std::fabs(y.back() - y[y.size() - 2]) : 0.0;
    return e;
  }
  e.limit = cur;
  e.uncertainty = std::fabs(cur - (y.size() >= 3 && fit(y.size() - 1, alt) ? alt : y.back()));
  return e;
}

/// Alphabet direction. The uncertainty compares with the same fit on the
/// window shifted one size down.
inline Extrapolation extrapolate_alphabet(std::span<const double> M, std::span<const double> y,
                                          ExtrapolationModel model) {
  Extrapolation e;
  if (y.empty()) return e;
  e.limit = y.back();
  auto fit = [&](std::size_t count, double& out) {
    switch (model) {
      case ExtrapolationModel::power_tail:
        return detail::power_tail(M.first(count), y.first(count), 4, out);
      case ExtrapolationModel::richardson_inverse:
        return detail::inverse_poly(M.first(count), y.first(count), 3, out);
      case ExtrapolationModel::geometric:
        return detail::aitken(y.first(count), out);
    }
    return false;
  };
  double cur = 0, prev = 0;
  if (!fit(y.size(), cur)) {
    e.degenerate = true;
    e.uncertainty = y.size() >= 2 ? std::fabs(y.back() - y[y.size() - 2]) : 0.0;
    return e;
  }
  e.limit = cur;
  e.uncertainty = std::fabs(cur - (y.size() >= 5 && fit(y.size() - 1, prev) ? prev : y.back()));
  return e;
}

}  // namespace cfdim::pressure

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cfdim/cover/profile.hpp"
#include "cfdim/support/parallel.hpp"

namespace cfdim::cover {

struct GridOracleResult {
  double value = 0;                 // max over the grid of the min term
  std::vector<double> argmax;       // log alpha_1 .. log alpha_{n-1}
  double spacing = 0;
  double lipschitz = 0;             // largest neighbour slope seen on the grid
  double slack = 0;                 // lipschitz * spacing * (n - 1)
  std::uint64_t points = 0;
};

/// Brute-force sup-min over a uniform grid of log alpha_1..log alpha_{n-1} in
/// [0, d n log B]; log alpha_n is pinned to d n log B, so the grid has n - 1
/// axes. Parallel over the outermost axis with a first-index max reduction.
inline GridOracleResult supremum_grid_oracle(std::size_t n, double s, double B, std::uint64_t d,
                                             std::size_t grid_points, unsigned workers = 1,
                                             std::uint64_t budget = 100'000'000) {
  if (n < 1) throw validation_error("grid oracle needs n >= 1");
  if (!(s > 0.0 && s < 1.0)) throw domain_error("grid oracle needs s in (0, 1)");
  if (!(B > 1.0) || !std::isfinite(B)) throw validation_error("grid oracle needs finite B > 1");
  if (grid_points < 2) throw validation_error("grid oracle needs at least 2 points per axis");
  if (n > 4) throw budget_exceeded("grid oracle is limited to n <= 4");
  const std::size_t axes = n - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < axes; ++i) {
    total *= grid_points;
    if (total > budget) throw budget_exceeded("grid oracle exceeds point budget");
  }

  const double top = static_cast<double>(d) * static_cast<double>(n) * std::log(B);
  const double h = top / static_cast<double>(grid_points - 1);
  auto value_at = [&](const std::vector<std::size_t>& idx) {
    double best = std::numeric_limits<double>::infinity();
    double prev = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double cur = k == n ? top : h * static_cast<double>(idx[k - 1]);
      best = std::min(best, ((1.0 - s) * prev - s * cur) / static_cast<double>(k));
      prev = cur;
    }
    return std::exp(best);
  };

  GridOracleResult res;
  res.spacing = h;
  res.points = total;
  if (axes == 0) {
    res.value = value_at({});
    return res;
  }

  struct Slab {
    double value = -1;
    std::vector<std::size_t> arg;
    double slope = 0;
  };
  const std::size_t inner = static_cast<std::size_t>(total / grid_points);
  auto slabs = parallel_map(grid_points, workers, [&](std::size_t i0) {
    Slab slab;
    std::vector<std::size_t> idx(axes, 0);
    for (std::size_t flat = 0; flat < inner; ++flat) {
      idx[0] = i0;
      std::size_t rest = flat;
      for (std::size_t a = 1; a < axes; ++a) {
        idx[a] = rest % grid_points;
        rest /= grid_points;
      }
      const double v = value_at(idx);
      if (v > slab.value) {
        slab.value = v;
        slab.arg = idx;
      }
      for (std::size_t a = 0; a < axes; ++a) {
        if (idx[a] + 1 >= grid_points) continue;
        auto nb = idx;
        ++nb[a];
        slab.slope = std::max(slab.slope, std::fabs(value_at(nb) - v) / h);
      }
    }
    return slab;
  });
  res.value = -1;
  for (const auto& slab : slabs) {
    if (slab.value > res.value) {
      res.value = slab.value;
      res.argmax.clear();
      for (auto i : slab.arg) res.argmax.push_back(h * static_cast<double>(i));
    }
    res.lipschitz = std::max(res.lipschitz, slab.slope);
  }
  res.slack = res.lipschitz * h * static_cast<double>(axes);
  return res;
}

}  // namespace cfdim::cover

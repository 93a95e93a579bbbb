#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cfdim/empirics/report.hpp"
#include "cfdim/support/errors.hpp"

namespace cfdim::empirics {

/// counts[m] = number of ordered k-tuples of positive integers with product m,
/// for m < limit, by recursive enumeration of the tuples themselves.
inline std::vector<std::uint64_t> tuple_counts_enumerated(unsigned k, std::uint64_t limit) {
  std::vector<std::uint64_t> counts(limit, 0);
  auto rec = [&](auto&& self, unsigned left, std::uint64_t prod) -> void {
    if (left == 0) {
      ++counts[prod];
      return;
    }
    for (std::uint64_t a = 1; prod * a < limit; ++a) self(self, left - 1, prod * a);
  };
  if (limit > 1) rec(rec, k, 1);
  return counts;
}

/// Same counts by repeated Dirichlet convolution with the constant-one
/// function, iterating over divisor multiples rather than tuples.
inline std::vector<std::uint64_t> tuple_counts_sieve(unsigned k, std::uint64_t limit) {
  std::vector<std::uint64_t> cur(limit, 0);
  if (limit > 1) cur[1] = 1;
  for (unsigned level = 0; level < k; ++level) {
    std::vector<std::uint64_t> next(limit, 0);
    for (std::uint64_t d = 1; d < limit; ++d) {
      if (!cur[d]) continue;
      for (std::uint64_t m = d; m < limit; m += d) next[m] += cur[d];
    }
    cur = std::move(next);
  }
  return cur;
}

/// Sum over k-tuples with product < phi of (product)^-s.
inline double lemma51_lhs(const std::vector<std::uint64_t>& counts, double s) {
  compensated_sum<long double> sum;
  for (std::uint64_t m = 1; m < counts.size(); ++m)
    if (counts[m]) sum += static_cast<long double>(counts[m]) * std::pow(static_cast<long double>(m), -s);
  return static_cast<double>(sum.value());
}

inline double lemma51_rhs(unsigned k, double s, double phi) {
  return std::pow(phi, 1.0 - s) * std::pow(std::log(phi), static_cast<double>(k) - 1.0);
}

inline constexpr double kDecadeGrowthLimit = 3.0;

/// Ratio LHS / (phi^(1-s) (log phi)^(k-1)) over an increasing phi grid; passes
/// when successive ratios grow by less than a factor 3 and both tuple counts
/// agree exactly.
inline ExperimentReport lemma51_ratio(unsigned k, double s, const std::vector<double>& phi_grid,
                                      std::uint64_t budget = 50'000'000) {
  if (k < 1 || k > 3) throw validation_error("lemma51_ratio supports 1 <= k <= 3");
  if (!(s > 0.0 && s < 1.0)) throw validation_error("lemma51_ratio needs s in (0, 1)");
  if (phi_grid.empty()) throw validation_error("phi grid is empty");
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    if (!(phi_grid[i] > 1.0) || !std::isfinite(phi_grid[i])) throw validation_error("phi values must be finite and > 1");
    if (i && !(phi_grid[i] > phi_grid[i - 1])) throw validation_error("phi grid must be increasing");
  }
  const std::uint64_t limit = static_cast<std::uint64_t>(std::ceil(phi_grid.back()));
  const auto sieve = tuple_counts_sieve(k, limit);
  std::uint64_t tuples = 0;
  for (auto c : sieve) tuples += c;
  if (tuples > budget) throw budget_exceeded("lemma51 enumeration needs " + std::to_string(tuples) + " tuples");
  const auto enumerated = tuple_counts_enumerated(k, limit);

  ExperimentReport r;
  r.name = "lemma51-ratio";
  r.statistic = "LHS / (phi^(1-s) (log phi)^(k-1))";
  r.config = json{{"k", k}, {"s", s}, {"phi", phi_grid}};
  r.columns = {"phi", "tuples", "lhs", "rhs", "ratio", "growth"};
  const bool counts_match = enumerated == sieve;
  bool growth_ok = true;
  double prev = 0;
  for (double phi : phi_grid) {
    const auto m = static_cast<std::uint64_t>(std::ceil(phi));  // products m < phi
    std::vector<std::uint64_t> c(enumerated.begin(), enumerated.begin() + static_cast<std::ptrdiff_t>(m));
    std::uint64_t count = 0;
    for (auto v : c) count += v;
    const double lhs = lemma51_lhs(c, s), rhs = lemma51_rhs(k, s, phi);
    const double ratio = lhs / rhs;
    const double growth = prev > 0 ? ratio / prev : std::nan("");
    if (prev > 0 && !(growth < kDecadeGrowthLimit)) growth_ok = false;
    r.rows.push_back({phi, static_cast<double>(count), lhs, rhs, ratio, growth});
    r.values.push_back(ratio);
    prev = ratio;
  }
  r.summary = summarize(r.values);
  r.tolerance = kDecadeGrowthLimit;
  r.metrics["counts_match"] = counts_match ? 1.0 : 0.0;
  r.metrics["max_growth"] = 0;
  for (const auto& row : r.rows)
    if (!std::isnan(row[5])) r.metrics["max_growth"] = std::max(r.metrics["max_growth"], row[5]);
  r.passed = counts_match && growth_ok;
  if (!counts_match) r.notes.push_back("tuple enumeration and divisor sieve disagree");
  return r;
}

}  // namespace cfdim::empirics

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfdim/dimension/growth.hpp"
#include "cfdim/empirics/report.hpp"
#include "cfdim/empirics/sampler.hpp"

namespace cfdim::empirics {

inline constexpr double kKhintchine = 2.685452001065306;
inline constexpr double kKhintchineTolerance = 0.05;

inline json config_json(const SampleConfig& c) {
  return json{{"seed", c.seed}, {"samples", c.samples}, {"digits_per_sample", c.digits_per_sample},
              {"precision_bits", c.bits()}};
}

/// (a_1 ... a_n)^(1/n) of a digit sequence, via a log sum.
inline double geometric_mean(std::span<const Digit> digits, std::size_t n) {
  if (n < 1 || n > digits.size()) throw validation_error("geometric mean needs 1 <= n <= digits available");
  compensated_sum<long double> s;
  for (std::size_t i = 0; i < n; ++i) s += std::log(static_cast<long double>(digits[i]));
  return static_cast<double>(std::exp(s.value() / static_cast<long double>(n)));
}

/// (prod_{i=1}^n a_{i f(n)})^(1/n); needs n f(n) digits.
inline double mixed_mean(std::span<const Digit> digits, cf::LinearIndex index, std::size_t n) {
  if (n < 1) throw validation_error("mixed mean needs n >= 1");
  const std::uint64_t f = index(n);
  if (n * f > digits.size()) throw validation_error("mixed mean needs n f(n) digits");
  compensated_sum<long double> s;
  for (std::size_t i = 1; i <= n; ++i) s += std::log(static_cast<long double>(digits[i * f - 1]));
  return static_cast<double>(std::exp(s.value() / static_cast<long double>(n)));
}

namespace detail {

template <typename Stat>
ExperimentReport run_samples(const SampleConfig& cfg, std::size_t digits, unsigned workers, Stat&& stat) {
  ExperimentReport r;
  r.config = config_json(cfg);
  const auto batch = draw_batch(cfg, digits, workers);
  for (const auto& s : batch) {
    if (!s) {
      ++r.discarded;
      continue;
    }
    r.values.push_back(stat(*s));
  }
  r.summary = summarize(r.values);
  if (r.discarded) r.notes.push_back(std::to_string(r.discarded) + " samples discarded: enclosure did not certify enough digits");
  return r;
}

}  // namespace detail

/// Mean over samples of (a_1 ... a_n)^(1/n) against Khintchine's constant.
inline ExperimentReport geometric_mean_experiment(const SampleConfig& cfg, std::size_t n, unsigned workers = 1) {
  if (n < 1) throw validation_error("n must be >= 1");
  auto r = detail::run_samples(cfg, n, workers, [&](const std::vector<Digit>& d) { return geometric_mean(d, n); });
  r.name = "geometric-mean";
  r.statistic = "(a_1...a_n)^(1/n)";
  r.config["n"] = n;
  r.target = kKhintchine;
  r.tolerance = kKhintchineTolerance;
  r.passed = !r.values.empty() && std::fabs(r.summary.mean - kKhintchine) <= kKhintchineTolerance;
  return r;
}

/// Distribution of (prod_{i<=n} a_{i f(n)})^(1/n). Exploratory: no target.
inline ExperimentReport mixed_geometric_mean(const SampleConfig& cfg, cf::LinearIndex index, std::size_t n,
                                             unsigned workers = 1) {
  if (n < 1) throw validation_error("n must be >= 1");
  const std::size_t need = n * index(n);
  auto r = detail::run_samples(cfg, need, workers,
                               [&](const std::vector<Digit>& d) { return mixed_mean(d, index, n); });
  r.name = "mixed-geometric-mean";
  r.statistic = "(prod_{i=1}^n a_{i f(n)})^(1/n)";
  r.config["n"] = n;
  r.config["d"] = index.d;
  r.config["t"] = index.t;
  r.notes.push_back("exploratory: whether this mean converges is an open question; no convergence is claimed");
  return r;
}

enum class EventKind {
  single_digit,        // a_n >= psi(n)
  linear_gap_product,  // prod_{i=1}^n a_{i f(n)} >= psi(n)^n
};

inline std::string to_string(EventKind k) {
  return k == EventKind::single_digit ? "single-digit" : "linear-gap-product";
}

inline std::size_t event_digits(EventKind kind, cf::LinearIndex index, std::size_t N) {
  return kind == EventKind::single_digit ? N : N * index(N);
}

/// Whether the event holds at n for the digit sequence. Integer comparison
/// when psi(n) is an exact integer, log comparison otherwise.
inline bool event_holds(std::span<const Digit> digits, const dimension::GrowthSpec& psi, EventKind kind,
                        std::uint64_t n) {
  const auto exact = psi.exact_psi(n);
  if (kind == EventKind::single_digit) {
    const Digit a = digits[n - 1];
    if (exact) return BigInt(a) >= *exact;
    return std::log(static_cast<long double>(a)) >= static_cast<long double>(psi.log_psi(n));
  }
  const std::uint64_t f = psi.index(n);
  if (exact) {
    BigInt prod = 1;
    for (std::uint64_t i = 1; i <= n; ++i) prod *= digits[i * f - 1];
    return prod >= boost::multiprecision::pow(*exact, static_cast<unsigned>(n));
  }
  compensated_sum<long double> s;
  for (std::uint64_t i = 1; i <= n; ++i) s += std::log(static_cast<long double>(digits[i * f - 1]));
  return s.value() >= static_cast<long double>(n) * static_cast<long double>(psi.log_psi(n));
}

inline constexpr std::size_t kOccurrenceLevels[] = {1, 2, 4, 8};

/// Fraction of samples whose event occurs at least k times for n in
/// [n_min, N_window], k in {1, 2, 4, 8}. Per-sample values are the counts.
inline ExperimentReport limsup_event_frequency(const SampleConfig& cfg, const dimension::GrowthSpec& psi,
                                               std::size_t N_window, EventKind kind = EventKind::single_digit,
                                               std::size_t n_min = 2, unsigned workers = 1) {
  if (N_window < 1) throw validation_error("window must be >= 1");
  if (n_min < 1 || n_min > N_window) throw validation_error("need 1 <= n_min <= window");
  if (psi.kind == dimension::GrowthSpec::Kind::table && psi.table_size() < N_window)
    throw validation_error("psi table is shorter than the window");
  auto r = detail::run_samples(cfg, event_digits(kind, psi.index, N_window), workers, [&](const std::vector<Digit>& d) {
    double count = 0;
    for (std::size_t n = n_min; n <= N_window; ++n)
      if (event_holds(d, psi, kind, n)) ++count;
    return count;
  });
  r.name = "limsup-event-frequency";
  r.statistic = "occurrences of the event for n in [n_min, N]";
  r.config["psi"] = psi.source;
  r.config["d"] = psi.index.d;
  r.config["t"] = psi.index.t;
  r.config["event"] = to_string(kind);
  r.config["window"] = N_window;
  r.config["n_min"] = n_min;
  r.columns = {"k", "fraction_at_least_k"};
  for (std::size_t k : kOccurrenceLevels) {
    double hits = 0;
    for (double v : r.values)
      if (v >= static_cast<double>(k)) ++hits;
    const double frac = r.values.empty() ? 0.0 : hits / static_cast<double>(r.values.size());
    r.rows.push_back({static_cast<double>(k), frac});
    r.metrics["fraction_at_least_" + std::to_string(k)] = frac;
  }
  r.notes.push_back("'infinitely many n' truncated to the window; k-occurrence fractions make the truncation explicit");
  return r;
}

}  // namespace cfdim::empirics

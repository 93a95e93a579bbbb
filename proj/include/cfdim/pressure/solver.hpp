#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cfdim/cf/word.hpp"
#include "cfdim/cover/iterations.hpp"
#include "cfdim/pressure/cylinder_sum.hpp"
#include "cfdim/pressure/extrapolation.hpp"

namespace cfdim::pressure {

using cf::LinearIndex;

/// Which partition-sum equation is being solved.
///  - linear_gap_product: sum over words of length f(n) = dn + t,
///    penalty (2s - 1) d n log B  (the set E_f(psi) / E_B).
///  - block_product: words of length n, penalty f_m(s) n log B  (blocks of m
///    consecutive partial quotients).
///  - single_digit: words of length n, penalty s n log B  (single partial
///    quotients).
struct Potential {
  enum class Kind { linear_gap_product, block_product, single_digit };

  Kind kind = Kind::linear_gap_product;
  LinearIndex index{};
  std::size_t block = 1;

  static Potential linear_gap(LinearIndex idx) { return {Kind::linear_gap_product, idx, 1}; }
  static Potential block_of(std::size_t m) {
    if (m < 1) throw validation_error("block length m must be >= 1");
    return {Kind::block_product, {}, m};
  }
  static Potential single() { return {Kind::single_digit, {}, 1}; }

  std::size_t word_length(std::size_t n) const {
    return kind == Kind::linear_gap_product ? static_cast<std::size_t>(index(n)) : n;
  }

  long double penalty(double s, std::size_t n, double log_b) const {
    const long double nn = static_cast<long double>(n);
    switch (kind) {
      case Kind::linear_gap_product:
        return (2.0L * s - 1.0L) * static_cast<long double>(index.d) * nn * log_b;
      case Kind::block_product:
        return static_cast<long double>(cover::f_m(s, block)) * nn * log_b;
      case Kind::single_digit:
        return static_cast<long double>(s) * nn * log_b;
    }
    return 0;
  }

  std::string str() const {
    switch (kind) {
      case Kind::linear_gap_product:
        return "linear-gap(d=" + std::to_string(index.d) + ",t=" + std::to_string(index.t) + ")";
      case Kind::block_product:
        return "block(m=" + std::to_string(block) + ")";
      case Kind::single_digit:
        return "single-digit";
    }
    return {};
  }

  friend bool operator==(const Potential&, const Potential&) = default;
};

struct SolverOptions {
  double tol = 1e-12;               // bisection width
  double bracket_lo = 0.0;
  double bracket_hi = 1.5;
  std::uint64_t enum_threshold = 100'000;  // use enumeration up to this many words
  EnumOptions enumeration{};
  OperatorOptions operator_opts{};
  ExtrapolationModel model = ExtrapolationModel::power_tail;
};

/// Z_m(s), choosing enumeration for small word counts and the operator
/// otherwise. The choice depends only on (alphabet, m), never on timing.
inline SumResult cylinder_sum(const Alphabet& alphabet, std::size_t m, double s, const SolverOptions& opt) {
  if (word_count(alphabet, m) <= static_cast<long double>(opt.enum_threshold))
    return cylinder_sum_enum(alphabet, m, s, opt.enumeration);
  return cylinder_sum_operator(alphabet, m, s, opt.operator_opts);
}

/// Parameters of the defining sum for s_B(A, n).
struct PressureQuery {
  Alphabet alphabet;
  std::size_t n;
  double B;
  LinearIndex index;
  double s;
};

inline void require_growth_base(double B) {
  if (!(B > 1.0) || !std::isfinite(B)) throw validation_error("growth base B must be finite and > 1");
}

/// Z_{word_length(n)}(s) * B^(-penalty) - 1; strictly decreasing in s for B > 1.
inline long double defect(const Alphabet& alphabet, std::size_t n, double B, const Potential& pot, double s,
                          const SolverOptions& opt = {}) {
  if (n < 1) throw validation_error("depth n must be >= 1");
  const auto z = cylinder_sum(alphabet, pot.word_length(n), s, opt);
  return std::expm1(z.log_value - pot.penalty(s, n, std::log(B)));
}

inline long double defect(const PressureQuery& q, const SolverOptions& opt = {}) {
  require_growth_base(q.B);
  return defect(q.alphabet, q.n, q.B, Potential::linear_gap(q.index), q.s, opt);
}

/// Root of the defect in s by bisection on [bracket_lo, bracket_hi].
inline double pressure_root(const Alphabet& alphabet, std::size_t n, double B, const Potential& pot,
                            const SolverOptions& opt = {}) {
  require_growth_base(B);
  if (!(opt.tol > 0)) throw validation_error("tolerance must be > 0");
  double lo = opt.bracket_lo, hi = opt.bracket_hi;
  const long double f_lo = defect(alphabet, n, B, pot, lo, opt);
  const long double f_hi = defect(alphabet, n, B, pot, hi, opt);
  if (f_lo == 0) return lo;
  if (!(f_lo > 0 && f_hi < 0))
    throw bracket_failure("defect does not change sign on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] for M=" + alphabet.str() + ", n=" + std::to_string(n) +
                          ", B=" + std::to_string(B) + ", " + pot.str());
  while (hi - lo > opt.tol) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const long double f = defect(alphabet, n, B, pot, mid, opt);
    if (f == 0) return mid;
    (f > 0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2;
}

/// s_B({1..M}, n).
inline double s_B_finite(std::uint64_t M, std::size_t n, double B, LinearIndex index, double tol = 1e-12,
                         SolverOptions opt = {}) {
  opt.tol = tol;
  return pressure_root(Alphabet::full(M), n, B, Potential::linear_gap(index), opt);
}

/// Tableau of s(M, n) and its two-stage extrapolation (n -> inf per M, then M -> inf).
struct SbEstimate {
  double B = 0;
  Potential potential{};
  std::size_t M_max = 0;
  std::size_t n_max = 0;
  ExtrapolationModel model = ExtrapolationModel::power_tail;
  std::vector<std::vector<double>> tableau;  // [M-1][n-1]
  std::vector<Extrapolation> per_M;          // n -> inf for each M
  Extrapolation limit;                       // M -> inf of per_M
  double value = 0;
  double uncertainty = 0;
  bool monotone_in_M = true;
  std::vector<std::string> diagnostics;

  bool ok() const { return monotone_in_M; }
};

inline SbEstimate estimate_root(double B, const Potential& pot, std::size_t M_max, std::size_t n_max,
                                const SolverOptions& opt = {}) {
  require_growth_base(B);
  if (M_max < 2) throw validation_error("M_max must be >= 2");
  if (n_max < 2) throw validation_error("n_max must be >= 2");
  SbEstimate est;
  est.B = B;
  est.potential = pot;
  est.M_max = M_max;
  est.n_max = n_max;
  est.model = opt.model;
  est.tableau.assign(M_max, std::vector<double>(n_max, 0.0));
  for (std::size_t M = 1; M <= M_max; ++M) {
    const auto alphabet = Alphabet::full(M);
    for (std::size_t n = 1; n <= n_max; ++n) est.tableau[M - 1][n - 1] = pressure_root(alphabet, n, B, pot, opt);
  }
  // Alphabet inclusion makes the defect, hence the root, nondecreasing in M.
  for (std::size_t M = 1; M < M_max; ++M) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (est.tableau[M][n - 1] + 4 * opt.tol < est.tableau[M - 1][n - 1]) {
        est.monotone_in_M = false;
        est.diagnostics.push_back("tableau decreases from M=" + std::to_string(M) + " to M=" +
                                  std::to_string(M + 1) + " at n=" + std::to_string(n));
      }
    }
  }
  std::vector<double> ns(n_max), Ms, limits;
  for (std::size_t n = 1; n <= n_max; ++n) ns[n - 1] = static_cast<double>(n);
  for (std::size_t M = 1; M <= M_max; ++M) {
    auto e = extrapolate_depth(ns, est.tableau[M - 1], opt.model);
    if (e.degenerate) est.diagnostics.push_back("depth extrapolation degenerate at M=" + std::to_string(M));
    est.per_M.push_back(e);
    Ms.push_back(static_cast<double>(M));
    limits.push_back(e.limit);
  }
  est.limit = extrapolate_alphabet(Ms, limits, opt.model);
  if (est.limit.degenerate) est.diagnostics.push_back("alphabet extrapolation degenerate");
  est.value = est.limit.limit;
  est.uncertainty = est.limit.uncertainty + est.per_M.back().uncertainty;
  return est;
}

inline SbEstimate s_B_estimate(double B, LinearIndex index, std::size_t M_max, std::size_t n_max,
                               double tol = 1e-12, SolverOptions opt = {}) {
  opt.tol = tol;
  return estimate_root(B, Potential::linear_gap(index), M_max, n_max, opt);
}

/// Memoising front end used by the dimension module, so repeated queries with
/// identical parameters share one tableau.
class PressureSolver {
 public:
  struct Config {
    std::size_t M_max = 6;
    std::size_t n_max = 5;
    SolverOptions options{};
  };

  PressureSolver() = default;
  explicit PressureSolver(Config cfg) : cfg_(std::move(cfg)) {}

  const Config& config() const noexcept { return cfg_; }

  SbEstimate estimate(double B, const Potential& pot) const {
    const Key key{B, static_cast<int>(pot.kind), pot.index.d, pot.index.t, pot.block};
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto est = estimate_root(B, pot, cfg_.M_max, cfg_.n_max, cfg_.options);
    std::lock_guard lock(mu_);
    return cache_.emplace(key, std::move(est)).first->second;
  }

 private:
  using Key = std::tuple<double, int, std::uint64_t, std::uint64_t, std::size_t>;

  Config cfg_{};
  mutable std::mutex mu_;
  mutable std::map<Key, SbEstimate> cache_;
};

}  // namespace cfdim::pressure

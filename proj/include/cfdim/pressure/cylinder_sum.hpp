#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cfdim/cf/convergents.hpp"
#include "cfdim/pressure/alphabet.hpp"
#include "cfdim/support/errors.hpp"
#include "cfdim/support/parallel.hpp"
#include "cfdim/support/summation.hpp"

namespace cfdim::pressure {

enum class SumMethod { enumeration, operator_iteration };

inline std::string to_string(SumMethod m) {
  return m == SumMethod::enumeration ? "enumeration" : "operator-iteration";
}

/// Z_m(s) = sum over words w in A^m of q_m(w)^(-2s).
struct SumResult {
  long double value = 0;
  long double log_value = 0;
  SumMethod method = SumMethod::enumeration;
  double certified_rel_error = 0;
  std::uint64_t words = 0;  // enumeration only
  std::size_t degree = 0;   // operator only
};

struct EnumOptions {
  std::uint64_t budget = 10'000'000;  // maximum number of words
  unsigned workers = 1;
};

inline long double word_count(const Alphabet& a, std::size_t m) {
  return std::pow(static_cast<long double>(a.size()), static_cast<long double>(m));
}

namespace detail {

inline constexpr long double kLongDoubleEps = std::numeric_limits<long double>::epsilon();

template <typename Int>
long double log_int(const Int& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return log_bigint(v);
  } else {
    return log_u128(v);
  }
}

template <typename Int>
struct EnumWalker {
  const std::vector<Digit>& digits;
  std::size_t m;
  long double two_s;
  compensated_sum<long double> sum;
  long double max_exponent = 0;

  void walk(const Int& q_prev, const Int& q_cur, std::size_t depth) {
    if (depth == m) {
      const long double y = two_s * log_int(q_cur);
      max_exponent = std::max(max_exponent, y);
      sum += std::exp(-y);
      return;
    }
    for (Digit a : digits) {
      Int next = static_cast<Int>(a) * q_cur + q_prev;
      walk(q_cur, next, depth + 1);
    }
  }
};

template <typename Int>
SumResult enumerate(const Alphabet& alphabet, std::size_t m, double s, unsigned workers) {
  const auto& digits = alphabet.digits();
  SumResult r;
  r.method = SumMethod::enumeration;
  r.words = static_cast<std::uint64_t>(std::llround(word_count(alphabet, m)));
  if (m == 0) {
    r.value = 1;
    r.log_value = 0;
    return r;
  }
  // One task per leading digit; partials are folded in digit order so the sum
  // is the same for every worker count.
  struct Partial {
    compensated_sum<long double> sum;
    long double max_exponent = 0;
  };
  auto partials = parallel_map(digits.size(), workers, [&](std::size_t i) {
    EnumWalker<Int> w{digits, m, 2.0L * s, {}, 0};
    const Int q_prev{1};
    const Int q_cur = static_cast<Int>(digits[i]);
    w.walk(q_prev, q_cur, 1);
    return Partial{w.sum, w.max_exponent};
  });
  compensated_sum<long double> total;
  long double max_exponent = 0;
  for (const auto& p : partials) {
    total += p.sum;
    max_exponent = std::max(max_exponent, p.max_exponent);
  }
  r.value = total.value();
  r.log_value = std::log(r.value);
  // Per term: conversion + log + scale + exp, each within a few ulps; the
  // positive-term compensated sum adds O(eps).
  r.certified_rel_error =
      static_cast<double>(kLongDoubleEps * (3.0L * max_exponent + 2.0L * s + 8.0L));
  return r;
}

}  // namespace detail

/// Exhaustive sum over A^m with exact continuants.
inline SumResult cylinder_sum_enum(const Alphabet& alphabet, std::size_t m, double s,
                                   const EnumOptions& opt = {}) {
  if (word_count(alphabet, m) > static_cast<long double>(opt.budget))
    throw budget_exceeded("enumeration of " + std::to_string(alphabet.size()) + "^" +
                          std::to_string(m) + " words exceeds budget " + std::to_string(opt.budget));
  const double log2_qmax =
      static_cast<double>(m) * std::log2(static_cast<double>(alphabet.max()) + 1.0);
  if (log2_qmax < 126.0) return detail::enumerate<unsigned __int128>(alphabet, m, s, opt.workers);
  return detail::enumerate<BigInt>(alphabet, m, s, opt.workers);
}

struct OperatorOptions {
  std::size_t degree = 16;       // initial collocation degree (>= 8)
  double tol = 1e-13;            // relative agreement between degree D and 2D
  std::size_t max_degree = 1024;
};

namespace detail {

/// Chebyshev-Lobatto collocation of the transfer operator
///   (L g)(x) = sum_a (a + x)^(-2s) g(1 / (a + x))   on [0, 1].
/// L^m 1 (0) = Z_m(s). Iterates are renormalised each step and the scale kept
/// in log space.
class CollocatedOperator {
 public:
  CollocatedOperator(const Alphabet& alphabet, double s, std::size_t degree)
      : n_(degree + 1), nodes_(n_), weights_(n_), matrix_(n_ * n_, 0.0L) {
    constexpr long double pi = std::numbers::pi_v<long double>;
    for (std::size_t j = 0; j < n_; ++j) {
      nodes_[j] = (1.0L - std::cos(pi * static_cast<long double>(j) / static_cast<long double>(degree))) / 2.0L;
      weights_[j] = (j % 2 == 0) ? 1.0L : -1.0L;
    }
    weights_.front() /= 2;
    weights_.back() /= 2;
    std::vector<long double> basis(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      for (Digit a : alphabet.digits()) {
        const long double u = static_cast<long double>(a) + nodes_[j];
        const long double factor = std::exp(-2.0L * s * std::log(u));
        lagrange_basis(1.0L / u, basis);
        long double* row = &matrix_[j * n_];
        for (std::size_t i = 0; i < n_; ++i) row[i] += factor * basis[i];
      }
    }
  }

  /// log of (L^m 1)(0).
  long double log_iterate_at_zero(std::size_t m) const {
    std::vector<long double> g(n_, 1.0L), next(n_);
    long double log_scale = 0;
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n_; ++j) {
        compensated_sum<long double> acc;
        const long double* row = &matrix_[j * n_];
        for (std::size_t i = 0; i < n_; ++i) acc += row[i] * g[i];
        next[j] = acc.value();
      }
      long double norm = 0;
      for (long double v : next) norm = std::max(norm, std::fabs(v));
      if (!(norm > 0) || !std::isfinite(norm)) throw non_convergence("transfer operator iterate degenerated");
      for (std::size_t j = 0; j < n_; ++j) g[j] = next[j] / norm;
      log_scale += std::log(norm);
    }
    // node 0 is x = 0
    if (!(g[0] > 0)) throw non_convergence("transfer operator iterate is not positive at x = 0");
    return log_scale + std::log(g[0]);
  }

 private:
  void lagrange_basis(long double y, std::vector<long double>& out) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (y == nodes_[i]) {
        std::fill(out.begin(), out.end(), 0.0L);
        out[i] = 1.0L;
        return;
      }
    }
    long double denom = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = weights_[i] / (y - nodes_[i]);
      denom += out[i];
    }
    for (auto& v : out) v /= denom;
  }

  std::size_t n_;
  std::vector<long double> nodes_;
  std::vector<long double> weights_;
  std::vector<long double> matrix_;  // row-major, n_ x n_
};

}  // namespace detail

/// Z_m(s) through the collocated transfer operator, doubling the degree until
/// two successive degrees agree to `tol` (relative).
inline SumResult cylinder_sum_operator(const Alphabet& alphabet, std::size_t m, double s,
                                       const OperatorOptions& opt = {}) {
  if (opt.degree < 8) throw validation_error("operator degree must be >= 8");
  SumResult r;
  r.method = SumMethod::operator_iteration;
  if (m == 0) {
    r.value = 1;
    r.degree = opt.degree;
    return r;
  }
  std::size_t degree = opt.degree;
  long double prev = detail::CollocatedOperator(alphabet, s, degree).log_iterate_at_zero(m);
  while (degree * 2 <= opt.max_degree) {
    degree *= 2;
    const long double cur = detail::CollocatedOperator(alphabet, s, degree).log_iterate_at_zero(m);
    const long double rel = std::fabs(std::expm1(cur - prev));
    if (rel <= opt.tol) {
      r.log_value = cur;
      r.value = std::exp(cur);
      r.certified_rel_error = static_cast<double>(rel);
      r.degree = degree;
      return r;
    }
    prev = cur;
  }
  throw non_convergence("operator evaluation did not reach relative tolerance " +
                        std::to_string(opt.tol) + " by degree " + std::to_string(opt.max_degree));
}

}  // namespace cfdim::pressure

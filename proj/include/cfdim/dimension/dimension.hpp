#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cfdim/dimension/exponents.hpp"
#include "cfdim/pressure/solver.hpp"

namespace cfdim::dimension {

enum class DimCase { B_equals_1, B_finite, B_infinite_b_finite, b_infinite };

inline std::string to_string(DimCase c) {
  switch (c) {
    case DimCase::B_equals_1:
      return "B-equals-1";
    case DimCase::B_finite:
      return "B-finite";
    case DimCase::B_infinite_b_finite:
      return "B-infinite-b-finite";
    case DimCase::b_infinite:
      return "b-infinite";
  }
  return {};
}

struct DimensionResult {
  DimCase dim_case = DimCase::B_equals_1;
  double value = 1;
  double uncertainty = 0;
  std::string tag;                          // closed form or potential
  std::optional<pressure::SbEstimate> solver;
  std::vector<std::string> diagnostics;
};

/// Total map from exponents to the four cases.
inline DimCase classify(const Exponents& e) {
  if (!(e.B >= 1.0)) throw validation_error("exponent B must be >= 1");
  if (e.B == 1.0) return DimCase::B_equals_1;
  if (std::isfinite(e.B)) return DimCase::B_finite;
  if (!(e.b >= 1.0)) throw validation_error("exponent b must be >= 1 when B is infinite");
  return std::isfinite(e.b) ? DimCase::B_infinite_b_finite : DimCase::b_infinite;
}

namespace detail {

inline DimensionResult closed_case(DimCase c, double b) {
  DimensionResult r;
  r.dim_case = c;
  switch (c) {
    case DimCase::B_equals_1:
      r.value = 1.0;
      r.tag = "closed:1";
      break;
    case DimCase::B_infinite_b_finite:
      r.value = 1.0 / (1.0 + b);
      r.tag = "closed:1/(1+b)";
      break;
    case DimCase::b_infinite:
      r.value = 0.0;
      r.tag = "closed:0";
      break;
    case DimCase::B_finite:
      break;
  }
  return r;
}

inline DimensionResult solved(double B, const pressure::Potential& pot, const pressure::PressureSolver& solver) {
  DimensionResult r;
  r.dim_case = DimCase::B_finite;
  r.tag = "pressure:" + pot.str();
  auto est = solver.estimate(B, pot);
  r.value = est.value;
  r.uncertainty = est.uncertainty;
  r.diagnostics = est.diagnostics;
  if (r.value < 0.5 || r.value > 1.0) {
    r.diagnostics.push_back("extrapolated value " + std::to_string(r.value) + " clamped to [1/2, 1]");
    r.value = std::clamp(r.value, 0.5, 1.0);
  }
  r.solver = std::move(est);
  return r;
}

}  // namespace detail

/// Dimension of E_f(psi) for the linear index f.
inline DimensionResult dim_Ef(const Exponents& e, LinearIndex index, const pressure::PressureSolver& solver) {
  const auto c = classify(e);
  if (c != DimCase::B_finite) return detail::closed_case(c, e.b);
  return detail::solved(e.B, pressure::Potential::linear_gap(index), solver);
}

/// Dimension for products of m consecutive partial quotients at base B.
inline DimensionResult dim_Em(double B, std::size_t m, const pressure::PressureSolver& solver) {
  if (m < 1) throw validation_error("block length m must be >= 1");
  if (!(B > 1.0) || !std::isfinite(B)) throw validation_error("dim_Em needs finite B > 1");
  return detail::solved(B, pressure::Potential::block_of(m), solver);
}

/// Dimension for single partial quotients a_n >= psi(n).
inline DimensionResult dim_E1(double B, double b, const pressure::PressureSolver& solver) {
  Exponents e;
  e.B = B;
  e.b = b;
  const auto c = classify(e);
  if (c != DimCase::B_finite) return detail::closed_case(c, b);
  return detail::solved(B, pressure::Potential::single(), solver);
}

}  // namespace cfdim::dimension

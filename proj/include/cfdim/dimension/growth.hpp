#pragma once

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cfdim/cf/word.hpp"
#include "cfdim/support/bigint.hpp"
#include "cfdim/support/errors.hpp"

namespace cfdim::dimension {

using cf::LinearIndex;

/// Rate function psi(n) >= 1 with the linear index it is paired with.
struct GrowthSpec {
  enum class Kind { poly, exp, dexp, table };

  Kind kind = Kind::poly;
  double c = 1, k = 0;               // poly: c n^k
  double beta = 1;                   // exp: beta^(dn); dexp: e^(beta^(dn^2))
  std::vector<double> table_log_psi; // table: log psi(1..N)
  std::string source;                // descriptor text
  LinearIndex index{};

  static GrowthSpec poly(double c, double k, LinearIndex idx = {}) {
    if (!(c >= 1.0) || !(k >= 0.0) || !std::isfinite(c) || !std::isfinite(k))
      throw validation_error("poly(c,k) needs c >= 1 and k >= 0 so that psi >= 1");
    GrowthSpec g;
    g.kind = Kind::poly;
    g.c = c;
    g.k = k;
    g.index = idx;
    g.source = "poly(" + fmt(c) + "," + fmt(k) + ")";
    return g;
  }
  static GrowthSpec exponential(double beta, LinearIndex idx = {}) {
    if (!(beta >= 1.0) || !std::isfinite(beta)) throw validation_error("exp(beta) needs finite beta >= 1");
    GrowthSpec g;
    g.kind = Kind::exp;
    g.beta = beta;
    g.index = idx;
    g.source = "exp(" + fmt(beta) + ")";
    return g;
  }
  static GrowthSpec double_exponential(double beta, LinearIndex idx = {}) {
    if (!(beta >= 1.0) || !std::isfinite(beta)) throw validation_error("dexp(beta) needs finite beta >= 1");
    GrowthSpec g;
    g.kind = Kind::dexp;
    g.beta = beta;
    g.index = idx;
    g.source = "dexp(" + fmt(beta) + ")";
    return g;
  }
  static GrowthSpec from_table(std::vector<double> log_psi, LinearIndex idx = {}, std::string source = "table") {
    if (log_psi.empty()) throw validation_error("psi table is empty");
    for (std::size_t i = 0; i < log_psi.size(); ++i)
      if (!(log_psi[i] >= 0.0)) throw validation_error("psi(" + std::to_string(i + 1) + ") < 1 in table");
    GrowthSpec g;
    g.kind = Kind::table;
    g.table_log_psi = std::move(log_psi);
    g.index = idx;
    g.source = std::move(source);
    return g;
  }

  std::size_t table_size() const { return table_log_psi.size(); }

  /// log psi(n); +inf when it overflows a double.
  double log_psi(std::uint64_t n) const {
    if (n < 1) throw validation_error("psi is defined for n >= 1");
    const double nn = static_cast<double>(n), d = static_cast<double>(index.d);
    switch (kind) {
      case Kind::poly:
        return std::log(c) + k * std::log(nn);
      case Kind::exp:
        return d * nn * std::log(beta);
      case Kind::dexp:
        return std::exp(d * nn * nn * std::log(beta));
      case Kind::table:
        if (n > table_log_psi.size()) throw validation_error("psi table does not cover n = " + std::to_string(n));
        return table_log_psi[n - 1];
    }
    return 0;
  }

  /// log log psi(n), or nullopt when psi(n) <= e.
  std::optional<double> log_log_psi(std::uint64_t n) const {
    if (kind == Kind::dexp) {
      const double nn = static_cast<double>(n);
      const double v = static_cast<double>(index.d) * nn * nn * std::log(beta);
      if (!(v > 0.0)) return std::nullopt;
      return v;
    }
    const double lp = log_psi(n);
    if (!(lp > 1.0)) return std::nullopt;
    return std::log(lp);
  }

  /// psi(n) as an exact integer when the descriptor has integral parameters
  /// (poly with integral c, k; exp with integral beta) and it fits `max_bits`.
  std::optional<BigInt> exact_psi(std::uint64_t n, std::size_t max_bits = 1 << 16) const {
    auto integral = [](double v) { return std::floor(v) == v && v < 9.0e15; };
    auto pow_checked = [&](std::uint64_t base, std::uint64_t e) -> std::optional<BigInt> {
      if (base > 1 && static_cast<double>(e) * std::log2(static_cast<double>(base)) > static_cast<double>(max_bits))
        return std::nullopt;
      return BigInt(boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)));
    };
    if (kind == Kind::poly && integral(c) && integral(k)) {
      auto p = pow_checked(n, static_cast<std::uint64_t>(k));
      if (!p) return std::nullopt;
      return BigInt(*p * static_cast<std::uint64_t>(c));
    }
    if (kind == Kind::exp && integral(beta)) return pow_checked(static_cast<std::uint64_t>(beta), index.d * n);
    return std::nullopt;
  }

 private:
  static std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  }
};

/// Reads a CSV of (n, psi) or (n, log_psi) rows. A header row naming the
/// second column log_psi switches to log values; '#' lines are skipped.
/// Rows must cover n = 1..N contiguously.
inline std::vector<double> read_psi_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open psi table '" + path + "'");
  std::vector<double> out;
  bool log_values = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw validation_error(path + ":" + std::to_string(lineno) + ": expected n,value");
    std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    auto trim = [](std::string& s) {
      const auto f = s.find_first_not_of(" \t\r");
      const auto l = s.find_last_not_of(" \t\r");
      s = f == std::string::npos ? "" : s.substr(f, l - f + 1);
    };
    trim(a);
    trim(b);
    if (out.empty() && !a.empty() && !std::isdigit(static_cast<unsigned char>(a[0]))) {
      log_values = b == "log_psi";
      continue;
    }
    std::size_t n = 0;
    double v = 0;
    try {
      n = std::stoul(a);
      v = std::stod(b);
    } catch (const std::exception&) {
      throw validation_error(path + ":" + std::to_string(lineno) + ": unparsable row");
    }
    if (n != out.size() + 1) throw validation_error(path + ":" + std::to_string(lineno) + ": rows must list n = 1, 2, ... in order");
    if (!log_values) {
      if (!(v >= 1.0)) throw validation_error(path + ":" + std::to_string(lineno) + ": psi < 1");
      v = std::log(v);
    }
    out.push_back(v);
  }
  if (out.empty()) throw validation_error("psi table '" + path + "' has no rows");
  return out;
}

/// poly(c,k) | exp(beta) | dexp(beta) | table:<path>
inline GrowthSpec parse_growth(const std::string& text, LinearIndex idx = {}) {
  static const std::regex call(R"(\s*(poly|exp|dexp)\s*\(\s*([^,()\s]+)\s*(?:,\s*([^,()\s]+)\s*)?\)\s*)");
  if (text.rfind("table:", 0) == 0) {
    const auto path = text.substr(6);
    return GrowthSpec::from_table(read_psi_table(path), idx, text);
  }
  std::smatch m;
  if (!std::regex_match(text, m, call)) throw validation_error("unrecognised psi descriptor '" + text + "'");
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw validation_error("bad number '" + s + "' in psi descriptor");
    return v;
  };
  const std::string fn = m[1];
  if (fn == "poly") {
    if (!m[3].matched) throw validation_error("poly needs two arguments: poly(c,k)");
    return GrowthSpec::poly(num(m[2]), num(m[3]), idx);
  }
  if (m[3].matched) throw validation_error(fn + " takes one argument");
  return fn == "exp" ? GrowthSpec::exponential(num(m[2]), idx) : GrowthSpec::double_exponential(num(m[2]), idx);
}

}  // namespace cfdim::dimension

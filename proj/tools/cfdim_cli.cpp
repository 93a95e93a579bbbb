// cfdim: command-line front end for the cfdim library.
//
// Exit codes: 0 ok, 2 validation/usage, 3 solver or budget failure, 4 check failure.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfdim/checks/suites.hpp"
#include "cfdim/cover/grid_oracle.hpp"
#include "cfdim/cover/iterations.hpp"
#include "cfdim/cover/profile.hpp"
#include "cfdim/dimension/dimension.hpp"
#include "cfdim/empirics/experiments.hpp"
#include "cfdim/empirics/geometry.hpp"
#include "cfdim/empirics/lemma51.hpp"

namespace {

using cfdim::empirics::format_number;
using cfdim::empirics::json;
using cfdim::empirics::number_json;

constexpr const char* kSchema = "cfdim-output/1";

enum Exit { kOk = 0, kValidation = 2, kSolver = 3, kCheckFailed = 4 };

struct Global {
  std::string format = "csv";
  std::string output;
  bool no_timestamp = false;
  unsigned workers = cfdim::default_workers();
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Parameters of the invoked subcommand in declaration order. The worker count
// is left out so output does not depend on it.
json run_config(const CLI::App& sub, const Global& g) {
  json params = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    if (opt->get_expected_max() == 0) {
      params[name] = opt->count() > 0;
      continue;
    }
    std::vector<std::string> vals = opt->count() ? opt->results() : std::vector<std::string>{};
    if (vals.empty() && !opt->get_default_str().empty()) {
      std::string dflt = opt->get_default_str();
      if (dflt.size() >= 2 && dflt.front() == '[' && dflt.back() == ']') {
        std::stringstream ss(dflt.substr(1, dflt.size() - 2));
        for (std::string item; std::getline(ss, item, ',');) vals.push_back(item);
      } else {
        vals.push_back(dflt);
      }
    }
    if (vals.size() == 1 && opt->get_expected_max() <= 1)
      params[name] = vals[0];
    else
      params[name] = vals;
  }
  return json{{"subcommand", sub.get_name()}, {"format", g.format}, {"output", g.output}, {"parameters", params}};
}

json envelope(const CLI::App& sub, const Global& g) {
  json j;
  j["schema"] = kSchema;
  j["tool"] = "cfdim";
  if (!g.no_timestamp) j["generated_at"] = utc_timestamp();
  j["run_config"] = run_config(sub, g);
  return j;
}

// '#' metadata lines shared by every CSV output.
std::string csv_header(const CLI::App& sub, const Global& g) {
  std::ostringstream os;
  os << "# schema: " << kSchema << "\n";
  if (!g.no_timestamp) os << "# generated_at: " << utc_timestamp() << "\n";
  os << "# run_config: " << run_config(sub, g).dump() << "\n";
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void emit(const Global& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(g.output, std::ios::binary | std::ios::trunc);
  if (!out) throw cfdim::validation_error("cannot write output file '" + g.output + "'");
  out << text;
}

cfdim::pressure::ExtrapolationModel parse_model(const std::string& m) {
  using cfdim::pressure::ExtrapolationModel;
  if (m == "power-tail") return ExtrapolationModel::power_tail;
  if (m == "richardson") return ExtrapolationModel::richardson_inverse;
  if (m == "geometric") return ExtrapolationModel::geometric;
  throw cfdim::validation_error("unknown extrapolation model '" + m + "'");
}

cfdim::pressure::Potential parse_potential(const std::string& p, cfdim::cf::LinearIndex idx) {
  using cfdim::pressure::Potential;
  if (p == "linear-gap") return Potential::linear_gap(idx);
  if (p == "single") return Potential::single();
  if (p.rfind("block:", 0) == 0) {
    std::size_t m = 0;
    try {
      m = std::stoul(p.substr(6));
    } catch (const std::exception&) {
      throw cfdim::validation_error("block potential needs block:<m>");
    }
    return Potential::block_of(m);
  }
  throw cfdim::validation_error("unknown potential '" + p + "' (linear-gap | single | block:<m>)");
}

// ---------------------------------------------------------------- sb

struct SbArgs {
  std::vector<double> B;
  std::uint64_t d = 1, t = 0;
  std::size_t M_max = 6, n_max = 5;
  double tol = 1e-12;
  std::string model = "power-tail";
  std::string potential = "linear-gap";
};

json sb_json(const cfdim::pressure::SbEstimate& e) {
  json j;
  j["B"] = e.B;
  j["potential"] = e.potential.str();
  j["model"] = cfdim::pressure::to_string(e.model);
  j["M_max"] = e.M_max;
  j["n_max"] = e.n_max;
  json tab = json::array();
  for (const auto& row : e.tableau) tab.push_back(row);
  j["tableau"] = tab;
  json per = json::array();
  for (std::size_t M = 1; M <= e.per_M.size(); ++M)
    per.push_back({{"M", M}, {"limit", e.per_M[M - 1].limit}, {"uncertainty", e.per_M[M - 1].uncertainty}});
  j["per_M"] = per;
  j["value"] = e.value;
  j["uncertainty"] = e.uncertainty;
  j["monotone_in_M"] = e.monotone_in_M;
  j["diagnostics"] = e.diagnostics;
  return j;
}

int cmd_sb(const CLI::App& sub, const Global& g, const SbArgs& a) {
  if (a.B.empty()) throw cfdim::validation_error("at least one --B is required");
  cfdim::pressure::SolverOptions opt;
  opt.tol = a.tol;
  opt.model = parse_model(a.model);
  opt.enumeration.workers = g.workers;
  const cfdim::cf::LinearIndex idx(a.d, a.t);
  const auto pot = parse_potential(a.potential, idx);
  std::vector<cfdim::pressure::SbEstimate> results;
  for (double B : a.B) results.push_back(cfdim::pressure::estimate_root(B, pot, a.M_max, a.n_max, opt));

  bool monotone = true;
  for (const auto& e : results) monotone = monotone && e.monotone_in_M;
  if (g.format == "json") {
    json j = envelope(sub, g);
    json arr = json::array();
    for (const auto& e : results) arr.push_back(sb_json(e));
    j["results"] = arr;
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_header(sub, g);
    os << "row_type,B,d,t,M,n,value,uncertainty,monotone_in_M,diagnostics\n";
    for (const auto& e : results) {
      for (std::size_t M = 1; M <= e.M_max; ++M)
        for (std::size_t n = 1; n <= e.n_max; ++n)
          os << "tableau," << format_number(e.B) << "," << a.d << "," << a.t << "," << M << "," << n << ","
             << format_number(e.tableau[M - 1][n - 1]) << ",,,\n";
      os << "summary," << format_number(e.B) << "," << a.d << "," << a.t << ",inf,inf," << format_number(e.value)
         << "," << format_number(e.uncertainty) << "," << (e.monotone_in_M ? "true" : "false") << ","
         << csv_field(join(e.diagnostics, "; ")) << "\n";
    }
    emit(g, os.str());
  }
  return monotone ? kOk : kSolver;
}

// ---------------------------------------------------------------- dim

struct DimArgs {
  std::string psi;
  std::uint64_t d = 1, t = 0;
  std::size_t horizon = 64;
  std::size_t M_max = 6, n_max = 5;
  double tol = 1e-12;
  std::string model = "power-tail";
  std::string set = "Ef";
  std::size_t m = 2;
};

int cmd_dim(const CLI::App& sub, const Global& g, const DimArgs& a) {
  using namespace cfdim::dimension;
  const cfdim::cf::LinearIndex idx(a.d, a.t);
  const auto spec = parse_growth(a.psi, idx);
  const auto ex = exponents_from_psi(spec, a.horizon);
  cfdim::pressure::PressureSolver::Config cfg;
  cfg.M_max = a.M_max;
  cfg.n_max = a.n_max;
  cfg.options.tol = a.tol;
  cfg.options.model = parse_model(a.model);
  cfg.options.enumeration.workers = g.workers;
  const cfdim::pressure::PressureSolver solver(cfg);

  DimensionResult r;
  if (a.set == "Ef") {
    r = dim_Ef(ex, idx, solver);
  } else if (a.set == "E1") {
    r = dim_E1(ex.B, ex.b, solver);
  } else if (a.set == "Em") {
    const auto c = classify(ex);
    r = c == DimCase::B_finite ? dim_Em(ex.B, a.m, solver) : dim_E1(ex.B, ex.b, solver);
    if (c != DimCase::B_finite) r.diagnostics.push_back("closed case shared with E1");
  } else {
    throw cfdim::validation_error("unknown set '" + a.set + "' (Ef | E1 | Em)");
  }

  if (g.format == "json") {
    json j = envelope(sub, g);
    json res;
    res["case"] = to_string(r.dim_case);
    res["value"] = r.value;
    res["uncertainty"] = r.uncertainty;
    res["tag"] = r.tag;
    res["exponents"] = {{"B", number_json(ex.B)},
                        {"b", number_json(ex.b)},
                        {"horizon", ex.horizon},
                        {"exact", ex.exact},
                        {"skipped_b", ex.skipped_b},
                        {"diagnostics", ex.diagnostics}};
    json trace = json::array();
    for (std::size_t n = 1; n <= ex.horizon; ++n)
      trace.push_back({{"n", n},
                       {"log_B_running_min", number_json(ex.log_B_trace[n - 1])},
                       {"log_b_running_min", number_json(ex.log_b_trace[n - 1])}});
    res["trace"] = trace;
    if (r.solver) res["solver"] = sb_json(*r.solver);
    res["diagnostics"] = r.diagnostics;
    j["result"] = res;
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_header(sub, g);
    os << "# exponents: B=" << format_number(ex.B) << " b=" << format_number(ex.b) << " exact="
       << (ex.exact ? "true" : "false") << "\n";
    for (const auto& dgn : ex.diagnostics) os << "# exponent diagnostic: " << dgn << "\n";
    for (const auto& dgn : r.diagnostics) os << "# solver diagnostic: " << dgn << "\n";
    os << "row_type,n,case,value,uncertainty,tag,log_B_running_min,log_b_running_min\n";
    os << "result,," << to_string(r.dim_case) << "," << format_number(r.value) << "," << format_number(r.uncertainty)
       << "," << csv_field(r.tag) << ",,\n";
    for (std::size_t n = 1; n <= ex.horizon; ++n)
      os << "trace," << n << ",,,,," << format_number(ex.log_B_trace[n - 1]) << ","
         << format_number(ex.log_b_trace[n - 1]) << "\n";
    emit(g, os.str());
  }
  return kOk;
}

// ---------------------------------------------------------------- check

int cmd_check(const CLI::App& sub, const Global& g, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all")
    names = cfdim::checks::suite_names();
  else
    names.push_back(suite);
  for (const auto& n : names) {
    bool known = false;
    for (const auto& k : cfdim::checks::suite_names()) known = known || k == n;
    if (!known)
      throw cfdim::validation_error("unknown check suite '" + n + "' (" + join(cfdim::checks::suite_names(), " | ") +
                                    " | all)");
  }
  std::vector<cfdim::checks::SuiteResult> results;
  bool ok = true;
  for (const auto& n : names) {
    results.push_back(cfdim::checks::run_suite(n, g.workers));
    ok = ok && results.back().passed();
  }
  if (g.format == "json") {
    json j = envelope(sub, g);
    json arr = json::array();
    for (const auto& s : results) {
      json cs = json::array();
      for (const auto& c : s.checks)
        cs.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"checked", c.checked},
                      {"failures", c.failures},
                      {"detail", c.detail},
                      {"counterexample", c.counterexample}});
      arr.push_back({{"suite", s.suite}, {"passed", s.passed()}, {"checks", cs}});
    }
    j["suites"] = arr;
    j["passed"] = ok;
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_header(sub, g);
    os << "suite,check,passed,checked,failures,detail,counterexample\n";
    for (const auto& s : results)
      for (const auto& c : s.checks)
        os << s.suite << "," << csv_field(c.name) << "," << (c.passed ? "true" : "false") << "," << c.checked << ","
           << c.failures << "," << csv_field(c.detail) << "," << csv_field(c.counterexample) << "\n";
    emit(g, os.str());
  }
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const CLI::App& sub, const Global& g, const std::string& x, std::size_t n) {
  using namespace cfdim::cf;
  const auto enclosure = parse_real(x);
  const auto word = expand(enclosure, n);
  const auto states = convergents<cfdim::BigInt>(word);
  if (g.format == "json") {
    json j = envelope(sub, g);
    json digits = json::array(), conv = json::array();
    for (std::size_t k = 1; k <= word.size(); ++k) {
      digits.push_back(word.at(k));
      conv.push_back({{"k", k}, {"p", states[k].p_cur.str()}, {"q", states[k].q_cur.str()}});
    }
    j["digits"] = digits;
    j["convergents"] = conv;
    j["terminated"] = word.size() < n;
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_header(sub, g);
    os << "# terminated: " << (word.size() < n ? "true" : "false") << "\n";
    os << "k,a_k,p_k,q_k\n";
    for (std::size_t k = 1; k <= word.size(); ++k)
      os << k << "," << word.at(k) << "," << states[k].p_cur.str() << "," << states[k].q_cur.str() << "\n";
    emit(g, os.str());
  }
  return kOk;
}

// ---------------------------------------------------------------- cover

struct CoverArgs {
  std::size_t n = 3;
  double s = 0.75, B = 2;
  std::uint64_t d = 1;
  std::size_t grid = 0;
};

int cmd_cover(const CLI::App& sub, const Global& g, const CoverArgs& a) {
  using namespace cfdim::cover;
  const auto p = equalized_cover(a.n, a.s, a.B, a.d);
  const auto terms = cover_log_terms(p);
  const auto h = h_iter(a.s, a.n);
  const auto f = f_iter(a.s, a.n);
  std::optional<GridOracleResult> oracle;
  if (a.grid) oracle = supremum_grid_oracle(a.n, a.s, a.B, a.d, a.grid, g.workers);
  if (g.format == "json") {
    json j = envelope(sub, g);
    json rows = json::array();
    for (std::size_t k = 1; k <= a.n; ++k)
      rows.push_back({{"k", k},
                      {"logA", p.logA[k - 1]},
                      {"logAlpha", p.logAlpha[k - 1]},
                      {"log_term", terms[k - 1]},
                      {"h", h[k]},
                      {"f", f[k]}});
    j["profile"] = rows;
    j["cover_log_value"] = cover_log_value(p);
    j["cover_value"] = cover_value(p);
    if (oracle)
      j["grid_oracle"] = {{"value", oracle->value},
                          {"argmax_logAlpha", oracle->argmax},
                          {"spacing", oracle->spacing},
                          {"lipschitz", oracle->lipschitz},
                          {"slack", oracle->slack},
                          {"points", oracle->points},
                          {"within_slack", oracle->value <= cover_value(p) + oracle->slack}};
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_header(sub, g);
    os << "# cover_value: " << format_number(cover_value(p)) << "\n";
    os << "# cover_log_value: " << format_number(cover_log_value(p)) << "\n";
    if (oracle)
      os << "# grid_oracle: value=" << format_number(oracle->value) << " slack=" << format_number(oracle->slack)
         << " points=" << oracle->points << "\n";
    os << "k,logA,logAlpha,log_term,h,f\n";
    for (std::size_t k = 1; k <= a.n; ++k)
      os << k << "," << format_number(p.logA[k - 1]) << "," << format_number(p.logAlpha[k - 1]) << ","
         << format_number(terms[k - 1]) << "," << format_number(h[k]) << "," << format_number(f[k]) << "\n";
    emit(g, os.str());
  }
  return oracle && !(oracle->value <= cover_value(p) + oracle->slack) ? kCheckFailed : kOk;
}

// ---------------------------------------------------------------- mc

struct McArgs {
  std::string experiment = "geometric-mean";
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t digits = 0;  // 0: exactly what the experiment needs
  std::size_t bits = 0;
  std::vector<std::size_t> n{100};
  std::uint64_t d = 1, t = 0;
  std::string psi = "poly(1,1)";
  std::size_t window = 1000;
  std::string event = "single";
  std::size_t n_min = 2;
  unsigned k = 2;
  double s = 0.6;
  std::vector<double> phi{10, 100, 1000, 10000};
  std::uint64_t M = 2;
  std::size_t depth = 2;
  std::vector<std::string> large;
  std::vector<std::string> fixed;
};

std::pair<std::size_t, cfdim::cf::Digit> parse_slot(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon != std::string::npos) return {std::stoul(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
  } catch (const std::exception&) {
  }
  throw cfdim::validation_error("expected position:value, got '" + text + "'");
}

int cmd_mc(const CLI::App& sub, const Global& g, const McArgs& a) {
  using namespace cfdim::empirics;
  const cfdim::cf::LinearIndex idx(a.d, a.t);
  auto config_for = [&](std::size_t need) {
    SampleConfig c{a.seed, a.samples, a.digits ? a.digits : need, a.bits};
    return c;
  };
  std::vector<ExperimentReport> reports;
  if (a.experiment == "geometric-mean") {
    for (auto n : a.n) reports.push_back(geometric_mean_experiment(config_for(n), n, g.workers));
  } else if (a.experiment == "mixed-mean") {
    for (auto n : a.n) reports.push_back(mixed_geometric_mean(config_for(n * idx(n)), idx, n, g.workers));
  } else if (a.experiment == "limsup") {
    const auto spec = cfdim::dimension::parse_growth(a.psi, idx);
    EventKind kind;
    if (a.event == "single")
      kind = EventKind::single_digit;
    else if (a.event == "product")
      kind = EventKind::linear_gap_product;
    else
      throw cfdim::validation_error("unknown event '" + a.event + "' (single | product)");
    reports.push_back(
        limsup_event_frequency(config_for(event_digits(kind, idx, a.window)), spec, a.window, kind, a.n_min, g.workers));
  } else if (a.experiment == "lemma51") {
    reports.push_back(lemma51_ratio(a.k, a.s, a.phi));
  } else if (a.experiment == "geometry") {
    auto prof = RangeProfile::uniform(a.M);
    for (const auto& l : a.large) {
      const auto [pos, A] = parse_slot(l);
      prof.with_large(pos, A);
    }
    for (const auto& f : a.fixed) {
      const auto [pos, v] = parse_slot(f);
      prof.with_fixed(pos, v);
    }
    reports.push_back(cantor_geometry_check(a.M, a.depth, prof).report);
  } else {
    throw cfdim::validation_error("unknown experiment '" + a.experiment +
                                  "' (geometric-mean | mixed-mean | limsup | lemma51 | geometry)");
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed.value_or(true);
  if (g.format == "json") {
    json j = envelope(sub, g);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    j["reports"] = arr;
    emit(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << csv_header(sub, g);
    if (reports.size() > 1) {
      os << "# name: " << reports.front().name << "\n# statistic: " << reports.front().statistic << "\n";
      for (const auto& note : reports.front().notes) os << "# note: " << note << "\n";
      os << "n,count,mean,stddev,min,q25,median,q75,max,discarded,passed\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& s = reports[i].summary;
        os << a.n[i] << "," << s.count << "," << format_number(s.mean) << "," << format_number(s.stddev) << ","
           << format_number(s.min) << "," << format_number(s.q25) << "," << format_number(s.median) << ","
           << format_number(s.q75) << "," << format_number(s.max) << "," << reports[i].discarded << ","
           << (reports[i].passed ? (*reports[i].passed ? "true" : "false") : "") << "\n";
      }
    } else {
      write_csv(os, reports.front());
    }
    emit(g, os.str());
  }
  return ok ? kOk : kCheckFailed;
}

int error_exit(const std::string& kind, const std::string& message, int code) {
  json j{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cfdim: Hausdorff dimension of continued-fraction limsup sets"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags");
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output,-o", g.output, "Output file (default: stdout)");
  app.add_flag("--no-timestamp", g.no_timestamp, "Omit the generation timestamp");
  app.add_option("--workers", g.workers, "Worker threads (default: $CFDIM_WORKERS or 1)")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  SbArgs sb;
  auto* sb_cmd = app.add_subcommand("sb", "Tableau of s_B(M,n) and extrapolated s_B per B");
  sb_cmd->add_option("--B", sb.B, "Growth base(s) > 1")->required()->delimiter(',');
  sb_cmd->add_option("--d", sb.d, "Index slope d >= 1")->capture_default_str();
  sb_cmd->add_option("--t", sb.t, "Index offset t >= 0")->capture_default_str();
  sb_cmd->add_option("--Mmax", sb.M_max, "Largest alphabet size")->capture_default_str();
  sb_cmd->add_option("--nmax", sb.n_max, "Largest depth")->capture_default_str();
  sb_cmd->add_option("--tol", sb.tol, "Bisection tolerance")->capture_default_str();
  sb_cmd->add_option("--model", sb.model, "power-tail | richardson | geometric")->capture_default_str();
  sb_cmd->add_option("--potential", sb.potential, "linear-gap | single | block:<m>")->capture_default_str();

  DimArgs dm;
  auto* dim_cmd = app.add_subcommand("dim", "Dimension of the limsup set for a rate function psi");
  dim_cmd->add_option("--psi", dm.psi, "poly(c,k) | exp(beta) | dexp(beta) | table:<path>")->required();
  dim_cmd->add_option("--d", dm.d, "Index slope d >= 1")->capture_default_str();
  dim_cmd->add_option("--t", dm.t, "Index offset t >= 0")->capture_default_str();
  dim_cmd->add_option("--N", dm.horizon, "Horizon for exponent estimation (>= 10)")->capture_default_str();
  dim_cmd->add_option("--Mmax", dm.M_max, "Largest alphabet size")->capture_default_str();
  dim_cmd->add_option("--nmax", dm.n_max, "Largest depth")->capture_default_str();
  dim_cmd->add_option("--tol", dm.tol, "Bisection tolerance")->capture_default_str();
  dim_cmd->add_option("--model", dm.model, "power-tail | richardson | geometric")->capture_default_str();
  dim_cmd->add_option("--set", dm.set, "Ef | E1 | Em")->capture_default_str();
  dim_cmd->add_option("--m", dm.m, "Block length for --set Em")->capture_default_str();

  std::string suite;
  auto* check_cmd = app.add_subcommand("check", "Run an invariant check suite");
  check_cmd->add_option("suite", suite, "cf-inequalities | pressure-oracles | cover-prop31 | lemma51 | "
                                        "cantor-geometry | sampler | all")
      ->required();

  std::string x;
  std::size_t n_digits = 10;
  auto* expand_cmd = app.add_subcommand("expand", "Certified continued-fraction digits");
  expand_cmd->add_option("--x", x, "p/q | decimal | pi[:digits] | golden[:digits]")->required();
  expand_cmd->add_option("--n", n_digits, "Number of digits")->capture_default_str();

  CoverArgs cv;
  auto* cover_cmd = app.add_subcommand("cover", "Equalized cover profile");
  cover_cmd->add_option("--n", cv.n, "Profile length")->capture_default_str();
  cover_cmd->add_option("--s", cv.s, "Exponent in (1/2, 1)")->capture_default_str();
  cover_cmd->add_option("--B", cv.B, "Growth base > 1")->capture_default_str();
  cover_cmd->add_option("--d", cv.d, "Index slope d >= 1")->capture_default_str();
  cover_cmd->add_option("--grid", cv.grid, "Grid points per axis for the brute-force oracle (0: skip)")
      ->capture_default_str();

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo and exhaustive experiments");
  mc_cmd->add_option("--experiment", mc.experiment, "geometric-mean | mixed-mean | limsup | lemma51 | geometry")
      ->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed, "Base seed")->capture_default_str();
  mc_cmd->add_option("--samples", mc.samples, "Samples")->capture_default_str();
  mc_cmd->add_option("--digits", mc.digits, "Digit budget per sample (0: as needed)")->capture_default_str();
  mc_cmd->add_option("--bits", mc.bits, "Random bits per sample (0: 4 per digit + 256)")->capture_default_str();
  mc_cmd->add_option("--n", mc.n, "Depth(s) n")->delimiter(',')->capture_default_str();
  mc_cmd->add_option("--d", mc.d, "Index slope d >= 1")->capture_default_str();
  mc_cmd->add_option("--t", mc.t, "Index offset t >= 0")->capture_default_str();
  mc_cmd->add_option("--psi", mc.psi, "Rate function for limsup")->capture_default_str();
  mc_cmd->add_option("--window", mc.window, "Window N for limsup")->capture_default_str();
  mc_cmd->add_option("--event", mc.event, "single | product")->capture_default_str();
  mc_cmd->add_option("--nmin", mc.n_min, "First n counted in limsup")->capture_default_str();
  mc_cmd->add_option("--k", mc.k, "Tuple length for lemma51")->capture_default_str();
  mc_cmd->add_option("--s", mc.s, "Exponent for lemma51")->capture_default_str();
  mc_cmd->add_option("--phi", mc.phi, "phi grid for lemma51")->delimiter(',')->capture_default_str();
  mc_cmd->add_option("--M", mc.M, "Digit bound for geometry")->capture_default_str();
  mc_cmd->add_option("--depth", mc.depth, "Depth for geometry")->capture_default_str();
  mc_cmd->add_option("--large", mc.large, "position:A, digit range [A,2A] (geometry)")->delimiter(',');
  mc_cmd->add_option("--fixed", mc.fixed, "position:value, fixed digit (geometry)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*sb_cmd) return cmd_sb(*sb_cmd, g, sb);
    if (*dim_cmd) return cmd_dim(*dim_cmd, g, dm);
    if (*check_cmd) return cmd_check(*check_cmd, g, suite);
    if (*expand_cmd) return cmd_expand(*expand_cmd, g, x, n_digits);
    if (*cover_cmd) return cmd_cover(*cover_cmd, g, cv);
    if (*mc_cmd) return cmd_mc(*mc_cmd, g, mc);
  } catch (const cfdim::precision_exhausted& e) {
    return error_exit("precision-exhausted", e.what(), kSolver);
  } catch (const cfdim::budget_exceeded& e) {
    return error_exit("budget-exceeded", e.what(), kSolver);
  } catch (const cfdim::bracket_failure& e) {
    return error_exit("bracket-failure", e.what(), kSolver);
  } catch (const cfdim::non_convergence& e) {
    return error_exit("non-convergence", e.what(), kSolver);
  } catch (const cfdim::validation_error& e) {
    return error_exit("validation", e.what(), kValidation);
  } catch (const cfdim::error& e) {
    return error_exit("error", e.what(), kSolver);
  }
  return kValidation;
}

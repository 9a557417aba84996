#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "shinlab/eulerian.hpp"
#include "shinlab/intervals.hpp"
#include "shinlab/shin_core.hpp"
#include "shinlab/transforms.hpp"
#include "shinlab/verify.hpp"

namespace shinlab::cli {

using nlohmann::json;

enum class Format { Json, Csv, Text };

struct Summary {
  long passed = 0;
  long failed = 0;
};

// One command run: echo of the request, tabular results, optional extras.
// Every number is carried as a decimal string.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> parameters;
  int digits = Precision::kDefaultDigits;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json meta = json::object();
  std::optional<Summary> summary;
  std::string started;
  long elapsed_ms = 0;
};

class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline std::string meta_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Terminating decimals print exactly; other rationals round to `digits`.
inline std::string format_rational(const Rational& q, int digits) {
  if (q == 0) return "0";
  Integer den = q.get_den();
  long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
  if (den != 1) return to_decimal(q, digits);
  long places = std::max(twos, fives);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Rational scaled = abs(q) * scale;
  std::string d = scaled.get_num().get_str();
  if (places > 0) {
    if (static_cast<long>(d.size()) <= places) d = std::string(static_cast<std::size_t>(places + 1 - static_cast<long>(d.size())), '0') + d;
    d.insert(d.size() - static_cast<std::size_t>(places), ".");
  }
  return (q < 0 ? "-" : "") + d;
}

inline Integer parse_integer(const std::string& s, const char* what) {
  Rational q = parse_rational(s);
  if (q.get_den() != 1) throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  return q.get_num();
}

inline long parse_long(const std::string& s, const char* what, long lo, long hi) {
  Integer z = parse_integer(s, what);
  if (z < lo || z > hi) {
    throw UsageError(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return z.get_si();
}

inline std::string now_utc() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline int default_digits() {
  const char* env = std::getenv("SHIN_DIGITS");
  if (!env || !*env) return Precision::kDefaultDigits;
  long d = parse_long(env, "SHIN_DIGITS", Precision::kMinDigits, 100000);
  return static_cast<int>(d);
}

}  // namespace detail

inline json to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  j["digits"] = std::to_string(r.digits);
  j["parameters"] = json::object();
  for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
  j["columns"] = r.columns;
  j["results"] = json::array();
  for (const auto& row : r.rows) {
    json o = json::object();
    for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) o[r.columns[i]] = row[i];
    j["results"].push_back(std::move(o));
  }
  j["meta"] = r.meta;
  if (r.summary) {
    j["summary"] = {{"passed", std::to_string(r.summary->passed)},
                    {"failed", std::to_string(r.summary->failed)},
                    {"total", std::to_string(r.summary->passed + r.summary->failed)}};
  }
  j["timestamp"] = {{"started", r.started}, {"elapsed_ms", std::to_string(r.elapsed_ms)}};
  return j;
}

inline std::string render(const RunReport& r, Format f) {
  std::ostringstream os;
  if (f == Format::Json) {
    os << to_json(r).dump(2) << "\n";
  } else if (f == Format::Csv) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << detail::csv_field(r.columns[i]);
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(row[i]);
      os << "\n";
    }
  } else {
    std::vector<std::size_t> w(r.columns.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = r.columns[i].size();
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s += cells[i];
        if (i + 1 < cells.size()) s += std::string(w[i] - cells[i].size() + 2, ' ');
      }
      os << s << "\n";
    };
    os << r.command << " (" << r.digits << " digits)\n";
    line(r.columns);
    for (const auto& row : r.rows) line(row);
    for (const auto& [k, v] : r.meta.items()) os << k << ": " << detail::meta_text(v) << "\n";
    if (r.summary) {
      os << "passed " << r.summary->passed << ", failed " << r.summary->failed << "\n";
    }
  }
  return os.str();
}

namespace commands {

inline void eval(RunReport& r, const std::string& xs, const std::optional<std::string>& ms) {
  Precision p(r.digits);
  Rational x = parse_rational(xs);
  r.parameters["x"] = xs;
  r.columns = {"x", "m", "value"};
  if (ms) {
    r.parameters["m"] = *ms;
    Integer m = detail::parse_integer(*ms, "--m");
    Real v = shin_member({x, m}, p);
    r.rows.push_back({to_string(x), m.get_str(), to_decimal(v, r.digits)});
    r.meta["selected_by"] = "argument";
    return;
  }
  ShinSample s = shin(x, p);
  r.rows.push_back({to_string(x), s.omega.get_str(), to_decimal(s.value, r.digits)});
  r.meta["selected_by"] = "omega";
  if (s.exact) r.meta["exact"] = to_string(*s.exact);
}

inline void omega_range(RunReport& r, const std::string& spec) {
  r.parameters["k"] = spec;
  long a, b;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    a = detail::parse_long(spec.substr(0, dots), "--k start", 1, 1000000000000L);
    b = detail::parse_long(spec.substr(dots + 2), "--k end", 1, 1000000000000L);
  } else {
    a = b = detail::parse_long(spec, "--k", 1, 1000000000000L);
  }
  if (b < a || b - a >= 1000000) throw UsageError("--k range must be A..B with A <= B and at most 10^6 values");
  Precision p(r.digits);
  r.columns = {"k", "omega"};
  for (long k = a; k <= b; ++k) r.rows.push_back({std::to_string(k), omega(k, p).get_str()});
}

inline void vector(RunReport& r, const std::string& ks, const std::string& ms, long count) {
  r.parameters["k"] = ks;
  r.parameters["m"] = ms;
  r.parameters["count"] = std::to_string(count);
  Integer k0 = detail::parse_integer(ks, "--k");
  Integer m = detail::parse_integer(ms, "--m");
  Precision p(r.digits);
  r.columns = {"k", "value"};
  for (long i = 0; i < count; ++i) {
    Integer k = k0 + i;
    Real v = shin_member({Rational(k), m}, p);
    r.rows.push_back({k.get_str(), to_decimal(v, r.digits)});
  }
}

inline void intervals(RunReport& r, long max_ell) {
  r.parameters["max-ell"] = std::to_string(max_ell);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  r.columns = {"ell", "omega", "k_min", "k_max", "length"};
  for (const auto& rec : enumerate(max_ell, Precision(30), threads)) {
    r.rows.push_back({std::to_string(rec.ell), std::to_string(rec.omega), std::to_string(rec.k_min),
                      std::to_string(rec.k_max), std::to_string(rec.length)});
  }
}

inline void series(RunReport& r, long max_ell) {
  r.parameters["max-ell"] = std::to_string(max_ell);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  SeriesScan s = series_scan(max_ell, Precision(30), threads);
  r.columns = {"ell", "length", "substitution"};
  std::size_t next = 0;
  for (std::size_t i = 0; i < s.lengths.size(); ++i) {
    long ell = static_cast<long>(i) + 1;
    bool sub = next < s.substitution_indices.size() && s.substitution_indices[next] == ell;
    if (sub) ++next;
    r.rows.push_back({std::to_string(ell), std::to_string(s.lengths[i]), sub ? "1" : "0"});
  }
  auto strings = [](const std::vector<long>& v) {
    json a = json::array();
    for (long x : v) a.push_back(std::to_string(x));
    return a;
  };
  r.meta["substitution_indices"] = strings(s.substitution_indices);
  r.meta["gaps"] = strings(gaps(s.substitution_indices));
  r.meta["unexpected_nines"] = strings(s.unexpected_nines);
  r.meta["pattern"] = strings(std::vector<long>(SeriesScan::kPattern.begin(), SeriesScan::kPattern.end()));
}

inline void psi_cmd(RunReport& r, const std::string& ks) {
  r.parameters["k"] = ks;
  Integer k = detail::parse_integer(ks, "--k");
  Precision p(r.digits);
  RatioSample s = psi(k, p);
  Real limit = evaluate(p, [](mpfr_prec_t bits) { return psi_limit(bits); });
  r.columns = {"k", "omega", "psi", "limit", "deviation"};
  r.rows.push_back({k.get_str(), s.omega.get_str(), to_decimal(s.psi, r.digits), to_decimal(limit, r.digits),
                    to_decimal(s.deviation, r.digits)});
  r.meta["psi_exact"] = to_string(s.psi);
}

inline void eulerian_cmd(RunReport& r, long rows, bool explicit_formula) {
  r.parameters["rows"] = std::to_string(rows);
  r.parameters["explicit"] = explicit_formula ? "true" : "false";
  r.columns = {"n", "m", "value"};
  for (long n = 1; n <= rows; ++n) {
    for (long m = 0; m < n; ++m) {
      Integer v = explicit_formula ? eulerian2_explicit(n, m) : eulerian2(n, m);
      r.rows.push_back({std::to_string(n), std::to_string(m), v.get_str()});
    }
  }
}

inline void density(RunReport& r, const std::string& from, const std::string& to, long samples) {
  r.parameters["from"] = from;
  r.parameters["to"] = to;
  r.parameters["samples"] = std::to_string(samples);
  Rational a = parse_rational(from), b = parse_rational(to);
  if (b < a) throw UsageError("--to must not be below --from");
  Precision p(r.digits);
  r.columns = {"t", "mu_dot"};
  for (long i = 0; i < samples; ++i) {
    Rational t = samples == 1 ? a : Rational(a + (b - a) * i / (samples - 1));
    t.canonicalize();
    DensitySample s = jump_density(t, p);
    r.rows.push_back({detail::format_rational(t, r.digits), to_decimal(s.mu_dot, r.digits)});
  }
}

inline void stieltjes(RunReport& r, const std::string& xs, const std::string& target, long levels) {
  r.parameters["x"] = xs;
  r.parameters["target-err"] = target;
  r.parameters["levels"] = std::to_string(levels);
  Rational x = parse_rational(xs);
  QuadratureSpec spec;
  spec.levels = static_cast<int>(levels);
  spec.target_abs_err = parse_rational(target);
  if (spec.target_abs_err <= 0) throw UsageError("--target-err must be positive");
  Precision p(r.digits);
  QuadratureResult q = stieltjes_shin(x, spec, p);
  Real s = shin(x, p).value;
  Real mass = density_mass(spec, p).value * 2;
  r.columns = {"x", "value", "est_err", "nodes", "levels", "converged", "shin", "residual"};
  r.rows.push_back({to_string(x), to_decimal(q.value, r.digits), to_decimal(q.est_err, 3), std::to_string(q.nodes_used),
                    std::to_string(q.levels_used), q.converged ? "true" : "false", to_decimal(s, r.digits),
                    to_decimal(q.value - s, 10)});
  r.meta["integrand_mass"] = to_decimal(mass, 20);
  r.meta["tail_bound"] = to_decimal(mass / num(x, mass.precision()), 10);
}

inline bool verify_cmd(RunReport& r, const std::string& suites) {
  r.parameters["suite"] = suites;
  std::vector<std::string> names;
  std::stringstream ss(suites);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    if (!verify::is_suite(item)) throw UsageError("unknown suite '" + item + "'");
    names.push_back(item);
  }
  r.columns = {"suite", "check", "passed", "note"};
  Summary sum;
  for (const auto& name : names) {
    for (const auto& c : verify::run_suite(name)) {
      r.rows.push_back({c.suite, c.check, c.passed ? "true" : "false", c.note});
      ++(c.passed ? sum.passed : sum.failed);
    }
  }
  r.summary = sum;
  return sum.failed == 0;
}

}  // namespace commands

// Parses argv (without the program name), runs the command and writes the
// rendered report. Exit codes: 0 success, 1 verification or runtime failure,
// 2 usage error.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  report.started = detail::now_utc();

  CLI::App app{"shin-lab: Shin function, its selector, intervals and transforms"};
  app.name("shin");
  app.require_subcommand(1, 1);
  std::string format = "text";
  std::optional<int> digits;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", digits, "Significant digits (default SHIN_DIGITS or 50)");

  std::string x, k, m = "0", from, to, target = "1e-20", suite, report_file;
  std::optional<std::string> m_opt;
  long count = 1, max_ell = 12, rows = 8, samples = 11, levels = 10;
  bool explicit_formula = false;

  auto* eval = app.add_subcommand("eval", "Shin(x), or member m at x")->fallthrough();
  eval->add_option("--x", x, "Argument (integer, decimal or p/q)")->required();
  eval->add_option("--m", m_opt, "Family member (default: selected by omega)");

  auto* om = app.add_subcommand("omega", "Selector values over a range")->fallthrough();
  om->add_option("--k", k, "A..B or a single integer")->required();

  auto* vec = app.add_subcommand("vector", "Member m at k, k+1, ...")->fallthrough();
  vec->add_option("--k", k, "First k")->required();
  vec->add_option("--m", m, "Family member")->required();
  vec->add_option("--count", count, "Number of rows")->check(CLI::Range(1L, 100000L));

  auto* iv = app.add_subcommand("intervals", "Enumerate I_1..I_L")->fallthrough();
  iv->add_option("--max-ell", max_ell, "Last interval index")->required()->check(CLI::Range(1L, 1000000L));

  auto* sc = app.add_subcommand("series-scan", "Interval lengths and substitutions")->fallthrough();
  sc->add_option("--max-ell", max_ell, "Last interval index")->required()->check(CLI::Range(11L, 1000000L));

  auto* ps = app.add_subcommand("psi", "Ratio k / omega(k) and its deviation from the limit")->fallthrough();
  ps->add_option("--k", k, "Integer k >= 9")->required();

  auto* eu = app.add_subcommand("eulerian", "Second-order Eulerian numbers")->fallthrough();
  eu->add_option("--rows", rows, "Rows 1..N")->required()->check(CLI::Range(1L, 64L));
  eu->add_flag("--explicit", explicit_formula, "Use the Stirling-number formula");

  auto* de = app.add_subcommand("density", "Jump density samples")->fallthrough();
  de->add_option("--from", from, "First t")->required();
  de->add_option("--to", to, "Last t")->required();
  de->add_option("--samples", samples, "Number of samples")->check(CLI::Range(1L, 100000L));

  auto* st = app.add_subcommand("stieltjes", "Stieltjes-integral evaluation")->fallthrough();
  st->add_option("--x", x, "Argument x > 0")->required();
  st->add_option("--target-err", target, "Absolute error target");
  st->add_option("--levels", levels, "Finest quadrature level")->check(CLI::Range(3L, 20L));

  auto* ve = app.add_subcommand("verify", "Run verification suites")->fallthrough();
  ve->add_option("--suite", suite, "all, or comma-separated suite names")->required();
  ve->add_option("--report", report_file, "Also write the JSON report to FILE");

  std::vector<const char*> argv{"shin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  bool ok = true;
  try {
    report.digits = digits ? *digits : detail::default_digits();
    Precision check(report.digits);
    CLI::App* sub = app.get_subcommands().front();
    report.command = sub->get_name();
    if (sub == eval) commands::eval(report, x, m_opt);
    else if (sub == om) commands::omega_range(report, k);
    else if (sub == vec) commands::vector(report, k, m, count);
    else if (sub == iv) commands::intervals(report, max_ell);
    else if (sub == sc) commands::series(report, max_ell);
    else if (sub == ps) commands::psi_cmd(report, k);
    else if (sub == eu) commands::eulerian_cmd(report, rows, explicit_formula);
    else if (sub == de) commands::density(report, from, to, samples);
    else if (sub == st) commands::stieltjes(report, x, target, levels);
    else if (sub == ve) ok = commands::verify_cmd(report, suite);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  report.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());

  Format f = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  out << render(report, f);
  if (!report_file.empty()) {
    std::ofstream file(report_file);
    if (!file) {
      err << "error: cannot write " << report_file << "\n";
      return 1;
    }
    file << render(report, Format::Json);
  }
  return ok ? 0 : 1;
}

}  // namespace shinlab::cli

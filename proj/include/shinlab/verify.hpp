#pragma once

#include <string>
#include <vector>

#include "shinlab/eulerian.hpp"
#include "shinlab/identities.hpp"
#include "shinlab/intervals.hpp"
#include "shinlab/shin_core.hpp"
#include "shinlab/transforms.hpp"

namespace shinlab::verify {

struct CheckResult {
  std::string suite;
  std::string check;
  bool passed = false;
  std::string note;
};

// Interval bounds of I_1..I_12 as listed with the series structure.
inline const std::vector<std::pair<long, long>>& listed_intervals() {
  static const std::vector<std::pair<long, long>> v = {{1, 8},   {9, 16},  {17, 25}, {26, 34}, {35, 43}, {44, 51},
                                                       {52, 60}, {61, 69}, {70, 78}, {79, 86}, {87, 95}, {96, 104}};
  return v;
}

// Substitution indices up to ell = 1152 as stated with the series structure.
inline const std::vector<long>& stated_substitutions() {
  static const std::vector<long> v = {31,  71,  122, 162, 213, 253, 293, 344, 384,  435,  475,  526,  566,
                                      617, 657, 697, 748, 788, 839, 879, 930, 970, 1021, 1061, 1112, 1152};
  return v;
}

namespace detail {

inline std::string sci(const Real& x) { return to_decimal(x, 3); }

inline Real upper(const Real& x) { return shinlab::detail::upper_as_real(x); }

inline bool at_most(const Real& x, const Rational& bound) {
  return compare_threshold(upper(x), bound) != std::partial_ordering::greater;
}

inline Rational ten_to(int e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(1, p) : Rational(p);
}

inline std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace detail

inline std::vector<CheckResult> omega_oracle_suite() {
  const std::string suite = "omega-oracle";
  std::vector<CheckResult> out;
  {
    std::string note = "104 values";
    bool ok = true;
    long ell = 0;
    for (const auto& [lo, hi] : listed_intervals()) {
      for (long k = lo; k <= hi && ok; ++k) {
        if (omega(k) != ell) {
          ok = false;
          note = "omega(" + std::to_string(k) + ") = " + omega(k).get_str() + ", listed " + std::to_string(ell);
        }
      }
      ++ell;
    }
    out.push_back({suite, "omega(k) matches the interval list, k = 1..104", ok, note});
  }
  {
    std::string note = "10000 values";
    bool ok = true;
    Integer hint = 0;
    for (long k = 1; k <= 10000 && ok; ++k) {
      Integer f = omega(k), o = omega_oracle(Rational(k), hint);
      if (f != o) {
        ok = false;
        note = "k = " + std::to_string(k) + ": formula " + f.get_str() + ", oracle " + o.get_str();
      }
      hint = o;
    }
    out.push_back({suite, "omega = omega_oracle, k = 1..10000", ok, note});
  }
  return out;
}

inline std::vector<CheckResult> fundamental_suite() {
  const std::string suite = "fundamental-theorem";
  bool ok = true;
  std::string note = "10000 points certified within 200 digits";
  for (long k = 1; k <= 10000 && ok; ++k) {
    FundamentalCheck c = check_fundamental(Rational(k), Precision(50), 4);
    bool strict = compare_threshold(c.selected, Rational(2)) == std::partial_ordering::greater;
    if (!c.holds || !strict) {
      ok = false;
      note = "fails at k = " + std::to_string(k);
    }
  }
  return {{suite, "S(k, omega) > 2 > S(k, omega - 1), k = 1..10000", ok, note}};
}

inline std::vector<CheckResult> series_scan_suite() {
  const std::string suite = "series-scan";
  std::vector<CheckResult> out;
  SeriesScan s = series_scan(1152);
  bool lengths_ok = true;
  for (long l : s.lengths) lengths_ok = lengths_ok && (l == 8 || l == 9);
  out.push_back({suite, "lengths in {8, 9}, ell <= 1152", lengths_ok, std::to_string(s.lengths.size()) + " intervals"});
  long sum = 0;
  for (long v : SeriesScan::kPattern) sum += v;
  bool pattern_ok = sum == 96 && s.unexpected_nines.empty();
  out.push_back({suite, "period-11 pattern sums to 96 and holds off the substitutions", pattern_ok,
                 "sum " + std::to_string(sum) + ", unexpected nines " + std::to_string(s.unexpected_nines.size())});
  bool gaps_ok = true;
  for (long g : gaps(s.substitution_indices)) gaps_ok = gaps_ok && (g == 40 || g == 51);
  out.push_back({suite, "substitution gaps in {40, 51}", gaps_ok, detail::join(gaps(s.substitution_indices))});
  const auto& stated = stated_substitutions();
  bool match = s.substitution_indices == stated;
  std::string note = "26 indices";
  if (!match) {
    std::size_t i = 0;
    while (i < s.substitution_indices.size() && i < stated.size() && s.substitution_indices[i] == stated[i]) ++i;
    note = "entry " + std::to_string(i + 1) + ": scanned " +
             (i < s.substitution_indices.size() ? std::to_string(s.substitution_indices[i]) : "none") + ", stated " +
             (i < stated.size() ? std::to_string(stated[i]) : "none");
  }
  out.push_back({suite, "substitution indices equal the stated list", match, note});
  return out;
}

inline std::vector<CheckResult> eulerian_suite() {
  const std::string suite = "eulerian";
  std::vector<CheckResult> out;
  const long diag[] = {1, 2, 6, 24, 120};
  bool ok = true;
  for (long n = 1; n <= 5; ++n) ok = ok && eulerian2(n, n - 1) == diag[n - 1];
  out.push_back({suite, "<<n, n-1>> = 1, 2, 6, 24, 120", ok, ""});
  const long second[] = {2, 8, 22, 52, 114, 240, 494};
  ok = true;
  for (long n = 2; n <= 8; ++n) ok = ok && eulerian2(n, 1) == second[n - 2];
  out.push_back({suite, "<<n, 1>> = 2, 8, 22, 52, 114, 240, 494", ok, ""});
  ok = true;
  for (long n = 1; n <= 12; ++n) {
    for (long m = 0; m < n; ++m) ok = ok && eulerian2(n, m) == eulerian2_explicit(n, m);
  }
  out.push_back({suite, "explicit formula = recurrence, n <= 12", ok, ""});
  Integer a = binom(17, 0) * stirling2(10, 2), b = binom(17, 1) * stirling2(9, 1);
  ok = a == 511 && b == 17 && eulerian2_explicit(8, 1) == 494;
  out.push_back({suite, "<<8, 1>> = 511 - 17 = 494", ok, a.get_str() + " - " + b.get_str()});
  return out;
}

inline std::vector<CheckResult> gamma_suite() {
  const std::string suite = "gamma-identities";
  std::vector<CheckResult> out;
  Precision p(40);
  Rational rel_tol = detail::ten_to(-30);
  std::vector<long> ns;
  for (long n = 1; n <= 20; ++n) ns.push_back(n);
  ns.push_back(100);
  for (int which = 0; which < 2; ++which) {
    bool ok = true;
    Real worst = Real::zero(64);
    for (long n : ns) {
      IdentityReport r = which == 0 ? product_identity(n, p) : partial_sum_identity(n, p);
      ok = ok && r.passed && detail::at_most(r.rel_err, rel_tol);
      Real u = detail::upper(r.rel_err);
      if (compare_threshold(u - worst, Rational(0)) == std::partial_ordering::greater) worst = u;
    }
    out.push_back({suite, which == 0 ? "product identity, n = 1..20, 100" : "partial-sum identity, n = 1..20, 100", ok,
                   "max rel err " + detail::sci(worst)});
  }
  {
    mpfr_prec_t bits = p.bits() + 32;
    bool ok = true;
    for (const Rational& a : {Rational(1, 10), Rational(1, 4), Rational(49, 100)}) {
      Real ra = num(a, bits), one = Real::from_long(1, bits);
      Real lhs = gamma_ball(ra, bits) * gamma_ball(one - ra, bits) * sin(ra * Real::pi(bits));
      ok = ok && detail::at_most(abs(lhs / Real::pi(bits) - 1), rel_tol);
    }
    out.push_back({suite, "reflection Gamma(a) Gamma(1-a) sin(pi a) = pi", ok, ""});
    ok = true;
    for (long j = 1; j <= 100; ++j) {
      Rational x(j, 7);
      x.canonicalize();
      Real lhs = gamma(x + 1, p), rhs = num(x, bits) * gamma(x, p);
      ok = ok && detail::at_most(abs(lhs / rhs - 1), rel_tol);
    }
    out.push_back({suite, "recurrence Gamma(x+1) = x Gamma(x), x = j/7", ok, ""});
  }
  SweepResult sweep = vanishing_product_sweep(10000, Precision(30));
  out.push_back({suite, "0 < P_n <= exp(-sum b_k), n <= 10000", !sweep.first_violation.has_value(),
                 "P_10000 = " + to_decimal(sweep.last.P_n, 10)});
  bool ok = true;
  std::string note;
  for (long n : {1L, 5L}) {
    IdentityReport r = gauss_unit_value(n, 100000, Precision(30));
    ok = ok && r.passed && detail::at_most(r.abs_err, detail::ten_to(-6));
    note += (note.empty() ? "" : ", ") + std::string("n = ") + std::to_string(n) + ": " + detail::sci(r.abs_err);
  }
  out.push_back({suite, "unit-argument series within its tail bound, n = 1, 5", ok, note});
  return out;
}

inline std::vector<CheckResult> cm_suite() {
  const std::string suite = "cm";
  std::vector<CheckResult> out;
  long ell = 1;
  for (const auto& [lo, hi] : listed_intervals()) {
    CMReport member = cm_test(CMTarget::member(ell - 1), Rational(lo), Rational(hi), 6, Rational(1, 16));
    out.push_back({suite, "member m = " + std::to_string(ell - 1) + " on I_" + std::to_string(ell) + ", orders 0..6",
                   member.clean(),
                   std::to_string(member.violations.size()) + " violations, " +
                       std::to_string(member.uncertified.size()) + " uncertified"});
    CMReport inv = cm_test(CMTarget::inv_shin(), Rational(lo), Rational(hi), 6, Rational(1, 16));
    out.push_back({suite, "1/Shin Bernstein on I_" + std::to_string(ell) + ", orders 0..6", inv.clean(),
                   std::to_string(inv.violations.size()) + " violations, " +
                       std::to_string(inv.uncertified.size()) + " uncertified"});
    ++ell;
  }
  return out;
}

inline std::vector<CheckResult> density_suite() {
  const std::string suite = "density-oracle";
  std::vector<CheckResult> out;
  Precision p(30);
  Rational y = detail::ten_to(-10);
  Real worst = Real::zero(64);
  bool ok = true;
  for (const Rational& t : {Rational(7, 20), Rational(2, 5), Rational(9, 20), Rational(11, 20), Rational(3, 5),
                            Rational(13, 20)}) {
    Real closed = jump_density(t, p).mu_dot;
    Real rel = abs((jump_density_numeric(t, y, p) - closed) / closed);
    ok = ok && detail::at_most(rel, detail::ten_to(-6));
    Real u = detail::upper(rel);
    if (compare_threshold(u - worst, Rational(0)) == std::partial_ordering::greater) worst = u;
  }
  out.push_back({suite, "closed form vs finite-y quotient, 6 points", ok, "max rel err " + detail::sci(worst)});
  ok = true;
  for (long j = 1; j <= 99; ++j) {
    Rational t(j, 100);
    t.canonicalize();
    if (t > Rational(1, 3) && t < Rational(2, 3)) continue;
    Real v = jump_density(t, p).mu_dot;
    ok = ok && v.is_exact() && v.contains(Rational(0));
  }
  out.push_back({suite, "mu_dot = 0 outside (1/3, 2/3)", ok, "t = j/100"});
  Real half = jump_density(Rational(1, 2), p).mu_dot;
  out.push_back({suite, "mu_dot(1/2) = 0", detail::at_most(abs(half), detail::ten_to(-20)), to_decimal(half, 5)});
  return out;
}

inline std::vector<CheckResult> limits_suite() {
  const std::string suite = "limits";
  std::vector<CheckResult> out;
  Precision p(30);
  LimitReport lim = laplace_limit_check(p);
  Real gap = lim.at_infinity - 2;
  out.push_back({suite, "|shin(10^12) - 2| <= 1e-11", detail::at_most(abs(gap), detail::ten_to(-11)), detail::sci(gap)});
  Complex z0 = shin_complex(Rational(0), Rational(0), p), z1 = shin_complex(Rational(-1), Rational(0), p);
  out.push_back({suite, "shin_complex(0) = 2", z0.re.is_exact() && z0.re.contains(Rational(2)) && z0.is_real_exact(), ""});
  out.push_back({suite, "shin_complex(-1) = 2", z1.re.is_exact() && z1.re.contains(Rational(2)) && z1.is_real_exact(), ""});
  out.push_back({suite, "psi(0+) = 1 for psi = Shin/2", detail::at_most(abs(lim.psi_at_zero - 1), detail::ten_to(-10)),
                 detail::sci(lim.psi_at_zero - 1)});
  QuadratureSpec loose;
  loose.levels = 8;
  loose.target_abs_err = detail::ten_to(-8);
  QuadratureSpec tight;
  tight.target_abs_err = detail::ten_to(-24);
  QuadratureResult a = stieltjes_shin(Rational(10), loose, p), b = stieltjes_shin(Rational(10), tight, p);
  out.push_back({suite, "stieltjes self-convergence at x = 10",
                 a.converged && b.converged && detail::at_most(abs(a.value - b.value), detail::ten_to(-8)) &&
                     compare_threshold(detail::upper(a.value - b.value) - a.est_err, Rational(0)) !=
                         std::partial_ordering::greater,
                 "est_err " + detail::sci(a.est_err)});
  bool decreasing = true;
  Real prev;
  bool first = true;
  for (long x : {1L, 2L, 5L, 10L, 100L}) {
    Real v = stieltjes_shin(Rational(x), tight, p).value;
    if (!first) decreasing = decreasing && (prev - v).sign() == 1;
    prev = v;
    first = false;
  }
  out.push_back({suite, "stieltjes decreasing on x = 1, 2, 5, 10, 100", decreasing, ""});
  QuadratureResult mass = density_mass(tight, p);
  Real M = mass.value * 2;
  Real far = stieltjes_shin(Rational(1000000), tight, p).value;
  bool tail = compare_threshold(detail::upper(far - 2) - M / 1000000, Rational(0)) == std::partial_ordering::less;
  out.push_back({suite, "|stieltjes(10^6) - 2| <= M 1e-6", tail, "M = " + to_decimal(M, 10)});
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> v = {"omega-oracle", "fundamental-theorem", "series-scan", "eulerian",
                                             "gamma-identities", "cm", "density-oracle", "limits"};
  return v;
}

inline bool is_suite(const std::string& name) {
  if (name == "all") return true;
  for (const auto& s : suite_names()) {
    if (s == name) return true;
  }
  return false;
}

inline std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "omega-oracle") return omega_oracle_suite();
  if (name == "fundamental-theorem") return fundamental_suite();
  if (name == "series-scan") return series_scan_suite();
  if (name == "eulerian") return eulerian_suite();
  if (name == "gamma-identities") return gamma_suite();
  if (name == "cm") return cm_suite();
  if (name == "density-oracle") return density_suite();
  if (name == "limits") return limits_suite();
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace shinlab::verify

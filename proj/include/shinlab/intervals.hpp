#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <thread>
#include <vector>

#include "shinlab/shin_core.hpp"

namespace shinlab {

// I_ell = { k : omega(k) = ell - 1 }, a run of consecutive integers.
struct IntervalRecord {
  long ell;
  long omega;
  long k_min;
  long k_max;
  long length;

  friend bool operator==(const IntervalRecord&, const IntervalRecord&) = default;
};

struct SeriesScan {
  static constexpr long kPeriod = 11;
  static constexpr std::array<long, kPeriod> kPattern{8, 9, 9, 9, 8, 9, 9, 9, 8, 9, 9};
  static constexpr long kFirstAnchor = 2;

  std::vector<long> lengths;               // lengths[ell - 1] = |I_ell|
  std::vector<long> substitution_indices;  // 9 expected, 8 observed
  std::vector<long> unexpected_nines;      // 8 expected, 9 observed
};

struct RatioSample {
  Integer k;
  Integer omega;
  Rational psi;     // k / omega
  Real deviation;   // psi - 1 / (3 - 2 / log 2)
};

struct BoundsReport {
  struct Entry {
    Integer k;
    Rational psi;
    bool below_lower;
    bool above_upper;
  };
  Rational lower{4223, 484};
  Rational upper{4319, 495};
  std::vector<Entry> entries;
  std::vector<Integer> violations;
};

namespace detail {

// omega(k) for k in [first, first + count), split across threads.
inline std::vector<long> omega_block(long first, long count, const Precision& p, unsigned threads) {
  std::vector<long> out(static_cast<std::size_t>(count));
  auto work = [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k) out[static_cast<std::size_t>(k - first)] = omega(k, p).get_si();
  };
  if (threads <= 1) {
    work(first, first + count);
    return out;
  }
  std::vector<std::thread> pool;
  long step = (count + threads - 1) / threads;
  for (long lo = first; lo < first + count; lo += step) {
    pool.emplace_back(work, lo, std::min(lo + step, first + count));
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace detail

// Records I_1 .. I_ell_max in order. With threads > 1 the omega values are
// computed in parallel blocks and merged in k order, so the output is identical.
inline std::vector<IntervalRecord> enumerate(long ell_max, const Precision& p = Precision(30),
                                             unsigned threads = 1) {
  if (ell_max < 1) throw DomainError("enumerate requires ell_max >= 1");
  constexpr long kBlock = 1024;
  std::vector<IntervalRecord> records;
  long current = 0, start = 1, k = 1;
  while (true) {
    std::vector<long> block = detail::omega_block(k, kBlock, p, threads);
    for (long om : block) {
      if (k == 1 && om != 0) throw StructuralAnomaly("omega(1) is " + std::to_string(om) + ", expected 0");
      if (om != current) {
        if (om != current + 1) {
          throw StructuralAnomaly("omega jumps from " + std::to_string(current) + " to " +
                                  std::to_string(om) + " at k = " + std::to_string(k));
        }
        records.push_back({current + 1, current, start, k - 1, k - start});
        if (static_cast<long>(records.size()) == ell_max) return records;
        current = om;
        start = k;
      }
      ++k;
    }
  }
}

// Interval lengths against the period-11 pattern. The phase is re-anchored at
// every substitution (a 9 replaced by an 8).
inline SeriesScan series_scan(long ell_max, const Precision& p = Precision(30), unsigned threads = 1) {
  if (ell_max < SeriesScan::kPeriod) throw DomainError("series_scan requires ell_max >= 11");
  SeriesScan scan;
  for (const auto& r : enumerate(ell_max, p, threads)) {
    if (r.length != 8 && r.length != 9) {
      throw StructuralAnomaly("interval I_" + std::to_string(r.ell) + " has length " +
                              std::to_string(r.length));
    }
    scan.lengths.push_back(r.length);
  }
  long anchor = SeriesScan::kFirstAnchor;
  for (long ell = SeriesScan::kFirstAnchor; ell <= ell_max; ++ell) {
    long phase = (ell - anchor) % SeriesScan::kPeriod;
    long expected = SeriesScan::kPattern[static_cast<std::size_t>(phase)];
    long observed = scan.lengths[static_cast<std::size_t>(ell - 1)];
    if (expected == 9 && observed == 8) {
      scan.substitution_indices.push_back(ell);
      anchor = ell;
    } else if (expected == 8 && observed == 9) {
      scan.unexpected_nines.push_back(ell);
    }
  }
  return scan;
}

inline std::vector<long> gaps(const std::vector<long>& indices) {
  std::vector<long> g;
  for (std::size_t i = 1; i < indices.size(); ++i) g.push_back(indices[i] - indices[i - 1]);
  return g;
}

// 1 / (3 - 2 / log 2), the limit of k / omega(k).
inline Real psi_limit(mpfr_prec_t bits) {
  Real two = Real::from_long(2, bits);
  return Real::from_long(1, bits) / (Real::from_long(3, bits) - two / Real::ln2(bits));
}

inline RatioSample psi(const Integer& k, const Precision& p = Precision()) {
  if (k < 9) throw DomainError("psi requires k >= 9 (omega(k) = 0 below)");
  Rational x(k);
  Integer om = omega(x, p);
  Rational ratio(k, om);
  ratio.canonicalize();
  Real dev = evaluate(p, [&](mpfr_prec_t bits) { return num(ratio, bits) - psi_limit(bits); });
  if (!dev.sign()) throw PrecisionExhausted("sign of the deviation of psi could not be certified");
  return {k, om, ratio, std::move(dev)};
}

// Records (does not assert) whether 4223/484 < psi(k) < 4319/495 for each k.
inline BoundsReport bounds_check(const std::vector<Integer>& ks, const Precision& p = Precision()) {
  BoundsReport report;
  for (const auto& k : ks) {
    if (k < 10000) throw DomainError("bounds_check requires k >= 10^4");
    RatioSample s = psi(k, p);
    bool below = s.psi <= report.lower;
    bool above = s.psi >= report.upper;
    report.entries.push_back({s.k, s.psi, below, above});
    if (below || above) report.violations.push_back(s.k);
  }
  return report;
}

// (10 * upper + lower) / 11, a weighted blend of the two rational bounds.
inline Rational blended_estimate() {
  BoundsReport r;
  Rational b = (10 * r.upper + r.lower) / 11;
  b.canonicalize();
  return b;
}

}  // namespace shinlab

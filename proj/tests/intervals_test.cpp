#include <gtest/gtest.h>

#include <set>

#include "shinlab/intervals.hpp"

using namespace shinlab;

namespace {

// Substitution indices up to ell = 1152 from an independent 120-digit scan.
const std::vector<long> kScannedSubstitutions = {31,  71,  122, 162, 213, 253, 293,  344,  384,
                                                  435, 475, 526, 566, 617, 657, 697,  748,  788,
                                                  839, 879, 930, 970, 1021, 1061, 1101, 1152};

}  // namespace

TEST(Enumerate, FirstRecords) {
  auto one = enumerate(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (IntervalRecord{1, 0, 1, 8, 8}));
  auto three = enumerate(3);
  EXPECT_EQ(three[2], (IntervalRecord{3, 2, 17, 25, 9}));
  auto twelve = enumerate(12);
  EXPECT_EQ(twelve[11].k_min, 96);
  EXPECT_EQ(twelve[11].k_max, 104);
  const long k_min[] = {1, 9, 17, 26, 35, 44, 52, 61, 70, 79, 87, 96};
  for (int i = 0; i < 12; ++i) EXPECT_EQ(twelve[static_cast<std::size_t>(i)].k_min, k_min[i]);
}

TEST(Enumerate, TilesTheIntegers) {
  auto recs = enumerate(300);
  long next = 1;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(recs[i].ell, static_cast<long>(i) + 1);
    EXPECT_EQ(recs[i].omega, static_cast<long>(i));
    EXPECT_EQ(recs[i].k_min, next);
    EXPECT_EQ(recs[i].length, recs[i].k_max - recs[i].k_min + 1);
    next = recs[i].k_max + 1;
  }
}

TEST(Enumerate, ParallelMatchesSequential) {
  EXPECT_EQ(enumerate(250, Precision(30), 1), enumerate(250, Precision(30), 4));
}

TEST(Enumerate, RejectsEmptyRange) { EXPECT_THROW(enumerate(0), DomainError); }

TEST(SeriesScan, ShortRangesHaveNoSubstitutions) {
  EXPECT_TRUE(series_scan(11).substitution_indices.empty());
  EXPECT_TRUE(series_scan(30).substitution_indices.empty());
  EXPECT_THROW(series_scan(10), DomainError);
}

TEST(SeriesScan, PatternConstants) {
  long sum = 0;
  for (long v : SeriesScan::kPattern) sum += v;
  EXPECT_EQ(sum, 96);
  EXPECT_EQ(SeriesScan::kPeriod, 11);
}

TEST(SeriesScan, MatchesIndependentScanTo1152) {
  SeriesScan s = series_scan(1152);
  EXPECT_EQ(s.substitution_indices, kScannedSubstitutions);
  EXPECT_TRUE(s.unexpected_nines.empty());
  for (long g : gaps(s.substitution_indices)) EXPECT_TRUE(g == 40 || g == 51) << g;
}

TEST(SeriesScan, LengthsStayInEightNineTo2000) {
  SeriesScan s = series_scan(2000);
  ASSERT_EQ(s.lengths.size(), 2000u);
  std::set<long> seen(s.lengths.begin(), s.lengths.end());
  EXPECT_EQ(seen, (std::set<long>{8, 9}));
  for (long g : gaps(s.substitution_indices)) EXPECT_TRUE(g == 40 || g == 51) << g;
  // Every substitution falls at pattern position 7 counted from the previous anchor.
  long anchor = SeriesScan::kFirstAnchor;
  for (long ell : s.substitution_indices) {
    EXPECT_EQ((ell - anchor) % 11, 7) << ell;
    anchor = ell;
  }
}

TEST(Psi, SmallKIsExact) {
  RatioSample s = psi(Integer(9));
  EXPECT_EQ(s.psi, Rational(9));
  EXPECT_EQ(s.omega, 1);
  EXPECT_THROW(psi(Integer(8)), DomainError);
}

TEST(Psi, DeviationsAtPowersOfTen) {
  struct Case {
    int j;
    const char* omega;
    double dev;
  };
  // omega(10^j) and psi - limit from an independent 120-digit evaluation.
  const Case cases[] = {{6, "114609", 6.99047686491361e-5},
                        {9, "114609918", 1.69064224765839e-8},
                        {12, "114609918222", 5.57159236193371e-12},
                        {18, "114609918222073185", 2.13278565257493e-17},
                        {33, "114609918222073185280150637996215", 5.52053890039971e-32}};
  for (const auto& c : cases) {
    Integer k;
    mpz_ui_pow_ui(k.get_mpz_t(), 10, static_cast<unsigned long>(c.j));
    RatioSample s = psi(k, Precision(60));
    EXPECT_EQ(s.omega, Integer(c.omega)) << c.j;
    EXPECT_EQ(s.deviation.sign(), 1);
    EXPECT_NEAR(s.deviation.to_double() / c.dev, 1.0, 1e-12) << c.j;
    // The deviation decays like 1/k.
    EXPECT_LT(s.deviation.to_double(), 80.0 / mpz_get_d(k.get_mpz_t()));
  }
}

TEST(Psi, FourNinetyFourApproximation) {
  Integer k;
  mpz_ui_pow_ui(k.get_mpz_t(), 10, 18);
  RatioSample s = psi(k);
  Rational approx = Rational(96, 11) - Rational(1, 494);
  Rational d = abs(s.psi - approx);
  EXPECT_LT(d, Rational(1, 1000000));
}

TEST(Bounds, RecordsViolationsWithoutThrowing) {
  BoundsReport r = bounds_check({Integer(1000000), Integer(1000000000)});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_TRUE(r.entries[0].above_upper);
  EXPECT_FALSE(r.entries[1].above_upper);
  EXPECT_FALSE(r.entries[1].below_lower);
  EXPECT_EQ(r.violations, (std::vector<Integer>{Integer(1000000)}));
  EXPECT_THROW(bounds_check({Integer(9999)}), DomainError);
}

TEST(Bounds, ConstantsAndBlend) {
  BoundsReport r;
  EXPECT_EQ(to_decimal(r.upper, 8), "8.7252525");
  EXPECT_EQ(to_decimal(r.lower, 17), "8.7252066115702479");
  EXPECT_EQ(blended_estimate(), Rational(418079, 47916));
  EXPECT_EQ(to_decimal(blended_estimate(), 23), "8.7252483512814091326488");
}

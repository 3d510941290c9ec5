#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "generators.hpp"
#include "support/oracles.hpp"
#include "oscsum/trigsum/trigsum.hpp"

using namespace oscsum;
using namespace oscsum::trigsum;
using testgen::for_all;
using testgen::Gen;
using Kind = ExtremizerFamily::Kind;

namespace {

std::vector<ExponentPair> lattice(int d) {
  std::vector<ExponentPair> pts;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) pts.emplace_back(double(i) / d, double(j) / d);
  return pts;
}

}  // namespace

TEST(TrigEval, MatchesDirectSum) {
  for_all(40, 21, [](Gen& g) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 50));
    const CoefficientVector a(g.complex_vector(n));
    const double t = g.uniform(-10.0, 10.0);
    Complex direct = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      direct += a[k] * std::polar(1.0, double(k) * t);
    EXPECT_LT(std::abs(trig_eval(a, t) - direct), 1e-11 * (1.0 + std::abs(direct)));
  });
}

TEST(TrigOperator, SamplesMatchHornerIncludingFolding) {
  for_all(20, 22, [](Gen& g) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 40));
    // Grids smaller than N exercise folding of n onto n mod M.
    const std::size_t m = static_cast<std::size_t>(g.integer(2, 80));
    const CoefficientVector a(g.complex_vector(n));
    const CircleGrid grid(m);
    const auto s = TrigOperator(n).samples(a, grid);
    for (std::size_t i = 0; i < m; ++i)
      EXPECT_LT(std::abs(s[i] - trig_eval(a, grid.nodes()[i])), 1e-9);
  });
  EXPECT_THROW(TrigOperator(0), PreconditionError);
  const CoefficientVector two({1.0, 1.0});
  EXPECT_THROW(TrigOperator(3).samples(two, CircleGrid(8)), PreconditionError);
}

TEST(TrigOperator, DiscretizeAgreesWithSamples) {
  const CircleGrid grid(16);
  const auto op = trig_operator(5, grid);
  const CoefficientVector a({1.0, 2.0, Complex(0.0, 1.0), -1.0, 0.5});
  std::vector<Complex> y(16);
  op.apply(a.entries(), y);
  const auto s = TrigOperator(5).samples(a, grid);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_LT(std::abs(y[i] - s[i]), 1e-12);
  EXPECT_DOUBLE_EQ(op.out_weights()[0], 1.0 / 16.0);
}

TEST(Dirichlet, ClosedFormAgainstCosineSumEverywhere) {
  for_all(200, 23, [](Gen& g) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 60));
    // Half the trials sit very close to a multiple of 2 pi.
    const double t = g.coin() ? g.uniform(-7.0, 7.0)
                              : 2.0 * std::numbers::pi * g.integer(-2, 2) +
                                    g.uniform(-1e-7, 1e-7);
    double direct = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      direct += std::cos((double(k) - 0.5 * double(n - 1)) * t);
    EXPECT_NEAR(dirichlet(n, t), direct, 1e-9 * double(n));
  });
  EXPECT_DOUBLE_EQ(dirichlet(7, 0.0), 7.0);
}

TEST(GammaQ, TwoIsOne) { EXPECT_NEAR(gamma_q(2.0), 1.0, 1e-9); }

TEST(GammaQ, FourAgreesWithSimpsonOracleAndClosedForm) {
  const double coarse = oracle::gamma4_simpson(2000.0, 0.01);
  const double fine = oracle::gamma4_simpson(2000.0, 0.005);
  ASSERT_NEAR(coarse, fine, 1e-9);  // the oracle itself has converged
  EXPECT_NEAR(gamma_q(4.0), fine, 1e-8);
  EXPECT_NEAR(gamma_q(4.0), std::pow(2.0 / 3.0, 0.25), 1e-9);
}

TEST(GammaQ, PowerDecreasesAndStaysBelowOnePastTwo) {
  double prev = 2.0;
  for (double q : {2.0, 2.5, 3.0, 4.0, 6.0, 8.0}) {
    const double v = std::pow(gamma_q(q), q);
    EXPECT_LT(v, prev) << "q=" << q;
    prev = v;
  }
  for_all(10, 24, [](Gen& g) {
    const double q = g.uniform(2.05, 10.0);
    EXPECT_LT(gamma_q(q, 1e-8), 1.0);
  });
}

TEST(GammaQ, RejectsQAtMostOne) {
  EXPECT_THROW(gamma_q(1.0), DomainError);
  EXPECT_THROW(gamma_q(0.5), DomainError);
  EXPECT_THROW(gamma_q(3.0, 0.0), PreconditionError);
}

TEST(DirichletNormEven, MatchesTupleEnumeration) {
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(dirichlet_norm_even(n, 2), oracle::equal_sum_tuples(n, 2));
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(dirichlet_norm_even(n, 3), oracle::equal_sum_tuples(n, 3));
  EXPECT_EQ(dirichlet_norm_even(5, 1), 5u);
}

TEST(DirichletNormEven, ClosedFormForFourthPower) {
  for (std::uint64_t n = 1; n <= 64; ++n)
    EXPECT_EQ(dirichlet_norm_even(n, 2), (2 * n * n * n + n) / 3) << n;
  EXPECT_EQ(dirichlet_norm_even(8, 2), 344u);
}

TEST(DirichletNormEven, AgreesWithQuadrature) {
  for (std::size_t n = 1; n <= 32; ++n) {
    const double quad = std::pow(
        dirichlet_norm(n, Exponent(4.0), CircleGrid::for_length(n)), 4.0);
    const double exact = static_cast<double>(dirichlet_norm_even(n, 2));
    EXPECT_NEAR(quad / exact, 1.0, 1e-10) << n;
  }
}

TEST(DirichletNormEven, OverflowReportsWidth) {
  try {
    dirichlet_norm_even(4096, 4);
    FAIL() << "expected overflow";
  } catch (const OverflowError& e) {
    EXPECT_GT(e.required_bits(), 64);
    EXPECT_LE(e.required_bits(), 90);
  }
  const auto wide = dirichlet_norm_even<unsigned __int128>(4096, 4);
  EXPECT_GT(wide >> 64, 0u);
  EXPECT_THROW(dirichlet_norm_even(0, 2), PreconditionError);
}

TEST(GammaConvergenceScan, ApproachesLimit) {
  const std::vector<std::size_t> ns = {64, 256, 1024};
  const auto rows = gamma_convergence_scan(4.0, ns);
  ASSERT_EQ(rows.size(), 3u);
  double prev_err = 1.0;
  for (const ScanRecord& r : rows) {
    EXPECT_EQ(r.label, "dirichlet");
    const double err = std::abs(r.value - r.predicted);
    EXPECT_LT(err, prev_err);
    prev_err = err;
  }
  EXPECT_LT(prev_err, 1e-3);
}

TEST(Extremizer, FamiliesHaveExpectedShape) {
  const auto d = extremizer({Kind::Delta, 5});
  EXPECT_EQ(d[0], Complex(1.0));
  EXPECT_EQ(d[4], Complex(0.0));
  const auto c = extremizer({Kind::Chirp, 37});
  for (std::size_t k = 0; k < 37; ++k) {
    EXPECT_NEAR(std::abs(c[k]), 1.0, 1e-15);
    const Complex direct = std::polar(1.0, -double(k * k) / 37.0);
    EXPECT_LT(std::abs(c[k] - direct), 1e-12);
  }
  EXPECT_THROW(extremizer({Kind::Ones, 0}), PreconditionError);
  EXPECT_STREQ(family_name(Kind::Chirp), "chirp");
}

// Largest value of the chirp defect constant over the reference sweep.
constexpr double kChirpDefectFixture = -1.92;

TEST(ChirpProfile, DefectDoesNotGrowWithN) {
  std::vector<double> ts;
  for (int k = 1; k < 200; ++k) ts.push_back(0.01 * k);
  for (std::size_t n : {64, 256, 1024}) {
    const double c = chirp_profile_check(n, ts);
    EXPECT_LE(c, kChirpDefectFixture + 0.05) << n;
    EXPECT_LE(c, 10.0);
  }
  const std::vector<double> bad = {0.0};
  EXPECT_THROW(chirp_profile_check(16, bad), DomainError);
  const std::vector<double> bad2 = {2.0};
  EXPECT_THROW(chirp_profile_check(16, bad2), DomainError);
}

TEST(CnBounds, RegionARatioIsOneForDelta) {
  for (const ExponentPair& pt : lattice(8)) {
    if (!classify_region(pt).contains(Region::A)) continue;
    for (std::size_t n : {8, 64})
      EXPECT_NEAR(cn_lower_bound(n, pt, Kind::Delta, CircleGrid::for_length(n)),
                  1.0, 1e-12);
  }
}

TEST(CnBounds, RegionBOnesRatioWithinTwoOverPi) {
  for (const ExponentPair& pt : lattice(8)) {
    if (!classify_region(pt).contains(Region::B)) continue;
    for (std::size_t n : {8, 32, 128}) {
      const double v =
          cn_lower_bound(n, pt, Kind::Ones, CircleGrid::for_length(n));
      const double ref = std::pow(double(n), 1.0 - pt.inv_q - pt.inv_p);
      EXPECT_LE(v, ref * (1.0 + 1e-9));
      EXPECT_GE(v, 2.0 / std::numbers::pi * ref);
    }
  }
}

TEST(CnBoundsProperty, FamilyRatiosNeverExceedUpperBound) {
  for_all(60, 25, [](Gen& g) {
    const ExponentPair pt(g.uniform(0.0, 1.0), g.uniform(0.0, 1.0));
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 200));
    const Kind k = static_cast<Kind>(g.integer(0, 2));
    const double v = cn_lower_bound(n, pt, k, CircleGrid::for_length(n));
    EXPECT_LE(v, cn_upper_bound(n, pt) * (1.0 + 1e-9));
    EXPECT_GT(v, 0.0);
  });
}

TEST(CnBounds, UpperBoundPieces) {
  EXPECT_DOUBLE_EQ(cn_upper_bound(100, {1.0, 1.0}), 1.0);
  EXPECT_NEAR(cn_upper_bound(100, {0.0, 0.0}), 100.0, 1e-12);
  EXPECT_NEAR(cn_upper_bound(100, {0.0, 1.0}), 10.0, 1e-12);
}

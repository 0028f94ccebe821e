#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "splitsig/invariants.hpp"
#include "splitsig/twobridge.hpp"

using namespace splitsig;

namespace {

GeneralizedSeifertSystem c432() { return build_gss(ConwayForm({4, 3, 2})); }

GeneralizedSeifertSystem zero_system(int mu, int n) {
  GeneralizedSeifertSystem gss;
  gss.mu = mu;
  gss.rank = n;
  for (const auto& eps : SignPattern::canonical(mu)) gss.matrices.emplace(eps, IntMatrix::Zero(n, n));
  return gss;
}

TorusPoint conjugate(const TorusPoint& omega) {
  std::vector<Fraction> out;
  for (const Fraction& q : omega.fractions()) out.emplace_back(q.den - q.num, q.den);
  return TorusPoint(std::move(out));
}

}  // namespace

TEST(SignatureNullity, Examples) {
  EXPECT_EQ(signature_nullity(c432(), TorusPoint::parse("1/2,1/2")), (InvariantValue{-2, 0}));
  EXPECT_EQ(signature_nullity(zero_system(2, 0), TorusPoint::parse("1/3,1/5")), (InvariantValue{0, 0}));
  EXPECT_EQ(signature_nullity(zero_system(2, 3), TorusPoint::parse("1/3,1/5")), (InvariantValue{0, 3}));
  EXPECT_THROW(signature_nullity(c432(), TorusPoint::parse("1/2")), std::invalid_argument);
}

TEST(SignatureNullity, ExactAtMinusOnes) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int mu = 1 + trial % 3;
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, mu, trial % 7, -4, 4);
    const SignatureResult exact = integer_symmetric_signature(h_at_minus_ones(gss));
    const InvariantValue v = signature_nullity(gss, TorusPoint::diagonal(mu, Fraction(1, 2)));
    EXPECT_EQ(v, (InvariantValue{exact.signature, exact.nullity}));
  }
}

TEST(SignatureNullity, ConjugatePointGivesSameValues) {
  // H(conj omega) is the transpose of H(omega).
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int mu = 1 + trial % 3;
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, mu, 1 + trial % 5, -4, 4);
    const TorusPoint omega = oracle::random_point(rng, mu);
    EXPECT_EQ(signature_nullity(gss, omega), signature_nullity(gss, conjugate(omega)));
  }
}

TEST(SignatureNullity, BoundedByDimension) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int mu = 1 + trial % 3;
    const int n = trial % 7;
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, mu, n, -3, 3);
    const InvariantValue v = signature_nullity(gss, oracle::random_point(rng, mu));
    EXPECT_GE(v.eta, 0);
    EXPECT_LE(std::abs(v.sigma) + v.eta, n);
    EXPECT_EQ((v.sigma + v.eta + n) % 2, 0);
  }
}

TEST(SignatureNullity, AgreesWithGeneralEigensolver) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int mu = 1 + trial % 3;
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, mu, 1 + trial % 6, -5, 5);
    const TorusPoint omega = oracle::random_point(rng, mu);
    const ComplexMatrix h = assemble_h(gss, omega);
    const auto expected = oracle::general_inertia(h, 1e-9 * std::max(1.0, h.cwiseAbs().maxCoeff()));
    const InvariantValue v = signature_nullity(gss, omega);
    EXPECT_EQ(v.sigma, expected.signature());
    EXPECT_EQ(v.eta, expected.zeros);
  }
}

TEST(LtRecovery, Examples) {
  GeneralizedSeifertSystem gss = c432();
  EXPECT_THROW(lt_signature_from_multivariable(gss, Fraction(1, 2)), std::invalid_argument);
  for (int lambda : {-3, 0, 1, 4}) {
    IntMatrix lk = IntMatrix::Zero(2, 2);
    lk(0, 1) = lk(1, 0) = lambda;
    gss.linking = lk;
    EXPECT_EQ(lt_signature_from_multivariable(gss, Fraction(1, 2)), (InvariantValue{-2 - lambda, 0}));
  }
  GeneralizedSeifertSystem empty = zero_system(2, 0);
  empty.linking = IntMatrix::Zero(2, 2);
  EXPECT_EQ(lt_signature_from_multivariable(empty, Fraction(1, 2)), (InvariantValue{0, 0}));

  std::mt19937 rng(47);
  const GeneralizedSeifertSystem knot = oracle::random_system(rng, 1, 4, -3, 3);
  EXPECT_EQ(lt_signature_from_multivariable(knot, Fraction(1, 3)),
            signature_nullity(knot, TorusPoint::parse("1/3")));
}

TEST(TorusScan, SingleSample) {
  const ScanGrid grid = torus_scan(c432(), 1);
  ASSERT_EQ(grid.samples.size(), 1u);
  EXPECT_EQ(grid.samples[0].omega.str(), "1/2,1/2");
  EXPECT_EQ(grid.samples[0].sigma, -2);
  EXPECT_EQ(grid.samples[0].eta, 0);
}

TEST(TorusScan, ZeroSystem) {
  const ScanGrid grid = torus_scan(zero_system(2, 2), 3);
  ASSERT_EQ(grid.samples.size(), 9u);
  for (const auto& s : grid.samples) {
    EXPECT_EQ(s.sigma, 0);
    EXPECT_EQ(s.eta, 2);
    EXPECT_TRUE(s.near_zero);
  }
  EXPECT_EQ(grid.at({1, 2}).omega.str(), "1/2,3/4");
}

TEST(TorusScan, OrderingAndErrors) {
  const ScanGrid grid = torus_scan(c432(), 3);
  EXPECT_EQ(grid.samples[1].omega.str(), "1/4,1/2");
  EXPECT_EQ(grid.samples[3].omega.str(), "1/2,1/4");
  EXPECT_THROW(grid.at({3, 0}), std::out_of_range);
  EXPECT_THROW(torus_scan(c432(), 0), std::invalid_argument);
}

TEST(TorusScan, ExampleSystemAgainstOracle) {
  const GeneralizedSeifertSystem gss = c432();
  const ScanGrid grid = torus_scan(gss, 31);
  ASSERT_EQ(grid.samples.size(), 961u);
  EXPECT_EQ(grid.at({15, 15}).sigma, -2);
  const IntMatrix app = gss.matrix(SignPattern::parse("++"));
  const IntMatrix apm = gss.matrix(SignPattern::parse("+-"));
  for (const InvariantSample& s : grid.samples) {
    const auto& q = s.omega.fractions();
    const ComplexMatrix h = oracle::h_two_colors(app, apm, q[0].value(), q[1].value());
    const auto expected = oracle::inertia2(h(0, 0).real(), h(0, 1), h(1, 1).real(),
                                           1e-9 * std::max(1.0, h.cwiseAbs().maxCoeff()));
    EXPECT_EQ(s.sigma, expected.signature()) << s.omega.str();
    EXPECT_EQ(s.eta, expected.zeros) << s.omega.str();
    EXPECT_NEAR(s.abs_det, std::abs(h.determinant()), 1e-9 * std::max(1.0, s.abs_det));
    if (s.eta > 0) EXPECT_TRUE(s.near_zero);
  }
}

TEST(TorusScan, SignatureConstantAwayFromDetZeros) {
  const GeneralizedSeifertSystem gss = c432();
  const ScanGrid grid = torus_scan(gss, 31);
  const ScanBoundaryReport report = check_signature_regions(gss, grid);
  EXPECT_EQ(report.pairs_checked, 2 * 31 * 30);
  EXPECT_GT(report.sigma_changes, 0);
  EXPECT_EQ(report.separated_changes, report.sigma_changes);
  EXPECT_TRUE(report.unexplained.empty());
}

TEST(LocateDetZero, FindsKnownCurve) {
  // First horizontal sigma change of the example scan.
  const GeneralizedSeifertSystem gss = c432();
  const ScanGrid grid = torus_scan(gss, 31);
  for (std::size_t i = 0; i + 1 < grid.samples.size(); ++i) {
    if (i % 31 == 30 || grid.samples[i].sigma == grid.samples[i + 1].sigma) continue;
    const auto found = locate_det_zero(gss, grid.samples[i].omega, grid.samples[i + 1].omega);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(found->near_zero);
    break;
  }
  // Zero system: every point is flagged.
  EXPECT_TRUE(locate_det_zero(zero_system(2, 1), TorusPoint::parse("1/3,1/3"), TorusPoint::parse("1/2,1/3")));
  // Empty system has det 1 everywhere.
  EXPECT_FALSE(locate_det_zero(zero_system(2, 0), TorusPoint::parse("1/3,1/3"), TorusPoint::parse("1/2,1/3")));
}

TEST(EstimateBeta, Examples) {
  EXPECT_EQ(estimate_beta(c432(), {TorusPoint::parse("1/2,1/2")}), 0);
  EXPECT_EQ(estimate_beta(zero_system(2, 2), {TorusPoint::parse("1/2,1/3"), TorusPoint::parse("1/5,1/7")}), 2);
  EXPECT_EQ(estimate_beta(zero_system(2, 0), {TorusPoint::parse("1/2,1/3")}), 0);
  EXPECT_THROW(estimate_beta(c432(), {}), std::invalid_argument);
}

TEST(DetZeroThreshold, Shape) {
  EXPECT_EQ(det_zero_threshold(ComplexMatrix(0, 0), 1e-9), 0.0);
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = 4.0;
  EXPECT_DOUBLE_EQ(det_zero_threshold(h, 1e-9), 1e-9 * 4 * 8);
}

TEST(ScanCsv, Format) {
  std::ostringstream out;
  write_scan_csv(out, torus_scan(c432(), 1));
  EXPECT_EQ(out.str(), "theta_1,theta_2,sigma,eta,absdet\n0.5,0.5,-2,0,176\n");
}

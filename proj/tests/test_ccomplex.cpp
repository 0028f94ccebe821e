#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "splitsig/ccomplex.hpp"

using namespace splitsig;

namespace {

IntMatrix m2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IntMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

GeneralizedSeifertSystem example_c432() {
  GeneralizedSeifertSystem gss;
  gss.name = "C(4,3,2)";
  gss.mu = 2;
  gss.rank = 2;
  gss.matrices.emplace(SignPattern::parse("++"), m2(0, 0, 0, -2));
  gss.matrices.emplace(SignPattern::parse("+-"), m2(-1, 1, 0, -1));
  return gss;
}

GeneralizedSeifertSystem trefoil_like() {
  GeneralizedSeifertSystem gss;
  gss.mu = 1;
  gss.rank = 2;
  gss.matrices.emplace(SignPattern::parse("+"), m2(-1, 1, 0, -1));
  return gss;
}

}  // namespace

TEST(SignPattern, ParseAndCanonical) {
  const SignPattern p = SignPattern::parse("+-+");
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p[1], -1);
  EXPECT_TRUE(p.is_canonical());
  EXPECT_FALSE(p.negated().is_canonical());
  EXPECT_EQ(p.negated().str(), "-+-");
  EXPECT_EQ(SignPattern::parse("+\xE2\x88\x92").str(), "+-");
  EXPECT_THROW(SignPattern::parse("+x"), std::invalid_argument);
  EXPECT_THROW(SignPattern::parse(""), std::invalid_argument);
  EXPECT_EQ(SignPattern::all(3).size(), 8u);
  EXPECT_EQ(SignPattern::canonical(3).size(), 4u);
}

TEST(Fraction, ParseAndReduce) {
  EXPECT_EQ(Fraction::parse("2/4"), Fraction(1, 2));
  EXPECT_EQ(Fraction::parse(" 3/8 "), Fraction(3, 8));
  EXPECT_EQ(Fraction::parse("0"), Fraction(0, 1));
  EXPECT_THROW(Fraction::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(Fraction::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Fraction::parse("a/3"), std::invalid_argument);
  EXPECT_EQ(midpoint(Fraction(1, 4), Fraction(1, 2)), Fraction(3, 8));
}

TEST(TorusPoint, RootsOfUnity) {
  EXPECT_EQ(unit_root(Fraction(1, 2)), std::complex<double>(-1, 0));
  EXPECT_EQ(unit_root(Fraction(1, 4)), std::complex<double>(0, 1));
  const auto w = unit_root(Fraction(1, 6));
  EXPECT_NEAR(w.real(), 0.5, 1e-15);
  EXPECT_NEAR(w.imag(), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_THROW(TorusPoint::parse("0,1/2"), std::invalid_argument);
  EXPECT_THROW(TorusPoint::parse("1,1/2"), std::invalid_argument);
  EXPECT_THROW(TorusPoint::parse("3/2"), std::invalid_argument);
  EXPECT_TRUE(TorusPoint::parse("1/2,2/4").is_all_minus_one());
  EXPECT_FALSE(TorusPoint::parse("1/2,1/3").is_all_minus_one());
}

TEST(Validate, ExampleSystemIsValid) { EXPECT_TRUE(validate(example_c432()).empty()); }

TEST(Validate, DimensionViolation) {
  GeneralizedSeifertSystem gss = example_c432();
  gss.matrices[SignPattern::parse("+-")] = IntMatrix::Zero(2, 3);
  const auto v = validate(gss);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].find("+-"), std::string::npos);
  EXPECT_NE(v[0].find("2x3"), std::string::npos);
}

TEST(Validate, MissingPattern) {
  GeneralizedSeifertSystem gss = example_c432();
  gss.matrices.erase(SignPattern::parse("+-"));
  const auto v = validate(gss);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], "missing pattern +-");
}

TEST(Validate, NonCanonicalAndLinking) {
  GeneralizedSeifertSystem gss = example_c432();
  gss.matrices.emplace(SignPattern::parse("--"), IntMatrix::Zero(2, 2));
  IntMatrix lk = IntMatrix::Zero(2, 2);
  lk(0, 1) = 1;
  gss.linking = lk;
  const auto v = validate(gss);
  EXPECT_EQ(v.size(), 2u);
  EXPECT_THROW(require_valid(gss), std::invalid_argument);
}

TEST(AssembleH, ExampleAtMinusOnes) {
  const ComplexMatrix h = assemble_h(example_c432(), TorusPoint::parse("1/2,1/2"));
  const IntMatrix expected = 4 * m2(-2, 1, 1, -6);
  EXPECT_TRUE(h.isApprox(expected.cast<double>().cast<std::complex<double>>(), 1e-15));
  EXPECT_EQ(h_at_minus_ones(example_c432()), expected);
}

TEST(AssembleH, ZeroSystem) {
  GeneralizedSeifertSystem gss;
  gss.mu = 2;
  gss.rank = 3;
  for (const auto& eps : SignPattern::canonical(2)) gss.matrices.emplace(eps, IntMatrix::Zero(3, 3));
  EXPECT_EQ(assemble_h(gss, TorusPoint::parse("1/3,1/7")).cwiseAbs().maxCoeff(), 0.0);
  gss.rank = 1;
  for (auto& [eps, m] : gss.matrices) m = IntMatrix::Zero(1, 1);
  EXPECT_EQ(h_at_minus_ones(gss), IntMatrix::Zero(1, 1));
}

TEST(AssembleH, SingleColor) {
  const GeneralizedSeifertSystem gss = trefoil_like();
  EXPECT_EQ(h_at_minus_ones(gss), m2(-4, 2, 2, -4));
  const ComplexMatrix h = assemble_h(gss, TorusPoint::parse("1/2"));
  EXPECT_TRUE(h.isApprox(m2(-4, 2, 2, -4).cast<double>().cast<std::complex<double>>()));
  EXPECT_EQ(hermitian_signature(h).signature, -2);
}

TEST(AssembleH, SingleColorConventionsAgree) {
  // (1 - conj w) A + (1 - w) A^T versus the conjugate convention (1 - w) A + (1 - conj w) A^T.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, 1, 1 + trial % 5, -5, 5);
    const TorusPoint omega = oracle::random_point(rng, 1);
    const std::complex<double> w = omega.coordinate(0);
    const ComplexMatrix a = gss.matrix(SignPattern::parse("+")).cast<double>().cast<std::complex<double>>();
    const ComplexMatrix displayed = (1.0 - std::conj(w)) * a + (1.0 - w) * ComplexMatrix(a.transpose());
    const ComplexMatrix other = (1.0 - w) * a + (1.0 - std::conj(w)) * ComplexMatrix(a.transpose());
    EXPECT_TRUE(assemble_h(gss, omega).isApprox(displayed, 1e-12));
    EXPECT_EQ(hermitian_signature(displayed), hermitian_signature(other));
  }
}

TEST(AssembleH, Errors) {
  EXPECT_THROW(assemble_h(example_c432(), TorusPoint::parse("1/2")), std::invalid_argument);
  GeneralizedSeifertSystem bad = example_c432();
  bad.matrices.erase(SignPattern::parse("++"));
  EXPECT_THROW(assemble_h(bad, TorusPoint::parse("1/2,1/2")), std::invalid_argument);
}

TEST(AssembleH, HermitianForRandomSystems) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const int mu = 1 + trial % 3;
    const int n = trial % 7;
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, mu, n, -5, 5);
    const ComplexMatrix h = assemble_h(gss, oracle::random_point(rng, mu));
    if (n == 0) continue;
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    EXPECT_LE((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12 * scale);
  }
}

TEST(AssembleH, TransposeIdentityIsStructural) {
  const GeneralizedSeifertSystem gss = example_c432();
  for (const auto& eps : SignPattern::all(2)) {
    EXPECT_EQ(gss.matrix(eps.negated()), IntMatrix(gss.matrix(eps).transpose()));
  }
}

TEST(HAtMinusOnes, AgreesWithAssembly) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int mu = 1 + trial % 3;
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, mu, trial % 6, -5, 5);
    const ComplexMatrix h = assemble_h(gss, TorusPoint::diagonal(mu, Fraction(1, 2)));
    const ComplexMatrix exact = h_at_minus_ones(gss).cast<double>().cast<std::complex<double>>();
    if (h.size() == 0) continue;
    EXPECT_LE((h - exact).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(AssembleH, MatchesTermByTermOracle) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const GeneralizedSeifertSystem gss = oracle::random_system(rng, 2, 1 + trial % 4, -5, 5);
    const TorusPoint omega = oracle::random_point(rng, 2);
    const ComplexMatrix expected =
        oracle::h_two_colors(gss.matrix(SignPattern::parse("++")), gss.matrix(SignPattern::parse("+-")),
                             omega.fractions()[0].value(), omega.fractions()[1].value());
    EXPECT_TRUE(assemble_h(gss, omega).isApprox(expected, 1e-12));
  }
}

#include <gtest/gtest.h>

#include "pairstab/errors.hpp"
#include "pairstab/stability.hpp"
#include "support/random.hpp"

using namespace pairstab;
using pairstab::testing::Rng;
using pairstab::testing::uniform;

namespace {

TargetSheaf point_torsion() {
  TargetSheaf t;
  t.kind = TargetKind::torsion_on_divisor;
  t.rank = 0;
  t.degree = 2;
  t.h0 = 2;
  t.level_length = 1;
  return t;
}

PairProblem level_problem(const Rational& genus) {
  return PairProblem::make(VarietyContext::curve(genus), 2, 0, {}, Polynomial::constant(1), point_torsion());
}

SubobjectWitness witness(int rank, const Rational& degree, bool in_kernel) {
  SubobjectWitness w;
  w.label = "G";
  w.rank = rank;
  w.degree = degree;
  w.in_kernel = in_kernel;
  return w;
}

const Rational& rational_margin(const Verdict& v) { return std::get<Rational>(v.margin); }

}  // namespace

TEST(StandardPolynomial, Examples) {
  const auto pr = level_problem(2);
  EXPECT_EQ(standard_polynomial(pr, 2, 1), pr.chi);
  EXPECT_EQ(standard_polynomial(pr, 2, 0), pr.chi - pr.delta);
  EXPECT_EQ(standard_polynomial(pr, 0, 1), pr.delta);
  EXPECT_THROW(standard_polynomial(pr, 3, 1), DomainError);
  EXPECT_THROW(standard_polynomial(pr, 1, 2), DomainError);
}

TEST(StandardPolynomial, EpsilonStepIsDelta) {
  const auto pr = level_problem(3);
  for (int rho = 0; rho <= 2; ++rho) {
    EXPECT_EQ(standard_polynomial(pr, rho, 1) - standard_polynomial(pr, rho, 0), pr.delta);
  }
}

TEST(CheckChi, LevelStructureExamples) {
  for (int g = 2; g <= 5; ++g) {
    const auto pr = level_problem(g);
    const auto fail = check_chi(pr, witness(1, 0, true), Mode::semistable);
    EXPECT_FALSE(fail.satisfied);
    EXPECT_EQ(std::get<Polynomial>(fail.margin), Polynomial::constant(ratio(-1, 2)));

    const auto pass = check_chi(pr, witness(1, -1, true), Mode::stable);
    EXPECT_TRUE(pass.satisfied);
    EXPECT_TRUE(pass.strict);

    const auto outside = check_chi(pr, witness(1, 0, false), Mode::stable);
    EXPECT_TRUE(outside.satisfied);
    EXPECT_TRUE(outside.strict);
  }
}

TEST(CheckChi, ImproperWitnessIsEqualityInSemistableModeOnly) {
  const auto pr = level_problem(2);
  auto w = witness(2, 0, false);
  w.proper = false;
  const auto v = check_chi(pr, w, Mode::semistable);
  EXPECT_TRUE(v.satisfied);
  EXPECT_FALSE(v.strict);
  EXPECT_TRUE(std::get<Polynomial>(v.margin).is_zero());
  EXPECT_THROW(check_chi(pr, w, Mode::stable), DomainError);
}

TEST(CheckChi, RequiresChiAndPairRegime) {
  const std::vector<Rational> lower = {0};
  const auto surface = PairProblem::make(VarietyContext::surface(1, -3), 2, -1, lower, Polynomial{1, 1}, TargetSheaf{});
  EXPECT_THROW(check_chi(surface, witness(1, -1, true), Mode::semistable), DomainError);
  const auto quot = PairProblem::make(VarietyContext::curve(2), 2, 0, {}, Polynomial{0, 1}, TargetSheaf{});
  EXPECT_THROW(check_chi(quot, witness(1, -1, true), Mode::semistable), DomainError);
}

TEST(CheckMu, Examples) {
  const auto pr = level_problem(2);
  const auto in_kernel = check_mu(pr, witness(1, 0, true), Mode::semistable);
  EXPECT_FALSE(in_kernel.satisfied);
  const auto outside = check_mu(pr, witness(1, 0, false), Mode::stable);
  EXPECT_TRUE(outside.strict);
  EXPECT_EQ(rational_margin(outside), ratio(1, 2));
  EXPECT_THROW(check_mu(pr, witness(2, 0, false), Mode::semistable), DomainError);
  EXPECT_THROW(check_mu(pr, witness(0, 0, false), Mode::semistable), DomainError);
}

TEST(CheckSectional, Examples) {
  const auto pr = level_problem(2);
  auto w = witness(1, 0, true);
  w.section_count = 4;
  const auto v = check_sectional(pr, w, 1, 10, Mode::stable);
  EXPECT_TRUE(v.strict);
  EXPECT_EQ(rational_margin(v), ratio(1, 2));

  w = witness(1, 0, false);
  w.section_count = 6;
  EXPECT_FALSE(check_sectional(pr, w, 1, 10, Mode::semistable).satisfied);

  w.section_count = 0;
  EXPECT_TRUE(check_sectional(pr, w, 1, 10, Mode::stable).satisfied);
}

TEST(CheckSectional, Errors) {
  const auto pr = level_problem(2);
  auto w = witness(1, 0, true);
  EXPECT_THROW(check_sectional(pr, w, 1, 10, Mode::semistable), DomainError);
  w.section_count = 1;
  EXPECT_THROW(check_sectional(pr, w, 10, 10, Mode::semistable), DomainError);
  EXPECT_THROW(check_sectional(pr, w, 0, 10, Mode::semistable), DomainError);
}

TEST(CheckSectional, MonotoneInSectionCount) {
  Rng rng(301);
  const auto pr = level_problem(2);
  for (int n = 0; n < 300; ++n) {
    auto w = witness(static_cast<int>(uniform(rng, 0, 2)), 0, pairstab::testing::coin(rng));
    const Rational p = uniform(rng, 2, 20);
    const Rational db = p * ratio(uniform(rng, 1, 9), 10);
    bool failed = false;
    for (int c = 0; c <= 25; ++c) {
      w.section_count = c;
      const bool ok = check_sectional(pr, w, db, p, Mode::semistable).satisfied;
      if (failed) EXPECT_FALSE(ok);
      failed = failed || !ok;
    }
  }
}

TEST(ImplicationChain, RandomWitnessesRespectChain) {
  Rng rng(302);
  for (int n = 0; n < 1000; ++n) {
    const int r = static_cast<int>(uniform(rng, 2, 5));
    const auto pr = PairProblem::make(VarietyContext::curve(uniform(rng, 0, 4)), r, uniform(rng, -10, 10), {},
                                      Polynomial::constant(pairstab::testing::random_positive_rational(rng, 12, 3)),
                                      TargetSheaf{});
    auto w = witness(static_cast<int>(uniform(rng, 1, r - 1)), uniform(rng, -8, 8), pairstab::testing::coin(rng));
    const auto report = implication_chain(pr, w);
    EXPECT_TRUE(report.consistent());
    // Strict failure at degree level forces failure of the chi condition.
    if (rational_margin(report.mu) < 0) EXPECT_FALSE(report.chi.satisfied);
  }
}

TEST(ImplicationChain, RejectsBoundaryRanks) {
  const auto pr = level_problem(2);
  EXPECT_THROW(implication_chain(pr, witness(0, 0, false)), DomainError);
  EXPECT_THROW(implication_chain(pr, witness(2, 0, true)), DomainError);
}

TEST(CurveThreshold, Examples) {
  EXPECT_EQ(curve_threshold(2, 2, 1), 7);
  EXPECT_EQ(curve_threshold(1, 0, 0), -1);
  EXPECT_EQ(curve_threshold(3, 2, 5) - curve_threshold(3, 2, 2), 3);
  EXPECT_EQ(curve_threshold(4, 2, 1) - curve_threshold(3, 2, 1), 3);
}

TEST(Mode, Parse) {
  EXPECT_EQ(parse_mode("stable"), Mode::stable);
  EXPECT_EQ(parse_mode("semistable"), Mode::semistable);
  EXPECT_THROW(parse_mode("meh"), InputError);
}

#include <gtest/gtest.h>

#include "pairstab/errors.hpp"
#include "pairstab/gitweights.hpp"
#include "pairstab/stability.hpp"
#include "support/random.hpp"

using namespace pairstab;
using pairstab::testing::Rng;
using pairstab::testing::uniform;

namespace {

WeightVector wv(std::initializer_list<Rational> xs) { return WeightVector(std::vector<Rational>(xs)); }

std::vector<Rational> rs(std::initializer_list<Rational> xs) { return xs; }

const BasisProfile kSimple{2, 1, 1, {2}};

}  // namespace

TEST(WeightVector, Invariants) {
  EXPECT_NO_THROW(wv({-1, 1}));
  EXPECT_THROW(wv({0, 0}), DomainError);
  EXPECT_THROW(wv({1, -1}), DomainError);
  EXPECT_THROW(wv({-1, 2}), DomainError);
  EXPECT_THROW(wv({0}), DomainError);
}

TEST(BasisProfile, Validation) {
  EXPECT_NO_THROW((BasisProfile{4, 2, 3, {1, 4}}.validate()));
  EXPECT_THROW((BasisProfile{4, 2, 3, {4, 1}}.validate()), DomainError);
  EXPECT_THROW((BasisProfile{4, 2, 5, {1, 4}}.validate()), DomainError);
  EXPECT_THROW((BasisProfile{4, 2, 1, {1}}.validate()), DomainError);
  EXPECT_THROW((BasisProfile{1, 1, 1, {1}}.validate()), DomainError);
}

TEST(MuHat, Examples) {
  for (const Rational& eta : rs({ratio(1, 3), 1, 5})) EXPECT_EQ(mu_hat(kSimple, wv({-1, 1}), eta), eta - 1);
  EXPECT_THROW(mu_hat(kSimple, wv({-1, 0, 1}), 1), DomainError);
}

TEST(MuHat, PositivelyHomogeneous) {
  Rng rng(501);
  for (int n = 0; n < 300; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 8);
    const auto g = pairstab::testing::random_weight_vector(rng, pr.p, 10, 4);
    const Rational c = pairstab::testing::random_positive_rational(rng, 9, 4);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 9, 4);
    std::vector<Rational> scaled = g.values();
    for (auto& x : scaled) x *= c;
    EXPECT_EQ(mu_hat(pr, WeightVector(scaled), eta), c * mu_hat(pr, g, eta));
  }
}

TEST(SpecialWeightVector, Examples) {
  EXPECT_EQ(special_weight_vector(4, 1).values(), rs({-3, 1, 1, 1}));
  EXPECT_EQ(special_weight_vector(2, 1).values(), rs({-1, 1}));
  EXPECT_THROW(special_weight_vector(4, 0), DomainError);
  EXPECT_THROW(special_weight_vector(4, 4), DomainError);
  for (int p = 2; p <= 12; ++p) {
    for (int i = 1; i < p; ++i) {
      Rational sum = 0;
      const auto gamma = special_weight_vector(p, i);
      for (const auto& x : gamma.values()) sum += x;
      EXPECT_EQ(sum, 0);
    }
  }
}

TEST(ConeCoefficients, Examples) {
  for (int p = 2; p <= 7; ++p) {
    for (int i = 1; i < p; ++i) {
      const auto c = cone_coefficients(special_weight_vector(p, i));
      for (int k = 1; k < p; ++k) EXPECT_EQ(c[static_cast<std::size_t>(k - 1)], k == i ? 1 : 0);
    }
  }
  EXPECT_EQ(cone_coefficients(wv({-3, -1, 1, 3})), rs({ratio(1, 2), ratio(1, 2), ratio(1, 2)}));
}

TEST(ConeCoefficients, ReconstructRandomVectors) {
  Rng rng(502);
  for (int n = 0; n < 1000; ++n) {
    const int p = static_cast<int>(uniform(rng, 2, 12));
    const auto g = pairstab::testing::random_weight_vector(rng, p, 30, 9);
    const auto c = cone_coefficients(g);
    std::vector<Rational> sum(g.size(), Rational(0));
    for (int i = 1; i < p; ++i) {
      EXPECT_GE(c[static_cast<std::size_t>(i - 1)], 0);
      const auto gi = special_weight_vector(p, i);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += c[static_cast<std::size_t>(i - 1)] * gi[k];
    }
    EXPECT_EQ(sum, g.values());
  }
}

TEST(CriticalMu, Examples) {
  EXPECT_EQ(critical_mu(kSimple, 1, 1), 0);
  EXPECT_EQ(critical_mu(kSimple, ratio(1, 2), 1), ratio(-1, 2));
  EXPECT_THROW(critical_mu(kSimple, 1, 2), DomainError);
}

TEST(CriticalMu, MatchesMuHatOnSpecialVectors) {
  Rng rng(503);
  for (int n = 0; n < 300; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 9);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 9, 4);
    for (int i = 1; i < pr.p; ++i) EXPECT_EQ(critical_mu(pr, eta, i), mu_hat(pr, special_weight_vector(pr.p, i), eta));
  }
}

TEST(CriticalMu, LinearOverTheCone) {
  Rng rng(504);
  for (int n = 0; n < 300; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 9);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 9, 4);
    const auto g = pairstab::testing::random_weight_vector(rng, pr.p, 20, 5);
    const auto c = cone_coefficients(g);
    Rational sum = 0;
    for (int i = 1; i < pr.p; ++i) sum += c[static_cast<std::size_t>(i - 1)] * critical_mu(pr, eta, i);
    EXPECT_EQ(sum, mu_hat(pr, g, eta));
  }
}

TEST(CriticalMu, DecreasesAwayFromJumps) {
  Rng rng(505);
  for (int n = 0; n < 500; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 10);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 9, 4);
    for (int i = 1; i + 1 < pr.p; ++i) {
      const int next = i + 1;
      const bool jump = next == pr.ell || std::find(pr.K.begin(), pr.K.end(), next) != pr.K.end();
      if (!jump) EXPECT_LE(critical_mu(pr, eta, next), critical_mu(pr, eta, i));
    }
  }
}

TEST(CriticalIndices, TerminalIndexCompletesTheReduction) {
  // {ell-1} and {k_j-1} alone miss i = p-1; with it adjoined the minimum matches.
  const BasisProfile pr{4, 1, 1, {2}};
  EXPECT_EQ(critical_indices(pr), (std::vector<int>{1}));
  EXPECT_EQ(critical_mu(pr, 3, 1), 8);
  EXPECT_EQ(critical_mu(pr, 3, 3), 4);
  Rng rng(506);
  for (int n = 0; n < 500; ++n) {
    const auto q = pairstab::testing::random_profile(rng, 10);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 12, 5);
    auto idx = critical_indices(q);
    idx.push_back(q.p - 1);
    Rational all = critical_mu(q, eta, 1);
    for (int i = 2; i < q.p; ++i) all = std::min(all, critical_mu(q, eta, i));
    Rational crit = critical_mu(q, eta, idx.front());
    for (int i : idx) crit = std::min(crit, critical_mu(q, eta, i));
    EXPECT_EQ(all, crit);
  }
}

TEST(HilbertVerdict, SimpleProfile) {
  const auto at1 = hilbert_verdict(kSimple, 1, Mode::semistable);
  EXPECT_TRUE(at1.satisfied);
  EXPECT_FALSE(at1.strict);
  EXPECT_FALSE(hilbert_verdict(kSimple, 1, Mode::stable).satisfied);
  EXPECT_TRUE(hilbert_verdict(kSimple, 2, Mode::stable).satisfied);
  EXPECT_FALSE(hilbert_verdict(kSimple, ratio(1, 2), Mode::semistable).satisfied);
  ASSERT_EQ(at1.rows.size(), 1u);
  EXPECT_EQ(at1.rows[0].condition, 2);
}

TEST(HilbertVerdict, ImmediateGeneration) {
  const BasisProfile pr{4, 2, 1, {1, 2}};
  const auto v = hilbert_verdict(pr, 1, Mode::stable);
  EXPECT_TRUE(v.satisfied);
  ASSERT_EQ(v.rows.size(), 2u);
  EXPECT_EQ(v.rows[0].value, 4);
  EXPECT_EQ(v.rows[1].value, 5);
}

TEST(HilbertVerdict, RowsForLateEll) {
  // ell = 3 > k_2: rows (1) j = 2, 3 and (2) j = 1, 2.
  const BasisProfile pr{4, 2, 3, {1, 2}};
  const auto rows = condition_rows(pr, 1);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].condition, 1);
  EXPECT_EQ(rows[0].j, 2);
  EXPECT_EQ(rows[0].value, 4 * 1 - 1 * 3);
  EXPECT_EQ(rows[1].j, 3);
  EXPECT_EQ(rows[1].value, 4 * 2 - 2 * 3);
}

TEST(HilbertVerdict, Condition1RowsDecreaseInEta) {
  Rng rng(507);
  for (int n = 0; n < 300; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 9);
    const Rational a = pairstab::testing::random_positive_rational(rng, 9, 4);
    const Rational b = a + pairstab::testing::random_positive_rational(rng, 9, 4);
    const auto ra = condition_rows(pr, a);
    const auto rb = condition_rows(pr, b);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].condition == 1) EXPECT_LT(rb[k].value, ra[k].value);
    }
  }
}

TEST(HilbertVerdict, EquivalentToCriticalValuesAndOracle) {
  Rng rng(508);
  for (int n = 0; n < 200; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 5);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 9, 4);
    Rational crit = critical_mu(pr, eta, 1);
    for (int i = 2; i < pr.p; ++i) crit = std::min(crit, critical_mu(pr, eta, i));
    for (Mode mode : {Mode::semistable, Mode::stable}) {
      const bool by_critical = mode == Mode::stable ? crit > 0 : crit >= 0;
      const auto table = hilbert_verdict(pr, eta, mode);
      EXPECT_EQ(table.satisfied, by_critical);
      EXPECT_EQ(table.satisfied, brute_force_verdict(pr, eta, pr.p, mode).satisfied);
    }
  }
}

TEST(BruteForce, Examples) {
  const auto v = brute_force_verdict(kSimple, ratio(1, 2), 2, Mode::semistable);
  EXPECT_FALSE(v.satisfied);
  EXPECT_EQ(v.minimum, ratio(-2, 1));
  EXPECT_EQ(v.minimizer, rs({-4, 4}));
  EXPECT_EQ(v.vectors_checked, 4u);
  EXPECT_THROW(brute_force_verdict(kSimple, 1, 0, Mode::semistable), DomainError);
  EXPECT_THROW(brute_force_verdict(kSimple, 0, 1, Mode::semistable), DomainError);
}

TEST(BruteForce, ExactFallbackAgreesWithMachinePath) {
  // A huge denominator forces the exact-rational branch.
  const BasisProfile pr{4, 2, 2, {1, 3}};
  const Rational eta = Rational(Integer("1000000000000000000001"), Integer("1000000000000000000000"));
  const Rational close = ratio(1001, 1000);
  const auto exact = brute_force_verdict(pr, eta, 2, Mode::semistable);
  const auto machine = brute_force_verdict(pr, close, 2, Mode::semistable);
  EXPECT_EQ(exact.vectors_checked, machine.vectors_checked);
  EXPECT_EQ(exact.satisfied, hilbert_verdict(pr, eta, Mode::semistable).satisfied);
}

TEST(BruteForce, ExtremeRaysGiveTheSameVerdict) {
  Rng rng(509);
  for (int n = 0; n < 200; ++n) {
    const auto pr = pairstab::testing::random_profile(rng, 5);
    const Rational eta = pairstab::testing::random_positive_rational(rng, 9, 4);
    Rational rays = mu_hat(pr, special_weight_vector(pr.p, 1), eta);
    for (int i = 2; i < pr.p; ++i) rays = std::min(rays, mu_hat(pr, special_weight_vector(pr.p, i), eta));
    const auto brute = brute_force_verdict(pr, eta, pr.p, Mode::semistable);
    EXPECT_EQ(brute.satisfied, rays >= 0);
    EXPECT_EQ(brute.strict, rays > 0);
  }
}

TEST(SubspaceCriterion, Examples) {
  EXPECT_FALSE(subspace_criterion(4, 2, 1, 1, 0, true, Mode::semistable).satisfied);
  const auto full = subspace_criterion(4, 2, 1, 4, 2, false, Mode::semistable);
  EXPECT_TRUE(full.satisfied);
  EXPECT_FALSE(full.strict);
  EXPECT_FALSE(subspace_criterion(4, 2, 1, 4, 2, false, Mode::stable).satisfied);
  const auto v = subspace_criterion(4, 2, 2, 2, 1, false, Mode::stable);
  EXPECT_TRUE(v.strict);
  EXPECT_EQ(std::get<Rational>(v.margin), 4);
  EXPECT_TRUE(subspace_criterion(4, 2, 1, 0, 0, true, Mode::stable).satisfied);
  EXPECT_THROW(subspace_criterion(4, 2, 1, 5, 0, true, Mode::stable), DomainError);
}

TEST(EtaDeltaConversion, Examples) {
  EXPECT_EQ(eta_delta_conversion(2, 1, 1, Conversion::eta_to_delta_bar), 1);
  for (int p = 2; p <= 8; p += 2) {
    for (int r = 1; r <= 3; ++r) EXPECT_EQ(eta_delta_conversion(p, r, p / 2, Conversion::delta_bar_to_eta), r);
  }
  EXPECT_THROW(eta_delta_conversion(2, 1, 2, Conversion::delta_bar_to_eta), DomainError);
  EXPECT_THROW(eta_delta_conversion(2, 1, 0, Conversion::eta_to_delta_bar), DomainError);
}

TEST(EtaDeltaConversion, RoundTrip) {
  Rng rng(510);
  for (int n = 0; n < 100; ++n) {
    const int p = static_cast<int>(uniform(rng, 1, 20));
    const int r = static_cast<int>(uniform(rng, 1, 6));
    const Rational eta = pairstab::testing::random_positive_rational(rng, 50, 13);
    const Rational db = eta_delta_conversion(p, r, eta, Conversion::eta_to_delta_bar);
    EXPECT_GT(db, 0);
    EXPECT_LT(db, p);
    EXPECT_EQ(eta_delta_conversion(p, r, db, Conversion::delta_bar_to_eta), eta);
  }
}

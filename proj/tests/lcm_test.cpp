#include <gtest/gtest.h>

#include "lcmlat/errors.hpp"
#include "lcmlat/exact_det.hpp"
#include "lcmlat/known_sets.hpp"
#include "lcmlat/lcm.hpp"
#include "lcmlat/random.hpp"
#include "support.hpp"

namespace lcmlat {
namespace {

std::vector<GcdSet> known_sets() {
  return {known::s8(), known::s9_class_i(), known::s9_class_j(), known::s13(), known::s14(), known::s16()};
}

TEST(Psi, SmallExamples) {
  const GcdSet two = GcdSet::build({1, 2});
  EXPECT_EQ(psi(two).values, (std::vector<Rational>{Rational(1), make_rational(-1, 2)}));
  EXPECT_EQ(psi(two, 2).values[1], make_rational(-3, 4));
  const GcdSet one = GcdSet::build({1});
  EXPECT_EQ(psi(one).values[0], 1);
  EXPECT_FALSE(is_singular(one).singular);
  EXPECT_THROW(psi(two, 0), PreconditionError);
}

TEST(Psi, KnownSetsVanishAtTheTop) {
  for (const GcdSet& s : known_sets()) {
    const SingularityReport r = is_singular(s);
    EXPECT_TRUE(r.singular) << set_to_text(s);
    EXPECT_EQ(r.zero_indices, std::vector<int>{s.size() - 1}) << set_to_text(s);
    EXPECT_EQ(psi_at(s, s.size() - 1), psi(s).values.back());
    EXPECT_EQ(det_lcm(s), 0);
    EXPECT_EQ(testing::divisibility_psi_top(s.elements(), 1), 0);
  }
}

TEST(Psi, PsiAtMatchesFullVector) {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const GcdSet s = random_gcd_set(rng);
    const PsiVector p = psi(s, 2);
    for (int i = 0; i < s.size(); ++i) EXPECT_EQ(psi_at(s, i, 2), p.values[i]);
  }
}

// sum over x_j | x_i of Psi(x_j) = 1 / x_i^e.
TEST(Psi, MoebiusInversion) {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const GcdSet s = random_gcd_set(rng);
    for (unsigned e : {1U, 2U, 3U}) {
      const PsiVector p = psi(s, e);
      for (int i = 0; i < s.size(); ++i) {
        Rational sum = 0;
        for (int j : s.order().down_set(i)) sum += p.values[j];
        EXPECT_EQ(sum, make_rational(1, power(s[i], e)));
      }
    }
  }
}

TEST(Factorization, ReproducesTheMatrix) {
  Rng rng(23);
  std::vector<GcdSet> sets = known_sets();
  for (int i = 0; i < 50; ++i) sets.push_back(random_gcd_set(rng));
  for (const GcdSet& s : sets) {
    for (unsigned e : {1U, 2U}) {
      const IncidenceFactorization f = factorize(s, e);
      EXPECT_TRUE(f.reproduces(lcm_matrix(s, e))) << set_to_text(s);
      for (int i = 0; i < s.size(); ++i) EXPECT_EQ(f.incidence(i, i), 1);
    }
  }
}

TEST(Determinant, BareissMatchesLeibniz) {
  Rng rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-5, 5) * (rng.coin() ? 1 : 0);
    }
    EXPECT_EQ(bareiss_determinant(m), testing::leibniz_determinant(m));
  }
}

TEST(Determinant, DetLcmMatchesElimination) {
  Rng rng(25);
  RandomSetOptions opts;
  opts.max_size = 7;
  std::vector<GcdSet> sets = {known::s8(), known::s9_class_i(), known::s9_class_j()};
  for (int i = 0; i < 200; ++i) sets.push_back(random_gcd_set(rng, opts));
  for (const GcdSet& s : sets) {
    EXPECT_EQ(det_lcm(s), bareiss_determinant(lcm_matrix(s))) << set_to_text(s);
    EXPECT_EQ(det_lcm(s, 2), bareiss_determinant(lcm_matrix(s, 2))) << set_to_text(s);
  }
  EXPECT_EQ(det_lcm(GcdSet::build({1, 2})), -2);
}

TEST(Determinant, NonClosedSingularExample) {
  const auto values = known::bourque_ligh_values();
  const IntegerMatrix m = lcm_matrix_of_values(values);
  EXPECT_EQ(bareiss_determinant(m), 0);
  EXPECT_EQ(testing::leibniz_determinant(m), 0);
}

TEST(CoverLcm, Verdicts) {
  const GcdSet s8 = known::s8();
  EXPECT_THROW(cover_lcm_predicate(s8, 0), PreconditionError);
  // 66 = 11 lcm(2, 3)
  EXPECT_EQ(cover_lcm_predicate(s8, 4), CoverLcmVerdict::ForcesNonzero);
  // lcm(66, 70, 255) = 39270
  EXPECT_EQ(cover_lcm_predicate(s8, 7), CoverLcmVerdict::NoConclusion);
}

TEST(SufficientConditions, NeverContradictPsi) {
  Rng rng(26);
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const GcdSet s = random_gcd_set(rng);
    const PsiVector p = psi(s);
    for (int i = 0; i < s.size(); ++i) {
      const bool dc = generates_double_chain(s.order(), i);
      const bool cl = i > 0 && cover_lcm_predicate(s, i) == CoverLcmVerdict::ForcesNonzero;
      if (dc || cl) {
        ++hits;
        EXPECT_NE(p.values[i], 0) << set_to_text(s);
      }
    }
  }
  EXPECT_GT(hits, 0);
  // The singular examples fail both tests at their top.
  for (const GcdSet& s : known_sets()) {
    const int top = s.size() - 1;
    EXPECT_FALSE(generates_double_chain(s.order(), top));
    EXPECT_EQ(cover_lcm_predicate(s, top), CoverLcmVerdict::NoConclusion);
  }
}

TEST(Omega, CountsDistinctPrimes) {
  EXPECT_EQ(omega(1), 0);
  EXPECT_EQ(omega(39270), 6);
  EXPECT_EQ(omega(power(2, 40)), 1);
  EXPECT_EQ(omega(Integer(1000003) * 1000033), 2);
  EXPECT_THROW(omega(Integer(1000003) * 1000033, 100), BudgetExceededError);
  EXPECT_THROW(omega(0), PreconditionError);
}

TEST(Sun, TwoPrimeSetsAreNonsingular) {
  Rng rng(27);
  RandomSetOptions opts;
  opts.max_prime_support = 2;
  opts.max_size = 16;
  for (int trial = 0; trial < 300; ++trial) {
    const GcdSet s = random_gcd_set(rng, opts);
    ASSERT_TRUE(check_sun_condition(s));
    EXPECT_FALSE(is_singular(s).singular) << set_to_text(s);
  }
  EXPECT_FALSE(check_sun_condition(known::s8()));
}

}  // namespace
}  // namespace lcmlat

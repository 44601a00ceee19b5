#include <gtest/gtest.h>

#include "lcmlat/construct.hpp"
#include "lcmlat/gcd_set.hpp"
#include "lcmlat/moebius.hpp"
#include "support.hpp"

namespace lcmlat {
namespace {

// Classical Moebius function of n, by trial division.
int number_moebius(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

TEST(Moebius, Chain) {
  std::vector<CoverPair> covers{{0, 1}, {1, 2}, {2, 3}};
  const MoebiusTable mu = moebius(Structure::from_covers(4, covers));
  EXPECT_EQ(mu(3, 3), 1);
  EXPECT_EQ(mu(2, 3), -1);
  EXPECT_EQ(mu(1, 3), 0);
  EXPECT_EQ(mu(0, 3), 0);
}

TEST(Moebius, CubeAlternatesByRank) {
  const MoebiusTable mu = moebius(boolean_cube());
  EXPECT_EQ(mu.toward(7), (std::vector<std::int64_t>{-1, 1, 1, 1, -1, -1, -1, 1}));
}

TEST(Moebius, IncomparablePairsReadZero) {
  const MoebiusTable mu = moebius(boolean_cube());
  EXPECT_EQ(mu(4, 5), 0);
  EXPECT_EQ(mu(7, 0), 0);
}

// On a factor-closed set mu(d, n) is the number-theoretic mu(n / d).
TEST(Moebius, DivisorLatticeMatchesNumberTheory) {
  for (long n : {12L, 30L, 36L, 60L, 210L, 360L}) {
    std::vector<Integer> divisors;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) divisors.emplace_back(d);
    }
    const GcdSet s = GcdSet::build(divisors);
    const MoebiusTable mu = moebius(s.order());
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        const long a = s[i].get_si();
        const long b = s[j].get_si();
        const int expected = b % a == 0 ? number_moebius(b / a) : 0;
        EXPECT_EQ(mu(i, j), expected) << a << " " << b << " in divisors of " << n;
      }
    }
  }
}

// Defining identity: sum over lower <= z <= upper of mu(z, upper) is 0
// unless lower == upper.
TEST(Moebius, RowSumsVanish) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const GcdSet s = random_gcd_set(rng);
    const Structure& order = s.order();
    const MoebiusTable mu = moebius(order);
    for (int lower = 0; lower < order.size(); ++lower) {
      for (int upper : order.up_set(lower)) {
        std::int64_t sum = 0;
        for (int z : order.up_set(lower) & order.down_set(upper)) sum += mu(z, upper);
        EXPECT_EQ(sum, lower == upper ? 1 : 0);
      }
    }
  }
}

TEST(Moebius, InvariantUnderRelabeling) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const GcdSet s = random_gcd_set(rng);
    const auto perm = testing::random_permutation(rng, s.size());
    const Structure relabeled = testing::relabel(s.order(), perm);
    const MoebiusTable a = moebius(s.order());
    const MoebiusTable b = moebius(relabeled);
    // relabeled index r holds the original element source_index()[r].
    std::vector<int> where(s.size());
    for (int r = 0; r < s.size(); ++r) where[relabeled.source_index()[r]] = r;
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) EXPECT_EQ(a(i, j), b(where[perm[i]], where[perm[j]]));
    }
  }
}

}  // namespace
}  // namespace lcmlat

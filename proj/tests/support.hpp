#pragma once

// Slow, obviously-correct reference implementations used as test oracles.

#include <algorithm>
#include <numeric>
#include <vector>

#include "lcmlat/matrix.hpp"
#include "lcmlat/number.hpp"
#include "lcmlat/random.hpp"
#include "lcmlat/structure.hpp"

namespace lcmlat::testing {

/// The same order with element i renamed perm[i].
inline Structure relabel(const Structure& s, const std::vector<int>& perm) {
  std::vector<CoverPair> covers;
  for (const auto& [a, b] : s.covers()) covers.emplace_back(perm[a], perm[b]);
  return Structure::from_covers(s.size(), covers);
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  return perm;
}

/// Largest antichain by trying every subset.
inline int brute_width(const Structure& s, ElementSet subset) {
  const std::vector<int> items(subset.begin(), subset.end());
  const int k = static_cast<int>(items.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    bool antichain = true;
    for (int i = 0; i < k && antichain; ++i) {
      for (int j = i + 1; j < k && antichain; ++j) {
        if (((mask >> i) & 1U) && ((mask >> j) & 1U) && s.comparable(items[i], items[j])) {
          antichain = false;
        }
      }
    }
    if (antichain) best = std::max(best, std::popcount(mask));
  }
  return best;
}

/// Tries every split of `subset` into two parts and checks both are chains.
inline bool brute_two_chains(const Structure& s, ElementSet subset) {
  const std::vector<int> items(subset.begin(), subset.end());
  const int k = static_cast<int>(items.size());
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    ElementSet a;
    ElementSet b;
    for (int i = 0; i < k; ++i) ((mask >> i) & 1U ? a : b).insert(items[i]);
    if (s.is_chain(a) && s.is_chain(b)) return true;
  }
  return false;
}

/// Leibniz expansion; only for tiny matrices.
inline Integer leibniz_determinant(const IntegerMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Integer term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// mu(d, top) straight from divisibility on sorted values, then
/// sum mu / x^alpha.
inline Rational divisibility_psi_top(const std::vector<Integer>& values, unsigned alpha) {
  const std::size_t n = values.size();
  auto divides = [](const Integer& a, const Integer& b) {
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
  };
  std::vector<long> mu(n, 0);
  mu[n - 1] = 1;
  for (std::size_t j = n - 1; j-- > 0;) {
    if (!divides(values[j], values[n - 1])) continue;
    long sum = 0;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (divides(values[j], values[k])) sum += mu[k];
    }
    mu[j] = -sum;
  }
  Rational h = 0;
  for (std::size_t i = 0; i < n; ++i) h += Rational(mu[i]) / Rational(power(values[i], alpha));
  return h;
}

}  // namespace lcmlat::testing

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lcmlat/gcd_set.hpp"
#include "lcmlat/matrix.hpp"
#include "lcmlat/number.hpp"

namespace lcmlat {

/// Psi values of a GCD-closed set, one per element:
///   psi[i] = sum over x_j | x_i of mu(x_j, x_i) / x_j^exponent.
struct PsiVector {
  std::vector<Rational> values;
  unsigned exponent = 1;
};

PsiVector psi(const GcdSet& s, unsigned exponent = 1);

/// Psi of a single element; cheaper than the full vector.
Rational psi_at(const GcdSet& s, int index, unsigned exponent = 1);

struct SingularityReport {
  bool singular = false;
  /// Indices with psi exactly zero.
  std::vector<int> zero_indices;
};

/// The (power) LCM matrix is singular iff some psi value vanishes.
SingularityReport is_singular(const GcdSet& s, unsigned exponent = 1);

/// Entries lcm(x_i, x_j)^exponent.
IntegerMatrix lcm_matrix(const GcdSet& s, unsigned exponent = 1);
/// Same for an arbitrary list of positive integers (no closure required).
IntegerMatrix lcm_matrix_of_values(std::span<const Integer> values, unsigned exponent = 1);

/// [S]_exponent = (Delta E) Lambda (Delta E)^T.
struct IncidenceFactorization {
  /// e(i, j) = 1 iff x_j divides x_i; lower triangular with unit diagonal.
  IntegerMatrix incidence;
  /// x_i^exponent.
  std::vector<Integer> delta;
  /// psi values.
  std::vector<Rational> lambda;

  RationalMatrix reconstruct() const;
  bool reproduces(const IntegerMatrix& target) const;
};

IncidenceFactorization factorize(const GcdSet& s, unsigned exponent = 1);

/// prod x_i^(2 exponent) * prod psi_i.
Integer det_lcm(const GcdSet& s, unsigned exponent = 1);

enum class CoverLcmVerdict { ForcesNonzero, NoConclusion };

/// ForcesNonzero iff x_i exceeds the lcm of the elements it covers. Throws
/// PreconditionError for the bottom element.
CoverLcmVerdict cover_lcm_predicate(const GcdSet& s, int index);

inline constexpr std::uint64_t kDefaultTrialBudget = 10'000'000;

/// Number of distinct prime factors by trial division. Throws
/// BudgetExceededError after `budget` trial divisors.
int omega(const Integer& n, std::uint64_t budget = kDefaultTrialBudget);

/// Every element has at most two distinct prime factors.
bool check_sun_condition(const GcdSet& s, std::uint64_t budget = kDefaultTrialBudget);

}  // namespace lcmlat

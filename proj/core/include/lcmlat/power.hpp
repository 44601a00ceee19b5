#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lcmlat/bigfloat.hpp"
#include "lcmlat/gcd_set.hpp"
#include "lcmlat/number.hpp"

namespace lcmlat {

/// S = {1,2,3,5,6,10,15, 2p_1,...,2p_{k-1}, 30 p_1...p_{k-1}} for a target M,
/// where h(alpha) = Psi at the top with exponent alpha is positive at M and
/// tends to -1.
struct PowerConstruction {
  double M = 1;
  /// Smallest integer >= 2 with log2(k) >= M.
  unsigned k = 2;
  /// Smallest k-1 primes outside {2,3,5} with 2p >= 5(k-1).
  std::vector<unsigned long> primes;
  GcdSet set;
  /// mu(x_i, top), indexed like `set`.
  std::vector<std::int64_t> mu_top;
};

/// Throws PreconditionError for M < 1 (or not finite) and when the set would
/// exceed 64 elements (M above log2(57)).
PowerConstruction build_power_construction(double M);

inline constexpr mpfr_prec_t kMinPrecision = 64;
inline constexpr mpfr_prec_t kMaxPrecision = 16384;

struct HEvaluation {
  /// Midpoint of a rigorous enclosure of h(alpha).
  BigFloat value;
  /// |h(alpha) - value| <= error_bound.
  BigFloat error_bound;
  /// Set when alpha is a positive integer.
  std::optional<Rational> exact;
  mpfr_prec_t precision_bits = 0;

  /// +1 / -1 when the sign is proven, 0 otherwise.
  int certified_sign() const;
};

/// h(alpha) = sum_i mu(x_i, top) / x_i^alpha. For positive integer alpha the
/// exact rational is computed too and the float value is its rounding. alpha
/// is taken exactly as given. Throws PreconditionError for alpha < 0 or
/// precision below kMinPrecision.
HEvaluation h_eval(const PowerConstruction& c, const BigFloat& alpha, mpfr_prec_t precision_bits);
/// The interval evaluation, even at integer alpha.
HEvaluation h_eval_enclosure(const PowerConstruction& c, const BigFloat& alpha,
                             mpfr_prec_t precision_bits);
/// Exact h at a positive integer exponent.
Rational h_exact(const PowerConstruction& c, unsigned alpha);

struct AlphaBracket {
  BigFloat lo;
  BigFloat hi;
  HEvaluation h_lo;
  HEvaluation h_hi;
  /// Largest working precision any evaluation needed.
  mpfr_prec_t precision_bits = 0;
};

/// Bisection from lo = M and a hi found by doubling, keeping h(lo) > 0 and
/// h(hi) < 0 certified, until hi - lo <= tol. Precision is doubled on demand
/// up to kMaxPrecision, beyond which UncertifiableError is thrown.
AlphaBracket find_alpha0(const PowerConstruction& c, double tol,
                         mpfr_prec_t initial_precision = 128);

}  // namespace lcmlat

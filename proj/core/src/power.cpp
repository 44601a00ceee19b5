#include "lcmlat/power.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcmlat/errors.hpp"
#include "lcmlat/lcm.hpp"
#include "lcmlat/moebius.hpp"

namespace lcmlat {

namespace {

// Above this the exact rational gets unwieldy; the enclosure alone is used.
constexpr unsigned long kMaxExactExponent = 4096;

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_precision(mpfr_prec_t precision_bits) {
  if (precision_bits < kMinPrecision) {
    throw PreconditionError("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  if (precision_bits > kMaxPrecision) {
    throw PreconditionError("precision must be at most " + std::to_string(kMaxPrecision) + " bits");
  }
}

void require_alpha(const BigFloat& alpha) {
  if (!mpfr_number_p(alpha.get()) || alpha.sign() < 0) {
    throw PreconditionError("alpha must be a finite number >= 0");
  }
}

std::optional<unsigned long> positive_integer(const BigFloat& alpha) {
  if (!mpfr_integer_p(alpha.get()) || alpha.sign() <= 0 || !mpfr_fits_ulong_p(alpha.get(), MPFR_RNDN)) {
    return std::nullopt;
  }
  return mpfr_get_ui(alpha.get(), MPFR_RNDN);
}

HEvaluation certified(const PowerConstruction& c, const BigFloat& alpha, mpfr_prec_t& precision) {
  for (;; precision *= 2) {
    HEvaluation e = h_eval(c, alpha, precision);
    if (e.certified_sign() != 0) return e;
    if (precision * 2 > kMaxPrecision) {
      throw UncertifiableError("sign of h(" + alpha.to_string() + ") not certified at " +
                               std::to_string(precision) + " bits");
    }
  }
}

}  // namespace

int HEvaluation::certified_sign() const {
  if (exact) return sgn(*exact);
  BigFloat magnitude(value.precision());
  mpfr_abs(magnitude.get(), value.get(), MPFR_RNDN);
  if (error_bound < magnitude) return value.sign();
  return 0;
}

PowerConstruction build_power_construction(double M) {
  if (!std::isfinite(M) || M < 1) throw PreconditionError("M must be a finite number >= 1");
  PowerConstruction c;
  c.M = M;
  // log2 of an integer k is compared against M directly; exp2 only seeds k.
  double seed = std::ceil(std::exp2(M));
  if (seed > 1e6) throw PreconditionError("M too large for a 64-element set");
  c.k = std::max(2U, static_cast<unsigned>(seed));
  while (std::log2(static_cast<double>(c.k)) < M) ++c.k;
  while (c.k > 2 && std::log2(static_cast<double>(c.k - 1)) >= M) --c.k;
  if (c.k + 7 > static_cast<unsigned>(kMaxElements)) {
    throw PreconditionError("M = " + std::to_string(M) + " needs k = " + std::to_string(c.k) +
                            ", giving " + std::to_string(c.k + 7) +
                            " elements; at most 64 are supported");
  }

  for (unsigned long p = 7; c.primes.size() + 1 < c.k; p += 2) {
    if (p == 5 || !is_prime(p) || 2 * p < 5 * (c.k - 1UL)) continue;
    c.primes.push_back(p);
  }
  std::vector<Integer> values{1, 2, 3, 5, 6, 10, 15};
  Integer top = 30;
  for (unsigned long p : c.primes) {
    values.emplace_back(2 * p);
    top *= p;
  }
  values.push_back(top);
  c.set = GcdSet::build(std::move(values), "power M=" + std::to_string(M));
  c.mu_top = moebius(c.set.order()).toward(c.set.size() - 1);
  return c;
}

Rational h_exact(const PowerConstruction& c, unsigned alpha) {
  return psi_at(c.set, c.set.size() - 1, alpha);
}

HEvaluation h_eval_enclosure(const PowerConstruction& c, const BigFloat& alpha,
                             mpfr_prec_t precision_bits) {
  require_precision(precision_bits);
  require_alpha(alpha);
  BigFloat neg_alpha(alpha.precision());
  mpfr_neg(neg_alpha.get(), alpha.get(), MPFR_RNDN);

  BigFloat lo(precision_bits);
  BigFloat hi(precision_bits);
  BigFloat term_lo(precision_bits);
  BigFloat term_hi(precision_bits);
  for (int i = 0; i < c.set.size(); ++i) {
    const std::int64_t mu = c.mu_top[i];
    if (mu == 0) continue;
    const Integer& x = c.set[i];
    BigFloat base(std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(mpz_sizeinbase(x.get_mpz_t(), 2))));
    mpfr_set_z(base.get(), x.get_mpz_t(), MPFR_RNDN);
    // mpfr_pow is correctly rounded, so these bracket x^-alpha.
    mpfr_pow(term_lo.get(), base.get(), neg_alpha.get(), MPFR_RNDD);
    mpfr_pow(term_hi.get(), base.get(), neg_alpha.get(), MPFR_RNDU);
    const long m = static_cast<long>(mu);
    if (m > 0) {
      mpfr_mul_si(term_lo.get(), term_lo.get(), m, MPFR_RNDD);
      mpfr_mul_si(term_hi.get(), term_hi.get(), m, MPFR_RNDU);
      mpfr_add(lo.get(), lo.get(), term_lo.get(), MPFR_RNDD);
      mpfr_add(hi.get(), hi.get(), term_hi.get(), MPFR_RNDU);
    } else {
      mpfr_mul_si(term_hi.get(), term_hi.get(), m, MPFR_RNDD);
      mpfr_mul_si(term_lo.get(), term_lo.get(), m, MPFR_RNDU);
      mpfr_add(lo.get(), lo.get(), term_hi.get(), MPFR_RNDD);
      mpfr_add(hi.get(), hi.get(), term_lo.get(), MPFR_RNDU);
    }
  }

  HEvaluation e{BigFloat(precision_bits), BigFloat(precision_bits), std::nullopt, precision_bits};
  mpfr_add(e.value.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(e.value.get(), e.value.get(), 1, MPFR_RNDN);
  BigFloat below(precision_bits);
  mpfr_sub(below.get(), e.value.get(), lo.get(), MPFR_RNDU);
  mpfr_sub(e.error_bound.get(), hi.get(), e.value.get(), MPFR_RNDU);
  mpfr_max(e.error_bound.get(), e.error_bound.get(), below.get(), MPFR_RNDU);
  return e;
}

HEvaluation h_eval(const PowerConstruction& c, const BigFloat& alpha, mpfr_prec_t precision_bits) {
  require_precision(precision_bits);
  require_alpha(alpha);
  const auto integer = positive_integer(alpha);
  if (!integer || *integer > kMaxExactExponent) return h_eval_enclosure(c, alpha, precision_bits);

  HEvaluation e{BigFloat(precision_bits), BigFloat(precision_bits), h_exact(c, *integer),
                precision_bits};
  mpfr_set_q(e.value.get(), e.exact->get_mpq_t(), MPFR_RNDN);
  Rational rounded;
  mpfr_get_q(rounded.get_mpq_t(), e.value.get());
  const Rational diff = abs(Rational(rounded - *e.exact));
  mpfr_set_q(e.error_bound.get(), diff.get_mpq_t(), MPFR_RNDU);
  return e;
}

AlphaBracket find_alpha0(const PowerConstruction& c, double tol, mpfr_prec_t initial_precision) {
  if (!(tol > 0) || !std::isfinite(tol)) throw PreconditionError("tolerance must be positive");
  require_precision(initial_precision);
  mpfr_prec_t precision = initial_precision;
  mpfr_prec_t widest = precision;

  BigFloat lo(c.M, 64);
  HEvaluation h_lo = certified(c, lo, precision);
  if (h_lo.certified_sign() < 0) throw Error("h(M) is negative; the construction is broken");

  BigFloat hi(64);
  mpfr_mul_2ui(hi.get(), lo.get(), 1, MPFR_RNDN);
  HEvaluation h_hi = certified(c, hi, precision);
  for (int doublings = 0; h_hi.certified_sign() > 0; ++doublings) {
    if (doublings == 60) throw Error("no negative value of h found");
    lo = hi;
    h_lo = std::move(h_hi);
    mpfr_mul_2ui(hi.get(), hi.get(), 1, MPFR_RNDN);
    h_hi = certified(c, hi, precision);
  }
  widest = std::max(widest, precision);

  // Enough bits that every midpoint down to width tol is exact.
  const mpfr_prec_t alpha_bits =
      64 + static_cast<mpfr_prec_t>(std::max(0.0, std::ceil(std::log2(hi.to_double())))) +
      static_cast<mpfr_prec_t>(std::max(0.0, std::ceil(-std::log2(tol))));
  mpfr_prec_round(lo.get(), alpha_bits, MPFR_RNDN);
  mpfr_prec_round(hi.get(), alpha_bits, MPFR_RNDN);
  BigFloat width(alpha_bits);
  BigFloat mid(alpha_bits);
  for (;;) {
    mpfr_sub(width.get(), hi.get(), lo.get(), MPFR_RNDU);
    if (mpfr_cmp_d(width.get(), tol) <= 0) break;
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    HEvaluation h_mid = certified(c, mid, precision);
    widest = std::max(widest, precision);
    if (h_mid.certified_sign() > 0) {
      lo = mid;
      h_lo = std::move(h_mid);
    } else {
      hi = mid;
      h_hi = std::move(h_mid);
    }
  }
  return {std::move(lo), std::move(hi), std::move(h_lo), std::move(h_hi), widest};
}

}  // namespace lcmlat

#include "lcmlat/lcm.hpp"

#include <string>

#include "lcmlat/errors.hpp"
#include "lcmlat/moebius.hpp"

namespace lcmlat {

namespace {

Rational psi_from(const GcdSet& s, const std::vector<std::int64_t>& mu, int index,
                  const std::vector<Integer>& powers) {
  Rational sum = 0;
  for (int j : s.order().down_set(index)) {
    if (mu[j] != 0) sum += make_rational(Integer(static_cast<long>(mu[j])), powers[j]);
  }
  return sum;
}

std::vector<Integer> element_powers(const GcdSet& s, unsigned exponent) {
  std::vector<Integer> out;
  out.reserve(s.size());
  for (const auto& x : s.elements()) out.push_back(power(x, exponent));
  return out;
}

void require_exponent(unsigned exponent) {
  if (exponent < 1) throw PreconditionError("exponent must be a positive integer");
}

}  // namespace

PsiVector psi(const GcdSet& s, unsigned exponent) {
  require_exponent(exponent);
  const MoebiusTable mu = moebius(s.order());
  const std::vector<Integer> powers = element_powers(s, exponent);
  PsiVector out;
  out.exponent = exponent;
  out.values.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) out.values.push_back(psi_from(s, mu.toward(i), i, powers));
  return out;
}

Rational psi_at(const GcdSet& s, int index, unsigned exponent) {
  require_exponent(exponent);
  if (index < 0 || index >= s.size()) throw PreconditionError("element index out of range");
  const Structure sub = s.order().induced(s.order().down_set(index));
  const MoebiusTable mu = moebius(sub);
  Rational sum = 0;
  int k = 0;
  for (int j : s.order().down_set(index)) {
    const std::int64_t m = mu(k++, sub.size() - 1);
    if (m != 0) sum += make_rational(Integer(static_cast<long>(m)), power(s[j], exponent));
  }
  return sum;
}

SingularityReport is_singular(const GcdSet& s, unsigned exponent) {
  const PsiVector p = psi(s, exponent);
  SingularityReport report;
  for (int i = 0; i < s.size(); ++i) {
    if (p.values[i] == 0) report.zero_indices.push_back(i);
  }
  report.singular = !report.zero_indices.empty();
  return report;
}

IntegerMatrix lcm_matrix_of_values(std::span<const Integer> values, unsigned exponent) {
  require_exponent(exponent);
  const std::size_t n = values.size();
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = power(lcm(values[i], values[j]), exponent);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

IntegerMatrix lcm_matrix(const GcdSet& s, unsigned exponent) {
  return lcm_matrix_of_values(s.elements(), exponent);
}

IncidenceFactorization factorize(const GcdSet& s, unsigned exponent) {
  IncidenceFactorization f;
  const int n = s.size();
  f.incidence = IntegerMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j : s.order().down_set(i)) f.incidence(i, j) = 1;
  }
  f.delta = element_powers(s, exponent);
  f.lambda = psi(s, exponent).values;
  return f;
}

RationalMatrix IncidenceFactorization::reconstruct() const {
  const std::size_t n = delta.size();
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (incidence(i, k) != 0 && incidence(j, k) != 0) sum += lambda[k];
      }
      out(i, j) = Rational(delta[i] * delta[j]) * sum;
    }
  }
  return out;
}

bool IncidenceFactorization::reproduces(const IntegerMatrix& target) const {
  const RationalMatrix product = reconstruct();
  if (product.rows() != target.rows() || product.cols() != target.cols()) return false;
  for (std::size_t i = 0; i < target.rows(); ++i) {
    for (std::size_t j = 0; j < target.cols(); ++j) {
      if (product(i, j) != Rational(target(i, j))) return false;
    }
  }
  return true;
}

Integer det_lcm(const GcdSet& s, unsigned exponent) {
  const PsiVector p = psi(s, exponent);
  Rational det = 1;
  for (int i = 0; i < s.size(); ++i) {
    if (p.values[i] == 0) return 0;
    det *= p.values[i] * Rational(power(s[i], 2UL * exponent));
  }
  if (det.get_den() != 1) throw Error("internal: LCM determinant is not an integer");
  return det.get_num();
}

CoverLcmVerdict cover_lcm_predicate(const GcdSet& s, int index) {
  if (index < 0 || index >= s.size()) throw PreconditionError("element index out of range");
  const ElementSet covers = s.order().lower_covers(index);
  if (covers.empty()) {
    throw PreconditionError("element " + to_string(s[index]) + " covers nothing");
  }
  Integer l = 1;
  for (int c : covers) l = lcm(l, s[c]);
  return s[index] > l ? CoverLcmVerdict::ForcesNonzero : CoverLcmVerdict::NoConclusion;
}

int omega(const Integer& n, std::uint64_t budget) {
  if (n < 1) throw PreconditionError("omega is defined for positive integers");
  Integer rest = n;
  int count = 0;
  std::uint64_t trials = 0;
  for (unsigned long d = 2; Integer(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
    if (++trials > budget) {
      throw BudgetExceededError("factorization budget exceeded for " + to_string(n));
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      ++count;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    }
  }
  if (rest > 1) ++count;
  return count;
}

bool check_sun_condition(const GcdSet& s, std::uint64_t budget) {
  for (const auto& x : s.elements()) {
    if (omega(x, budget) > 2) return false;
  }
  return true;
}

}  // namespace lcmlat

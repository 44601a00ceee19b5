#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace lcmlat {

/// Owning handle to an mpfr_t. Copies keep the source precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 128) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
  }
  BigFloat(double v, mpfr_prec_t precision) : BigFloat(precision) { mpfr_set_d(value_, v, MPFR_RNDN); }
  BigFloat(const BigFloat& other) : BigFloat(mpfr_get_prec(other.value_)) {
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept : BigFloat(MPFR_PREC_MIN) { mpfr_swap(value_, other.value_); }
  BigFloat& operator=(BigFloat other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  /// Parses decimal text, rounding to nearest; throws ValidationError.
  static BigFloat parse(const std::string& text, mpfr_prec_t precision);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.value_, b.value_);
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

}  // namespace lcmlat

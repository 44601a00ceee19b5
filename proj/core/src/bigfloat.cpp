#include "lcmlat/bigfloat.hpp"

#include "lcmlat/errors.hpp"

namespace lcmlat {

BigFloat BigFloat::parse(const std::string& text, mpfr_prec_t precision) {
  BigFloat out(precision);
  if (text.empty() || mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ValidationError("not a decimal number: '" + text + "'");
  }
  return out;
}

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  const int len = mpfr_asprintf(&raw, "%.*Re", digits > 1 ? digits - 1 : 0, value_);
  if (len < 0) throw Error("mpfr_asprintf failed");
  std::string out(raw, static_cast<std::size_t>(len));
  mpfr_free_str(raw);
  return out;
}

}  // namespace lcmlat

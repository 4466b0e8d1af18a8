#include "daub/format.hpp"

#include <mpfr.h>

#include <algorithm>

namespace daub {

namespace {

std::string mpfr_format(const char* fmt, int decimals, const Real& x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt, decimals, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

void strip_fraction_zeros(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
}

}  // namespace

std::string format_real(const Real& x, int digits) {
  if (x.is_zero()) return "0";
  if (!x.is_finite()) return mpfr_nan_p(x.get()) ? "nan" : (x.sign() > 0 ? "inf" : "-inf");
  digits = std::max(digits, 1);
  const long e = x.exponent10();
  if (e >= -4 && e < 6) {
    std::string s = mpfr_format("%.*Rf", static_cast<int>(std::max(0L, digits - 1 - e)), x);
    strip_fraction_zeros(s);
    return s;
  }
  std::string s = mpfr_format("%.*Re", digits - 1, x);
  const auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  strip_fraction_zeros(mant);
  return mant + s.substr(epos);
}

}  // namespace daub

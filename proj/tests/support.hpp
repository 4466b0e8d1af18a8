#pragma once

// Test-side oracles. Nothing here calls into the evaluation schemes under test.

#include <mpfr.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "daub/complex.hpp"
#include "daub/context.hpp"
#include "daub/real.hpp"

namespace daub::test {

inline Real R(const char* text) { return Real(std::string_view(text)); }

inline Complex C(const char* re, const char* im) { return Complex(R(re), R(im)); }

inline double d(const Real& x) { return x.to_double(); }

inline double dist(const Complex& a, const Complex& b) { return abs(a - b).to_double(); }

inline double rel(const Complex& a, const Complex& b) {
  return (abs(a - b) / abs(b)).to_double();
}

// MPFR's own real erfc and gamma, at the current precision.
inline Real mpfr_erfc_real(const Real& x) {
  Real out = Real::from_bits(PrecisionScope::current_bits());
  mpfr_erfc(out.get(), x.get(), MPFR_RNDN);
  return out;
}

inline Real mpfr_gamma_real(const Real& x) {
  Real out = Real::from_bits(PrecisionScope::current_bits());
  mpfr_gamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

// erf(w) = 2/sqrt(pi) exp(-w^2) sum_n 2^n w^(2n+1) / (1 3 5 ... (2n+1)),
// a different series from the alternating Maclaurin one.
inline Complex erf_kummer(const Complex& w, int digits) {
  const double m = abs(w).to_double();
  PrecisionScope scope(digits + static_cast<int>(std::ceil(0.87 * m * m)) + 15);
  const Complex w2 = w * w;
  Complex term = w, sum = w;
  const Real tiny = pow10(-(digits + 20));
  for (long n = 1; n < 100000; ++n) {
    term = term * w2 * 2 / (2 * n + 1);
    sum += term;
    if (abs(term) < tiny * abs(sum) && n > m * m) break;
  }
  return (sum * exp(-w2) * 2 / sqrt(Real::pi())).rounded(digits);
}

inline Complex random_complex(std::mt19937_64& rng, double re_lo, double re_hi, double im_lo,
                              double im_hi) {
  std::uniform_real_distribution<double> a(re_lo, re_hi), b(im_lo, im_hi);
  const double x = a(rng);
  const double y = b(rng);
  return Complex(Real(x), Real(y));
}

}  // namespace daub::test

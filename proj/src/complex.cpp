#include "daub/complex.hpp"

#include <mpfr.h>

#include <cstdlib>

namespace daub {

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return {a.re * b.re, a.im * b.re};
  if (a.im.is_zero()) return {a.re * b.re, a.re * b.im};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator+(const Complex& a, long b) { return {a.re + b, a.im}; }
Complex operator-(const Complex& a, long b) { return {a.re - b, a.im}; }
Complex operator-(long a, const Complex& b) { return {a - b.re, -b.im}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator*(long a, const Complex& b) { return {b.re * a, b.im * a}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
Complex operator/(long a, const Complex& b) { return Complex(Real(a)) / b; }

bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) { return hypot(z.re, z.im); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return {m, z.im};
  return {m * cos(z.im), m * sin(z.im)};
}

Complex expm1(const Complex& z) {
  if (z.im.is_zero()) return {expm1(z.re), z.im};
  Real s = sin(z.im / 2);
  return {expm1(z.re) * cos(z.im) - 2 * s * s, exp(z.re) * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex log1p(const Complex& z) {
  Real one_plus = z.re + 1;
  Real t = 2 * z.re + z.re * z.re + z.im * z.im;
  return {log1p(t) / 2, atan2(z.im, one_plus)};
}

Complex sqrt(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return {Real(), z.im};
  Real t = sqrt((abs(z.re) + abs(z)) / 2);
  if (z.re.sign() >= 0) return {t, z.im / (2 * t)};
  return {abs(z.im) / (2 * t), copysign(t, z.im)};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return 1 / pow(z, -n);
  Complex result(Real(1), Real(0));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex i_times(const Complex& z) { return {-z.im, z.re}; }
Complex ldexp(const Complex& z, long e) { return {ldexp(z.re, e), ldexp(z.im, e)}; }

Complex canonical_zero(Complex z) {
  if (z.im.is_zero()) z.im = Real::from_bits(z.im.precision());
  return z;
}

std::string debug_string(const Complex& z, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "(%.*Rg, %.*Rg)", digits, z.re.get(), digits, z.im.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace daub

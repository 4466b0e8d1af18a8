#pragma once

#include <string>

#include "daub/real.hpp"

namespace daub {

/// Complex number over arbitrary-precision reals. Functions use the principal
/// branch; a zero imaginary part is treated by its sign as in C99 Annex G.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im() {}  // NOLINT(google-explicit-constructor)
  Complex(int r) : re(r), im() {}              // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool is_real() const { return im.is_zero(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }

  Complex rounded(int digits) const { return {re.rounded(digits), im.rounded(digits)}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator+(const Complex& a, long b);
Complex operator-(const Complex& a, long b);
Complex operator-(long a, const Complex& b);
Complex operator*(const Complex& a, long b);
Complex operator*(long a, const Complex& b);
Complex operator/(const Complex& a, long b);
Complex operator/(long a, const Complex& b);
inline Complex operator+(const Complex& a, int b) { return a + static_cast<long>(b); }
inline Complex operator-(const Complex& a, int b) { return a - static_cast<long>(b); }
inline Complex operator-(int a, const Complex& b) { return static_cast<long>(a) - b; }
inline Complex operator*(const Complex& a, int b) { return a * static_cast<long>(b); }
inline Complex operator*(int a, const Complex& b) { return static_cast<long>(a) * b; }
inline Complex operator/(const Complex& a, int b) { return a / static_cast<long>(b); }
inline Complex operator/(int a, const Complex& b) { return static_cast<long>(a) / b; }

bool operator==(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex expm1(const Complex& z);  // exp(z) - 1 without cancellation near 0
Complex log(const Complex& z);
Complex log1p(const Complex& z);  // log(1 + z) without cancellation near 0
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);
Complex i_times(const Complex& z);  // i * z
Complex ldexp(const Complex& z, long e);

/// Replaces a negative zero imaginary part by +0.
Complex canonical_zero(Complex z);

std::string debug_string(const Complex& z, int digits = 20);

}  // namespace daub

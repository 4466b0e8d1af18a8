#pragma once

// Arbitrary-precision real scalar backed by MPFR.
//
// Every value carries its own binary precision. Freshly constructed values
// take the precision of the innermost PrecisionScope on the calling thread;
// arithmetic results take the largest of the operand precisions and the
// current scope precision, so raising the scope adds guard digits. There is
// no process-wide mutable state, so values may be used from many threads
// as long as each thread opens its own scopes.

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace daub {

/// Binary precision (bits) able to hold `digits` significant decimal digits.
mpfr_prec_t digits_to_bits(int digits);

/// Sets the precision of values created on this thread for the lifetime of
/// the scope. Scopes nest.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

  static int current_digits();
  static mpfr_prec_t current_bits();

 private:
  int saved_digits_;
};

class Real {
 public:
  Real();
  Real(int v);   // NOLINT(google-explicit-constructor)
  Real(long v);  // NOLINT(google-explicit-constructor)
  explicit Real(double v);
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  // Accepts decimal ("1.25e-3") and MPFR hex ("0x1.4p+0") notation.
  explicit Real(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Copy rounded to nearest at the given decimal precision.
  Real rounded(int digits) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long exponent10() const;  // floor(log10 |x|) for nonzero finite x

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  Real operator-() const;

  /// Shortest representation that reads back to the same binary value at the
  /// same precision (MPFR hex notation).
  std::string to_hex() const;

  static Real pi();
  static Real from_bits(mpfr_prec_t bits);  // zero with explicit precision

 private:
  struct Uninit {};
  explicit Real(Uninit, mpfr_prec_t bits);
  void widen_to(const Real& o);

  mpfr_t v_;

  friend Real make_result(const Real& a, const Real& b);
  friend Real make_result(const Real& a);
};

Real make_result(const Real& a, const Real& b);
Real make_result(const Real& a);

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(long a, const Real& b);
Real operator-(long a, const Real& b);
Real operator*(long a, const Real& b);
Real operator/(long a, const Real& b);
inline Real operator+(const Real& a, int b) { return a + static_cast<long>(b); }
inline Real operator-(const Real& a, int b) { return a - static_cast<long>(b); }
inline Real operator*(const Real& a, int b) { return a * static_cast<long>(b); }
inline Real operator/(const Real& a, int b) { return a / static_cast<long>(b); }
inline Real operator+(int a, const Real& b) { return static_cast<long>(a) + b; }
inline Real operator-(int a, const Real& b) { return static_cast<long>(a) - b; }
inline Real operator*(int a, const Real& b) { return static_cast<long>(a) * b; }
inline Real operator/(int a, const Real& b) { return static_cast<long>(a) / b; }

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, long b);
std::partial_ordering operator<=>(const Real& a, long b);
inline bool operator==(const Real& a, int b) { return a == static_cast<long>(b); }
inline std::partial_ordering operator<=>(const Real& a, int b) {
  return a <=> static_cast<long>(b);
}

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real pow10(long n);  // 10^n at current precision
Real lgamma(const Real& x);  // log Γ(x) for x > 0
Real ldexp(const Real& x, long e);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);
long round_to_long(const Real& x);
Real copysign(const Real& magnitude, const Real& sign_source);

}  // namespace daub

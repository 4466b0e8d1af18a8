#include "daub/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace daub {

namespace {

thread_local int tls_digits = 30;

void set_from_string(mpfr_ptr v, std::string_view text) {
  std::string s(text);
  char* end = nullptr;
  if (mpfr_strtofr(v, s.c_str(), &end, 0, MPFR_RNDN), end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("not a real number: '" + s + "'");
  }
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 4;
}

PrecisionScope::PrecisionScope(int digits) : saved_digits_(tls_digits) {
  tls_digits = digits;
}
PrecisionScope::~PrecisionScope() { tls_digits = saved_digits_; }
int PrecisionScope::current_digits() { return tls_digits; }
mpfr_prec_t PrecisionScope::current_bits() { return digits_to_bits(tls_digits); }

Real::Real(Uninit, mpfr_prec_t bits) { mpfr_init2(v_, bits); }

Real::Real() {
  mpfr_init2(v_, PrecisionScope::current_bits());
  mpfr_set_zero(v_, 1);
}
Real::Real(int v) : Real(static_cast<long>(v)) {}
Real::Real(long v) {
  mpfr_init2(v_, PrecisionScope::current_bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
  mpfr_init2(v_, PrecisionScope::current_bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(const mpz_class& v) {
  mpfr_init2(v_, PrecisionScope::current_bits());
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
Real::Real(const mpq_class& v) {
  mpfr_init2(v_, PrecisionScope::current_bits());
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
Real::Real(std::string_view text) {
  mpfr_init2(v_, PrecisionScope::current_bits());
  set_from_string(v_, text);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}
Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}
Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

Real Real::rounded(int digits) const {
  Real r(Uninit{}, digits_to_bits(digits));
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::exponent10() const {
  if (!is_finite() || is_zero()) {
    return 0;
  }
  Real a = abs(*this);
  Real l = log10(a);
  mpfr_floor(l.v_, l.v_);
  return mpfr_get_si(l.v_, MPFR_RNDN);
}

Real make_result(const Real& a, const Real& b) {
  return Real(Real::Uninit{},
              std::max({a.precision(), b.precision(), PrecisionScope::current_bits()}));
}
Real make_result(const Real& a) {
  return Real(Real::Uninit{}, std::max(a.precision(), PrecisionScope::current_bits()));
}

Real Real::from_bits(mpfr_prec_t bits) {
  Real r(Uninit{}, bits);
  mpfr_set_zero(r.v_, 1);
  return r;
}

Real Real::pi() {
  Real r(Uninit{}, PrecisionScope::current_bits());
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

void Real::widen_to(const Real& o) {
  mpfr_prec_t want = std::max(o.precision(), PrecisionScope::current_bits());
  if (want > precision()) mpfr_prec_round(v_, want, MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
  widen_to(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  widen_to(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  widen_to(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  widen_to(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(Uninit{}, precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string Real::to_hex() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

#define DAUB_BINOP(op, fn)                                   \
  Real operator op(const Real& a, const Real& b) {           \
    Real r = make_result(a, b);                              \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                \
    return r;                                                \
  }
DAUB_BINOP(+, mpfr_add)
DAUB_BINOP(-, mpfr_sub)
DAUB_BINOP(*, mpfr_mul)
DAUB_BINOP(/, mpfr_div)
#undef DAUB_BINOP

Real operator+(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r = make_result(a);
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator+(long a, const Real& b) { return b + a; }
Real operator-(long a, const Real& b) {
  Real r = make_result(b);
  mpfr_si_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(long a, const Real& b) {
  Real r = make_result(b);
  mpfr_si_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
bool operator==(const Real& a, long b) { return !mpfr_nan_p(a.get()) && mpfr_cmp_si(a.get(), b) == 0; }
std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.get())) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.get(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define DAUB_UNARY(name, fn)              \
  Real name(const Real& x) {              \
    Real r = make_result(x);              \
    fn(r.get(), x.get(), MPFR_RNDN);      \
    return r;                             \
  }
DAUB_UNARY(abs, mpfr_abs)
DAUB_UNARY(sqrt, mpfr_sqrt)
DAUB_UNARY(exp, mpfr_exp)
DAUB_UNARY(expm1, mpfr_expm1)
DAUB_UNARY(log, mpfr_log)
DAUB_UNARY(log1p, mpfr_log1p)
DAUB_UNARY(log10, mpfr_log10)
DAUB_UNARY(sin, mpfr_sin)
DAUB_UNARY(cos, mpfr_cos)
#undef DAUB_UNARY

Real lgamma(const Real& x) {
  Real r = make_result(x);
  mpfr_lngamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r = make_result(y, x);
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
Real hypot(const Real& x, const Real& y) {
  Real r = make_result(x, y);
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long n) {
  Real r = make_result(x);
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}
Real pow10(long n) {
  Real r;
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(n < 0 ? -n : n), MPFR_RNDN);
  if (n < 0) mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r = make_result(x);
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}
Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return b < a ? b : a; }
long round_to_long(const Real& x) { return mpfr_get_si(x.get(), MPFR_RNDN); }
Real copysign(const Real& magnitude, const Real& sign_source) {
  Real r = make_result(magnitude, sign_source);
  mpfr_copysign(r.get(), magnitude.get(), sign_source.get(), MPFR_RNDN);
  return r;
}

}  // namespace daub

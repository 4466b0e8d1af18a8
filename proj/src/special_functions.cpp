#include "daub/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "daub/daubechies_zeros.hpp"
#include "daub/errors.hpp"

namespace daub {

namespace {

constexpr long kMaxSeriesTerms = 200000;
constexpr long kMaxFractionTerms = 2000000;
constexpr int kGuardDigits = 10;

// Decimal digits lost to term growth in the erf Maclaurin series.
int series_guard(const Complex& w) {
  const double a = abs(w).to_double();
  return static_cast<int>(std::ceil(a * a * 0.4343)) + kGuardDigits;
}

bool use_series(const Complex& w) {
  const double a = abs(w).to_double();
  return a <= 5.0 || std::fabs(w.re.to_double()) < 1.5;
}

// erf(w) = 2/sqrt(pi) sum (-1)^n w^(2n+1) / (n! (2n+1)), evaluated at `digits`.
Complex erf_series(const Complex& w, int digits) {
  PrecisionScope scope(digits);
  const Complex minus_w2 = -(w * w);
  const double growth = abs(minus_w2).to_double();
  const Real eps = pow10(-digits);
  Complex term = w;
  Complex sum = w;
  for (long n = 1;; ++n) {
    term = term * minus_w2 / n;
    Complex add = term / (2 * n + 1);
    sum += add;
    if (n > growth && abs(add) <= eps * abs(sum)) break;
    if (n > kMaxSeriesTerms) {
      throw EvaluationFailure("erf series did not converge at w = " + debug_string(w));
    }
  }
  return sum * (2 / sqrt(Real::pi()));
}

// exp(z^2) erfc(z) for Re z > 0 by the Laplace continued fraction
//   sqrt(pi) exp(z^2) erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
// evaluated with the modified Lentz algorithm.
Complex erfcx_fraction(const Complex& z, int digits) {
  PrecisionScope scope(digits);
  const Real eps = pow10(-digits);
  const Real tiny = pow10(-4 * digits);
  Complex f = z;
  Complex c = f;
  Complex d;
  for (long n = 1;; ++n) {
    const Real a = Real(mpq_class(n, 2));
    d = z + d * a;
    if (abs(d) < tiny) d = Complex(tiny);
    d = 1 / d;
    c = z + Complex(a) / c;
    if (abs(c) < tiny) c = Complex(tiny);
    Complex delta = c * d;
    f *= delta;
    if (abs(delta - 1) <= eps) break;
    if (n > kMaxFractionTerms) {
      throw EvaluationFailure("erfc continued fraction did not converge at z = " +
                              debug_string(z));
    }
  }
  return 1 / (f * sqrt(Real::pi()));
}

Real series_radius_impl(int digits, int degree) {
  // Truncation error of a degree-D table on |eta| < 2 sqrt(pi) scales like
  // (|eta| / 2 sqrt(pi))^D; keep it below 10^-(digits + 10).
  PrecisionScope scope(20);
  const double expo = -static_cast<double>(digits + kGuardDigits) / degree;
  return min(Real(0.5), Real(3.5 * std::pow(10.0, expo)));
}

Complex phi_taylor_small(const Complex& zeta) {
  const auto& tab = SeriesTables::standard().phi_taylor;
  // Used only for |zeta| < 10^(-W/6); a handful of terms reaches full precision.
  RationalSeries head(tab.begin(), tab.begin() + std::min<size_t>(tab.size(), 25));
  return eval_series(head, zeta);
}

Complex phi_closed(const Complex& zeta, int digits) {
  PrecisionScope scope(digits);
  const Complex x = ldexp(zeta * zeta, -1);
  // Singular points: x = 2 pi i k, k != 0.
  const Real two_pi = 2 * Real::pi();
  const long k = round_to_long(x.im / two_pi);
  if (k != 0) {
    const Complex gap = x - Complex(Real(0), two_pi * k);
    if (abs(gap) < pow10(-digits / 3)) {
      throw SingularityError("phi(zeta) is singular near zeta = " + debug_string(zeta));
    }
  }
  const Complex denom = -expm1(-x);
  return sqrt(x / denom);
}

}  // namespace

Complex erfc_complex(const Complex& w, const NumericContext& ctx) {
  ctx.validate();
  if (!w.is_finite()) throw InvalidArgument("erfc argument is not finite");
  const int digits = ctx.working_digits;
  Complex result;
  if (use_series(w)) {
    const int work = digits + series_guard(w);
    PrecisionScope scope(work);
    result = 1 - erf_series(w, work);
  } else {
    const int work = digits + kGuardDigits;
    PrecisionScope scope(work);
    const bool right = w.re.sign() > 0;
    const Complex z = right ? w : -w;
    Complex ez = exp(-(z * z)) * erfcx_fraction(z, work);
    result = right ? ez : 2 - ez;
  }
  if (!result.is_finite()) {
    throw EvaluationFailure("erfc overflowed at w = " + debug_string(w));
  }
  PrecisionScope out(digits);
  return result.rounded(digits);
}

Complex erfc_scaled(const Complex& z, const NumericContext& ctx) {
  ctx.validate();
  if (!z.is_finite()) throw InvalidArgument("erfc argument is not finite");
  const int digits = ctx.working_digits;
  Complex result;
  if (use_series(z)) {
    const int work = digits + series_guard(z);
    PrecisionScope scope(work);
    result = exp(z * z) * (1 - erf_series(z, work));
  } else {
    const int work = digits + kGuardDigits;
    PrecisionScope scope(work);
    if (z.re.sign() > 0) {
      result = erfcx_fraction(z, work);
    } else {
      result = 2 * exp(z * z) - erfcx_fraction(-z, work);
    }
  }
  if (!result.is_finite()) {
    throw EvaluationFailure("scaled erfc overflowed at z = " + debug_string(z));
  }
  return result.rounded(digits);
}

Complex phi_of_zeta(const Complex& zeta, const NumericContext& ctx) {
  ctx.validate();
  const int digits = ctx.working_digits;
  PrecisionScope scope(digits + kGuardDigits);
  Complex result;
  if (zeta.is_finite() && abs(zeta) < pow10(-digits / 6)) {
    result = phi_taylor_small(zeta);
  } else {
    result = phi_closed(zeta, digits + kGuardDigits);
  }
  return result.rounded(digits);
}

Complex phi_derivative(const Complex& eta, const NumericContext& ctx) {
  ctx.validate();
  const int digits = ctx.working_digits;
  const auto& tables = SeriesTables::standard();
  PrecisionScope scope(digits + kGuardDigits);
  Complex result;
  if (abs(eta) < series_switch_radius(digits, tables)) {
    result = eval_series(series_derivative(tables.phi_taylor), eta);
  } else {
    // 1 + eta^2/2 - phi^2 = eta^2/4 + O(eta^4): about 2 log10(1/|eta|) digits cancel.
    const double lost = std::max(0.0, -2.0 * std::log10(abs(eta).to_double()));
    const int work = digits + kGuardDigits + static_cast<int>(std::ceil(lost));
    PrecisionScope inner(work);
    Complex phi = phi_closed(eta, work);
    result = phi * (1 + ldexp(eta * eta, -1) - phi * phi) / eta;
  }
  return result.rounded(digits);
}

Real phi_factor(long n, const NumericContext& ctx) {
  ctx.validate();
  if (n < 1) throw InvalidArgument("phi_factor needs N >= 1");
  const int digits = ctx.working_digits;
  PrecisionScope scope(digits + kGuardDigits);
  const Real rn(n);
  const Real half_up(mpq_class(2 * n + 1, 2));
  Real value = exp(lgamma(half_up) - lgamma(rn) - ldexp(log(rn), -1));
  return value.rounded(digits);
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

DaubechiesPolynomial::DaubechiesPolynomial(long n) : n_(n) {
  if (n < 1) throw InvalidArgument("P_N needs N >= 1");
  // a_k(M) = C(M - 1 + k, k) obeys Pascal's rule a_k(M) = a_k(M - 1) + a_{k-1}(M),
  // starting from a_k(1) = 1.
  coeffs_.assign(static_cast<size_t>(n), mpz_class(1));
  for (long m = 2; m <= n; ++m) {
    for (long k = 1; k < n; ++k) coeffs_[k] += coeffs_[k - 1];
  }
  inverse_beta_ = coeffs_.back() * (2 * n - 1);
}

int DaubechiesPolynomial::required_digits(const Complex& y) const {
  const int coeff_digits = static_cast<int>(mpz_sizeinbase(coeffs_.back().get_mpz_t(), 10));
  double growth = 0.0;
  {
    PrecisionScope scope(20);
    const double m = abs(y).to_double();
    if (m > 1.0) growth = std::ceil(static_cast<double>(n_ - 1) * std::log10(m));
  }
  return coeff_digits + static_cast<int>(growth) + 20;
}

Complex DaubechiesPolynomial::evaluate(const Complex& y, const NumericContext& ctx) const {
  return evaluate_with_derivative(y, ctx).first;
}

std::pair<Complex, Complex> DaubechiesPolynomial::evaluate_with_derivative(
    const Complex& y, const NumericContext& ctx) const {
  ctx.validate();
  if (!y.is_finite()) throw InvalidArgument("P_N argument is not finite");
  const int need = required_digits(y);
  if (ctx.working_digits < need) {
    throw PrecisionError("P_" + std::to_string(n_) + " at y = " + debug_string(y) + " needs " +
                         std::to_string(need) + " digits, context has " +
                         std::to_string(ctx.working_digits));
  }
  PrecisionScope scope(ctx.working_digits);
  Complex p;
  Complex dp;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    dp = dp * y + p;
    p = p * y + Complex(Real(coeffs_[k]));
  }
  return {p, dp};
}

Complex pn_direct(const Complex& y, long n, const NumericContext& ctx) {
  return DaubechiesPolynomial(n).evaluate(y, ctx);
}

Real series_switch_radius(int digits, const SeriesTables& tables) {
  return series_radius_impl(digits, tables.degree);
}

std::vector<Complex> b_coefficients(const Complex& eta, int kmax, const SeriesTables& tables,
                                    const NumericContext& ctx) {
  ctx.validate();
  if (kmax < 0 || kmax > kMaxBTerms) {
    throw InvalidArgument("B_k available for k <= 10, requested " + std::to_string(kmax));
  }
  if (static_cast<int>(tables.b_closed.size()) <= kmax) {
    throw InvalidArgument("series tables carry too few B_k");
  }
  const int digits = ctx.working_digits;
  PrecisionScope scope(digits + kGuardDigits);
  const Real strip = sqrt(2 * Real::pi()) - Real(kDomainMargin);
  if (!eta.is_finite() || abs(eta.im) > strip) {
    throw DomainError("eta = " + debug_string(eta) +
                      " lies outside the strip |Im eta| <= sqrt(2 pi) - 0.05");
  }
  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(kmax) + 1);
  if (abs(eta) < series_switch_radius(digits, tables)) {
    for (int k = 0; k <= kmax; ++k) out.push_back(eval_series(tables.b_series[k], eta).rounded(digits));
    return out;
  }
  // B_k ~ eta^(2k+1) hides behind terms of size eta^-(2k+1).
  const double lost =
      std::max(0.0, -(2.0 * kmax + 1.0) * std::log10(abs(eta).to_double()));
  const int work = digits + kGuardDigits + static_cast<int>(std::ceil(lost));
  PrecisionScope inner(work);
  const Complex phi = phi_closed(eta, work);
  for (int k = 0; k <= kmax; ++k) {
    out.push_back(eval_phi_eta(tables.b_closed[k], phi, eta).rounded(digits));
  }
  return out;
}

Complex incomplete_beta_at_eta(const Complex& eta, long n, int terms, const NumericContext& ctx) {
  ctx.validate();
  if (n < 1) throw InvalidArgument("incomplete beta needs N >= 1");
  if (terms < 0 || terms > kMaxBTerms) {
    throw InvalidArgument("expansion terms must lie in [0, 10]");
  }
  const int digits = ctx.working_digits;
  const NumericContext wide = ctx.widened(kGuardDigits);
  PrecisionScope scope(wide.working_digits);
  const Real rn(n);
  const Complex arg = -eta * sqrt(rn / 2);
  Complex main = ldexp(erfc_complex(arg, wide), -1);
  const auto b = b_coefficients(eta, terms, SeriesTables::standard(), wide);
  Complex sum;
  for (int k = terms; k >= 0; --k) sum = sum / rn + b[k];
  const Complex gauss = exp(-(rn * ldexp(eta * eta, -1))) / sqrt(2 * Real::pi() * rn);
  Complex result = main + gauss * sum;
  return result.rounded(digits);
}

Complex incomplete_beta_symmetric(const Complex& y, long n, int terms, const NumericContext& ctx) {
  ctx.validate();
  const NumericContext wide = ctx.widened(kGuardDigits);
  const Complex eta = y_to_eta(y, wide);
  PrecisionScope scope(ctx.working_digits);
  return incomplete_beta_at_eta(eta, n, terms, ctx);
}

}  // namespace daub

#include "daub/daubechies_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "daub/erfc_zeros.hpp"
#include "daub/errors.hpp"

namespace daub {

namespace {

constexpr int kGuardDigits = 10;
constexpr double kSeriesOnlyLimit = 3.0;
constexpr long kExpansionPolishMinN = 31;

// Decimal digits lost when a quantity of size |eta|^power is formed from O(1) terms.
int cancellation_digits(const Complex& eta, int power) {
  const double m = abs(eta).to_double();
  if (m >= 1.0 || m == 0.0) return 0;
  return static_cast<int>(std::ceil(-power * std::log10(m)));
}

Complex eps1_closed(const Complex& eta, const Complex& phi) { return log(phi) / eta; }

Complex eps2_closed(const Complex& eta, const Complex& phi, const Complex& e1) {
  const Complex eta2 = eta * eta;
  const Complex phi2 = phi * phi;
  Complex num = 8 + 3 * eta2 - 8 * phi2 + 4 * eta2 * eta * e1 - 8 * phi2 * e1 * eta -
                4 * e1 * e1 * eta2;
  return num / (8 * eta2 * eta);
}

Complex eps3_closed(const Complex& eta, const Complex& phi, const Complex& e1) {
  const Complex h2 = eta * eta;
  const Complex h3 = h2 * eta;
  const Complex h4 = h2 * h2;
  const Complex h5 = h4 * eta;
  const Complex p2 = phi * phi;
  const Complex p4 = p2 * p2;
  const Complex e2 = e1 * e1;
  const Complex e3 = e2 * e1;
  Complex num = -40 + 5 * h4 + 56 * p4 - 16 * p2 + 8 * h2 - 38 * h2 * p2 - 16 * eta * e1 +
                16 * p4 * e2 * h2 - 32 * p2 * e1 * h3 + 48 * p4 * e1 * eta - 6 * h3 * e1 +
                16 * p2 * e1 * eta + 4 * h5 * e1 - 8 * h4 * e2 * p2 + 16 * p2 * e2 * h2 +
                8 * e3 * h3 - 8 * e2 * h4;
  return num / (16 * h5);
}

Complex polish_pair_member(const Complex& y) {
  // Upper member of a pair is stored first.
  if (y.im.sign() < 0) return conj(y);
  return y;
}

}  // namespace

Complex eta0_from_erfc_zero(const Complex& w, long n, const NumericContext& ctx) {
  ctx.validate();
  if (n < 2) throw InvalidArgument("eta0 needs N >= 2");
  PrecisionScope scope(ctx.working_digits + kGuardDigits);
  Complex eta0 = -w * sqrt(Real(mpq_class(2, n)));
  const Real disc = 2 * sqrt(Real::pi()) - Real(kDomainMargin);
  if (!(abs(eta0) < disc)) {
    throw DomainError("eta0 = " + debug_string(eta0) + " lies outside |eta0| < 2 sqrt(pi) - 0.05");
  }
  return eta0.rounded(ctx.working_digits);
}

Complex epsilon_coefficient(int i, const Complex& eta, const SeriesTables& tables,
                            const NumericContext& ctx) {
  ctx.validate();
  if (i < 1 || i > kMaxEpsilonOrder) {
    throw InvalidArgument("eps_" + std::to_string(i) + " is not available; orders 1..5 only");
  }
  const int digits = ctx.working_digits;
  PrecisionScope scope(digits + kGuardDigits);
  const Real disc = 2 * sqrt(Real::pi()) - Real(kDomainMargin);
  const Real m = abs(eta);
  if (!(m < disc)) {
    throw DomainError("eta = " + debug_string(eta) + " lies outside the disc |eta| < 2 sqrt(pi) - 0.05");
  }
  if (i >= 4 && m > Real(kSeriesOnlyLimit)) {
    throw DomainError("eps_" + std::to_string(i) + " is series-only and refused for |eta| > 3");
  }
  Complex result;
  if (i >= 4 || m < series_switch_radius(digits, tables)) {
    result = eval_series(tables.epsilon_series[i], eta);
  } else {
    // eps_i = O(eta) is formed from terms of size eta^-(2i-1).
    const int work = digits + kGuardDigits + cancellation_digits(eta, 2 * i);
    PrecisionScope inner(work);
    NumericContext wide = NumericContext::with_digits(work);
    const Complex phi = phi_of_zeta(eta, wide);
    const Complex e1 = eps1_closed(eta, phi);
    if (i == 1) {
      result = e1;
    } else if (i == 2) {
      result = eps2_closed(eta, phi, e1);
    } else {
      result = eps3_closed(eta, phi, e1);
    }
  }
  return result.rounded(digits);
}

Complex epsilon_correction(const Complex& eta0, long n, int order, const SeriesTables& tables,
                           const NumericContext& ctx) {
  ctx.validate();
  if (order < 1 || order > kMaxEpsilonOrder) {
    throw InvalidArgument("asymptotic order " + std::to_string(order) +
                          " is unsupported; use 1..5");
  }
  if (n < 1) throw InvalidArgument("epsilon correction needs N >= 1");
  const NumericContext wide = ctx.widened(kGuardDigits);
  PrecisionScope scope(wide.working_digits);
  const Real rn(n);
  Complex sum;
  for (int i = order; i >= 1; --i) {
    sum = (sum + epsilon_coefficient(i, eta0, tables, wide)) / rn;
  }
  return sum.rounded(ctx.working_digits);
}

Complex eta_to_y(const Complex& eta, const NumericContext& ctx) {
  ctx.validate();
  const NumericContext wide = ctx.widened(kGuardDigits);
  PrecisionScope scope(wide.working_digits);
  Complex phi;
  try {
    phi = phi_of_zeta(eta, wide);
  } catch (const SingularityError&) {
    throw SingularityError("the eta -> y map is singular at eta = " + debug_string(eta));
  }
  Complex y = Complex(Real(mpq_class(1, 2))) - eta / (2 * sqrt(Real(2)) * phi);
  return canonical_zero(y.rounded(ctx.working_digits));
}

Complex y_to_eta(const Complex& y, const NumericContext& ctx) {
  ctx.validate();
  if (!y.is_finite()) throw InvalidArgument("y is not finite");
  const NumericContext wide = ctx.widened(kGuardDigits);
  PrecisionScope scope(wide.working_digits);
  const Complex u = 1 - 2 * y;
  if (u.re.is_zero() && u.im.is_zero()) return Complex();
  const Complex u2 = u * u;
  Complex lg;
  if (y.im.is_zero()) {
    // Real axis: ln(1 - u^2) is real on (0, 1); outside, take the limit from Im y > 0.
    const Real one_minus = 1 - u2.re;
    if (one_minus.is_zero()) throw DomainError("y_to_eta is singular at y = 0 and y = 1");
    if (one_minus.sign() > 0) {
      lg = Complex(log1p(-u2.re));
    } else {
      const Real pi = Real::pi();
      lg = Complex(log(-one_minus), u.re.sign() > 0 ? pi : -pi);
    }
  } else {
    const Complex one_minus = 1 - u2;
    if (one_minus.re.is_zero() && one_minus.im.is_zero()) {
      throw DomainError("y_to_eta is singular at y = 0 and y = 1");
    }
    lg = log1p(-u2);
  }
  const Complex q = -2 * lg / u2;
  Complex eta = u * sqrt(q);
  return canonical_zero(eta.rounded(ctx.working_digits));
}

EtaPoint eta_point(const Complex& w, long k, long n, int order, const SeriesTables& tables,
                   const NumericContext& ctx) {
  EtaPoint p;
  p.source_k = k;
  p.eta0 = eta0_from_erfc_zero(w, n, ctx);
  p.epsilon = epsilon_correction(p.eta0, n, order, tables, ctx);
  PrecisionScope scope(ctx.working_digits);
  p.eta = (p.eta0 + p.epsilon).rounded(ctx.working_digits);
  return p;
}

NumericContext horner_context(const DaubechiesPolynomial& p, const Complex& y,
                              const NumericContext& ctx) {
  NumericContext h = ctx;
  h.working_digits = std::max(ctx.working_digits, p.required_digits(y) + ctx.working_digits - 10);
  return h;
}

namespace {

Real scaled_residual(const DaubechiesPolynomial& p, const Complex& y, const NumericContext& ctx) {
  const NumericContext h = horner_context(p, y, ctx);
  PrecisionScope scope(h.working_digits);
  auto [v, d] = p.evaluate_with_derivative(y, h);
  return abs(v / d).rounded(ctx.working_digits);
}

}  // namespace

PolynomialZeroSet zeros_of_pn(long n, int order, const NumericContext& ctx) {
  ctx.validate();
  if (n < 2) throw InvalidArgument("P_N has zeros only for N >= 2");
  if (order < 1 || order > kMaxEpsilonOrder) {
    throw InvalidArgument("asymptotic order " + std::to_string(order) +
                          " is unsupported; use 1..5");
  }
  const auto& tables = SeriesTables::standard();
  const long pairs = (n - 1) / 2;
  const bool even = n % 2 == 0;
  const long kmax = even ? n / 2 : pairs;
  const auto erfc_zeros = erfc_zero_table(kmax, ctx.widened(kGuardDigits));
  const DaubechiesPolynomial poly(n);

  PolynomialZeroSet zs;
  zs.n = n;
  zs.order = order;
  PrecisionScope scope(ctx.working_digits);
  for (long k = 1; k <= kmax; ++k) {
    EtaPoint p;
    try {
      p = eta_point(erfc_zeros[k - 1].value, k, n, order, tables, ctx);
    } catch (const Error& e) {
      throw DomainError("zero from erfc zero k = " + std::to_string(k) + ": " + e.what());
    }
    Complex y = eta_to_y(p.eta, ctx);
    if (even && k == kmax) {
      // The exact zero is real; the imaginary part is an asymptotic artifact.
      zs.zeros.push_back(Complex(y.re));
      zs.partner.push_back(zs.zeros.size() - 1);
      zs.source_k.push_back(k);
      continue;
    }
    const size_t i = zs.zeros.size();
    zs.zeros.push_back(y);
    zs.zeros.push_back(conj(y));
    zs.partner.push_back(i + 1);
    zs.partner.push_back(i);
    zs.source_k.push_back(k);
    zs.source_k.push_back(k);
  }
  for (const auto& y : zs.zeros) zs.residuals.push_back(scaled_residual(poly, y, ctx));
  zs.refined.assign(zs.zeros.size(), false);
  return zs;
}

PolishResult newton_polish(const Complex& y0, long n, const NumericContext& ctx) {
  ctx.validate();
  if (n < 2) throw InvalidArgument("P_N has zeros only for N >= 2");
  if (!y0.is_finite()) throw InvalidArgument("starting value is not finite");
  const DaubechiesPolynomial poly(n);
  const bool real = y0.im.is_zero();
  std::vector<std::string> trail{debug_string(y0)};
  PolishResult out;
  Complex y = y0;

  if (n >= kExpansionPolishMinN) {
    // Stage 1: Newton on (1-y)^-N I_{1-y}(N, N) with P' from
    //   P' = N P / (1-y) - y^(N-1) / ((1-y) B(N, N)).
    const NumericContext wide = ctx.widened(kGuardDigits);
    PrecisionScope scope(wide.working_digits);
    const Real inv_beta(poly.inverse_beta());
    const Real stage_tol = pow10(-15);
    try {
      Real last_step;
      for (int it = 0; it < ctx.max_newton_iters; ++it) {
        const Complex one_minus = 1 - y;
        const Complex ib = incomplete_beta_symmetric(y, n, kMaxBTerms, wide);
        const Complex p = ib / pow(one_minus, n);
        const Complex dp = (n * p - pow(y, n - 1) * inv_beta) / one_minus;
        Complex step = p / dp;
        if (real) step.im = Real();
        const Real size = abs(step);
        if (it > 0 && !(size < last_step)) break;  // expansion accuracy reached
        y -= step;
        trail.push_back(debug_string(y));
        ++out.iterations;
        if (size <= stage_tol * abs(y)) break;
        last_step = size;
      }
    } catch (const Error&) {
      // The exact-polynomial stage below does not depend on this one.
    }
  }

  // Stage 2: Newton on the exact polynomial.
  const Real tol = [&] {
    PrecisionScope s(ctx.working_digits);
    return ctx.newton_tol();
  }();
  bool converged = false;
  for (int it = 0; it < ctx.max_newton_iters; ++it) {
    const NumericContext h = horner_context(poly, y, ctx);
    PrecisionScope scope(h.working_digits);
    auto [p, dp] = poly.evaluate_with_derivative(y, h);
    if (dp.re.is_zero() && dp.im.is_zero()) {
      throw RefinementFailure("P_N' vanished at " + debug_string(y), trail);
    }
    Complex step = p / dp;
    if (real) step.im = Real();
    y -= step;
    trail.push_back(debug_string(y));
    if (!y.is_finite()) throw RefinementFailure("Newton iterate is not finite", trail);
    if (abs(step) <= tol * abs(y)) {
      converged = true;
      break;
    }
    ++out.iterations;
  }
  if (!converged) {
    throw RefinementFailure("Newton on P_" + std::to_string(n) + " did not converge from " +
                                debug_string(y0) + "; last iterate " + trail.back(),
                            trail);
  }
  PrecisionScope scope(ctx.working_digits);
  out.zero = canonical_zero(y.rounded(ctx.working_digits));
  if (real) out.zero.im = Real();
  out.residual = scaled_residual(poly, out.zero, ctx);
  return out;
}

PolynomialZeroSet polish_zero_set(const PolynomialZeroSet& zs, const NumericContext& ctx) {
  PolynomialZeroSet out = zs;
  for (size_t i = 0; i < zs.zeros.size(); ++i) {
    const size_t j = zs.partner[i];
    if (j < i) continue;  // filled in with its partner
    const Complex start = j == i ? Complex(zs.zeros[i].re) : polish_pair_member(zs.zeros[i]);
    PolishResult r;
    try {
      r = newton_polish(start, zs.n, ctx);
    } catch (const RefinementFailure& e) {
      throw RefinementFailure("zero from erfc zero k = " + std::to_string(zs.source_k[i]) + ": " +
                                  e.what(),
                              e.trail());
    }
    if (j == i) {
      out.zeros[i] = r.zero;
    } else {
      const bool upper_first = zs.zeros[i].im.sign() >= 0;
      out.zeros[i] = upper_first ? r.zero : conj(r.zero);
      out.zeros[j] = conj(out.zeros[i]);
      out.residuals[j] = r.residual;
      out.refined[j] = true;
    }
    out.residuals[i] = r.residual;
    out.refined[i] = true;
  }
  return out;
}

ZeroIdentityResiduals verify_zero_identities(const PolynomialZeroSet& zs,
                                             const NumericContext& ctx) {
  ctx.validate();
  const int digits = ctx.working_digits + kGuardDigits +
                     static_cast<int>(std::ceil(std::log10(static_cast<double>(zs.n) + 1)));
  PrecisionScope scope(digits);
  Real sum(mpq_class(1, 2));
  Real product(1);
  for (size_t i = 0; i < zs.zeros.size(); ++i) {
    const size_t j = zs.partner[i];
    if (j < i) continue;
    const Complex& y = zs.zeros[i];
    if (j == i) {
      sum += y.re;
      product *= y.re;
    } else {
      sum += 2 * y.re;
      product *= norm(y);
    }
  }
  const Real sign = (zs.n - 1) % 2 == 0 ? Real(1) : Real(-1);
  product = Real(binomial(2 * zs.n - 2, zs.n - 1)) * product - sign;
  return {sum.rounded(ctx.working_digits), product.rounded(ctx.working_digits)};
}

Real lemniscate_deviation(const Complex& y) {
  return abs(abs(4 * y * (1 - y)) - 1);
}

std::vector<std::string> zero_set_violations(const PolynomialZeroSet& zs, double lemniscate_c) {
  std::vector<std::string> v;
  const size_t count = zs.zeros.size();
  if (static_cast<long>(count) != zs.n - 1) {
    v.push_back("expected " + std::to_string(zs.n - 1) + " zeros, found " +
                std::to_string(count));
  }
  if (zs.partner.size() != count) {
    v.push_back("pairing map has the wrong length");
    return v;
  }
  long reals = 0;
  for (size_t i = 0; i < count; ++i) {
    const size_t j = zs.partner[i];
    const Complex& y = zs.zeros[i];
    if (j >= count || zs.partner[j] != i) {
      v.push_back("zero " + std::to_string(i) + " has an inconsistent partner");
      continue;
    }
    if (j == i) {
      if (!y.im.is_zero()) v.push_back("self-paired zero " + std::to_string(i) + " is not real");
      ++reals;
    } else if (!(zs.zeros[j] == conj(y)) || y.im.is_zero()) {
      v.push_back("zeros " + std::to_string(i) + " and " + std::to_string(j) +
                  " are not an exact conjugate pair");
    }
    if (!(y.re < Real(mpq_class(1, 2)))) {
      v.push_back("zero " + std::to_string(i) + " has Re y >= 1/2");
    }
    const double dev = lemniscate_deviation(y).to_double() * static_cast<double>(zs.n);
    if (!(dev <= lemniscate_c)) {
      v.push_back("zero " + std::to_string(i) + " is off the lemniscate: N * deviation = " +
                  std::to_string(dev));
    }
  }
  const long expected_reals = zs.n % 2 == 0 ? 1 : 0;
  if (reals != expected_reals) {
    v.push_back("expected " + std::to_string(expected_reals) + " real zeros, found " +
                std::to_string(reals));
  }
  return v;
}

}  // namespace daub

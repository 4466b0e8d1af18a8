#pragma once

#include <gmpxx.h>

#include <vector>

#include "daub/complex.hpp"
#include "daub/context.hpp"
#include "daub/series_tables.hpp"

namespace daub {

/// Complementary error function erfc(w) = 2/sqrt(pi) * int_w^inf exp(-t^2) dt.
///
/// Maclaurin series of erf for |w| <= 5 or |Re w| < 3/2 (evaluated with enough
/// guard digits to absorb the exp(|w|^2) term growth), otherwise the Laplace
/// continued fraction in the right half-plane together with
/// erfc(-w) = 2 - erfc(w).
Complex erfc_complex(const Complex& w, const NumericContext& ctx);

/// exp(z^2) erfc(z), same evaluation scheme. Well scaled for Re z > 0.
Complex erfc_scaled(const Complex& z, const NumericContext& ctx);

/// phi(zeta) = sqrt((zeta^2/2) / (1 - exp(-zeta^2/2))), phi(0) = 1, principal
/// branch (positive on the real axis). Throws SingularityError near the
/// points where exp(-zeta^2/2) = 1, zeta != 0.
Complex phi_of_zeta(const Complex& zeta, const NumericContext& ctx);

/// d phi / d eta = phi (1 + eta^2/2 - phi^2) / eta, with the series limit at 0.
Complex phi_derivative(const Complex& eta, const NumericContext& ctx);

/// Phi(N) = Gamma(N + 1/2) / (sqrt(N) Gamma(N)) from log-gamma.
Real phi_factor(long n, const NumericContext& ctx);

/// Exact binomial coefficient.
mpz_class binomial(long n, long k);

/// P_N(y) = sum_{k<N} C(k+N-1, k) y^k with exact integer coefficients.
class DaubechiesPolynomial {
 public:
  explicit DaubechiesPolynomial(long n);

  long n() const { return n_; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Decimal digits pn_direct needs at y: digits of C(2N-2, N-1), plus the
  /// growth of |y|^(N-1), plus a 20 digit pad.
  int required_digits(const Complex& y) const;

  /// Horner evaluation; throws PrecisionError when ctx carries fewer digits
  /// than required_digits(y).
  Complex evaluate(const Complex& y, const NumericContext& ctx) const;

  /// Horner evaluation of P_N and P_N' together (same precision rule).
  std::pair<Complex, Complex> evaluate_with_derivative(const Complex& y,
                                                       const NumericContext& ctx) const;

  /// 1 / B(N, N) = (2N - 1) C(2N-2, N-1).
  const mpz_class& inverse_beta() const { return inverse_beta_; }

 private:
  long n_;
  std::vector<mpz_class> coeffs_;
  mpz_class inverse_beta_;
};

Complex pn_direct(const Complex& y, long n, const NumericContext& ctx);

/// B_0(eta) .. B_kmax(eta) of the uniform expansion of the incomplete beta
/// remainder. Valid for |Im eta| <= sqrt(2 pi) - delta.
std::vector<Complex> b_coefficients(const Complex& eta, int kmax, const SeriesTables& tables,
                                    const NumericContext& ctx);

/// I_{1-y}(N, N) = erfc(-eta sqrt(N/2)) / 2 + exp(-N eta^2 / 2) / sqrt(2 pi N)
///                 * sum_{k<=terms} B_k(eta) / N^k, eta = y_to_eta(y).
Complex incomplete_beta_symmetric(const Complex& y, long n, int terms, const NumericContext& ctx);

/// Same expansion evaluated directly at eta.
Complex incomplete_beta_at_eta(const Complex& eta, long n, int terms, const NumericContext& ctx);

/// Below this |eta| the Maclaurin tables replace the closed forms.
Real series_switch_radius(int digits, const SeriesTables& tables);

/// Strip and disc margin used by every domain check.
inline constexpr double kDomainMargin = 0.05;

}  // namespace daub

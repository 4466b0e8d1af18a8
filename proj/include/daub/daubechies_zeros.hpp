#pragma once

// Zeros of the Daubechies polynomial P_N(y) from the zeros of erfc.
//
// With -eta^2/2 = ln(4y(1-y)) the symmetric incomplete beta function becomes
// erfc(-eta sqrt(N/2))/2 plus a small remainder, so each erfc zero w_k gives a
// first approximation eta0 = -w_k sqrt(2/N) to an eta-zero. The correction
// eps = eps_1/N + ... + eps_5/N^5 accounts for the remainder, and mapping
// eta0 + eps back to the y-plane yields the zero of P_N.

#include <string>
#include <vector>

#include "daub/complex.hpp"
#include "daub/context.hpp"
#include "daub/series_tables.hpp"
#include "daub/special_functions.hpp"

namespace daub {

struct EtaPoint {
  Complex eta0;     // -w_k sqrt(2/N)
  Complex epsilon;  // sum_i eps_i(eta0) / N^i
  Complex eta;      // eta0 + epsilon
  long source_k = 0;
};

struct PolynomialZeroSet {
  long n = 0;
  int order = 0;                // asymptotic order used for the starting values
  std::vector<Complex> zeros;   // conjugate pairs adjacent (upper member first), real zero last
  std::vector<size_t> partner;  // index of the conjugate partner; itself for the real zero
  std::vector<long> source_k;   // erfc zero index each value came from
  std::vector<Real> residuals;  // |P_N(y) / P_N'(y)| at the stored value
  std::vector<bool> refined;
};

/// eta0 = -w sqrt(2/N). Throws DomainError outside |eta0| < 2 sqrt(pi) - 0.05.
Complex eta0_from_erfc_zero(const Complex& w, long n, const NumericContext& ctx);

/// Single coefficient eps_i(eta), i = 1..5. eps_1..eps_3 use closed forms away
/// from 0 and Maclaurin series near it; eps_4, eps_5 are series only and are
/// refused for |eta| > 3.
Complex epsilon_coefficient(int i, const Complex& eta, const SeriesTables& tables,
                            const NumericContext& ctx);

/// sum_{i=1}^{order} eps_i(eta0) / N^i.
Complex epsilon_correction(const Complex& eta0, long n, int order, const SeriesTables& tables,
                           const NumericContext& ctx);

/// y = 1/2 - eta / (2 sqrt(2) phi(eta)).
Complex eta_to_y(const Complex& eta, const NumericContext& ctx);

/// Inverse map: eta = u sqrt(-2 ln(1 - u^2) / u^2), u = 1 - 2y, so that
/// sign(eta) = sign(1/2 - y) on (0, 1). Off the real axis the principal
/// logarithm is used; on the real axis outside [0, 1] the value is the limit
/// from the upper half-plane (upper-half y map to the fourth quadrant).
/// The principal logarithm makes this the inverse of eta_to_y only where
/// |Re eta * Im eta| < pi, which covers every eta0 with |eta0| < sqrt(2 pi).
Complex y_to_eta(const Complex& y, const NumericContext& ctx);

/// eta0, eps and eta for erfc zero w_k^+.
EtaPoint eta_point(const Complex& w, long k, long n, int order, const SeriesTables& tables,
                   const NumericContext& ctx);

/// N - 1 asymptotic zeros of P_N: pairs from w_k, k < N/2, and for even N the
/// real zero from w_{N/2} with its imaginary part dropped. Not polished.
PolynomialZeroSet zeros_of_pn(long n, int order, const NumericContext& ctx);

struct PolishResult {
  Complex zero;
  Real residual;  // |P_N / P_N'| at the returned value
  int iterations = 0;
};

/// Newton refinement of a zero of P_N. For N > 30 a first stage iterates on the
/// uniform expansion of I_{1-y}(N, N); every run ends with Newton on the exact
/// polynomial at the precision Horner needs. Real starting values stay real.
PolishResult newton_polish(const Complex& y0, long n, const NumericContext& ctx);

/// Polishes every zero of the set, keeping conjugate pairs exact.
PolynomialZeroSet polish_zero_set(const PolynomialZeroSet& zs, const NumericContext& ctx);

struct ZeroIdentityResiduals {
  Real sum;      // sum y_k + 1/2
  Real product;  // C(2N-2, N-1) prod y_k - (-1)^(N-1)
};

ZeroIdentityResiduals verify_zero_identities(const PolynomialZeroSet& zs,
                                             const NumericContext& ctx);

/// | |4y(1-y)| - 1 |, distance measure from the limiting lemniscate.
Real lemniscate_deviation(const Complex& y);

/// Human-readable violations of the zero-set invariants (empty when valid):
/// count, exact conjugate pairing, one real zero iff N even, Re y < 1/2, and
/// N * lemniscate_deviation <= lemniscate_c.
std::vector<std::string> zero_set_violations(const PolynomialZeroSet& zs, double lemniscate_c);

/// Constant C in | |4y(1-y)| - 1 | <= C / N; the observed maximum of
/// N * deviation grows slowly with N (about 3.3 at N = 10, 4.0 at N = 100).
inline constexpr double kLemniscateConstant = 6.0;

/// Context for evaluating the exact polynomial near y: the digits Horner needs
/// there plus the working digits of ctx.
NumericContext horner_context(const DaubechiesPolynomial& p, const Complex& y,
                              const NumericContext& ctx);

}  // namespace daub

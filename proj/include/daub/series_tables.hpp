#pragma once

// Exact rational coefficient tables behind the small-argument expansions.
//
// Everything here is derived in exact arithmetic from two inputs: the
// Bernoulli numbers and the defining relations of the expansions.
//   * phi(zeta)^2 = x / (1 - e^-x) with x = zeta^2 / 2.
//   * ln Phi(N) = sum_n (-1)^(n+1) (B_{n+1}(1/2) - B_{n+1}) / (n (n+1) N^n).
//   * B_0 = (1 - phi) / eta,  eta B_{k+1} = B_k' - c_{k+1} phi,
//     with phi' = phi (1 + eta^2/2 - phi^2) / eta.
//   * The inversion corrections eps_k solve, order by order in 1/N,
//       N eta0 eps + N eps^2 / 2 = ln(1 + eps') + ln Phi(N) + ln phi(eta0 + eps).

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "daub/complex.hpp"

namespace daub {

/// Truncated power series; entry n is the coefficient of x^n.
using RationalSeries = std::vector<mpq_class>;

/// Laurent polynomial in (phi, eta): sum of coeff * phi^phi_power * eta^eta_power.
struct PhiEtaTerm {
  int phi_power;
  int eta_power;
  mpq_class coeff;
};
using PhiEtaPolynomial = std::vector<PhiEtaTerm>;

struct SeriesTables {
  int degree = 0;  // highest power kept in every Maclaurin table

  RationalSeries phi_taylor;        // phi(zeta), even
  RationalSeries log_phi;           // ln phi(zeta), even
  std::array<RationalSeries, 6> epsilon_series;  // [1..5] used, odd
  RationalSeries phi_factor_coeffs;      // c_k of Phi(N) ~ sum c_k N^-k
  RationalSeries log_phi_factor_coeffs;  // coefficients of ln Phi(N)
  std::vector<PhiEtaPolynomial> b_closed;  // B_0 .. B_10, derivative-free
  std::vector<RationalSeries> b_series;    // Maclaurin series of B_0 .. B_10

  /// Tables of the default degree, built once per process.
  static const SeriesTables& standard();
  static SeriesTables build(int degree);
};

inline constexpr int kStandardSeriesDegree = 150;

/// Plain-text audit format: a "# name" header per table followed by one
/// `numerator/denominator` line per coefficient.
void write_tables(std::ostream& out, const SeriesTables& tables);

/// Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<mpq_class> bernoulli_numbers(int n);

// Series arithmetic used by the table builder and by tests.
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, int degree);
RationalSeries series_derivative(const RationalSeries& a);
RationalSeries series_log(const RationalSeries& a, int degree);    // a[0] == 1
RationalSeries series_sqrt(const RationalSeries& a, int degree);   // a[0] == 1
RationalSeries series_exp(const RationalSeries& a, int degree);    // a[0] == 0

/// Horner evaluation at the current precision.
Complex eval_series(const RationalSeries& s, const Complex& x);
Complex eval_phi_eta(const PhiEtaPolynomial& p, const Complex& phi, const Complex& eta);

}  // namespace daub

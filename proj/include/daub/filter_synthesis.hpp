#pragma once

// Minimum-phase spectral factor and Daubechies filter taps from the zeros of P_N.
//
// Each zero y_n of P_N gives z_n + 1/z_n = 2 - 4 y_n; the root inside the unit
// circle enters Q_N(z) = prod (1 - z_n/z) / (1 - z_n) = sum f(n) z^-n, and
//   (1/sqrt 2) sum h(n) z^-n = ((1 + 1/z)/2)^N Q_N(z).

#include <vector>

#include "daub/complex.hpp"
#include "daub/context.hpp"
#include "daub/daubechies_zeros.hpp"

namespace daub {

struct ZZeroSet {
  long n = 0;
  std::vector<Complex> zeros;   // same order as the y-zeros they came from
  std::vector<size_t> partner;  // conjugate partner; itself for a real zero
};

struct FilterDiagnostics {
  Real sum_f;             // sum f(n) - 1
  Real sum_h;             // sum h(n) - sqrt(2)
  Real sum_squares;       // sum h(n)^2 - 1
  Real shift_orthogonality;  // max over s >= 1 of |sum_n h(n) h(n + 2s)|
  std::vector<Real> moments;  // |sum (-1)^n n^k h(n)|, k = 0..N-1
};

struct FilterBank {
  long n = 0;
  std::vector<Real> f;  // N coefficients of Q_N in powers of 1/z
  std::vector<Real> h;  // 2N filter taps
  FilterDiagnostics diagnostics;
};

/// Root of z^2 - (2 - 4y) z + 1 = 0 inside the unit circle: the larger root is
/// formed without cancellation and the smaller one is its reciprocal.
/// Throws DomainError when | |z| - 1 | < 1e-8.
Complex z_from_y(const Complex& y, const NumericContext& ctx);

/// z-zeros for a complete y-zero set, keeping its pairing.
ZZeroSet z_zeros(const PolynomialZeroSet& ys, const NumericContext& ctx);

/// f(0..N-1) from the product of real quadratic (pairs) and linear (real zero)
/// factors taken in increasing |z|, divided by the product of the factors at
/// z = 1. Throws StructuralError when the pairing is broken.
std::vector<Real> qn_coefficients(const ZZeroSet& zs, const NumericContext& ctx);

/// h = sqrt(2) 2^-N (C(N, .) * f) with all diagnostics filled in.
FilterBank filter_coefficients(const std::vector<Real>& f, long n, const NumericContext& ctx);

/// max over j, k of | sum_n h(n - 2j) h(n - 2k) - delta_jk |.
Real check_orthonormality(const FilterBank& bank);

/// |sum (-1)^n n^k h(n)| for k = 0..kmax (kmax <= N - 1).
std::vector<Real> check_moments(const FilterBank& bank, long kmax);

/// y-zeros -> z-zeros -> f -> h, all at the precision of `ctx`. The taps lose
/// about synthesis_guard_digits(N) digits to cancellation.
FilterBank synthesize_filter(const PolynomialZeroSet& ys, const NumericContext& ctx);

/// Extra digits the zeros and the expansion of Q_N need so that the taps come
/// out with the full working precision: roughly log10 of the largest |f(n)|.
int synthesis_guard_digits(long n);

/// `bank` rounded to the precision of `ctx`, diagnostics recomputed.
FilterBank rounded_bank(const FilterBank& bank, const NumericContext& ctx);

/// Taps accurate to the precision of `ctx`: synthesis runs with
/// synthesis_guard_digits(N) extra digits, the zeros polished there first when
/// `refine` is set, and the result is rounded back.
FilterBank daubechies_filter(const PolynomialZeroSet& ys, bool refine, const NumericContext& ctx);

}  // namespace daub

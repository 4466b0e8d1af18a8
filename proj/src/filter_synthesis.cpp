#include "daub/filter_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "daub/errors.hpp"
#include "daub/special_functions.hpp"

namespace daub {

namespace {

constexpr int kGuardDigits = 10;

int bank_digits(const FilterBank& bank) {
  if (bank.h.empty()) return 30;
  return static_cast<int>(std::floor(static_cast<double>(bank.h.front().precision()) / 3.3219));
}

// Extra digits for sums whose terms grow like (2N)^k.
int moment_guard(long n, long k) {
  return static_cast<int>(std::ceil(static_cast<double>(k) * std::log10(2.0 * n))) + kGuardDigits;
}

void check_pairing(const std::vector<Complex>& zeros, const std::vector<size_t>& partner) {
  if (partner.size() != zeros.size()) throw StructuralError("pairing map has the wrong length");
  for (size_t i = 0; i < zeros.size(); ++i) {
    const size_t j = partner[i];
    if (j >= zeros.size() || partner[j] != i) {
      throw StructuralError("zero " + std::to_string(i) + " has an inconsistent partner");
    }
    if (j == i) {
      if (!zeros[i].im.is_zero()) {
        throw StructuralError("self-paired zero " + std::to_string(i) + " is not real");
      }
    } else if (!(zeros[j] == conj(zeros[i])) || zeros[i].im.is_zero()) {
      throw StructuralError("zeros " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not a conjugate pair");
    }
  }
}

void fill_diagnostics(FilterBank& bank, const NumericContext& ctx) {
  const long n = bank.n;
  {
    PrecisionScope scope(ctx.working_digits + kGuardDigits);
    auto& d = bank.diagnostics;
    Real sf(0), sh(0), sq(0);
    for (const auto& v : bank.f) sf += v;
    for (const auto& v : bank.h) {
      sh += v;
      sq += v * v;
    }
    d.sum_f = (sf - 1).rounded(ctx.working_digits);
    d.sum_h = (sh - sqrt(Real(2))).rounded(ctx.working_digits);
    d.sum_squares = (sq - 1).rounded(ctx.working_digits);
    Real worst(0);
    for (long s = 1; s < n; ++s) {
      Real acc(0);
      for (long i = 0; i + 2 * s < 2 * n; ++i) acc += bank.h[i] * bank.h[i + 2 * s];
      worst = max(worst, abs(acc));
    }
    d.shift_orthogonality = worst.rounded(ctx.working_digits);
  }
  PrecisionScope scope(ctx.working_digits + moment_guard(n, n - 1));
  bank.diagnostics.moments = check_moments(bank, n - 1);
}

}  // namespace

Complex z_from_y(const Complex& y, const NumericContext& ctx) {
  ctx.validate();
  if (!y.is_finite()) throw InvalidArgument("y is not finite");
  PrecisionScope scope(ctx.working_digits + kGuardDigits);
  const Complex b = 2 - 4 * y;
  const Complex d = sqrt(b * b - 4);
  // Pick the sign that adds |b| and |d| rather than cancelling them.
  const Real align = b.re * d.re + b.im * d.im;
  const Complex big = ldexp(align.sign() >= 0 ? b + d : b - d, -1);
  Complex z = 1 / big;
  if (abs(abs(z) - 1) < Real(1e-8)) {
    throw DomainError("z-root of y = " + debug_string(y) +
                      " lies on the unit circle; the factorization is ill-conditioned");
  }
  if (y.im.is_zero()) z.im = Real();
  return canonical_zero(z.rounded(ctx.working_digits));
}

ZZeroSet z_zeros(const PolynomialZeroSet& ys, const NumericContext& ctx) {
  check_pairing(ys.zeros, ys.partner);
  ZZeroSet out;
  out.n = ys.n;
  out.partner = ys.partner;
  out.zeros.resize(ys.zeros.size());
  for (size_t i = 0; i < ys.zeros.size(); ++i) {
    const size_t j = ys.partner[i];
    if (j < i) continue;
    out.zeros[i] = z_from_y(ys.zeros[i], ctx);
    if (j != i) out.zeros[j] = conj(out.zeros[i]);
  }
  return out;
}

std::vector<Real> qn_coefficients(const ZZeroSet& zs, const NumericContext& ctx) {
  ctx.validate();
  check_pairing(zs.zeros, zs.partner);
  if (static_cast<long>(zs.zeros.size()) != zs.n - 1) {
    throw StructuralError("expected " + std::to_string(zs.n - 1) + " z-zeros, found " +
                          std::to_string(zs.zeros.size()));
  }
  const int digits = ctx.working_digits + kGuardDigits +
                     static_cast<int>(std::ceil(std::log10(static_cast<double>(zs.n) + 1)));
  PrecisionScope scope(digits);

  // One real factor per pair or real zero, ordered by increasing |z|.
  std::vector<size_t> order;
  for (size_t i = 0; i < zs.zeros.size(); ++i) {
    if (zs.partner[i] >= i) order.push_back(i);
  }
  std::vector<Real> modulus;
  modulus.reserve(zs.zeros.size());
  for (const auto& z : zs.zeros) modulus.push_back(abs(z));
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return modulus[a] < modulus[b]; });

  std::vector<Real> poly{Real(1)};
  Real at_one(1);
  for (size_t i : order) {
    const Complex& z = zs.zeros[i];
    std::vector<Real> factor;
    if (zs.partner[i] == i) {
      factor = {Real(1), -z.re};
    } else {
      factor = {Real(1), -2 * z.re, norm(z)};
    }
    Real factor_at_one(0);
    for (const auto& c : factor) factor_at_one += c;
    at_one *= factor_at_one;
    std::vector<Real> next(poly.size() + factor.size() - 1, Real(0));
    for (size_t a = 0; a < poly.size(); ++a) {
      for (size_t b = 0; b < factor.size(); ++b) next[a + b] += poly[a] * factor[b];
    }
    poly = std::move(next);
  }
  std::vector<Real> f;
  f.reserve(poly.size());
  for (const auto& c : poly) f.push_back((c / at_one).rounded(ctx.working_digits));
  return f;
}

FilterBank filter_coefficients(const std::vector<Real>& f, long n, const NumericContext& ctx) {
  ctx.validate();
  if (n < 1 || static_cast<long>(f.size()) != n) {
    throw InvalidArgument("filter synthesis needs exactly N = " + std::to_string(n) +
                          " coefficients f, got " + std::to_string(f.size()));
  }
  FilterBank bank;
  bank.n = n;
  bank.f = f;
  {
    PrecisionScope scope(ctx.working_digits + kGuardDigits);
    const Real scale = ldexp(sqrt(Real(2)), -n);
    bank.h.assign(static_cast<size_t>(2 * n), Real(0));
    for (long k = 0; k <= n; ++k) {
      const Real c(binomial(n, k));
      for (long j = 0; j < n; ++j) bank.h[k + j] += c * f[j];
    }
    for (auto& v : bank.h) v = (v * scale).rounded(ctx.working_digits);
  }
  fill_diagnostics(bank, ctx);
  return bank;
}

Real check_orthonormality(const FilterBank& bank) {
  const int digits = bank_digits(bank);
  PrecisionScope scope(std::max(PrecisionScope::current_digits(), digits + kGuardDigits));
  Real worst(0);
  const long len = static_cast<long>(bank.h.size());
  // Only j - k matters; shifts beyond the support give exact zeros.
  for (long s = 0; 2 * s < len; ++s) {
    Real acc(0);
    for (long i = 0; i + 2 * s < len; ++i) acc += bank.h[i] * bank.h[i + 2 * s];
    if (s == 0) acc -= 1;
    worst = max(worst, abs(acc));
  }
  return worst.rounded(digits);
}

std::vector<Real> check_moments(const FilterBank& bank, long kmax) {
  if (kmax < 0 || kmax > bank.n - 1) {
    throw InvalidArgument("moments exist for k = 0..N-1, requested up to " + std::to_string(kmax));
  }
  const int digits = bank_digits(bank);
  PrecisionScope scope(
      std::max(PrecisionScope::current_digits(), digits + moment_guard(bank.n, kmax)));
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(kmax) + 1);
  const long len = static_cast<long>(bank.h.size());
  // Running powers n^k, one per tap.
  std::vector<Real> power(static_cast<size_t>(len), Real(1));
  for (long k = 0; k <= kmax; ++k) {
    Real acc(0);
    for (long i = 0; i < len; ++i) {
      if (k > 0) power[i] *= i;
      if (i % 2 == 0) {
        acc += power[i] * bank.h[i];
      } else {
        acc -= power[i] * bank.h[i];
      }
    }
    out.push_back(abs(acc).rounded(digits));
  }
  return out;
}

FilterBank synthesize_filter(const PolynomialZeroSet& ys, const NumericContext& ctx) {
  const ZZeroSet zs = z_zeros(ys, ctx);
  return filter_coefficients(qn_coefficients(zs, ctx), ys.n, ctx);
}

int synthesis_guard_digits(long n) {
  if (n < 2) return 0;
  // |Q_N(-1)|^2 = P_N(1) = C(2N-1, N) bounds the size of f; the expansion
  // cancels that much before the taps come out O(1).
  const double dn = static_cast<double>(n);
  const double log10_binom =
      (std::lgamma(2 * dn) - std::lgamma(dn + 1) - std::lgamma(dn)) / std::log(10.0);
  return static_cast<int>(std::ceil(0.5 * log10_binom + std::log10(dn))) + 2;
}

FilterBank rounded_bank(const FilterBank& bank, const NumericContext& ctx) {
  ctx.validate();
  FilterBank out;
  out.n = bank.n;
  for (const auto& v : bank.f) out.f.push_back(v.rounded(ctx.working_digits));
  for (const auto& v : bank.h) out.h.push_back(v.rounded(ctx.working_digits));
  fill_diagnostics(out, ctx);
  return out;
}

FilterBank daubechies_filter(const PolynomialZeroSet& ys, bool refine, const NumericContext& ctx) {
  ctx.validate();
  const int guard = synthesis_guard_digits(ys.n);
  NumericContext wide = ctx.widened(guard);
  wide.newton_tol_exponent -= guard;
  PrecisionScope scope(wide.working_digits);
  const FilterBank bank =
      synthesize_filter(refine ? polish_zero_set(ys, wide) : ys, wide);
  return rounded_bank(bank, ctx);
}

}  // namespace daub

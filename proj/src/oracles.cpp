#include "daub/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "daub/daubechies_zeros.hpp"
#include "daub/errors.hpp"
#include "daub/special_functions.hpp"

namespace daub {

namespace {

constexpr int kGuardDigits = 10;
constexpr int kDeflatedNewtonIters = 400;
constexpr int kStartAttempts = 12;

Complex horner(const std::vector<Complex>& q, const Complex& y) {
  Complex acc;
  for (size_t k = q.size(); k-- > 0;) acc = acc * y + q[k];
  return acc;
}

std::pair<Complex, Complex> horner_with_derivative(const std::vector<Complex>& q, const Complex& y) {
  Complex p, dp;
  for (size_t k = q.size(); k-- > 0;) {
    dp = dp * y + p;
    p = p * y + q[k];
  }
  return {p, dp};
}

// Newton on q from `start`; returns false when it fails to settle.
bool newton_on(const std::vector<Complex>& q, Complex start, const Real& tol, Complex& root) {
  Complex y = std::move(start);
  for (int it = 0; it < kDeflatedNewtonIters; ++it) {
    auto [p, dp] = horner_with_derivative(q, y);
    if (dp.re.is_zero() && dp.im.is_zero()) return false;
    const Complex step = p / dp;
    y -= step;
    if (!y.is_finite() || abs(y) > Real(10)) return false;
    if (abs(step) <= tol * max(Real(1), abs(y))) {
      root = y;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Complex> lemniscate_points(int count, double scale) {
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(count));
  const Real s(scale);
  for (int j = 0; j < count; ++j) {
    const Real theta = 2 * Real::pi() * (2 * j + 1) / (2 * count);
    const Complex e(cos(theta), sin(theta));
    const Complex u = sqrt(1 - e);
    pts.push_back(Complex(Real(mpq_class(1, 2))) - ldexp(u * s, -1));
  }
  return pts;
}

std::vector<Complex> brute_force_zeros(long n, const NumericContext& ctx) {
  ctx.validate();
  if (n < 2) throw InvalidArgument("P_N has zeros only for N >= 2");
  const DaubechiesPolynomial poly(n);
  // Every zero and grid point lies inside |y| < 2.
  const int work = poly.required_digits(Complex(2)) + ctx.working_digits + kGuardDigits;
  const NumericContext hctx = NumericContext::with_digits(work);
  PrecisionScope scope(work);
  const Real tol = pow10(-(work - kGuardDigits));

  std::vector<Complex> grid;
  for (double s : {0.85, 0.95, 1.0, 1.05, 1.15}) {
    for (auto& y : lemniscate_points(64, s)) grid.push_back(std::move(y));
  }

  std::vector<Complex> q;
  for (const auto& c : poly.coefficients()) q.emplace_back(Real(c));
  std::vector<Complex> roots;
  while (q.size() > 1) {
    Complex r;
    if (q.size() == 2) {
      r = -q[0] / q[1];
    } else {
      std::vector<std::pair<Real, size_t>> ranked;
      ranked.reserve(grid.size());
      for (size_t i = 0; i < grid.size(); ++i) ranked.emplace_back(abs(horner(q, grid[i])), i);
      std::sort(ranked.begin(), ranked.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      bool found = false;
      for (int a = 0; a < kStartAttempts && a < static_cast<int>(ranked.size()); ++a) {
        if (newton_on(q, grid[ranked[a].second], tol, r)) {
          found = true;
          break;
        }
      }
      if (!found) {
        throw RefinementFailure("deflation search found no zero of P_" + std::to_string(n) +
                                " after " + std::to_string(roots.size()) + " zeros");
      }
    }
    // Polish on the undeflated polynomial; keep the deflated root if it wanders off.
    Complex polished = r;
    for (int it = 0; it < 20; ++it) {
      auto [p, dp] = poly.evaluate_with_derivative(polished, hctx);
      if (dp.re.is_zero() && dp.im.is_zero()) break;
      const Complex step = p / dp;
      polished -= step;
      if (abs(step) <= tol) break;
    }
    if (abs(polished - r) < Real(1e-6)) r = polished;
    // Synthetic division by (y - r).
    std::vector<Complex> next(q.size() - 1);
    next.back() = q.back();
    for (size_t k = next.size() - 1; k-- > 0;) next[k] = q[k + 1] + r * next[k + 1];
    q = std::move(next);
    roots.push_back(std::move(r));
  }
  std::vector<Complex> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.rounded(ctx.working_digits));
  return out;
}

Real max_zero_mismatch(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return Real(std::numeric_limits<double>::infinity());
  std::vector<bool> used(b.size(), false);
  Real worst(0);
  for (const auto& x : a) {
    size_t best = b.size();
    Real best_d;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      Real d = abs(x - b[j]);
      if (best == b.size() || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    used[best] = true;
    worst = max(worst, best_d);
  }
  return worst;
}

Real functional_equation_residual(const Complex& y, long n, const NumericContext& ctx) {
  ctx.validate();
  const DaubechiesPolynomial poly(n);
  const Complex y1 = 1 - y;
  const int work = std::max(poly.required_digits(y), poly.required_digits(y1)) +
                   ctx.working_digits;
  const NumericContext h = NumericContext::with_digits(work);
  PrecisionScope scope(work);
  const Complex lhs = pow(y1, n) * poly.evaluate(y, h) + pow(y, n) * poly.evaluate(y1, h);
  return abs(lhs - 1).rounded(ctx.working_digits);
}

Real uniform_expansion_error(const Complex& y, long n, int terms, const NumericContext& ctx) {
  ctx.validate();
  const DaubechiesPolynomial poly(n);
  const NumericContext h = horner_context(poly, y, ctx);
  const NumericContext wide = ctx.widened(kGuardDigits);
  PrecisionScope scope(h.working_digits);
  const Complex exact = poly.evaluate(y, h);
  const Complex approx = incomplete_beta_symmetric(y, n, terms, wide) / pow(1 - y, n);
  return (abs(approx - exact) / abs(exact)).rounded(ctx.working_digits);
}

Real derivative_identity_error(const Complex& y, long n, const NumericContext& ctx) {
  ctx.validate();
  const DaubechiesPolynomial poly(n);
  const NumericContext h = horner_context(poly, y, ctx);
  PrecisionScope scope(h.working_digits);
  auto [p, dp] = poly.evaluate_with_derivative(y, h);
  const Complex closed = (n * p - pow(y, n - 1) * Real(poly.inverse_beta())) / (1 - y);
  return (abs(closed - dp) / abs(dp)).rounded(ctx.working_digits);
}

Complex pn_product_form(const ZZeroSet& zs, const Complex& y, const NumericContext& ctx) {
  ctx.validate();
  PrecisionScope scope(ctx.working_digits + kGuardDigits);
  const Complex b = 2 - 4 * y;
  const Complex z = ldexp(b + sqrt(b * b - 4), -1);
  const Complex zi = 1 / z;
  Complex q_z(1), q_zi(1);
  for (const auto& zn : zs.zeros) {
    const Complex norm_n = 1 - zn;
    q_z *= (1 - zn / z) / norm_n;
    q_zi *= (1 - zn / zi) / norm_n;
  }
  return (q_z * q_zi).rounded(ctx.working_digits);
}

}  // namespace daub

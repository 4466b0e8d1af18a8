#include "daub/erfc_zeros.hpp"

#include <string>

#include "daub/errors.hpp"
#include "daub/special_functions.hpp"

namespace daub {

namespace {

constexpr int kGuardDigits = 10;

bool in_second_quadrant(const Complex& w) { return w.re.sign() < 0 && w.im.sign() > 0; }

// Branch index of the logarithmic equation: -w^2 = 2 pi i (k - 1/8) on the asymptote.
long branch_index(const Complex& w) {
  const Complex minus_w2 = -(w * w);
  const Real k = minus_w2.im / (2 * Real::pi()) + Real(mpq_class(1, 8));
  return round_to_long(k);
}

[[noreturn]] void fail(const std::string& why, const std::vector<std::string>& trail) {
  std::string msg = why;
  if (!trail.empty()) msg += "; last iterate " + trail.back();
  throw RefinementFailure(msg, trail);
}

}  // namespace

Complex asymptotic_erfc_zero(long k) {
  if (k < 1) throw InvalidArgument("erfc zero index must be >= 1");
  const Real r = sqrt(2 * Real::pi() * (Real(k) - Real(mpq_class(1, 8))));
  // exp(3 pi i / 4) = (-1 + i) / sqrt(2)
  const Real c = r / sqrt(Real(2));
  return {-c, c};
}

ErfcZero refine_erfc_zero(const Complex& w0, const NumericContext& ctx) {
  ctx.validate();
  if (!w0.is_finite() || !in_second_quadrant(w0)) {
    throw InvalidArgument("erfc zero start must lie in the open second quadrant, got " +
                          debug_string(w0));
  }
  const NumericContext wide = ctx.widened(kGuardDigits);
  PrecisionScope scope(wide.working_digits);
  const Real tol = ctx.newton_tol();
  const Real sqrt_pi = sqrt(Real::pi());
  const long k = branch_index(w0);
  if (k < 1) fail("start " + debug_string(w0) + " is not near any erfc zero", {});

  ErfcZero out;
  out.k = k;
  std::vector<std::string> trail{debug_string(w0)};
  Complex w = w0;

  // Phase 1: logarithmic form in z = -w.
  const Complex shift = Complex(log(Real(2)), 2 * Real::pi() * k);
  bool converged = false;
  for (int it = 0; it < ctx.max_newton_iters; ++it) {
    const Complex z = -w;
    const Complex ex = erfc_scaled(z, wide);
    const Complex g = -(z * z) + log(ex) - shift;
    const Complex step = g * ex * sqrt_pi / 2;  // -G / G'
    w = w - step;
    trail.push_back(debug_string(w));
    if (!w.is_finite() || !in_second_quadrant(w)) fail("iterate left the second quadrant", trail);
    if (abs(step) <= tol * abs(w)) {
      converged = true;
      break;
    }
    ++out.iterations;
  }
  if (!converged) fail("logarithmic Newton hit the iteration cap", trail);

  // Phase 2: Newton on erfc itself.
  converged = false;
  for (int it = 0; it < ctx.max_newton_iters; ++it) {
    const Complex step = erfc_scaled(w, wide) * sqrt_pi / 2;
    w = w + step;
    if (!w.is_finite() || !in_second_quadrant(w)) {
      trail.push_back(debug_string(w));
      fail("iterate left the second quadrant", trail);
    }
    if (abs(step) <= tol * abs(w)) {
      converged = true;
      break;
    }
    trail.push_back(debug_string(w));
    ++out.iterations;
  }
  if (!converged) fail("Newton on erfc hit the iteration cap", trail);

  out.value = w.rounded(ctx.working_digits);
  out.k = branch_index(out.value);
  {
    PrecisionScope s(ctx.working_digits);
    out.residual = abs(erfc_complex(out.value, ctx));
  }
  // Backward-error bound: |erfc(w)| <= tol |erfc'(w)| |w|.
  const Real derivative = 2 / sqrt_pi * abs(exp(-(out.value * out.value)));
  if (out.residual > tol * derivative * abs(out.value)) {
    fail("residual " + std::to_string(out.residual.to_double()) +
             " exceeds the backward-error bound",
         trail);
  }
  return out;
}

std::vector<ErfcZero> erfc_zero_table(long kmax, const NumericContext& ctx) {
  ctx.validate();
  if (kmax < 1) throw InvalidArgument("erfc zero table needs kmax >= 1");
  std::vector<ErfcZero> table;
  table.reserve(static_cast<size_t>(kmax));
  for (long k = 1; k <= kmax; ++k) {
    Complex start;
    {
      PrecisionScope scope(ctx.working_digits + kGuardDigits);
      start = asymptotic_erfc_zero(k);
    }
    ErfcZero z;
    try {
      z = refine_erfc_zero(start, ctx);
    } catch (const RefinementFailure& e) {
      throw RefinementFailure("erfc zero k = " + std::to_string(k) + ": " + e.what(), e.trail());
    }
    if (z.k != k) {
      throw RefinementFailure("erfc zero k = " + std::to_string(k) +
                              " converged to the zero with index " + std::to_string(z.k));
    }
    if (!table.empty() && !(abs(z.value) > abs(table.back().value))) {
      throw RefinementFailure("erfc zeros k = " + std::to_string(k - 1) + ", " +
                              std::to_string(k) + " are not ordered in modulus");
    }
    table.push_back(std::move(z));
  }
  return table;
}

}  // namespace daub

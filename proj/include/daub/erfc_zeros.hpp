#pragma once

#include <vector>

#include "daub/complex.hpp"
#include "daub/context.hpp"

namespace daub {

/// Upper member w_k^+ = u_k + i v_k (u_k < 0 < v_k) of the k-th pair of erfc zeros.
struct ErfcZero {
  long k = 0;
  Complex value;
  Real residual;  // |erfc(value)|
  int iterations = 0;
};

/// First-order start sqrt(2 pi (k - 1/8)) exp(3 pi i / 4), at the current precision.
Complex asymptotic_erfc_zero(long k);

/// Newton refinement of an erfc zero from a second-quadrant start.
///
/// A first phase runs Newton on the logarithmic form
///   G(z) = -z^2 + ln erfcx(z) - ln 2 - 2 pi i k = 0,   z = -w,
/// whose branch index k is read off the start; it converges from the
/// first-order start for every k, where Newton on erfc itself does not for
/// k >= 3. A second phase finishes with w <- w + (sqrt(pi)/2) exp(w^2) erfc(w).
/// Every iterate must stay in the second quadrant.
ErfcZero refine_erfc_zero(const Complex& w0, const NumericContext& ctx);

/// Zeros k = 1..kmax, refined from their first-order starts.
std::vector<ErfcZero> erfc_zero_table(long kmax, const NumericContext& ctx);

}  // namespace daub

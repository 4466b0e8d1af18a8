#pragma once

#include "daub/real.hpp"

namespace daub {

/// Precision and iteration policy shared by every computation.
struct NumericContext {
  int working_digits = 30;
  // Relative stopping tolerance for Newton iterations, as a power of ten.
  // Stored as an exponent so the value is exact at any precision.
  int newton_tol_exponent = -25;
  int max_newton_iters = 60;
  int expansion_terms = 10;

  /// Default policy for a given precision: tolerance 10^(5 - digits).
  static NumericContext with_digits(int digits);

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;

  Real newton_tol() const { return pow10(newton_tol_exponent); }

  /// Same policy with `extra` more working digits.
  NumericContext widened(int extra) const;
};

inline constexpr int kMaxBTerms = 10;
inline constexpr int kMaxEpsilonOrder = 5;

}  // namespace daub

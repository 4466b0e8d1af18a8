#pragma once

// Independent checks on the zero and filter pipeline. None of these routes
// touches the erfc zeros or the asymptotic inversion.

#include <vector>

#include "daub/complex.hpp"
#include "daub/context.hpp"
#include "daub/filter_synthesis.hpp"

namespace daub {

/// All N - 1 zeros of the exact polynomial by Newton iteration with
/// deflation, each search started from the best point of a grid around the
/// left lemniscate leaf and polished on the undeflated polynomial.
std::vector<Complex> brute_force_zeros(long n, const NumericContext& ctx);

/// Largest distance between the members of two zero lists under a greedy
/// nearest-neighbour matching; infinite when the lengths differ.
Real max_zero_mismatch(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// |(1-y)^N P_N(y) + y^N P_N(1-y) - 1| using the exact polynomial.
Real functional_equation_residual(const Complex& y, long n, const NumericContext& ctx);

/// |(1-y)^-N I_{1-y}(N, N) - P_N(y)| / |P_N(y)| with `terms` B_k terms.
Real uniform_expansion_error(const Complex& y, long n, int terms, const NumericContext& ctx);

/// Relative gap between P_N' from N P/(1-y) - y^(N-1)/((1-y) B(N,N)) and the
/// Horner derivative of the exact polynomial.
Real derivative_identity_error(const Complex& y, long n, const NumericContext& ctx);

/// Q_N(z) Q_N(1/z) with z + 1/z = 2 - 4y, from a z-zero set; equals P_N(y).
Complex pn_product_form(const ZZeroSet& zs, const Complex& y, const NumericContext& ctx);

/// Points y = 1/2 - s sqrt(1 - exp(i theta)) / 2 on the left lemniscate leaf
/// (s = 1) or a scaled copy, theta = 2 pi (j + 1/2) / count.
std::vector<Complex> lemniscate_points(int count, double scale);

}  // namespace daub

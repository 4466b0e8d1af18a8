#include "daub/context.hpp"

#include <string>

#include "daub/errors.hpp"

namespace daub {

NumericContext NumericContext::with_digits(int digits) {
  NumericContext ctx;
  ctx.working_digits = digits;
  ctx.newton_tol_exponent = 5 - digits;
  return ctx;
}

void NumericContext::validate() const {
  if (working_digits < 15) {
    throw InvalidArgument("working_digits must be >= 15, got " + std::to_string(working_digits));
  }
  if (newton_tol_exponent < 2 - working_digits) {
    throw InvalidArgument("newton_tol 1e" + std::to_string(newton_tol_exponent) +
                          " is below what " + std::to_string(working_digits) +
                          " digits can resolve");
  }
  if (newton_tol_exponent >= 0) {
    throw InvalidArgument("newton_tol must be < 1");
  }
  if (max_newton_iters < 1) throw InvalidArgument("max_newton_iters must be positive");
  if (expansion_terms < 0 || expansion_terms > kMaxBTerms) {
    throw InvalidArgument("expansion_terms must lie in [0, 10]");
  }
}

NumericContext NumericContext::widened(int extra) const {
  NumericContext c = *this;
  c.working_digits += extra;
  return c;
}

}  // namespace daub

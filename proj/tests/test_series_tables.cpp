#include <sstream>

#include "daub/series_tables.hpp"
#include "daub/special_functions.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace daub;
using namespace daub::test;

namespace {

const SeriesTables& tables() { return SeriesTables::standard(); }

}  // namespace

TEST_CASE("phi Taylor series starts 1, 1/8, 1/384 in even powers") {
  const auto& p = tables().phi_taylor;
  CHECK(p[0] == mpq_class(1));
  CHECK(p[1] == 0);
  CHECK(p[2] == mpq_class(1, 8));
  CHECK(p[3] == 0);
  CHECK(p[4] == mpq_class(1, 384));
  for (size_t n = 1; n < p.size(); n += 2) CHECK(p[n] == 0);
}

TEST_CASE("gamma ratio coefficients c0..c4") {
  const auto& c = tables().phi_factor_coeffs;
  CHECK(c[0] == mpq_class(1));
  CHECK(c[1] == mpq_class(-1, 8));
  CHECK(c[2] == mpq_class(1, 128));
  CHECK(c[3] == mpq_class(5, 1024));
  CHECK(c[4] == mpq_class(-21, 32768));
}

TEST_CASE("gamma ratio coefficients fit Phi(N) at large N") {
  PrecisionScope scope(60);
  const auto ctx = NumericContext::with_digits(60);
  const auto& c = tables().phi_factor_coeffs;
  for (long n : {1000L, 10000L, 1000000L}) {
    const Real exact = phi_factor(n, ctx);
    Real approx(0);
    const int terms = 8;
    for (int k = terms; k >= 0; --k) approx = approx / n + Real(c[k]);
    // Truncation error is about |c_9| / N^9.
    CHECK(d(abs(approx - exact)) < std::pow(static_cast<double>(n), -9.0) * 1e-1);
  }
}

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_numbers(12);
  CHECK(b[0] == 1);
  CHECK(b[1] == mpq_class(-1, 2));
  CHECK(b[2] == mpq_class(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[4] == mpq_class(-1, 30));
  CHECK(b[12] == mpq_class(-691, 2730));
}

TEST_CASE("series arithmetic round trips") {
  const int deg = 20;
  RationalSeries a(deg + 1);
  a[0] = 1;
  a[1] = mpq_class(1, 3);
  a[2] = mpq_class(-2, 5);
  a[5] = 7;
  const auto l = series_log(a, deg);
  const auto e = series_exp(l, deg);
  for (int n = 0; n <= deg; ++n) CHECK(e[n] == a[n]);
  const auto s = series_sqrt(a, deg);
  const auto sq = series_mul(s, s, deg);
  for (int n = 0; n <= deg; ++n) CHECK(sq[n] == a[n]);
  const auto dv = series_derivative(a);
  CHECK(dv[0] == mpq_class(1, 3));
  CHECK(dv[4] == 35);
}

TEST_CASE("eps_1 series: printed head and the eta^(4k-1) pattern") {
  const auto& e1 = tables().epsilon_series[1];
  CHECK(e1[0] == 0);
  CHECK(e1[1] == mpq_class(1, 8));
  CHECK(e1[3] == mpq_class(-1, 192));
  CHECK(e1[5] == 0);
  CHECK(e1[7] == mpq_class(1, 92160));
  CHECK(e1[11] == mpq_class(-1, 23224320));
  CHECK(e1[15] == mpq_class(mpz_class(1), mpz_class("4954521600")));
  // The coefficient printed against eta^17 belongs to eta^19.
  CHECK(e1[17] == 0);
  CHECK(e1[19] == mpq_class(mpz_class(-1), mpz_class("980995276800")));
  for (size_t n = 5; n < e1.size(); n += 2) {
    if (n % 4 == 1) CHECK(e1[n] == 0);
  }
}

TEST_CASE("eps_2..eps_5 series heads") {
  const auto& e = tables().epsilon_series;
  CHECK(e[2][1] == mpq_class(1, 128));
  CHECK(e[2][3] == mpq_class(-5, 1536));
  CHECK(e[2][5] == mpq_class(7, 40960));
  CHECK(e[2][7] == mpq_class(1, 81920));
  CHECK(e[2][9] == mpq_class(-407, 371589120));
  CHECK(e[3][1] == mpq_class(-5, 1024));
  CHECK(e[3][3] == mpq_class(-11, 24576));
  CHECK(e[3][5] == mpq_class(63, 327680));
  CHECK(e[3][7] == mpq_class(-823, 165150720));
  CHECK(e[4][1] == mpq_class(-21, 32768));
  CHECK(e[4][3] == mpq_class(37, 65536));
  CHECK(e[4][5] == mpq_class(179, 5242880));
  CHECK(e[5][1] == mpq_class(399, 262144));
  CHECK(e[5][3] == mpq_class(219, 2097152));
  for (int k = 1; k <= 5; ++k) {
    for (size_t n = 0; n < e[k].size(); n += 2) CHECK(e[k][n] == 0);
  }
}

TEST_CASE("eps_1 series equals (1/eta) ln phi(eta)") {
  PrecisionScope scope(50);
  const auto ctx = NumericContext::with_digits(50);
  for (const char* x : {"0.3", "1", "1.5"}) {
    const Complex eta(R(x));
    const Complex direct = log(phi_of_zeta(eta, ctx)) / eta;
    CHECK(dist(eval_series(tables().epsilon_series[1], eta), direct) < 1e-40);
  }
}

TEST_CASE("closed-form B_1 and B_2 equal the printed expressions") {
  PrecisionScope scope(50);
  const auto ctx = NumericContext::with_digits(50);
  for (const Complex& eta : {C("1", "0"), C("0.7", "-0.3"), C("2.1", "-1.4")}) {
    const Complex phi = phi_of_zeta(eta, ctx);
    const Complex e2 = eta * eta;
    const Complex b1 = -(3 * phi * e2 - 8 * pow(phi, 3) + 8) / (8 * pow(eta, 3));
    const Complex b2 = -(25 * phi * e2 * e2 - 240 * e2 * pow(phi, 3) + 384 * pow(phi, 5) - 384) /
                       (128 * pow(eta, 5));
    CHECK(dist(eval_phi_eta(tables().b_closed[1], phi, eta), b1) < 1e-40);
    CHECK(dist(eval_phi_eta(tables().b_closed[2], phi, eta), b2) < 1e-40);
    CHECK(dist(eval_phi_eta(tables().b_closed[0], phi, eta), (1 - phi) / eta) < 1e-40);
  }
}

TEST_CASE("B_k recursion holds against finite differences") {
  PrecisionScope scope(70);
  const auto ctx = NumericContext::with_digits(70);
  const auto& c = tables().phi_factor_coeffs;
  const Complex eta = C("1.3", "0.2");
  const Real h = pow10(-18);
  const auto at = b_coefficients(eta, kMaxBTerms, tables(), ctx);
  const auto up = b_coefficients(eta + Complex(h), kMaxBTerms, tables(), ctx);
  const auto dn = b_coefficients(eta - Complex(h), kMaxBTerms, tables(), ctx);
  const Complex phi = phi_of_zeta(eta, ctx);
  for (int k = 0; k < kMaxBTerms; ++k) {
    const Complex deriv = (up[k] - dn[k]) / (2 * h);
    const Complex rhs = deriv - Real(c[k + 1]) * phi;
    CHECK(dist(eta * at[k + 1], rhs) < 1e-25 * std::max(1.0, d(abs(rhs))));
  }
}

TEST_CASE("B_k Maclaurin tables agree with the closed forms") {
  PrecisionScope scope(60);
  const auto ctx = NumericContext::with_digits(60);
  const Complex eta = C("0.4", "-0.25");
  const Complex phi = phi_of_zeta(eta, ctx);
  for (int k = 0; k <= kMaxBTerms; ++k) {
    const Complex closed = eval_phi_eta(tables().b_closed[k], phi, eta);
    const Complex series = eval_series(tables().b_series[k], eta);
    CHECK(rel(series, closed) < 1e-30);
  }
}

TEST_CASE("audit format lists every table as numerator/denominator lines") {
  const SeriesTables small = SeriesTables::build(12);
  std::ostringstream out;
  write_tables(out, small);
  const std::string text = out.str();
  CHECK(text.find("# phi_taylor") != std::string::npos);
  CHECK(text.find("1/384") != std::string::npos);
  CHECK(text.find("-1/192") != std::string::npos);
}

TEST_CASE("a smaller build is a prefix of the standard tables") {
  const SeriesTables small = SeriesTables::build(31);
  for (int k = 1; k <= 5; ++k) {
    for (size_t n = 0; n < small.epsilon_series[k].size(); ++n) {
      CHECK(small.epsilon_series[k][n] == tables().epsilon_series[k][n]);
    }
  }
}

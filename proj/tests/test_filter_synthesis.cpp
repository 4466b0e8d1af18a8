#include <algorithm>
#include <random>

#include "daub/daubechies_zeros.hpp"
#include "daub/errors.hpp"
#include "daub/filter_synthesis.hpp"
#include "daub/oracles.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace daub;
using namespace daub::test;

namespace {

const NumericContext k30 = NumericContext::with_digits(30);

PolynomialZeroSet polished(long n, const NumericContext& ctx) {
  return polish_zero_set(zeros_of_pn(n, 5, ctx), ctx);
}

// D_4 taps ((1+s3), (3+s3), (3-s3), (1-s3)) / (4 sqrt 2).
std::vector<Real> d4() {
  const Real s3 = sqrt(Real(3));
  const Real den = 4 * sqrt(Real(2));
  return {(1 + s3) / den, (3 + s3) / den, (3 - s3) / den, (1 - s3) / den};
}

// Coefficients of prod (1 - z_n x) / (1 - z_n), expanded in complex arithmetic.
std::vector<Complex> naive_expansion(const std::vector<Complex>& zeros) {
  std::vector<Complex> poly{Complex(1)};
  Complex norm(1);
  for (const auto& z : zeros) {
    std::vector<Complex> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= poly[i] * z;
    }
    poly = std::move(next);
    norm *= 1 - z;
  }
  for (auto& c : poly) c = c / norm;
  return poly;
}

}  // namespace

TEST_CASE("z from y") {
  PrecisionScope scope(30);
  const Complex z1 = z_from_y(Complex(R("-0.5")), k30);
  CHECK(d(abs(z1 - Complex(2 - sqrt(Real(3))))) < 1e-29);
  CHECK(z1.im.is_zero());
  const Real tip = Real(mpq_class(1, 2)) - 1 / sqrt(Real(2));
  CHECK(d(abs(z_from_y(Complex(tip), k30) - Complex(sqrt(Real(2)) - 1))) < 1e-28);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    const Complex y = random_complex(rng, -0.8, 0.3, -0.9, 0.9);
    const Complex z = z_from_y(y, k30);
    CHECK(abs(z) < Real(1));
    CHECK(dist(z_from_y(conj(y), k30), conj(z)) < 1e-29);
    CHECK(dist(z + 1 / z, 2 - 4 * y) < 1e-27);
  }
  // 2 - 4y = 1 puts both roots on the unit circle.
  CHECK_THROWS_AS(z_from_y(Complex(R("0.25")), k30), DomainError);
}

TEST_CASE("N = 2 coefficients") {
  PrecisionScope scope(30);
  const auto bank = synthesize_filter(polished(2, k30), k30);
  const Real s3 = sqrt(Real(3));
  CHECK(d(abs(bank.f[0] - (1 + s3) / 2)) < 1e-28);
  CHECK(d(abs(bank.f[1] - (1 - s3) / 2)) < 1e-28);
  const auto ref = d4();
  for (size_t i = 0; i < 4; ++i) CHECK(d(abs(bank.h[i] - ref[i])) < 1e-27);
  CHECK(d(bank.h[0]) == doctest::Approx(0.482963).epsilon(1e-6));
  CHECK(d(bank.h[3]) == doctest::Approx(-0.129410).epsilon(1e-5));
}

TEST_CASE("exact D_4 taps pass the checks") {
  PrecisionScope scope(30);
  FilterBank bank;
  bank.n = 2;
  bank.h = d4();
  CHECK(d(check_orthonormality(bank)) <= 1e-28);
  const auto m = check_moments(bank, 1);
  CHECK(d(m[0]) <= 1e-28);
  CHECK(d(m[1]) <= 1e-28);
  CHECK_THROWS_AS(check_moments(bank, 2), InvalidArgument);
}

TEST_CASE("orthonormality detects a perturbed tap") {
  PrecisionScope scope(30);
  auto bank = synthesize_filter(polished(4, k30), k30);
  CHECK(d(check_orthonormality(bank)) < 1e-25);
  const Real h0 = bank.h[0];
  bank.h[0] += Real(1e-6);
  CHECK(check_orthonormality(bank) >= Real(1e-6) * abs(h0));
}

TEST_CASE("diagonal of the orthonormality check is the sum of squares") {
  PrecisionScope scope(30);
  auto bank = synthesize_filter(polished(3, k30), k30);
  for (auto& v : bank.h) v *= Real(1.001);
  Real sq(0);
  for (const auto& v : bank.h) sq += v * v;
  // Scaling every tap leaves shifted products tiny but moves the diagonal.
  CHECK(d(abs(check_orthonormality(bank) - abs(sq - 1))) < 1e-20);
}

TEST_CASE("N = 3 from the quadratic-formula zeros") {
  PrecisionScope scope(30);
  PolynomialZeroSet zs;
  zs.n = 3;
  const Complex up(Real(-3) / 12, sqrt(Real(15)) / 12);
  zs.zeros = {up, conj(up)};
  zs.partner = {1, 0};
  const auto bank = synthesize_filter(zs, k30);
  CHECK(d(bank.h[0]) == doctest::Approx(0.332671).epsilon(1e-6));
  CHECK(d(check_orthonormality(bank)) < 1e-27);
  for (const auto& m : bank.diagnostics.moments) CHECK(d(m) < 1e-26);
  const auto pipeline = synthesize_filter(polished(3, k30), k30);
  for (size_t i = 0; i < 6; ++i) CHECK(d(abs(pipeline.h[i] - bank.h[i])) < 1e-27);
}

TEST_CASE("filter identities for N = 2..20") {
  PrecisionScope scope(30);
  for (long n = 2; n <= 20; ++n) {
    const auto bank = synthesize_filter(polished(n, k30), k30);
    REQUIRE(bank.f.size() == static_cast<size_t>(n));
    REQUIRE(bank.h.size() == static_cast<size_t>(2 * n));
    const auto& dg = bank.diagnostics;
    CHECK(d(abs(dg.sum_f)) < 1e-24);
    CHECK(d(abs(dg.sum_h)) < 1e-24);
    CHECK(d(abs(dg.sum_squares)) < 1e-24);
    CHECK(d(check_orthonormality(bank)) < 1e-24);
    for (long k = 0; k <= std::min<long>(3, n - 1); ++k) {
      CHECK(d(dg.moments[k]) < 1e-22 * std::pow(2.0 * n, static_cast<double>(k)));
    }
    for (const auto& v : bank.h) CHECK(v.is_finite());
  }
}

TEST_CASE("product form reproduces the polynomial for N = 2..10") {
  PrecisionScope scope(30);
  std::mt19937_64 rng(31);
  for (long n = 2; n <= 10; ++n) {
    const auto zz = z_zeros(polished(n, k30), k30);
    for (const auto& z : zz.zeros) CHECK(abs(z) < Real(1));
    const DaubechiesPolynomial poly(n);
    for (int i = 0; i < 10; ++i) {
      const Complex y = random_complex(rng, -1, 1, -1, 1);
      const Complex exact = poly.evaluate(y, horner_context(poly, y, k30));
      CHECK(rel(pn_product_form(zz, y, k30), exact) < 1e-10);
    }
  }
}

TEST_CASE("real factor products match a naive complex expansion") {
  PrecisionScope scope(30);
  for (long n = 2; n <= 8; ++n) {
    const auto zz = z_zeros(polished(n, k30), k30);
    const auto f = qn_coefficients(zz, k30);
    const auto naive = naive_expansion(zz.zeros);
    REQUIRE(naive.size() == f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      CHECK(d(abs(naive[i].im)) < 1e-27);
      CHECK(d(abs(naive[i].re - f[i])) < 1e-26);
    }
  }
}

TEST_CASE("reciprocal zeros give the reversed filter") {
  PrecisionScope scope(30);
  for (long n : {2L, 3L}) {
    const auto zz = z_zeros(polished(n, k30), k30);
    const auto bank = filter_coefficients(qn_coefficients(zz, k30), n, k30);
    ZZeroSet flipped = zz;
    for (auto& z : flipped.zeros) z = 1 / z;
    const auto mirror = filter_coefficients(qn_coefficients(flipped, k30), n, k30);
    for (long j = 0; j < 2 * n; ++j) {
      CHECK(d(abs(mirror.h[j] - bank.h[2 * n - 1 - j])) < 1e-26);
    }
  }
}

TEST_CASE("broken pairing is a structural error") {
  PrecisionScope scope(30);
  auto zz = z_zeros(polished(5, k30), k30);
  zz.partner[0] = 0;
  CHECK_THROWS_AS(qn_coefficients(zz, k30), StructuralError);
  auto zz2 = z_zeros(polished(5, k30), k30);
  zz2.zeros.pop_back();
  zz2.partner.pop_back();
  CHECK_THROWS(qn_coefficients(zz2, k30));
  CHECK_THROWS_AS(filter_coefficients({Real(1)}, 2, k30), InvalidArgument);
}

TEST_CASE("N = 100 taps") {
  PrecisionScope scope(30);
  const auto bank = daubechies_filter(zeros_of_pn(100, 5, k30), true, k30);
  const auto it = std::max_element(bank.h.begin(), bank.h.end(),
                                   [](const Real& a, const Real& b) { return abs(a) < abs(b); });
  CHECK(it - bank.h.begin() == 20);
  CHECK(d(abs(*it - R("0.39910"))) < 5e-6);
  CHECK(d(abs(bank.diagnostics.sum_h)) < 1e-25);
  CHECK(d(abs(bank.diagnostics.sum_squares)) < 1e-25);
  CHECK(d(check_orthonormality(bank)) < 1e-25);
  // Higher moments degrade.
  CHECK(bank.diagnostics.moments[50] > bank.diagnostics.moments[0] * Real(1e10));
}

TEST_CASE("synthesis at N = 100 from 60 digit zeros") {
  const auto ctx = NumericContext::with_digits(60);
  PrecisionScope scope(60);
  const auto bank = synthesize_filter(polished(100, ctx), ctx);
  CHECK(d(abs(bank.diagnostics.sum_squares)) <= 1e-15);
  CHECK(d(abs(bank.diagnostics.sum_h)) <= 1e-30);
  CHECK(d(bank.diagnostics.moments[0]) < 1e-18);
}

TEST_CASE("guarded synthesis keeps every working digit") {
  PrecisionScope scope(60);
  const auto lo = daubechies_filter(zeros_of_pn(60, 5, k30), true, k30);
  const auto ctx = NumericContext::with_digits(60);
  const auto hi = daubechies_filter(zeros_of_pn(60, 5, ctx), true, ctx);
  for (size_t i = 0; i < lo.h.size(); ++i) CHECK(d(abs(lo.h[i] - hi.h[i])) < 1e-29);
  CHECK(synthesis_guard_digits(2) < synthesis_guard_digits(100));
}

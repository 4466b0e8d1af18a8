#include "daub/series_tables.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "daub/errors.hpp"

namespace daub {

namespace {

constexpr int kBTerms = 11;           // B_0 .. B_10
constexpr int kPhiFactorTerms = 16;   // c_0 .. c_15
constexpr int kDegreeMargin = 40;     // lost to derivatives and divisions by eta

using TSeries = std::vector<RationalSeries>;  // index i: coefficient of N^-i

RationalSeries zeros(int degree) { return RationalSeries(static_cast<size_t>(degree) + 1); }

RationalSeries divide_by_x(const RationalSeries& a, const char* what) {
  if (a.empty()) return a;
  if (a[0] != 0) throw StructuralError(std::string("non-removable pole while building ") + what);
  RationalSeries r(a.begin() + 1, a.end());
  r.emplace_back(0);
  return r;
}

void add_scaled(RationalSeries& acc, const RationalSeries& a, const mpq_class& s) {
  for (size_t i = 0; i < acc.size() && i < a.size(); ++i) {
    if (a[i] != 0) acc[i] += s * a[i];
  }
}

TSeries tmul(const TSeries& x, const TSeries& y, int order, int degree) {
  TSeries r(static_cast<size_t>(order) + 1, zeros(degree));
  for (int i = 0; i <= order; ++i) {
    for (int j = 0; i + j <= order; ++j) {
      bool nonzero_x = false, nonzero_y = false;
      for (const auto& c : x[i]) nonzero_x = nonzero_x || c != 0;
      for (const auto& c : y[j]) nonzero_y = nonzero_y || c != 0;
      if (!nonzero_x || !nonzero_y) continue;
      add_scaled(r[i + j], series_mul(x[i], y[j], degree), mpq_class(1));
    }
  }
  return r;
}

mpq_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return mpq_class(f);
}

// d/deta of phi^i eta^j with phi' = phi (1 + eta^2/2 - phi^2) / eta.
PhiEtaPolynomial differentiate(const PhiEtaPolynomial& p) {
  std::map<std::pair<int, int>, mpq_class> acc;
  for (const auto& t : p) {
    int i = t.phi_power, j = t.eta_power;
    if (i + j != 0) acc[{i, j - 1}] += t.coeff * (i + j);
    if (i != 0) {
      acc[{i, j + 1}] += t.coeff * mpq_class(i, 2);
      acc[{i + 2, j - 1}] -= t.coeff * i;
    }
  }
  PhiEtaPolynomial out;
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back({key.first, key.second, c});
  }
  return out;
}

PhiEtaPolynomial next_b_closed(const PhiEtaPolynomial& b, const mpq_class& c_next) {
  PhiEtaPolynomial d = differentiate(b);
  std::map<std::pair<int, int>, mpq_class> acc;
  for (const auto& t : d) acc[{t.phi_power, t.eta_power - 1}] += t.coeff;
  acc[{1, -1}] -= c_next;
  PhiEtaPolynomial out;
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back({key.first, key.second, c});
  }
  return out;
}

void write_series(std::ostream& out, const std::string& name, const RationalSeries& s) {
  out << "# " << name << '\n';
  for (const auto& c : s) out << c.get_num().get_str() << '/' << c.get_den().get_str() << '\n';
}

}  // namespace

std::vector<mpq_class> bernoulli_numbers(int n) {
  std::vector<mpq_class> b(static_cast<size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      s += mpq_class(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -s / (m + 1);
  }
  return b;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, int degree) {
  // Convolve integer numerators over a common denominator; canonicalise once per term.
  auto scaled = [degree](const RationalSeries& s, mpz_class& den) {
    const size_t n = std::min(s.size(), static_cast<size_t>(degree) + 1);
    den = 1;
    for (size_t i = 0; i < n; ++i) {
      if (s[i] != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), s[i].get_den_mpz_t());
    }
    std::vector<mpz_class> num(n);
    for (size_t i = 0; i < n; ++i) {
      if (s[i] != 0) num[i] = s[i].get_num() * (den / s[i].get_den());
    }
    return num;
  };
  mpz_class da, db;
  const auto na = scaled(a, da);
  const auto nb = scaled(b, db);
  std::vector<mpz_class> acc(static_cast<size_t>(degree) + 1);
  for (size_t i = 0; i < na.size(); ++i) {
    if (na[i] == 0) continue;
    for (size_t j = 0; j < nb.size() && i + j <= static_cast<size_t>(degree); ++j) {
      if (nb[j] != 0) mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
  }
  const mpz_class den = da * db;
  RationalSeries r = zeros(degree);
  for (size_t n = 0; n < acc.size(); ++n) {
    if (acc[n] == 0) continue;
    r[n] = mpq_class(acc[n], den);
    r[n].canonicalize();
  }
  return r;
}

RationalSeries series_derivative(const RationalSeries& a) {
  RationalSeries r(a.size());
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  return r;
}

RationalSeries series_log(const RationalSeries& a, int degree) {
  // (log a)' = a'/a, solved term by term.
  RationalSeries da = series_derivative(a);
  RationalSeries q = zeros(degree);  // q = a'/a
  for (int n = 0; n < degree; ++n) {
    mpq_class s = n < static_cast<int>(da.size()) ? da[n] : mpq_class(0);
    for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j) {
      if (a[j] != 0) s -= a[j] * q[n - j];
    }
    q[n] = s / a[0];
  }
  RationalSeries r = zeros(degree);
  for (int n = 1; n <= degree; ++n) r[n] = q[n - 1] / n;
  return r;
}

RationalSeries series_sqrt(const RationalSeries& a, int degree) {
  RationalSeries s = zeros(degree);
  s[0] = 1;
  for (int n = 1; n <= degree; ++n) {
    mpq_class acc = n < static_cast<int>(a.size()) ? a[n] : mpq_class(0);
    for (int j = 1; j < n; ++j) {
      if (s[j] != 0 && s[n - j] != 0) acc -= s[j] * s[n - j];
    }
    s[n] = acc / 2;
  }
  return s;
}

RationalSeries series_exp(const RationalSeries& a, int degree) {
  RationalSeries e = zeros(degree);
  e[0] = 1;
  for (int n = 1; n <= degree; ++n) {
    mpq_class acc = 0;
    for (int j = 1; j <= n && j < static_cast<int>(a.size()); ++j) {
      if (a[j] != 0) acc += j * a[j] * e[n - j];
    }
    e[n] = acc / n;
  }
  return e;
}

SeriesTables SeriesTables::build(int degree) {
  const int work = degree + kDegreeMargin;
  SeriesTables t;
  t.degree = degree;

  // phi^2 = sum_n B+_n x^n / n!, x = eta^2 / 2, where B+_1 = +1/2.
  std::vector<mpq_class> bern = bernoulli_numbers(std::max(work / 2 + 2, kPhiFactorTerms + 2));
  RationalSeries phi2 = zeros(work);
  {
    mpq_class scale = 1;  // 1 / (n! 2^n)
    for (int n = 0; 2 * n <= work; ++n) {
      if (n > 0) scale /= 2 * n;
      mpq_class b = n == 1 ? mpq_class(1, 2) : bern[n];
      phi2[2 * n] = b * scale;
    }
  }
  RationalSeries phi = series_sqrt(phi2, work);
  RationalSeries log_phi = series_log(phi2, work);
  for (auto& c : log_phi) c /= 2;

  // ln Phi(N) and Phi(N) in powers of 1/N.
  RationalSeries log_factor = zeros(kPhiFactorTerms);
  for (int n = 1; n <= kPhiFactorTerms; ++n) {
    mpq_class two_pow = 1;
    for (int i = 0; i < n; ++i) two_pow /= 2;
    mpq_class diff = (two_pow - 2) * bern[n + 1];  // B_{n+1}(1/2) - B_{n+1}(0)
    mpq_class sign = (n % 2 == 1) ? 1 : -1;
    log_factor[n] = sign * diff / (n * (n + 1));
  }
  RationalSeries factor = series_exp(log_factor, kPhiFactorTerms);

  // B_k, derivative-free closed forms.
  t.b_closed.push_back({{0, -1, mpq_class(1)}, {1, -1, mpq_class(-1)}});
  for (int k = 0; k + 1 < kBTerms; ++k) {
    t.b_closed.push_back(next_b_closed(t.b_closed[k], factor[k + 1]));
  }

  // B_k Maclaurin series by the same recursion.
  {
    RationalSeries one_minus_phi = phi;
    for (auto& c : one_minus_phi) c = -c;
    one_minus_phi[0] += 1;
    t.b_series.push_back(divide_by_x(one_minus_phi, "B_0"));
    for (int k = 0; k + 1 < kBTerms; ++k) {
      RationalSeries num = series_derivative(t.b_series[k]);
      add_scaled(num, phi, -factor[k + 1]);
      t.b_series.push_back(divide_by_x(num, "B_k"));
    }
  }

  // eps_k by matching powers of 1/N.
  {
    std::vector<RationalSeries> log_phi_derivs{log_phi};
    for (int m = 1; m < 5; ++m) {
      log_phi_derivs.push_back(series_derivative(log_phi_derivs.back()));
    }
    auto& eps = t.epsilon_series;
    eps[1] = divide_by_x(log_phi, "eps_1");
    for (int k = 1; k < 5; ++k) {
      TSeries e(static_cast<size_t>(k) + 1, zeros(work));
      TSeries ep(static_cast<size_t>(k) + 1, zeros(work));
      for (int i = 1; i <= k; ++i) {
        e[i] = eps[i];
        ep[i] = series_derivative(eps[i]);
      }
      RationalSeries rhs = zeros(work);
      rhs[0] += log_factor[k];
      TSeries ep_pow = ep;
      TSeries e_pow = e;
      for (int m = 1; m <= k; ++m) {
        mpq_class log_coeff(m % 2 == 1 ? 1 : -1, m);
        add_scaled(rhs, ep_pow[k], log_coeff);
        add_scaled(rhs, series_mul(log_phi_derivs[m], e_pow[k], work), 1 / factorial(m));
        if (m < k) {
          ep_pow = tmul(ep_pow, ep, k, work);
          e_pow = tmul(e_pow, e, k, work);
        }
      }
      for (int i = 1; i <= k; ++i) {
        add_scaled(rhs, series_mul(eps[i], eps[k + 1 - i], work), mpq_class(-1, 2));
      }
      eps[k + 1] = divide_by_x(rhs, "eps_k");
    }
  }

  auto trim = [degree](RationalSeries s) {
    s.resize(static_cast<size_t>(degree) + 1);
    return s;
  };
  t.phi_taylor = trim(phi);
  t.log_phi = trim(log_phi);
  for (int k = 1; k <= 5; ++k) t.epsilon_series[k] = trim(t.epsilon_series[k]);
  for (auto& s : t.b_series) s = trim(s);
  t.phi_factor_coeffs = factor;
  t.log_phi_factor_coeffs = log_factor;
  return t;
}

const SeriesTables& SeriesTables::standard() {
  static const SeriesTables tables = build(kStandardSeriesDegree);
  return tables;
}

void write_tables(std::ostream& out, const SeriesTables& tables) {
  out << "# degree " << tables.degree << '\n';
  write_series(out, "phi_taylor", tables.phi_taylor);
  for (int k = 1; k <= 5; ++k) {
    write_series(out, "epsilon_" + std::to_string(k), tables.epsilon_series[k]);
  }
  write_series(out, "phi_factor_coeffs", tables.phi_factor_coeffs);
  for (size_t k = 0; k < tables.b_series.size(); ++k) {
    write_series(out, "b_series_" + std::to_string(k), tables.b_series[k]);
  }
}

Complex eval_series(const RationalSeries& s, const Complex& x) {
  bool has_even = false, has_odd = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) (i % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even != has_odd) {
    // Single parity: Horner in x^2.
    const size_t start = has_odd ? 1 : 0;
    Complex x2 = x * x;
    Complex acc;
    size_t count = (s.size() - start + 1) / 2;
    for (size_t n = count; n-- > 0;) acc = acc * x2 + Complex(Real(s[start + 2 * n]));
    return has_odd ? acc * x : acc;
  }
  Complex acc;
  for (size_t i = s.size(); i-- > 0;) acc = acc * x + Complex(Real(s[i]));
  return acc;
}

Complex eval_phi_eta(const PhiEtaPolynomial& p, const Complex& phi, const Complex& eta) {
  Complex sum;
  Complex inv_eta = 1 / eta;
  for (const auto& t : p) {
    Complex term(Real(t.coeff));
    term *= pow(phi, t.phi_power);
    term *= t.eta_power >= 0 ? pow(eta, t.eta_power) : pow(inv_eta, -t.eta_power);
    sum += term;
  }
  return sum;
}

}  // namespace daub

#include "daub/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "daub/daubechies_zeros.hpp"
#include "daub/erfc_zeros.hpp"
#include "daub/errors.hpp"
#include "daub/filter_synthesis.hpp"
#include "daub/format.hpp"
#include "daub/oracles.hpp"
#include "daub/special_functions.hpp"

namespace daub {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDefaultDigits = 30;
constexpr int kDiagnosticDigits = 6;
constexpr long kOracleMaxN = 30;
constexpr long kUniformCheckMinN = 20;
constexpr int kLemniscateTraceSamples = 512;
constexpr std::uint64_t kVerifySeed = 0x5eed2d4ULL;

// Exit statuses.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int digits = kDefaultDigits;
  std::string format = "csv";
  std::string output;
  long count = 5;
  long n = 0;
  int order = 5;
  bool refine = false;
  std::string zeros_file;
  std::string output_dir = ".";
  std::string what = "all";
};

std::string diag(const Real& x) { return format_real(x, kDiagnosticDigits); }

// Rows of string cells rendered as CSV or as an aligned text table.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, const std::string& format) {
  if (format == "csv") {
    for (size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    for (const auto& r : rows) {
      for (size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << r[c];
      os << '\n';
    }
    return;
  }
  std::vector<size_t> width(header.size());
  for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += cells[c];
      if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
    }
    os << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void write_summary(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv,
                   const std::string& format) {
  for (const auto& [k, v] : kv) {
    if (format == "csv") {
      os << "# " << k << ',' << v << '\n';
    } else {
      os << k << ": " << v << '\n';
    }
  }
}

NumericContext make_context(const Options& o) {
  NumericContext ctx = NumericContext::with_digits(o.digits);
  try {
    ctx.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return ctx;
}

void require_n(const Options& o) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  if (o.order < 1 || o.order > kMaxEpsilonOrder) throw UsageError("--order must lie in 1..5");
}

// ---------------------------------------------------------------- erfc-zeros

void cmd_erfc_zeros(const Options& o, std::ostream& os) {
  if (o.count < 1) throw UsageError("--count must be at least 1");
  const NumericContext ctx = make_context(o);
  const auto table = erfc_zero_table(o.count, ctx);
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& z : table) {
      arr.push_back({{"k", z.k},
                     {"re", format_real(z.value.re, o.digits)},
                     {"im", format_real(z.value.im, o.digits)},
                     {"residual", diag(z.residual)}});
    }
    os << arr.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& z : table) {
    rows.push_back({std::to_string(z.k), format_real(z.value.re, o.digits),
                    format_real(z.value.im, o.digits), diag(z.residual)});
  }
  write_table(os, {"k", "re", "im", "residual"}, rows, o.format);
}

// --------------------------------------------------------------------- zeros

PolynomialZeroSet compute_zeros(const Options& o, const NumericContext& ctx) {
  PolynomialZeroSet zs = zeros_of_pn(o.n, o.order, ctx);
  if (o.refine) zs = polish_zero_set(zs, ctx);
  return zs;
}

void cmd_zeros(const Options& o, std::ostream& os) {
  require_n(o);
  const NumericContext ctx = make_context(o);
  const PolynomialZeroSet zs = compute_zeros(o, ctx);
  const ZeroIdentityResiduals id = verify_zero_identities(zs, ctx);
  const bool all_refined =
      std::all_of(zs.refined.begin(), zs.refined.end(), [](bool b) { return b; });
  if (o.format == "json") {
    Json doc;
    doc["n"] = zs.n;
    doc["order"] = zs.order;
    doc["digits"] = o.digits;
    doc["refined"] = all_refined;
    Json arr = Json::array();
    for (size_t i = 0; i < zs.zeros.size(); ++i) {
      const Complex& y = zs.zeros[i];
      arr.push_back({{"k", i + 1},
                     {"re", format_real(y.re, o.digits)},
                     {"im", format_real(y.im, o.digits)},
                     {"re_hex", y.re.to_hex()},
                     {"im_hex", y.im.to_hex()},
                     {"residual", diag(zs.residuals[i])},
                     {"refined", static_cast<bool>(zs.refined[i])},
                     {"partner", zs.partner[i] + 1},
                     {"source_k", zs.source_k[i]}});
    }
    doc["zeros"] = arr;
    doc["sum_residual"] = diag(id.sum);
    doc["product_residual"] = diag(id.product);
    os << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < zs.zeros.size(); ++i) {
    rows.push_back({std::to_string(i + 1), format_real(zs.zeros[i].re, o.digits),
                    format_real(zs.zeros[i].im, o.digits), diag(zs.residuals[i]),
                    zs.refined[i] ? "true" : "false"});
  }
  write_table(os, {"k", "re_y", "im_y", "residual", "refined"}, rows, o.format);
  write_summary(os,
                {{"n", std::to_string(zs.n)},
                 {"order", std::to_string(zs.order)},
                 {"digits", std::to_string(o.digits)},
                 {"sum_residual", diag(id.sum)},
                 {"product_residual", diag(id.product)}},
                o.format);
}

// ------------------------------------------------------------------- filters

Real read_real(const Json& entry, const char* hex_key, const char* dec_key) {
  if (entry.contains(hex_key)) return Real(entry.at(hex_key).get<std::string>());
  return Real(entry.at(dec_key).get<std::string>());
}

PolynomialZeroSet load_zeros_file(const Options& o) {
  std::ifstream in(o.zeros_file, std::ios::binary);
  if (!in) throw UsageError("cannot open zeros file '" + o.zeros_file + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("zeros file '" + o.zeros_file + "' is not valid JSON: " + e.what());
  }
  try {
    PolynomialZeroSet zs;
    zs.n = doc.at("n").get<long>();
    zs.order = doc.value("order", 0);
    if (o.n != 0 && o.n != zs.n) {
      throw UsageError("--n " + std::to_string(o.n) + " disagrees with N = " +
                       std::to_string(zs.n) + " in the zeros file");
    }
    PrecisionScope scope(o.digits);
    const auto& arr = doc.at("zeros");
    for (const auto& e : arr) {
      zs.zeros.emplace_back(read_real(e, "re_hex", "re"), read_real(e, "im_hex", "im"));
      const long p = e.at("partner").get<long>();
      if (p < 1 || p > static_cast<long>(arr.size())) throw UsageError("partner index out of range");
      zs.partner.push_back(static_cast<size_t>(p - 1));
      zs.source_k.push_back(e.value("source_k", 0L));
      zs.residuals.push_back(e.contains("residual") ? Real(e.at("residual").get<std::string>())
                                                    : Real());
      zs.refined.push_back(e.value("refined", false));
    }
    return zs;
  } catch (const Json::exception& e) {
    throw UsageError("zeros file '" + o.zeros_file + "' is malformed: " + e.what());
  }
}

void cmd_filters(const Options& o, std::ostream& os, std::ostream& err) {
  if (o.zeros_file.empty()) require_n(o);
  const NumericContext ctx = make_context(o);
  const PolynomialZeroSet zs =
      o.zeros_file.empty() ? zeros_of_pn(o.n, o.order, ctx) : load_zeros_file(o);
  const FilterBank bank = daubechies_filter(zs, o.refine, ctx);
  const auto& d = bank.diagnostics;
  const Real ortho = check_orthonormality(bank);
  const std::vector<std::pair<std::string, std::string>> summary = {
      {"sum_f_residual", diag(d.sum_f)},
      {"sum_h_residual", diag(d.sum_h)},
      {"sum_squares_residual", diag(d.sum_squares)},
      {"shift_orthogonality", diag(d.shift_orthogonality)},
      {"orthonormality", diag(ortho)}};
  if (o.format == "json") {
    Json doc;
    doc["n"] = bank.n;
    doc["digits"] = o.digits;
    Json f = Json::array(), h = Json::array(), hh = Json::array();
    for (const auto& v : bank.f) f.push_back(format_real(v, o.digits));
    for (const auto& v : bank.h) {
      h.push_back(format_real(v, o.digits));
      hh.push_back(v.to_hex());
    }
    doc["f"] = f;
    doc["h"] = h;
    doc["h_hex"] = hh;
    Json dj;
    for (const auto& [k, v] : summary) dj[k] = v;
    Json m = Json::array();
    for (const auto& v : d.moments) m.push_back(diag(v));
    dj["moments"] = m;
    doc["diagnostics"] = dj;
    os << doc.dump(2) << '\n';
    return;
  }
  if (o.format == "text") {
    // Interchange format: one coefficient per line; diagnostics go to stderr.
    for (const auto& v : bank.h) os << format_real(v, o.digits) << '\n';
    write_summary(err, summary, "text");
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < bank.h.size(); ++i) {
    rows.push_back({std::to_string(i), format_real(bank.h[i], o.digits)});
  }
  write_table(os, {"n", "h_n"}, rows, "csv");
  auto kv = summary;
  for (size_t k = 0; k < d.moments.size(); ++k) {
    kv.emplace_back("moment_" + std::to_string(k), diag(d.moments[k]));
  }
  write_summary(os, kv, "csv");
}

// -------------------------------------------------------------------- verify

struct Check {
  std::string name;
  Real value;
  Real limit;
  bool hard = true;
  bool pass() const { return value <= limit; }
};

std::vector<Complex> random_points(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> re(-0.5, 1.5), im(-1.0, 1.0);
  std::vector<Complex> pts;
  for (int i = 0; i < count; ++i) {
    pts.emplace_back(Real(re(rng)), Real(im(rng)));
  }
  return pts;
}

std::vector<Check> run_checks(const Options& o, const NumericContext& ctx) {
  const long n = o.n;
  const int w = o.digits;
  PrecisionScope scope(w);
  std::vector<Check> checks;
  std::mt19937_64 rng(kVerifySeed);
  const Real rn(n);
  const Real tight = pow10(10 - w) * rn;
  // Without polishing the zeros carry the asymptotic error, roughly N^-(order+1).
  const Real asymptotic = 10 * pow(1 / rn, o.order + 1);
  const Real zero_limit = o.refine ? tight : asymptotic;

  const PolynomialZeroSet zs = compute_zeros(o, ctx);
  const auto violations = zero_set_violations(zs, kLemniscateConstant);
  checks.push_back({"zero_set_invariants", Real(static_cast<long>(violations.size())), Real(0)});
  const ZeroIdentityResiduals id = verify_zero_identities(zs, ctx);
  checks.push_back({"sum_identity", abs(id.sum), zero_limit});
  checks.push_back({"product_identity", abs(id.product), zero_limit});
  if (o.refine) {
    Real worst(0);
    for (const auto& r : zs.residuals) worst = max(worst, r);
    checks.push_back({"zero_residual_max", worst, pow10(5 - w)});
  }
  if (n <= kOracleMaxN) {
    checks.push_back({"brute_force_agreement",
                      max_zero_mismatch(zs.zeros, brute_force_zeros(n, ctx)), zero_limit});
  }
  {
    Real worst(0);
    for (const auto& y : random_points(rng, 10)) {
      worst = max(worst, functional_equation_residual(y, n, ctx));
    }
    checks.push_back({"functional_equation", worst, Real(1e-12)});
  }
  {
    Real worst(0);
    for (const auto& y : random_points(rng, 10)) {
      worst = max(worst, derivative_identity_error(y, n, ctx));
    }
    checks.push_back({"derivative_identity", worst, Real(1e-10)});
  }
  if (n >= kUniformCheckMinN) {
    Real worst(0);
    for (double s : {1.0, 1.05}) {
      for (const auto& y : lemniscate_points(10, s)) {
        worst = max(worst, uniform_expansion_error(y, n, kMaxBTerms, ctx));
      }
    }
    checks.push_back({"uniform_expansion", worst, Real(1e-8)});
  }

  const ZZeroSet zz = z_zeros(zs, ctx);
  const FilterBank bank = daubechies_filter(zs, o.refine, ctx);
  Real abs_f(0), max_h(0);
  for (const auto& v : bank.f) abs_f += abs(v);
  for (const auto& v : bank.h) max_h = max(max_h, abs(v));
  // Polished zeros are carried to full tap precision; asymptotic ones are not,
  // and their error is amplified by sum |f| in the expansion of Q_N.
  const Real filter_limit = o.refine ? pow10(5 - w) * rn : asymptotic * rn * max(Real(1), abs_f);
  if (n <= kOracleMaxN) {
    Real worst(0);
    for (const auto& y : random_points(rng, 10)) {
      const Complex prod = pn_product_form(zz, y, ctx);
      const DaubechiesPolynomial poly(n);
      const Complex exact = poly.evaluate(y, horner_context(poly, y, ctx));
      worst = max(worst, abs(prod - exact) / abs(exact));
    }
    checks.push_back({"product_form", worst, o.refine ? Real(1e-10) : zero_limit * 100});
  }
  const auto& d = bank.diagnostics;
  // f itself is only stored to the working precision, relative to its size.
  checks.push_back({"sum_f", abs(d.sum_f), filter_limit * max(Real(1), abs_f)});
  checks.push_back({"sum_h", abs(d.sum_h), filter_limit});
  checks.push_back({"sum_squares", abs(d.sum_squares), filter_limit});
  checks.push_back({"orthonormality", check_orthonormality(bank), filter_limit});
  const long hard_moments = std::min<long>(3, n - 1);
  for (long k = 0; k <= hard_moments; ++k) {
    checks.push_back({"moment_" + std::to_string(k), d.moments[k],
                      filter_limit * max_h * pow(Real(2 * n), k)});
  }
  for (long k = hard_moments + 1; k < n; ++k) {
    checks.push_back({"moment_" + std::to_string(k), d.moments[k],
                      filter_limit * max_h * pow(Real(2 * n), k), false});
  }
  return checks;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  require_n(o);
  const NumericContext ctx = make_context(o);
  const auto checks = run_checks(o, ctx);
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    if (c.hard && !c.pass()) failed.push_back(c.name);
  }
  auto status = [](const Check& c) {
    if (c.pass()) return std::string("pass");
    return std::string(c.hard ? "FAIL" : "info");
  };
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back({{"check", c.name},
                     {"value", diag(c.value)},
                     {"limit", diag(c.limit)},
                     {"hard", c.hard},
                     {"status", status(c)}});
    }
    Json doc;
    doc["n"] = o.n;
    doc["digits"] = o.digits;
    doc["refined"] = o.refine;
    doc["checks"] = arr;
    doc["passed"] = failed.empty();
    os << doc.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : checks) {
      rows.push_back({status(c), c.name, diag(c.value), diag(c.limit)});
    }
    write_table(os, {"status", "check", "value", "limit"}, rows, o.format);
  }
  if (!failed.empty()) {
    std::string names;
    for (const auto& f : failed) names += (names.empty() ? "" : ", ") + f;
    err << "verify: failed checks: " << names << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- plot-data

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw Error("failed writing '" + path.string() + "'");
}

void cmd_plot_data(const Options& o, std::ostream& os) {
  require_n(o);
  if (o.what != "zeros" && o.what != "profile" && o.what != "all") {
    throw UsageError("--what must be zeros, profile or all");
  }
  const NumericContext ctx = make_context(o);
  const std::filesystem::path dir(o.output_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create output directory '" + dir.string() + "'");

  const PolynomialZeroSet zs = compute_zeros(o, ctx);
  const ZZeroSet zz = z_zeros(zs, ctx);
  auto emit = [&](const std::string& name, const std::string& content, size_t rows) {
    write_file(dir / name, content);
    os << "wrote " << (dir / name).string() << " (" << rows << " rows)\n";
  };
  if (o.what != "profile") {
    std::ostringstream ys, zsout, lem;
    std::vector<std::vector<std::string>> yrows, zrows, lrows;
    for (size_t i = 0; i < zs.zeros.size(); ++i) {
      yrows.push_back({std::to_string(i + 1), format_real(zs.zeros[i].re, o.digits),
                       format_real(zs.zeros[i].im, o.digits)});
      zrows.push_back({std::to_string(i + 1), format_real(zz.zeros[i].re, o.digits),
                       format_real(zz.zeros[i].im, o.digits)});
    }
    write_table(ys, {"k", "re", "im"}, yrows, "csv");
    write_table(zsout, {"k", "re", "im"}, zrows, "csv");
    // Both leaves of |4y(1-y)| = 1: y = (1 -+ sqrt(1 - exp(i theta))) / 2.
    PrecisionScope scope(o.digits);
    const int half = kLemniscateTraceSamples / 2;
    int j = 0;
    for (double s : {1.0, -1.0}) {
      for (int i = 0; i < half; ++i, ++j) {
        const Real theta = 2 * Real::pi() * i / half;
        const Complex u = sqrt(1 - Complex(cos(theta), sin(theta)));
        const Complex y = Complex(Real(mpq_class(1, 2))) - ldexp(u * Real(s), -1);
        lrows.push_back({std::to_string(j), format_real(y.re, o.digits),
                         format_real(y.im, o.digits)});
      }
    }
    write_table(lem, {"j", "re", "im"}, lrows, "csv");
    emit("y_zeros.csv", ys.str(), yrows.size());
    emit("z_zeros.csv", zsout.str(), zrows.size());
    emit("lemniscate.csv", lem.str(), lrows.size());
  }
  if (o.what != "zeros") {
    const FilterBank bank = daubechies_filter(zs, o.refine, ctx);
    std::ostringstream hp;
    std::vector<std::vector<std::string>> rows;
    PrecisionScope scope(o.digits);
    for (size_t i = 0; i < bank.h.size(); ++i) {
      rows.push_back({std::to_string(i), format_real(-log10(abs(bank.h[i])), kDiagnosticDigits)});
    }
    write_table(hp, {"n", "minus_log10_abs_h"}, rows, "csv");
    emit("h_profile.csv", hp.str(), rows.size());
  }
}

int default_digits(std::ostream& err, bool& ok) {
  ok = true;
  const char* env = std::getenv(kDigitsEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultDigits;
  try {
    size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  err << kDigitsEnvVar << " must be an integer, got '" << env << "'\n";
  ok = false;
  return kDefaultDigits;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  bool env_ok = true;
  Options o;
  o.digits = default_digits(err, env_ok);
  if (!env_ok) return kExitUsage;

  CLI::App app{"Zeros of Daubechies polynomials and Daubechies filter coefficients"};
  app.name("daubz");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "Working precision in decimal digits (>= 15)")
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}))
        ->capture_default_str();
    sub->add_option("--output", o.output, "Write to this file instead of stdout");
  };
  auto add_pipeline = [&](CLI::App* sub, bool refine_default) {
    sub->add_option("--n", o.n, "Filter length parameter N (>= 2)");
    sub->add_option("--order", o.order, "Number of asymptotic correction terms (1..5)")
        ->capture_default_str();
    sub->add_flag("--refine,!--no-refine", o.refine,
                  std::string("Polish zeros by Newton iteration (default ") +
                      (refine_default ? "on" : "off") + ")");
  };

  auto* erfc = app.add_subcommand("erfc-zeros", "Complex zeros of erfc in the second quadrant");
  add_common(erfc);
  erfc->add_option("--count", o.count, "Number of zeros")->capture_default_str();

  auto* zeros = app.add_subcommand("zeros", "Zeros of the Daubechies polynomial P_N");
  add_common(zeros);
  add_pipeline(zeros, false);

  auto* filters = app.add_subcommand("filters", "Filter coefficients h(0..2N-1)");
  add_common(filters);
  add_pipeline(filters, true);
  filters->add_option("--zeros-file", o.zeros_file,
                      "Use zeros from JSON written by 'zeros --format json'");

  auto* verify = app.add_subcommand("verify", "Run the identity and oracle checks for one N");
  add_common(verify);
  add_pipeline(verify, true);

  auto* plot = app.add_subcommand("plot-data", "Write zero sets, lemniscate trace and |h| profile");
  add_common(plot);
  add_pipeline(plot, true);
  plot->add_option("--output-dir", o.output_dir, "Directory for the CSV files")
      ->capture_default_str();
  plot->add_option("--what", o.what, "zeros, profile or all")->capture_default_str();

  // Refinement defaults differ per subcommand; the flag overrides them.
  for (auto* sub : {filters, verify, plot}) {
    sub->preparse_callback([&o](std::size_t) { o.refine = true; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    if (*erfc) {
      cmd_erfc_zeros(o, buffer);
    } else if (*zeros) {
      cmd_zeros(o, buffer);
    } else if (*filters) {
      cmd_filters(o, buffer, err);
    } else if (*verify) {
      status = cmd_verify(o, buffer, err);
    } else if (*plot) {
      cmd_plot_data(o, buffer);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << buffer.str())) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitFailure;
    }
  }
  return status;
}

}  // namespace daub

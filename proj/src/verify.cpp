#include "hypint/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "hypint/errors.hpp"
#include "hypint/hyperize.hpp"
#include "hypint/integrate.hpp"
#include "hypint/multivar.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/transforms.hpp"

namespace hypint {

namespace {

const double kLn2 = std::log(2.0);

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

PFQSpec S(const std::vector<Complex>& up, const std::vector<Complex>& lo, Complex scale = 1.0, Rational power = 1) {
  return PFQSpec::scalar(up, lo, scale, power, 0);
}

const CatalogIntegrand& named(const std::string& label) {
  for (const CatalogIntegrand& c : integrand_catalog())
    if (c.spec.label == label) return c;
  throw UnknownName(label);
}

IntegralResult with_oracle(const CatalogIntegrand& c) {
  IntegrateOptions opts;
  opts.run_oracle = true;
  return c.to_infinity ? definite_0_to_inf(c.spec, opts) : definite_0_to_1(c.spec, opts);
}

// Builds a row; an exception from `body` becomes a failing check.
SuiteRow row(std::string id, std::string title, const std::function<void(std::vector<Check>&)>& body) {
  SuiteRow r{std::move(id), std::move(title), {}};
  try {
    body(r.checks);
  } catch (const std::exception& e) {
    r.checks.push_back({"evaluation", 0.0, 0.0, e.what()});
  }
  return r;
}

void add(std::vector<Check>& out, std::string name, double measured, double tol) {
  out.push_back({std::move(name), measured, tol, ""});
}

double gamma_sq(double x) {
  const double g = cgamma(x).real();
  return g * g;
}

std::vector<SuiteRow> rows_1_to_6() {
  std::vector<SuiteRow> rows;
  rows.push_back(row("1", "int_0^inf dx/(1+x^2) = pi/2", [](auto& c) {
    add(c, "engine vs pi/2", rel(definite_0_to_inf(named("1/(1+x^2)").spec).value.value(), kPi / 2), 1e-10);
    add(c, "Gamma(1/2)^2 vs pi", rel(cgamma(0.5) * cgamma(0.5), kPi), 1e-12);
  }));
  rows.push_back(row("2", "int_0^inf dx/(1+x^3) = 2pi/(3sqrt(3))", [](auto& c) {
    const IntegralResult r = with_oracle(named("1/(1+x^3)"));
    add(c, "engine vs closed form", rel(r.value.value(), 2 * kPi / (3 * std::sqrt(3.0))), 1e-10);
    add(c, "oracle discrepancy (abs)", *r.discrepancy, 1e-9);
  }));
  rows.push_back(row("3", "nested radical integral = 4Gamma(1/4)^2/(3sqrt(2-sqrt(2))sqrt(pi))", [](auto& c) {
    const double closed = 4 * gamma_sq(0.25) / (3 * std::sqrt(2 - std::sqrt(2.0)) * std::sqrt(kPi));
    const IntegralResult r = with_oracle(named("sqrt(sqrt(1+x)-1)/x^(11/8)"));
    add(c, "engine vs Gamma form", rel(r.value.value(), closed), 1e-10);
    add(c, "oracle vs Gamma form", rel(*r.oracle_value, closed), 1e-8);
  }));
  rows.push_back(row("4", "general laws for (sqrt(1+x)-1)^b and the trinomial root", [](auto& c) {
    auto law = [](double a, double b) {
      return (b * cgamma(-b - 2 * a) * cgamma(a + b) * std::pow(2.0, 2 * a + b) / cgamma(1 - a)).real();
    };
    const std::pair<const char*, std::pair<double, double>> cases[] = {
        {"x^(-8/5)(sqrt(1+x)-1)", {-0.6, 1.0}}, {"x^(-27/20)(sqrt(1+x)-1)^(1/2)", {-0.35, 0.5}}};
    for (const auto& [label, ab] : cases) {
      const IntegralResult r = with_oracle(named(label));
      const double want = law(ab.first, ab.second);
      char name[64];
      std::snprintf(name, sizeof name, "(%g,%g) oracle vs law", ab.first, ab.second);
      add(c, name, rel(*r.oracle_value, want), 1e-7);
      std::snprintf(name, sizeof name, "(%g,%g) engine vs law", ab.first, ab.second);
      add(c, name, rel(r.value.value(), want), 1e-7);
    }
    const double b = -1.4, a = 2.0;
    const double trinomial =
        (std::pow(a, -(b + 2) / 4) * cgamma((b + 2) / 4) * cgamma(-5 * b / 4 - 1.5) / (4.0 * cgamma(-b))).real();
    const IntegralResult r = with_oracle(named("x^(-7/5) y, 2y^5+y=x"));
    add(c, "trinomial oracle vs law", rel(*r.oracle_value, trinomial), 1e-6);
    add(c, "trinomial engine vs law", rel(r.value.value(), trinomial), 1e-6);
  }));
  rows.push_back(row("5", "int_0^1 (arcsin(x)/x)^3 = (3/2)pi ln 2 - pi^3/16", [](auto& c) {
    const CatalogIntegrand& e = named("(arcsin(x)/x)^3");
    const IntegralResult r = with_oracle(e);
    const double want = 1.5 * kPi * kLn2 - kPi * kPi * kPi / 16;
    add(c, "engine vs closed form", rel(r.value.value(), want), 1e-8);
    add(c, "oracle vs closed form", rel(*r.oracle_value, want), 1e-8);
    bool thomae = false;
    for (const std::string& line : r.method) thomae |= line.find("Thomae") != std::string::npos;
    add(c, "Thomae step in trace (0 = present)", thomae ? 0.0 : 1.0, 0.0);
    add(c, "FTC residual (abs)", verify_ftc(antiderivative(e.spec), e.ftc_points), 1e-7);
  }));
  rows.push_back(row("6", "zeta(2), eta(2), zeta(3)", [](auto& c) {
    const double z2 = kPi * kPi / 6;
    const int K = 2;
    const PFQSpec eps_form({Jet::epsilon(K), -Jet::epsilon(K)}, {Jet(1.0, K)});
    add(c, "-[eps^2]2F1(eps,-eps;1;1) vs pi^2/6", rel(-eval_at_one(eps_form)[2], z2), 1e-8);
    add(c, "3F2(1,1,1;2,2;1) vs pi^2/6", rel(eval_at_one(S({1, 1, 1}, {2, 2})).value(), z2), 1e-8);
    add(c, "parity split at -1 vs pi^2/12", rel(parity_split(S({1, 1, 1}, {2, 2})).eval(-1.0).value(), z2 / 2), 1e-8);
    // Σ k^{-3} with an Euler–Maclaurin tail.
    const int n = 2000;
    double direct = 0.0;
    for (int k = n; k >= 1; --k) direct += 1.0 / (double(k) * k * k);
    const double N = n;
    direct += 1 / (2 * N * N) - 1 / (2 * N * N * N) + 1 / (4 * N * N * N * N);
    add(c, "4F3(1,1,1,1;2,2,2;1) vs direct sum", rel(eval_at_one(S({1, 1, 1, 1}, {2, 2, 2})).value(), direct), 1e-8);
  }));
  return rows;
}

std::vector<SuiteRow> rows_7_to_12() {
  std::vector<SuiteRow> rows;
  rows.push_back(row("7", "four routes to Catalan's constant agree", [](auto& c) {
    const int K = 2;
    const double routes[] = {
        eval(S({1, 1, 1}, {2, 2}), Complex(0, 1)).value().real(),
        eval(PFQSpec({Jet::epsilon(K), Jet::epsilon(K)}, {Jet(1.0, K)}), Complex(0, 1))[2].imag(),
        ((trigamma(0.25) - kPi * kPi) / 8.0).real(),
        definite_0_to_1(named("arctan(x)/x").spec).value.value().real(),
    };
    const char* names[] = {"Re 3F2(1,1,1;2,2;i)", "Im [eps^2]2F1(eps,eps;1;i)", "(psi'(1/4)-pi^2)/8",
                           "int_0^1 arctan(x)/x"};
    double spread = 0.0;
    for (double a : routes)
      for (double b : routes) spread = std::max(spread, rel(a, b));
    add(c, "max pairwise", spread, 1e-8);
    for (int i = 1; i < 4; ++i) add(c, std::string(names[i]) + " vs " + names[0], rel(routes[i], routes[0]), 1e-8);
  }));
  rows.push_back(row("8", "complete elliptic K log integrals", [](auto& c) {
    const IntegralResult real_k = with_oracle(named("x ln(1/(1-x^2)) K(x)"));
    const double want = 4 * (1 - kLn2);
    add(c, "K(x) engine vs 4(1-ln 2)", rel(real_k.value.value(), want), 1e-8);
    add(c, "K(x) oracle vs 4(1-ln 2)", rel(*real_k.oracle_value, want), 1e-8);
    const IntegralResult imag_k = with_oracle(named("x ln(1/(1+x^2)) K(ix)"));
    const double kix = ((2 - kLn2) * gamma_sq(0.25) + 4 * (kLn2 - 4) * gamma_sq(0.75)) / (4 * std::sqrt(2 * kPi));
    add(c, "K(ix) engine vs Gamma form", rel(imag_k.value.value(), kix), 1e-8);
    add(c, "K(ix) oracle vs Gamma form", rel(*imag_k.oracle_value, kix), 1e-8);
  }));
  rows.push_back(row("9", "arctan-log family at a=1/4", [](auto& c) {
    const double a = 0.25;
    const double psi_form =
        (kPi / (4 * a * std::cos(kPi * a)) * (digamma(0.5 + a) + digamma(a) - digamma(1.0) - digamma(0.5))).real();
    const IntegralResult r = with_oracle(named("arctan(x) ln(1/(1+x^2))/x^(3/2)"));
    add(c, "engine vs psi form", rel(r.value.value(), psi_form), 1e-7);
    add(c, "oracle vs psi form", rel(*r.oracle_value, psi_form), 1e-7);
  }));
  rows.push_back(row("10", "I_true and I_(a,true)", [](auto& c) {
    add(c, "I_true oracle vs pi/(2sqrt(6))", rel(ialpha_true_oracle(1 / std::sqrt(3.0)), ialpha_closed(IalphaCase::Itrue)),
        1e-9);
    for (double a : {0.3, 1 / std::sqrt(3.0), 2.0}) {
      char name[48];
      std::snprintf(name, sizeof name, "a=%.6g oracle vs arctan form", a);
      add(c, name, rel(ialpha_true_oracle(a), ialpha_closed(IalphaCase::IalphaTrue, a)), 1e-9);
    }
  }));
  rows.push_back(row("11", "I_alpha closed forms and double-series representation", [](auto& c) {
    const std::pair<const char*, std::pair<IalphaCase, double>> cases[] = {
        {"I0", {IalphaCase::I0, 0}},          {"I1", {IalphaCase::I1, 1}},
        {"I-1", {IalphaCase::Iminus1, -1}},   {"I-2", {IalphaCase::IminusN, -2}},
        {"I2", {IalphaCase::I2, 2}}};
    for (const auto& [name, cs] : cases) {
      const double param = cs.first == IalphaCase::IminusN ? -cs.second : 0.0;
      add(c, std::string(name) + " closed vs oracle", rel(ialpha_closed(cs.first, param), ialpha_oracle(cs.second)),
          1e-7);
    }
    constexpr double h = 1e-4;
    const double central = (ialpha_oracle(h) - ialpha_oracle(-h)) / (2 * h);
    add(c, "dI/dalpha(0) vs central difference (abs)", std::abs(ialpha_closed(IalphaCase::DIdalphaAt0) - central),
        1e-5);
    for (double alpha : {-1.0, 0.5, 1.0, 2.0}) {
      char name[48];
      std::snprintf(name, sizeof name, "F1~ series at alpha=%g vs oracle", alpha);
      add(c, name, rel(ialpha_series_value(alpha), ialpha_oracle(alpha)), 1e-7);
    }
  }));
  rows.push_back(row("12", "3F2(2,3/4,5/4;7/4,9/4;-1/3) elementary closed form", [](auto& c) {
    const double series = eval(S({2, 0.75, 1.25}, {1.75, 2.25}), -1.0 / 3).value().real();
    add(c, "series vs closed form at x=3^(-1/4)", rel(series, eval_3F2_example_closed(std::pow(3.0, -0.25))), 1e-10);
  }));
  return rows;
}

double coeff_gap(const CoeffStream& f, const CoeffStream& g, int n) {
  double worst = 0.0;
  for (int k = 0; k <= n; ++k)
    worst = std::max(worst, distance(f.coeff(k), g.coeff(k)) / std::max(1.0, g.coeff(k).norm()));
  return worst;
}

SuiteRow row_14() {
  return row("14", "FTC on the integrand catalog; hypergeometrization undo and commutativity", [](auto& c) {
    double ftc = 0.0;
    for (const CatalogIntegrand& e : integrand_catalog())
      ftc = std::max(ftc, verify_ftc(antiderivative(e.spec), e.ftc_points));
    add(c, "max FTC residual (abs)", ftc, 1e-7);
    std::mt19937_64 rng(kIdentitySeed);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    constexpr int K = kDefaultJetOrder, kCoeffs = 100;
    double undo_gap = 0.0, commute_gap = 0.0;
    const CoeffStream streams[] = {CoeffStream::exp(K), CoeffStream::arctan(K), CoeffStream::binomial(Jet(0.7, K))};
    for (const CoeffStream& f : streams) {
      for (int trial = 0; trial < 4; ++trial) {
        const Jet a(u(rng), K), b(u(rng), K), ci(u(rng), K), d(u(rng), K);
        undo_gap = std::max(undo_gap, coeff_gap(undo(hypize(f, a, ci), a, ci), f, kCoeffs));
        undo_gap = std::max(undo_gap, coeff_gap(hypize(undo(f, a, ci), a, ci), f, kCoeffs));
        const CoeffStream ab = hypize(hypize(f, a, ci), b, d);
        commute_gap = std::max(commute_gap, coeff_gap(hypize(hypize(f, b, d), a, ci), ab, kCoeffs));
        commute_gap = std::max(commute_gap, coeff_gap(hypize(hypize(f, b, ci), a, d), ab, kCoeffs));
      }
    }
    add(c, "undo (k<=100)", undo_gap, 1e-12);
    add(c, "commutativity (k<=100)", commute_gap, 1e-12);
  });
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

}  // namespace

bool SuiteRow::pass() const {
  if (checks.empty()) return false;
  for (const Check& c : checks)
    if (!c.pass()) return false;
  return true;
}

std::string SuiteRow::line() const {
  std::string out = (pass() ? "PASS  " : "FAIL  ") + id + "  " + title + "  |";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const Check& c = checks[i];
    out += (i ? "; " : " ") + c.name + ": ";
    out += c.error.empty() ? fmt(c.measured) + " (tol " + fmt(c.tolerance) + ")" : "error: " + c.error;
  }
  return out;
}

std::vector<SuiteRow> identity_suite(std::uint64_t seed, int draws) {
  std::vector<SuiteRow> rows;
  for (const Identity& id : identities()) {
    rows.push_back(row(id.name, id.statement, [&](auto& c) {
      std::mt19937_64 rng(seed);
      double worst = 0.0;
      for (int i = 0; i < draws; ++i) worst = std::max(worst, id.residual(id.sample(rng)));
      add(c, "max residual over " + std::to_string(draws) + " draws", worst, 1e-9);
    }));
  }
  return rows;
}

std::vector<SuiteRow> results_suite() {
  std::vector<SuiteRow> rows = rows_1_to_6();
  for (SuiteRow& r : rows_7_to_12()) rows.push_back(std::move(r));
  SuiteRow ids{"13", "identity suite (" + std::to_string(kIdentityDraws) + " draws each)", {}};
  for (const SuiteRow& r : identity_suite()) {
    for (const Check& c : r.checks) ids.checks.push_back({r.id, c.measured, c.tolerance, c.error});
  }
  rows.push_back(std::move(ids));
  rows.push_back(row_14());
  return rows;
}

}  // namespace hypint

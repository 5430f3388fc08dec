#include "commands.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <algorithm>
#include <optional>
#include <ostream>

#include "expr.hpp"
#include "hypint/integrate.hpp"
#include "hypint/oracle.hpp"
#include "hypint/transforms.hpp"
#include "hypint/verify.hpp"
#include "recognize.hpp"

namespace hypint::cli {

namespace {

using nlohmann::json;

constexpr double kOracleTol = 1e-12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  std::string input;
  Complex value;
  std::vector<Complex> jet;
  std::optional<std::string> closed_form;
  std::optional<double> oracle;
  std::optional<double> discrepancy;
  std::vector<std::string> trace;
};

std::string shortest(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string complex_text(Complex z) {
  if (z.imag() == 0.0) return shortest(z.real());
  const std::string im = shortest(std::abs(z.imag())) + "i";
  if (z.real() == 0.0) return (z.imag() < 0 ? "-" : "") + im;
  return shortest(z.real()) + (z.imag() < 0 ? "-" : "+") + im;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void emit(const Result& r, bool as_json, std::ostream& out) {
  if (as_json) {
    json jet = json::array();
    for (Complex c : r.jet) jet.push_back(complex_json(c));
    const json doc{{"input", r.input},
                   {"value", complex_json(r.value)},
                   {"jet", jet},
                   {"closed_form", optional_json(r.closed_form)},
                   {"oracle", optional_json(r.oracle)},
                   {"discrepancy", optional_json(r.discrepancy)},
                   {"trace", r.trace}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << "input:        " << r.input << "\n";
  out << "value:        " << complex_text(r.value) << "\n";
  if (r.jet.size() > 1) {
    out << "jet:          [";
    for (std::size_t k = 0; k < r.jet.size(); ++k) out << (k ? ", " : "") << complex_text(r.jet[k]);
    out << "]\n";
  }
  if (r.closed_form) out << "closed form:  " << *r.closed_form << "\n";
  if (r.oracle) out << "oracle:       " << shortest(*r.oracle) << "\n";
  if (r.discrepancy) out << "discrepancy:  " << shortest(*r.discrepancy) << "\n";
  if (!r.trace.empty()) {
    out << "trace:\n";
    for (const std::string& line : r.trace) out << "  " << line << "\n";
  }
}

std::optional<std::string> closed_form_of(Complex v) {
  if (std::abs(v.imag()) > 1e-14 * std::max(1.0, std::abs(v.real()))) return std::nullopt;
  return recognize_constant(v.real());
}

Complex parse_point(const std::string& text) {
  const ExprPtr e = parse(text);
  if (depends_on_x(e) || depends_on_eps(e)) throw UsageError("--at must be a number");
  return evaluate(e, 0.0, 0).value();
}

std::vector<Complex> coefficients(const Jet& j) {
  std::vector<Complex> out;
  for (int k = 0; k <= j.order(); ++k) out.push_back(j[k]);
  return out;
}

Result eval_command(const std::string& text, const std::optional<std::string>& at, int jet) {
  const ExprPtr e = parse(text);
  if (depends_on_x(e) && !at) throw UsageError("the expression depends on x; pass --at");
  const Complex x = at ? parse_point(*at) : Complex(0.0);
  const int order = std::max(jet, max_extract(e));
  const Jet v = evaluate(e, x, order);
  Result r{text, v.value(), coefficients(v.with_order(jet)), closed_form_of(v.value()), {}, {}, {}};
  r.trace.push_back("parsed: " + print(e));
  if (at) r.trace.push_back("at x = " + complex_text(x));
  if (has_series(e)) r.trace.push_back("series engine at jet order " + std::to_string(order));
  return r;
}

std::string term_text(const IntegrandSpec& t) {
  std::string out = complex_text(t.coefficient) + "*x^(" + t.alpha.str() + ")*";
  if (t.extract > 0) out += "[eps^" + std::to_string(t.extract) + "] ";
  return out + t.label;
}

// Catalog-backed factors carry extractions up to ε², so the working order has a floor.
constexpr int kIntegrandOrderFloor = 2;
constexpr double kIntegrateTol = 1e-12;

Result integrate_command(const std::string& text, const std::string& from, const std::string& to, bool run_oracle,
                         int jet) {
  if (from != "0") throw UsageError("--from must be 0");
  const ExprPtr e = parse(text);
  const bool to_inf = to == "inf";
  const int order = std::max({jet, max_extract(e), kIntegrandOrderFloor});
  const std::vector<IntegrandSpec> terms = integrand_terms(e, order);
  Result r{text, 0.0, {}, {}, {}, {}, {}};
  r.trace.push_back("parsed: " + print(e));
  if (terms.empty()) r.trace.push_back("integrand is identically zero");
  Jet total(0.0, order);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const IntegrandSpec& t = terms[i];
    const std::string tag = "term " + std::to_string(i + 1) + ": ";
    r.trace.push_back(tag + term_text(t));
    IntegrateOptions opts;
    opts.tol = kIntegrateTol;
    const IntegralResult part = to_inf ? definite_0_to_inf(t, opts) : definite_0_to_1(t, opts);
    for (const std::string& line : part.method) r.trace.push_back("  " + line);
    total += part.value.with_order(order);
  }
  r.value = total.value();
  r.jet = coefficients(total.with_order(jet));
  r.closed_form = closed_form_of(r.value);
  if (run_oracle) {
    if (!evaluate_elementary(e, 0.5)) {
      r.trace.push_back("oracle: unavailable, the integrand has a series factor");
    } else {
      // Removable singularities at an endpoint are sampled just inside it.
      auto f = [&](double x) {
        try {
          return evaluate_elementary(e, x)->real();
        } catch (const Error&) {
          return evaluate_elementary(e, std::nextafter(x, 0.5))->real();
        }
      };
      const oracle::QuadratureResult q =
          to_inf ? oracle::quad_halfline(f, kOracleTol) : oracle::quad_finite(oracle::RealFn(f), 0.0, 1.0, kOracleTol);
      r.oracle = q.value;
      r.discrepancy = std::abs(r.value - q.value);
      r.trace.push_back("oracle: " + q.method + ", " + std::to_string(q.evaluations) + " evaluations");
    }
  }
  return r;
}

Result catalog_entry(const std::string& name, const std::optional<std::string>& at) {
  const Representation rep = catalog(name);
  const Complex x = at ? parse_point(*at) : Complex(rep.constant ? 1.0 : 0.5);
  const Complex v = rep.eval(x);
  Result r{name, v, {v}, {}, {}, {}, {rep.str()}};
  if (!rep.closed_form.empty()) {
    r.closed_form = rep.closed_form;
  } else if (rep.constant) {
    r.closed_form = closed_form_of(v);
  }
  if (!rep.constant) r.trace.push_back("at x = " + complex_text(x));
  if (rep.reference) {
    const Complex ref = rep.reference(x);
    r.oracle = ref.real();
    r.discrepancy = std::abs(v - ref);
  }
  return r;
}

int verify_command(const std::string& suite, bool as_json, std::ostream& out) {
  std::vector<SuiteRow> rows;
  if (suite == "results" || suite == "paper" || suite == "all") rows = results_suite();
  if (suite == "identities" || suite == "all")
    for (SuiteRow& r : identity_suite()) rows.push_back(std::move(r));
  bool all_pass = true;
  json doc{{"suite", suite}, {"rows", json::array()}};
  for (const SuiteRow& r : rows) {
    all_pass &= r.pass();
    if (!as_json) {
      out << r.line() << "\n";
      continue;
    }
    json checks = json::array();
    for (const Check& c : r.checks)
      checks.push_back({{"name", c.name}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"pass", c.pass()},
                        {"error", c.error.empty() ? json(nullptr) : json(c.error)}});
    doc["rows"].push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"checks", checks}});
  }
  doc["pass"] = all_pass;
  if (as_json) {
    out << doc.dump(2) << "\n";
  } else {
    out << (all_pass ? "all rows passed" : "some rows FAILED") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric evaluation and definite integration"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  std::string expr_text, from = "0", to, suite = "all";
  std::optional<std::string> at;
  int jet = 0;
  bool with_oracle = false;
  std::optional<std::string> name;

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
  eval_cmd->add_option("expr", expr_text, "Expression, e.g. \"2F1(1,1/2;3/2;-x^2)\"")->required();
  eval_cmd->add_option("--at", at, "Value of x");
  eval_cmd->add_option("--jet", jet, "Carry eps to this order")->check(CLI::Range(0, kMaxJetOrder));

  CLI::App* int_cmd = app.add_subcommand("integrate", "Definite integral from 0 to 1 or infinity");
  int_cmd->add_option("expr", expr_text, "Integrand in x")->required();
  int_cmd->add_option("--from", from, "Lower limit (0)");
  int_cmd->add_option("--to", to, "Upper limit")->required()->check(CLI::IsMember({"1", "inf"}));
  int_cmd->add_flag("--oracle", with_oracle, "Cross-check by adaptive quadrature");
  int_cmd->add_option("--jet", jet, "Report eps coefficients to this order")->check(CLI::Range(0, kMaxJetOrder));

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the results or identity suites");
  verify_cmd->add_option("--suite", suite, "results, identities or all")
      ->check(CLI::IsMember({"results", "paper", "identities", "all"}));

  CLI::App* cat_cmd = app.add_subcommand("catalog", "List or show catalog representations");
  cat_cmd->add_option("name", name, "Entry, e.g. zeta(3)");
  cat_cmd->add_option("--at", at, "Value of x for function entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) {
      emit(eval_command(expr_text, at, jet), as_json, out);
    } else if (*int_cmd) {
      emit(integrate_command(expr_text, from, to, with_oracle, jet), as_json, out);
    } else if (*verify_cmd) {
      return verify_command(suite, as_json, out);
    } else if (*cat_cmd) {
      if (name) {
        emit(catalog_entry(*name, at), as_json, out);
      } else if (as_json) {
        out << json{{"names", catalog_names()}}.dump(2) << "\n";
      } else {
        for (const std::string& n : catalog_names()) out << n << "\n";
      }
    }
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "rejected: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hypint::cli

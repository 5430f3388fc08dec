#include "expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "hypint/format.hpp"
#include "hypint/numkernel.hpp"
#include "hypint/pfq.hpp"

namespace hypint::cli {

SyntaxError::SyntaxError(std::size_t pos, const std::string& what)
    : std::runtime_error("syntax error at offset " + std::to_string(pos) + ": " + what), pos_(pos) {}

namespace {

constexpr int kMaxDepth = 200;

ExprPtr make(Op op, std::vector<ExprPtr> kids = {}) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->kids = std::move(kids);
  return e;
}

ExprPtr number(Complex v) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Num;
  e->value = v;
  return e;
}

bool is_real_num(const ExprPtr& e) { return e->op == Op::Num && e->value.imag() == 0.0; }

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr run() {
    if (s_.size() > kMaxInputBytes) throw SyntaxError(0, "input exceeds 64 KiB");
    ExprPtr e = expr();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(i_, what); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  struct Depth {
    Parser& p;
    explicit Depth(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail("nesting too deep");
    }
    ~Depth() { --p.depth_; }
  };

  ExprPtr expr() {
    Depth guard(*this);
    ExprPtr left = term();
    for (;;) {
      if (accept('+')) {
        left = make(Op::Add, {left, term()});
      } else if (accept('-')) {
        left = make(Op::Sub, {left, term()});
      } else {
        return left;
      }
    }
  }

  ExprPtr term() {
    ExprPtr left = unary();
    for (;;) {
      if (accept('*')) {
        left = make(Op::Mul, {left, unary()});
      } else if (accept('/')) {
        ExprPtr right = unary();
        if (is_real_num(left) && is_real_num(right) && right->value != Complex(0.0)) {
          left = number(left->value / right->value);
        } else {
          left = make(Op::Div, {left, right});
        }
      } else {
        return left;
      }
    }
  }

  ExprPtr unary() {
    Depth guard(*this);
    if (accept('-')) {
      ExprPtr operand = unary();
      if (operand->op == Op::Num) return number(-operand->value);
      return make(Op::Neg, {operand});
    }
    if (accept('[')) {
      skip();
      if (s_.compare(i_, 3, "eps") != 0) fail("expected 'eps' in extraction marker");
      i_ += 3;
      int k = 1;
      if (accept('^')) {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected the extraction order");
        k = std::stoi(s_.substr(start, std::min<std::size_t>(i_ - start, 4)));
        if (k > kMaxJetOrder) throw SyntaxError(start, "extraction order above " + std::to_string(kMaxJetOrder));
      }
      expect(']');
      auto e = std::make_shared<Expr>();
      e->op = Op::Extract;
      e->k = k;
      e->kids = {term()};
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (accept('^')) return make(Op::Pow, {base, unary()});
    return base;
  }

  ExprPtr primary() {
    Depth guard(*this);
    const char c = peek();
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return numeric();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  ExprPtr numeric() {
    const std::size_t start = i_;
    auto digits = [&] {
      const std::size_t from = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return i_ - from;
    };
    const std::size_t int_digits = digits();
    // INTEGER 'F' INTEGER opens a pFq.
    if (int_digits > 0 && i_ + 1 < s_.size() && s_[i_] == 'F' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
      const int p = std::stoi(s_.substr(start, std::min<std::size_t>(int_digits, 3)));
      ++i_;
      const std::size_t qstart = i_;
      const std::size_t q_digits = digits();
      const int q = std::stoi(s_.substr(qstart, std::min<std::size_t>(q_digits, 3)));
      if (int_digits > 2 || q_digits > 2) throw SyntaxError(start, "pFq order too large");
      return pfq(p, q);
    }
    if (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      if (digits() == 0 && int_digits == 0) fail("malformed number");
    }
    if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
      std::size_t j = i_ + 1;
      if (j < s_.size() && (s_[j] == '+' || s_[j] == '-')) ++j;
      if (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) {
        i_ = j;
        digits();
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + i_, v);
    if (res.ec != std::errc() || res.ptr != s_.data() + i_) throw SyntaxError(start, "malformed number");
    if (i_ < s_.size() && s_[i_] == 'i' && !(i_ + 1 < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_ + 1])))) {
      ++i_;
      return number(Complex(0.0, v));
    }
    return number(v);
  }

  ExprPtr identifier() {
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    const std::string id = s_.substr(start, i_ - start);
    if (id == "x") return make(Op::Var);
    if (id == "eps") return make(Op::Eps);
    if (id == "pi") return make(Op::Pi);
    if (id == "i") return number(Complex(0.0, 1.0));
    const auto& fns = function_names();
    if (std::find(fns.begin(), fns.end(), id) != fns.end()) {
      if (peek() != '(') fail("expected '(' after " + id);
      ++i_;
      auto e = std::make_shared<Expr>();
      e->op = Op::Func;
      e->name = id;
      e->kids = {expr()};
      expect(')');
      return e;
    }
    throw SyntaxError(start, "unknown identifier '" + id + "'");
  }

  std::vector<ExprPtr> list(char end) {
    std::vector<ExprPtr> out;
    if (peek() == end) return out;
    out.push_back(expr());
    while (accept(',')) out.push_back(expr());
    return out;
  }

  ExprPtr pfq(int p, int q) {
    const std::size_t at = i_;
    expect('(');
    std::vector<ExprPtr> upper = list(';');
    expect(';');
    std::vector<ExprPtr> lower = list(';');
    expect(';');
    ExprPtr arg = expr();
    expect(')');
    const std::string name = std::to_string(p) + "F" + std::to_string(q);
    if (static_cast<int>(upper.size()) != p)
      throw SyntaxError(at, name + " expects " + std::to_string(p) + " upper parameters, got " +
                                std::to_string(upper.size()));
    if (static_cast<int>(lower.size()) != q)
      throw SyntaxError(at, name + " expects " + std::to_string(q) + " lower parameters, got " +
                                std::to_string(lower.size()));
    auto e = std::make_shared<Expr>();
    e->op = Op::PFQ;
    e->p = p;
    e->q = q;
    e->kids = std::move(upper);
    for (ExprPtr& l : lower) e->kids.push_back(std::move(l));
    e->kids.push_back(std::move(arg));
    return e;
  }
};

// Printing precedence: 1 sums, 2 products and rational literals, 3 negation
// and negative literals, 4 powers, 5 atoms.
std::string num_text(Complex v) {
  if (v.imag() == 0.0) return format_real(v.real());
  const double b = std::abs(v.imag());
  std::string mag;
  if (b != 1.0) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, b);
    mag.assign(buf, res.ptr);
  }
  return (v.imag() < 0 ? "-" : "") + mag + "i";
}

int prec(const ExprPtr& e) {
  switch (e->op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div:
    case Op::Extract: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    case Op::Num: {
      const std::string t = num_text(e->value);
      if (t.find('/') != std::string::npos) return 2;
      return t[0] == '-' ? 3 : 5;
    }
    default: return 5;
  }
}

enum class Pos { Free, SumLeft, SumRight, ProdLeft, ProdRight, NegArg, PowBase, PowExp, ExtractBody };

bool needs_paren(const ExprPtr& e, Pos pos) {
  const int p = prec(e);
  const bool extract = e->op == Op::Extract;
  switch (pos) {
    case Pos::Free:
    case Pos::SumLeft: return false;
    case Pos::SumRight: return p <= 1;
    case Pos::ProdLeft: return p < 2 || extract;
    case Pos::ProdRight: return p <= 2;
    case Pos::NegArg: return p < 3;
    case Pos::PowBase: return p < 5;
    case Pos::PowExp: return p < 5;
    case Pos::ExtractBody: return p < 2;
  }
  return true;
}

std::string print_at(const ExprPtr& e, Pos pos);

std::string print_node(const ExprPtr& e) {
  const auto& k = e->kids;
  switch (e->op) {
    case Op::Num: return num_text(e->value);
    case Op::Var: return "x";
    case Op::Eps: return "eps";
    case Op::Pi: return "pi";
    case Op::Neg: return "-" + print_at(k[0], Pos::NegArg);
    case Op::Add: return print_at(k[0], Pos::SumLeft) + "+" + print_at(k[1], Pos::SumRight);
    case Op::Sub: return print_at(k[0], Pos::SumLeft) + "-" + print_at(k[1], Pos::SumRight);
    case Op::Mul: return print_at(k[0], Pos::ProdLeft) + "*" + print_at(k[1], Pos::ProdRight);
    case Op::Div: return print_at(k[0], Pos::ProdLeft) + "/" + print_at(k[1], Pos::ProdRight);
    case Op::Pow: return print_at(k[0], Pos::PowBase) + "^" + print_at(k[1], Pos::PowExp);
    case Op::Func: return e->name + "(" + print_at(k[0], Pos::Free) + ")";
    case Op::Extract:
      return (e->k == 1 ? std::string("[eps] ") : "[eps^" + std::to_string(e->k) + "] ") +
             print_at(k[0], Pos::ExtractBody);
    case Op::PFQ: {
      std::string out = std::to_string(e->p) + "F" + std::to_string(e->q) + "(";
      for (int j = 0; j < e->p; ++j) out += (j ? "," : "") + print_at(k[j], Pos::Free);
      out += ";";
      for (int j = 0; j < e->q; ++j) out += (j ? "," : "") + print_at(k[e->p + j], Pos::Free);
      return out + ";" + print_at(k.back(), Pos::Free) + ")";
    }
  }
  return "?";
}

std::string print_at(const ExprPtr& e, Pos pos) {
  const std::string body = print_node(e);
  return needs_paren(e, pos) ? "(" + body + ")" : body;
}

template <class Pred>
bool any_node(const ExprPtr& e, Pred pred) {
  if (pred(*e)) return true;
  for (const ExprPtr& c : e->kids)
    if (any_node(c, pred)) return true;
  return false;
}

bool is_small_natural(Complex p) {
  return p.imag() == 0.0 && p.real() >= 0 && p.real() <= 64 && p.real() == std::floor(p.real());
}

Jet power_of(const Jet& b, const Jet& ex) {
  const int order = b.order();
  if (!ex.is_scalar()) return jet_pow(b, ex);
  const Complex p = ex.value();
  if (is_small_natural(p)) {
    Jet out(1.0, order);
    for (int j = 0; j < static_cast<int>(p.real()); ++j) out *= b;
    return out;
  }
  if (b.value() == Complex(0.0)) {
    if (b.is_scalar() && p.real() > 0) return Jet(0.0, order);
    throw DomainError("0 raised to a power with non-positive real part");
  }
  return jet_pow(b, p);
}

Jet arcsin_jet(const Jet& a) {
  const Complex v = std::asin(a.value());
  if (a.is_scalar()) return Jet(v, a.order());
  Jet r = jet_atan(a / jet_sqrt(1.0 - a * a));
  r[0] = v;
  return r;
}

Jet apply_function(const std::string& name, const Jet& a) {
  if (name == "sqrt") return a.value() == Complex(0.0) && a.is_scalar() ? a : jet_sqrt(a);
  if (name == "ln") {
    if (a.value() == Complex(0.0)) throw DomainError("ln of zero");
    return jet_log(a);
  }
  if (name == "arctan") return jet_atan(a);
  if (name == "arcsin") return arcsin_jet(a);
  if (name == "exp") return jet_exp(a);
  throw UnknownName(name);
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const ExprPtr& e) { return print_at(e, Pos::Free); }

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->op != b->op || a->value != b->value || a->name != b->name || a->k != b->k || a->p != b->p ||
      a->q != b->q || a->kids.size() != b->kids.size())
    return false;
  for (std::size_t j = 0; j < a->kids.size(); ++j)
    if (!equal(a->kids[j], b->kids[j])) return false;
  return true;
}

bool depends_on_x(const ExprPtr& e) {
  return any_node(e, [](const Expr& n) { return n.op == Op::Var; });
}
bool depends_on_eps(const ExprPtr& e) {
  return any_node(e, [](const Expr& n) { return n.op == Op::Eps; });
}
bool has_series(const ExprPtr& e) {
  return any_node(e, [](const Expr& n) { return n.op == Op::PFQ || n.op == Op::Extract; });
}
int max_extract(const ExprPtr& e) {
  int k = e->op == Op::Extract ? e->k : 0;
  for (const ExprPtr& c : e->kids) k = std::max(k, max_extract(c));
  return k;
}

Jet evaluate(const ExprPtr& e, Complex x, int order) {
  const auto& k = e->kids;
  auto sub = [&](int j) { return evaluate(k[j], x, order); };
  switch (e->op) {
    case Op::Num: return Jet(e->value, order);
    case Op::Var: return Jet(x, order);
    case Op::Eps: return order == 0 ? Jet(0.0, 0) : Jet::epsilon(order);
    case Op::Pi: return Jet(kPi, order);
    case Op::Neg: return -sub(0);
    case Op::Add: return sub(0) + sub(1);
    case Op::Sub: return sub(0) - sub(1);
    case Op::Mul: return sub(0) * sub(1);
    case Op::Div: {
      const Jet d = sub(1);
      if (d.value() == Complex(0.0)) throw DomainError("division by zero");
      return sub(0) / d;
    }
    case Op::Pow: return power_of(sub(0), sub(1));
    case Op::Func: return apply_function(e->name, sub(0));
    case Op::Extract: {
      const Jet body = evaluate(k[0], x, std::max(order, e->k));
      return Jet(extract(e->k, body), order);
    }
    case Op::PFQ: {
      std::vector<Jet> upper, lower;
      for (int j = 0; j < e->p + e->q; ++j) {
        if (depends_on_x(k[j])) throw DomainError("pFq parameters must not depend on x");
        (j < e->p ? upper : lower).push_back(sub(j));
      }
      const Jet z = sub(e->p + e->q);
      if (!z.is_scalar()) throw DomainError("pFq argument must not depend on eps");
      return eval(PFQSpec(upper, lower), z.value()).with_order(order);
    }
  }
  throw DomainError("unknown node");
}

std::optional<Complex> evaluate_elementary(const ExprPtr& e, Complex x) {
  if (has_series(e) || depends_on_eps(e)) return std::nullopt;
  return evaluate(e, x, 0).value();
}

}  // namespace hypint::cli

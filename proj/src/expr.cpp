#include "hamcat/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace hamcat {

namespace {

NodePtr make_node(ExprNode n) {
  return std::make_shared<const ExprNode>(std::move(n));
}

const NodePtr& zero_node() {
  static const NodePtr z = make_node({NodeKind::Constant, 0.0, {}, nullptr, nullptr});
  return z;
}

const NodePtr& one_node() {
  static const NodePtr o = make_node({NodeKind::Constant, 1.0, {}, nullptr, nullptr});
  return o;
}

bool is_const(const Expr& e) { return e.kind() == NodeKind::Constant; }
double cval(const Expr& e) { return e.node().value; }

bool const_integer(const Expr& e, long long* out = nullptr) {
  if (!is_const(e)) return false;
  double v = cval(e);
  double r = std::nearbyint(v);
  if (std::abs(v - r) > 1e-12 || std::abs(r) > 1e15) return false;
  if (out) *out = static_cast<long long>(r);
  return true;
}

}  // namespace

Expr::Expr() : node_(zero_node()) {}

Expr Expr::constant(double v) {
  if (v == 0.0) return Expr(zero_node());
  if (v == 1.0) return Expr(one_node());
  return Expr(make_node({NodeKind::Constant, v, {}, nullptr, nullptr}));
}

Expr Expr::variable(std::string name) {
  return Expr(make_node({NodeKind::Variable, 0.0, std::move(name), nullptr, nullptr}));
}

Expr Expr::parameter(std::string name) {
  return Expr(make_node({NodeKind::Parameter, 0.0, std::move(name), nullptr, nullptr}));
}

bool Expr::is_constant(double v) const {
  return kind() == NodeKind::Constant && node().value == v;
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant(0)) return b;
  if (b.is_constant(0)) return a;
  if (is_const(a) && is_const(b)) return Expr::constant(cval(a) + cval(b));
  return Expr(make_node({NodeKind::Sum, 0.0, {}, a.ptr(), b.ptr()}));
}

Expr operator-(const Expr& a) {
  if (is_const(a)) return Expr::constant(-cval(a));
  if (a.kind() == NodeKind::Negate) return Expr(a.node().a);
  return Expr(make_node({NodeKind::Negate, 0.0, {}, a.ptr(), nullptr}));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_constant(0)) return a;
  return a + (-b);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant(0) || b.is_constant(0)) return Expr::constant(0);
  if (a.is_constant(1)) return b;
  if (b.is_constant(1)) return a;
  if (is_const(a) && is_const(b)) return Expr::constant(cval(a) * cval(b));
  if (a.is_constant(-1)) return -b;
  if (b.is_constant(-1)) return -a;
  return Expr(make_node({NodeKind::Product, 0.0, {}, a.ptr(), b.ptr()}));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_constant(1)) return a;
  if (is_const(a) && is_const(b) && cval(b) != 0.0)
    return Expr::constant(cval(a) / cval(b));
  return Expr(make_node({NodeKind::Quotient, 0.0, {}, a.ptr(), b.ptr()}));
}

Expr pow(const Expr& base, const Expr& exponent) {
  if (exponent.is_constant(1)) return base;
  if (exponent.is_constant(0)) return Expr::constant(1);
  long long n;
  if (is_const(base) && const_integer(exponent, &n))
    return Expr::constant(std::pow(cval(base), static_cast<double>(n)));
  return Expr(make_node({NodeKind::Power, 0.0, {}, base.ptr(), exponent.ptr()}));
}

namespace {
Expr unary(NodeKind k, const Expr& a, double (*f)(double), bool fold) {
  if (fold && is_const(a)) return Expr::constant(f(cval(a)));
  return Expr(make_node({k, 0.0, {}, a.ptr(), nullptr}));
}
}  // namespace

Expr exp(const Expr& a) { return unary(NodeKind::Exp, a, std::exp, true); }
Expr ln(const Expr& a) {
  if (is_const(a) && cval(a) > 0.0) return Expr::constant(std::log(cval(a)));
  return Expr(make_node({NodeKind::Ln, 0.0, {}, a.ptr(), nullptr}));
}
Expr abs(const Expr& a) { return unary(NodeKind::Abs, a, std::fabs, true); }
Expr sin(const Expr& a) { return unary(NodeKind::Sin, a, std::sin, true); }
Expr cos(const Expr& a) { return unary(NodeKind::Cos, a, std::cos, true); }

// --- evaluation ---------------------------------------------------------

namespace {

double eval_pow(double base, double e) {
  double r = std::nearbyint(e);
  if (std::abs(e - r) <= 1e-9 && std::abs(r) <= 1e15) {
    if (base == 0.0 && r < 0.0) throw EvalError("zero raised to a negative power");
    return std::pow(base, r);
  }
  if (base <= 0.0)
    throw EvalError("non-integer power of a non-positive base");
  return std::pow(base, e);
}

double eval_rec(const ExprNode& n, const Point& pt) {
  switch (n.kind) {
    case NodeKind::Constant:
      return n.value;
    case NodeKind::Parameter: {
      auto it = pt.params.find(n.name);
      if (it == pt.params.end())
        throw EvalError("unassigned parameter '" + n.name + "'");
      return it->second;
    }
    case NodeKind::Variable: {
      auto it = pt.vars.find(n.name);
      if (it == pt.vars.end())
        throw EvalError("unassigned variable '" + n.name + "'");
      return it->second;
    }
    case NodeKind::Sum:
      return eval_rec(*n.a, pt) + eval_rec(*n.b, pt);
    case NodeKind::Product:
      return eval_rec(*n.a, pt) * eval_rec(*n.b, pt);
    case NodeKind::Quotient: {
      double den = eval_rec(*n.b, pt);
      if (den == 0.0) throw EvalError("division by zero");
      return eval_rec(*n.a, pt) / den;
    }
    case NodeKind::Power:
      return eval_pow(eval_rec(*n.a, pt), eval_rec(*n.b, pt));
    case NodeKind::Negate:
      return -eval_rec(*n.a, pt);
    case NodeKind::Exp:
      return std::exp(eval_rec(*n.a, pt));
    case NodeKind::Ln: {
      double v = eval_rec(*n.a, pt);
      if (v <= 0.0) throw EvalError("ln of a non-positive argument");
      return std::log(v);
    }
    case NodeKind::Abs:
      return std::fabs(eval_rec(*n.a, pt));
    case NodeKind::Sin:
      return std::sin(eval_rec(*n.a, pt));
    case NodeKind::Cos:
      return std::cos(eval_rec(*n.a, pt));
  }
  throw EvalError("corrupt expression node");
}

}  // namespace

double evaluate(const Expr& e, const Point& pt) { return eval_rec(e.node(), pt); }

// --- differentiation ------------------------------------------------------

Expr differentiate(const Expr& e, const std::string& var) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Constant:
    case NodeKind::Parameter:
      return Expr::constant(0);
    case NodeKind::Variable:
      return Expr::constant(n.name == var ? 1 : 0);
    case NodeKind::Sum:
      return differentiate(Expr(n.a), var) + differentiate(Expr(n.b), var);
    case NodeKind::Product: {
      Expr u(n.a), v(n.b);
      return differentiate(u, var) * v + u * differentiate(v, var);
    }
    case NodeKind::Quotient: {
      Expr u(n.a), v(n.b);
      Expr du = differentiate(u, var), dv = differentiate(v, var);
      if (dv.is_constant(0)) return du / v;
      return (du * v - u * dv) / pow(v, Expr::constant(2));
    }
    case NodeKind::Power: {
      Expr u(n.a), w(n.b);
      Expr du = differentiate(u, var), dw = differentiate(w, var);
      if (dw.is_constant(0)) {
        // d(u^c) = c*u^(c-1)*u'
        return w * pow(u, w - Expr::constant(1)) * du;
      }
      // general case requires u > 0 at evaluation anyway
      return pow(u, w) * (dw * ln(u) + w * du / u);
    }
    case NodeKind::Negate:
      return -differentiate(Expr(n.a), var);
    case NodeKind::Exp: {
      Expr u(n.a);
      return exp(u) * differentiate(u, var);
    }
    case NodeKind::Ln: {
      Expr u(n.a);
      return differentiate(u, var) / u;
    }
    case NodeKind::Abs: {
      Expr u(n.a);
      return (u / abs(u)) * differentiate(u, var);
    }
    case NodeKind::Sin: {
      Expr u(n.a);
      return cos(u) * differentiate(u, var);
    }
    case NodeKind::Cos: {
      Expr u(n.a);
      return -(sin(u) * differentiate(u, var));
    }
  }
  throw EvalError("corrupt expression node");
}

// --- substitution -----------------------------------------------------------

Expr substitute(const Expr& e, const std::map<std::string, Expr>& repl) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Constant:
      return e;
    case NodeKind::Parameter:
    case NodeKind::Variable: {
      auto it = repl.find(n.name);
      return it == repl.end() ? e : it->second;
    }
    default:
      break;
  }
  Expr a = substitute(Expr(n.a), repl);
  switch (n.kind) {
    case NodeKind::Sum:
      return a + substitute(Expr(n.b), repl);
    case NodeKind::Product:
      return a * substitute(Expr(n.b), repl);
    case NodeKind::Quotient:
      return a / substitute(Expr(n.b), repl);
    case NodeKind::Power:
      return pow(a, substitute(Expr(n.b), repl));
    case NodeKind::Negate:
      return -a;
    case NodeKind::Exp:
      return exp(a);
    case NodeKind::Ln:
      return ln(a);
    case NodeKind::Abs:
      return abs(a);
    case NodeKind::Sin:
      return sin(a);
    case NodeKind::Cos:
      return cos(a);
    default:
      throw EvalError("corrupt expression node");
  }
}

// --- free symbols -----------------------------------------------------------

namespace {
void collect(const ExprNode& n, NodeKind want, std::set<std::string>& out) {
  if (n.kind == want) out.insert(n.name);
  if (n.a) collect(*n.a, want, out);
  if (n.b) collect(*n.b, want, out);
}
}  // namespace

std::set<std::string> free_variables(const Expr& e) {
  std::set<std::string> out;
  collect(e.node(), NodeKind::Variable, out);
  return out;
}

std::set<std::string> free_parameters(const Expr& e) {
  std::set<std::string> out;
  collect(e.node(), NodeKind::Parameter, out);
  return out;
}

bool is_polynomial(const Expr& e) {
  const ExprNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Exp:
    case NodeKind::Ln:
    case NodeKind::Abs:
    case NodeKind::Sin:
    case NodeKind::Cos:
      return false;
    case NodeKind::Power:
      if (!const_integer(Expr(n.b))) return false;
      return is_polynomial(Expr(n.a));
    case NodeKind::Quotient:
      // a quotient of polynomials still cancels exactly only when the
      // denominator is constant
      if (n.b->kind != NodeKind::Constant) return false;
      return is_polynomial(Expr(n.a));
    default:
      break;
  }
  bool ok = true;
  if (n.a) ok = ok && is_polynomial(Expr(n.a));
  if (n.b) ok = ok && is_polynomial(Expr(n.b));
  return ok;
}

// --- parser -----------------------------------------------------------------

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;
  const ParseOptions& opts;

  explicit Parser(std::string_view text, const ParseOptions& o) : s(text), opts(o) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(msg, at);
  }

  Expr parse_expr() {
    Expr e = parse_term();
    for (;;) {
      if (accept('+'))
        e = e + parse_term();
      else if (accept('-'))
        e = e - parse_term();
      else
        return e;
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      if (accept('*'))
        e = e * parse_factor();
      else if (accept('/'))
        e = e / parse_factor();
      else
        return e;
    }
  }

  Expr parse_factor() {
    if (accept('-')) return -parse_factor();
    Expr a = parse_atom();
    if (accept('^')) return pow(a, parse_factor());
    return a;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input", pos);
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Expr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    fail(std::string("unexpected character '") + c + "'", pos);
  }

  Expr parse_number() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      std::size_t save = pos;
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      } else {
        pos = save;  // 'e' was an identifier start, not an exponent
      }
    }
    std::string tok(s.substr(start, pos - start));
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) fail("malformed number '" + tok + "'", start);
    return Expr::constant(v);
  }

  Expr parse_ident() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    std::string name(s.substr(start, pos - start));
    if (name == "exp" || name == "ln" || name == "abs" || name == "sin" ||
        name == "cos") {
      expect('(');
      Expr arg = parse_expr();
      expect(')');
      if (name == "exp") return exp(arg);
      if (name == "ln") return ln(arg);
      if (name == "abs") return abs(arg);
      if (name == "sin") return sin(arg);
      return cos(arg);
    }
    if (name.size() == 2 && (name[0] == 'x' || name[0] == 'p' || name[0] == 'y') &&
        name[1] >= '1' && name[1] <= '9')
      return Expr::variable(name);
    if (opts.extra_variables.count(name)) return Expr::variable(name);
    if (opts.parameters.count(name)) return Expr::parameter(name);
    fail("unknown identifier '" + name + "'", start);
  }
};

}  // namespace

Expr parse(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  Expr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input", p.pos);
  return e;
}

// --- printing --------------------------------------------------------------

namespace {

std::string format_double(double v) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// precedence levels: Sum 1, Product/Quotient 2, Negate 3, Power 4, atom 5
int precedence(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Sum:
      return 1;
    case NodeKind::Product:
    case NodeKind::Quotient:
      return 2;
    case NodeKind::Negate:
      return 3;
    case NodeKind::Power:
      return 4;
    case NodeKind::Constant:
      return n.value < 0 ? 3 : 5;
    default:
      return 5;
  }
}

void print_rec(const ExprNode& n, int ctx, std::string& out) {
  int prec = precedence(n);
  bool parens = prec < ctx;
  if (parens) out += '(';
  switch (n.kind) {
    case NodeKind::Constant:
      out += format_double(n.value);
      break;
    case NodeKind::Parameter:
    case NodeKind::Variable:
      out += n.name;
      break;
    case NodeKind::Sum:
      print_rec(*n.a, 1, out);
      if (n.b->kind == NodeKind::Negate) {
        out += " - ";
        print_rec(*n.b->a, 2, out);
      } else if (n.b->kind == NodeKind::Constant && n.b->value < 0) {
        out += " - ";
        out += format_double(-n.b->value);
      } else {
        out += " + ";
        print_rec(*n.b, 2, out);
      }
      break;
    case NodeKind::Product:
      print_rec(*n.a, 2, out);
      out += '*';
      print_rec(*n.b, 3, out);
      break;
    case NodeKind::Quotient:
      print_rec(*n.a, 2, out);
      out += '/';
      print_rec(*n.b, 3, out);
      break;
    case NodeKind::Negate:
      out += '-';
      print_rec(*n.a, 3, out);
      break;
    case NodeKind::Power:
      print_rec(*n.a, 5, out);
      out += '^';
      print_rec(*n.b, 4, out);
      break;
    case NodeKind::Exp:
    case NodeKind::Ln:
    case NodeKind::Abs:
    case NodeKind::Sin:
    case NodeKind::Cos: {
      const char* f = n.kind == NodeKind::Exp   ? "exp"
                      : n.kind == NodeKind::Ln  ? "ln"
                      : n.kind == NodeKind::Abs ? "abs"
                      : n.kind == NodeKind::Sin ? "sin"
                                                : "cos";
      out += f;
      out += '(';
      print_rec(*n.a, 0, out);
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print_rec(e.node(), 0, out);
  return out;
}

// --- sampling ----------------------------------------------------------------

const std::vector<Interval>& SampleDomain::intervals_for(const std::string& name) const {
  auto it = per_variable.find(name);
  return it == per_variable.end() ? default_intervals : it->second;
}

double SampleDomain::default_coordinate(const std::string& name) const {
  const auto& ivs = intervals_for(name);
  const Interval& last = ivs.back();
  return 0.5 * (last.lo + last.hi);
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

double draw_value(SampleRng& rng, const std::vector<Interval>& ivs) {
  double total = 0.0;
  for (const auto& iv : ivs) total += iv.hi - iv.lo;
  double u = rng.uniform01() * total;
  for (const auto& iv : ivs) {
    double len = iv.hi - iv.lo;
    if (u <= len || &iv == &ivs.back()) return iv.lo + std::min(u, len);
    u -= len;
  }
  return ivs.back().hi;
}

}  // namespace

EqualityResult equal_on_samples(
    const Expr& e1, const Expr& e2, const SampleDomain& dom, int n, double tol,
    std::uint64_t seed, const std::map<std::string, double>& params,
    const std::optional<std::vector<std::string>>& sample_vars) {
  std::vector<std::string> vars;
  if (sample_vars) {
    vars = *sample_vars;
  } else {
    auto v1 = free_variables(e1);
    auto v2 = free_variables(e2);
    v1.insert(v2.begin(), v2.end());
    vars.assign(v1.begin(), v1.end());
  }

  CompiledExpr c1(e1, vars, params);
  CompiledExpr c2(e2, vars, params);

  SampleRng rng(seed);
  std::vector<double> slots(vars.size());
  EqualityResult res;
  res.samples = n;
  for (int i = 0; i < n; ++i) {
    bool ok = false;
    double v1 = 0, v2 = 0;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      for (std::size_t k = 0; k < vars.size(); ++k)
        slots[k] = draw_value(rng, dom.intervals_for(vars[k]));
      try {
        v1 = c1.eval(slots);
        v2 = c2.eval(slots);
        ok = std::isfinite(v1) && std::isfinite(v2);
      } catch (const EvalError&) {
        ok = false;
      }
    }
    if (!ok)
      throw DomainError("no valid sample point found in 1000 attempts");
    double r = std::abs(v1 - v2) / (1.0 + std::max(std::abs(v1), std::abs(v2)));
    if (r >= res.max_residual) {
      res.max_residual = r;
      res.worst.params = params;
      res.worst.vars.clear();
      for (std::size_t k = 0; k < vars.size(); ++k) res.worst.vars[vars[k]] = slots[k];
    }
  }
  res.equal = res.max_residual <= tol;
  return res;
}

// --- compiled evaluation -----------------------------------------------------

CompiledExpr::CompiledExpr(const Expr& e, std::span<const std::string> slot_names,
                           const std::map<std::string, double>& params) {
  struct Builder {
    std::span<const std::string> names;
    const std::map<std::string, double>& params;
    std::vector<Instr>& prog;
    int depth = 0, max_depth = 0;

    void push(Instr in, int delta) {
      prog.push_back(in);
      depth += delta;
      if (depth > max_depth) max_depth = depth;
    }

    void build(const ExprNode& n) {
      switch (n.kind) {
        case NodeKind::Constant:
          push({kConst, 0, n.value}, 1);
          return;
        case NodeKind::Parameter: {
          auto it = params.find(n.name);
          if (it == params.end())
            throw EvalError("unassigned parameter '" + n.name + "'");
          push({kConst, 0, it->second}, 1);
          return;
        }
        case NodeKind::Variable: {
          for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n.name) {
              push({kSlot, static_cast<int>(i), 0.0}, 1);
              return;
            }
          throw EvalError("unassigned variable '" + n.name + "'");
        }
        case NodeKind::Sum:
          build(*n.a);
          build(*n.b);
          push({kAdd, 0, 0.0}, -1);
          return;
        case NodeKind::Product:
          build(*n.a);
          build(*n.b);
          push({kMul, 0, 0.0}, -1);
          return;
        case NodeKind::Quotient:
          build(*n.a);
          build(*n.b);
          push({kDiv, 0, 0.0}, -1);
          return;
        case NodeKind::Power:
          build(*n.a);
          build(*n.b);
          push({kPow, 0, 0.0}, -1);
          return;
        case NodeKind::Negate:
          build(*n.a);
          push({kNeg, 0, 0.0}, 0);
          return;
        case NodeKind::Exp:
          build(*n.a);
          push({kExp, 0, 0.0}, 0);
          return;
        case NodeKind::Ln:
          build(*n.a);
          push({kLn, 0, 0.0}, 0);
          return;
        case NodeKind::Abs:
          build(*n.a);
          push({kAbs, 0, 0.0}, 0);
          return;
        case NodeKind::Sin:
          build(*n.a);
          push({kSin, 0, 0.0}, 0);
          return;
        case NodeKind::Cos:
          build(*n.a);
          push({kCos, 0, 0.0}, 0);
          return;
      }
      throw EvalError("corrupt expression node");
    }
  };

  Builder b{slot_names, params, prog_};
  b.build(e.node());
  max_depth_ = b.max_depth;
  stack_.resize(static_cast<std::size_t>(max_depth_) + 1);
}

double CompiledExpr::eval(std::span<const double> slots) const {
  double* sp = stack_.data();
  for (const Instr& in : prog_) {
    switch (in.op) {
      case kConst:
        *sp++ = in.val;
        break;
      case kSlot:
        *sp++ = slots[static_cast<std::size_t>(in.idx)];
        break;
      case kAdd:
        sp[-2] += sp[-1];
        --sp;
        break;
      case kMul:
        sp[-2] *= sp[-1];
        --sp;
        break;
      case kDiv:
        if (sp[-1] == 0.0) throw EvalError("division by zero");
        sp[-2] /= sp[-1];
        --sp;
        break;
      case kPow:
        sp[-2] = eval_pow(sp[-2], sp[-1]);
        --sp;
        break;
      case kNeg:
        sp[-1] = -sp[-1];
        break;
      case kExp:
        sp[-1] = std::exp(sp[-1]);
        break;
      case kLn:
        if (sp[-1] <= 0.0) throw EvalError("ln of a non-positive argument");
        sp[-1] = std::log(sp[-1]);
        break;
      case kAbs:
        sp[-1] = std::fabs(sp[-1]);
        break;
      case kSin:
        sp[-1] = std::sin(sp[-1]);
        break;
      case kCos:
        sp[-1] = std::cos(sp[-1]);
        break;
    }
  }
  return sp[-1];
}

}  // namespace hamcat

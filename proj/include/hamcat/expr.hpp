#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hamcat {

/// Immutable symbolic expression trees over phase-space variables
/// (x1..x9, p1..p9, y1..y9) and declared single-letter parameters.
///
/// Simplification is deliberately conservative: construction applies only
/// local rewrites (0*x -> 0, x+0 -> x, 1*x -> x, constant folding, double
/// negation).  Equality of expressions is decided numerically with
/// equal_on_samples, never structurally.

enum class NodeKind {
  Constant,
  Parameter,
  Variable,
  Sum,
  Product,
  Quotient,
  Power,
  Negate,
  Exp,
  Ln,
  Abs,
  Sin,
  Cos,
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  NodeKind kind;
  double value = 0.0;   // Constant
  std::string name;     // Parameter / Variable
  NodePtr a, b;         // children: a for unary, a+b for binary
};

class Expr {
 public:
  Expr();  // the constant 0
  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static Expr constant(double v);
  static Expr variable(std::string name);
  static Expr parameter(std::string name);

  const ExprNode& node() const { return *node_; }
  NodePtr ptr() const { return node_; }
  NodeKind kind() const { return node_->kind; }
  bool is_constant(double v) const;

 private:
  NodePtr node_;
};

// Smart constructors (apply the local rewrite rules).
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, const Expr& exponent);
Expr exp(const Expr& a);
Expr ln(const Expr& a);
Expr abs(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);

/// Variable and parameter assignments for numerical evaluation.
struct Point {
  std::map<std::string, double> vars;
  std::map<std::string, double> params;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  /// Declared single-letter parameter names. Anything else that is not a
  /// phase-space variable is rejected.
  std::set<std::string> parameters;
  /// Additional identifiers accepted as variables (used internally for the
  /// Casimir forms written over Q1..Q4).
  std::set<std::string> extra_variables;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' factor)?
///   atom   := number | ident | func '(' expr ')' | '(' expr ')'
/// with func in {exp, ln, abs, sin, cos}; '^' binds tighter than unary minus.
Expr parse(std::string_view text, const ParseOptions& opts = {});

/// Precedence-aware printing; parse(to_string(e)) evaluates identically to e.
std::string to_string(const Expr& e);

/// Exact symbolic partial derivative with respect to a variable name.
/// d|u|/dv is (u/|u|)*du/dv, with the sign resolved at evaluation time.
Expr differentiate(const Expr& e, const std::string& var);

/// Replace named symbols (variables or parameters) by expressions.
Expr substitute(const Expr& e, const std::map<std::string, Expr>& repl);

double evaluate(const Expr& e, const Point& pt);

std::set<std::string> free_variables(const Expr& e);
std::set<std::string> free_parameters(const Expr& e);

/// True when the tree uses no transcendental node and every Power has a
/// constant integer exponent; such expressions cancel to machine precision.
bool is_polynomial(const Expr& e);

// --- deterministic sampling -------------------------------------------------

struct Interval {
  double lo;
  double hi;
};

/// Per-variable sampling regions. The default region for every variable is
/// [-2,-0.1] u [0.1,2]; entries in `per_variable` override it.
struct SampleDomain {
  std::vector<Interval> default_intervals{{-2.0, -0.1}, {0.1, 2.0}};
  std::map<std::string, std::vector<Interval>> per_variable;

  const std::vector<Interval>& intervals_for(const std::string& name) const;
  /// Midpoint of the last (most positive) interval; used as the documented
  /// default phase-space point for simulations.
  double default_coordinate(const std::string& name) const;
};

/// Portable deterministic uniform stream (mt19937_64 with a fixed mapping to
/// doubles, so identical seeds give identical samples on every platform).
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}
  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }
  double in(const Interval& iv) {
    return iv.lo + uniform01() * (iv.hi - iv.lo);
  }

 private:
  std::mt19937_64 eng_;
};

/// Stable seed mixing so every named check draws an independent,
/// order-independent stream.
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

struct EqualityResult {
  bool equal = false;
  double max_residual = 0.0;  // max over samples of |e1-e2|/(1+max(|e1|,|e2|))
  Point worst;
  int samples = 0;
};

/// Compare two expressions at `n` sampled points. Points where either side
/// fails to evaluate (domain error or non-finite value) are redrawn; if 1000
/// consecutive attempts fail for one sample a DomainError is thrown.
/// `sample_vars`, when given, fixes the full set (and order) of variables
/// drawn per point; otherwise the union of free variables is used.
EqualityResult equal_on_samples(
    const Expr& e1, const Expr& e2, const SampleDomain& dom, int n, double tol,
    std::uint64_t seed, const std::map<std::string, double>& params = {},
    const std::optional<std::vector<std::string>>& sample_vars = std::nullopt);

// --- compiled evaluation ----------------------------------------------------

/// Flattens an expression to a postfix program over a fixed slot layout;
/// used by the integrators and the samplers where per-node map lookups
/// would dominate.
class CompiledExpr {
 public:
  CompiledExpr() = default;
  CompiledExpr(const Expr& e, std::span<const std::string> slot_names,
               const std::map<std::string, double>& params);

  double eval(std::span<const double> slots) const;

 private:
  enum Op : std::uint8_t {
    kConst, kSlot, kAdd, kMul, kDiv, kPow, kNeg, kExp, kLn, kAbs, kSin, kCos
  };
  struct Instr {
    Op op;
    int idx = 0;
    double val = 0.0;
  };
  std::vector<Instr> prog_;
  mutable std::vector<double> stack_;
  int max_depth_ = 0;
};

}  // namespace hamcat

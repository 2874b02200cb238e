#include "hamcat/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace hamcat {

// --- constraint mini-language ------------------------------------------------

namespace {

struct ConstraintParser {
  // operand := number | name | name('*'name)* | abs '(' name ')'
  // clause  := operand op operand      with op in  < <= > >= == !=
  // text    := clause [ "if" clause ]
  const std::map<std::string, double>& params;

  double operand(std::istringstream& in) const {
    in >> std::ws;
    if (in.peek() == EOF) throw ConstraintError("malformed constraint operand");
    if (std::isdigit(in.peek()) || in.peek() == '-' || in.peek() == '.') {
      double v;
      in >> v;
      return v;
    }
    std::string tok;
    while (in.peek() != EOF && (std::isalnum(in.peek()) || in.peek() == '_'))
      tok.push_back(static_cast<char>(in.get()));
    if (tok == "abs") {
      in >> std::ws;
      if (in.get() != '(') throw ConstraintError("expected '(' after abs");
      double v = operand(in);
      in >> std::ws;
      if (in.get() != ')') throw ConstraintError("expected ')' after abs");
      return std::fabs(v);
    }
    double v = lookup(tok);
    in >> std::ws;
    while (in.peek() == '*') {
      in.get();
      in >> std::ws;
      std::string t2;
      while (in.peek() != EOF && (std::isalnum(in.peek()) || in.peek() == '_'))
        t2.push_back(static_cast<char>(in.get()));
      v *= lookup(t2);
      in >> std::ws;
    }
    return v;
  }

  double lookup(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end())
      throw ConstraintError("constraint references unknown parameter '" + name + "'");
    return it->second;
  }

  bool clause(std::istringstream& in) const {
    double lhs = operand(in);
    in >> std::ws;
    std::string op;
    while (in.peek() == '<' || in.peek() == '>' || in.peek() == '=' || in.peek() == '!')
      op.push_back(static_cast<char>(in.get()));
    double rhs = operand(in);
    if (op == "<") return lhs < rhs;
    if (op == "<=") return lhs <= rhs;
    if (op == ">") return lhs > rhs;
    if (op == ">=") return lhs >= rhs;
    if (op == "==") return lhs == rhs;
    if (op == "!=") return lhs != rhs;
    throw ConstraintError("unknown comparison '" + op + "'");
  }
};

}  // namespace

bool constraint_holds(const std::string& text,
                      const std::map<std::string, double>& params) {
  std::string main_part = text, cond_part;
  auto at = text.find(" if ");
  if (at != std::string::npos) {
    main_part = text.substr(0, at);
    cond_part = text.substr(at + 4);
  }
  ConstraintParser cp{params};
  if (!cond_part.empty()) {
    std::istringstream cin_(cond_part);
    if (!cp.clause(cin_)) return true;  // premise false -> vacuously satisfied
  }
  std::istringstream min_(main_part);
  return cp.clause(min_);
}

void check_constraints(const std::vector<std::string>& constraints,
                       const std::map<std::string, double>& params,
                       const std::string& context) {
  for (const auto& c : constraints)
    if (!constraint_holds(c, params))
      throw ConstraintError(context + ": constraint '" + c + "' violated");
}

// --- LieAlgebra ---------------------------------------------------------------

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> param_names,
                       std::map<std::string, double> param_defaults,
                       std::vector<std::string> constraints)
    : name_(std::move(name)),
      param_names_(std::move(param_names)),
      param_defaults_(std::move(param_defaults)),
      constraints_(std::move(constraints)) {}

void LieAlgebra::set(int i, int j, int k, Expr f) {
  if (!(i >= 1 && j >= 1 && k >= 1 && i <= 4 && j <= 4 && k <= 4 && i < j))
    throw ConstraintError("structure constant indices must satisfy 1 <= i < j <= 4");
  upper_[{i, j, k}] = std::move(f);
}

Expr LieAlgebra::f(int i, int j, int k) const {
  if (i == j) return Expr::constant(0);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = upper_.find({i, j, k});
  if (it == upper_.end()) return Expr::constant(0);
  return flip ? -it->second : it->second;
}

std::map<std::string, double> LieAlgebra::resolve_params(
    const std::map<std::string, double>& overrides) const {
  std::map<std::string, double> out = param_defaults_;
  for (const auto& [k, v] : overrides) {
    if (!param_defaults_.count(k))
      throw ConstraintError(name_ + ": unknown parameter '" + k + "'");
    out[k] = v;
  }
  check_constraints(constraints_, out, name_);
  return out;
}

double jacobi_defect(const LieAlgebra& alg,
                     const std::map<std::string, double>& params) {
  auto resolved = alg.resolve_params(params);
  Point pt;
  pt.params = resolved;
  double f[5][5][5];
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) f[i][j][k] = evaluate(alg.f(i, j, k), pt);

  double worst = 0.0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
          double s = 0.0;
          for (int m = 1; m <= 4; ++m)
            s += f[i][j][m] * f[m][k][l] + f[j][k][m] * f[m][i][l] +
                 f[k][i][m] * f[m][j][l];
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

}  // namespace hamcat

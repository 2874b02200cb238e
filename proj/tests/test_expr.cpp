#include <doctest.h>

#include <cmath>

#include "hamcat/expr.hpp"
#include "oracles.hpp"

using namespace hamcat;

namespace {
Point pt(std::map<std::string, double> vars, std::map<std::string, double> params = {}) {
  Point p;
  p.vars = std::move(vars);
  p.params = std::move(params);
  return p;
}
}  // namespace

TEST_CASE("parse: single token unary minus") {
  Expr e = parse("-p1");
  CHECK(e.kind() == NodeKind::Negate);
  CHECK(e.node().a->kind == NodeKind::Variable);
  CHECK(e.node().a->name == "p1");
}

TEST_CASE("parse: quadratic hamiltonian tree") {
  Expr e = parse("p2^2 - 2*p1*p3");
  CHECK(evaluate(e, pt({{"p1", 0.9}, {"p2", 0.2}, {"p3", -1.1}})) ==
        doctest::Approx(2.02).epsilon(1e-14));
}

TEST_CASE("parse: exponential with declared parameter") {
  ParseOptions po;
  po.parameters = {"a"};
  Expr e = parse("exp(-(a*x4))", po);
  CHECK(e.kind() == NodeKind::Exp);
  CHECK(e.node().a->kind == NodeKind::Negate);
  CHECK(evaluate(e, pt({{"x4", 0.5}}, {{"a", 2.0}})) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("parse: power binds tighter than unary minus") {
  Expr e = parse("-x1^2");
  CHECK(evaluate(e, pt({{"x1", 3.0}})) == -9.0);
  Expr f = parse("2^3^2");  // right associative
  CHECK(evaluate(f, pt({})) == 512.0);
}

TEST_CASE("parse: errors carry byte offsets") {
  CHECK_THROWS_AS(parse("p1 + + p2"), ParseError);
  try {
    parse("p1 + q7");
  } catch (const ParseError& pe) {
    CHECK(pe.offset() == 5);
    CHECK(std::string(pe.what()).find("q7") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("x1 *"), ParseError);
  CHECK_THROWS_AS(parse("(x1"), ParseError);
  CHECK_THROWS_AS(parse("a*x1"), ParseError);  // parameter not declared
}

TEST_CASE("differentiate: product with constant cofactor") {
  Expr e = parse("-x2*p1");
  Expr d = differentiate(e, "x2");
  auto res = equal_on_samples(d, parse("-p1"), SampleDomain{}, 50, 1e-12, 7);
  CHECK(res.equal);
}

TEST_CASE("differentiate: chain rule through exp") {
  ParseOptions po;
  po.parameters = {"a"};
  Expr e = parse("exp(-(a*x4))", po);
  Expr d = differentiate(e, "x4");
  Expr expect = parse("-a*exp(-(a*x4))", po);
  auto res = equal_on_samples(d, expect, SampleDomain{}, 50, 1e-12, 7, {{"a", 1.3}});
  CHECK(res.equal);
}

TEST_CASE("differentiate: ln(abs(x)) against central differences") {
  Expr e = parse("x2*ln(abs(x2))*p1");
  Expr d = differentiate(e, "x2");
  Point at = pt({{"x2", 0.7}, {"p1", 0.9}});
  double sym = evaluate(d, at);
  double fd = oracles::finite_difference(e, at, "x2", 1e-6);
  CHECK(std::abs(sym - fd) <= 1e-8);
  // and the closed form (ln|x2| + 1)*p1
  CHECK(sym == doctest::Approx((std::log(0.7) + 1.0) * 0.9).epsilon(1e-12));
}

TEST_CASE("differentiate of a v-free expression is zero") {
  Expr e = parse("p2^2 - 2*p1*p3");
  Expr d = differentiate(e, "x1");
  CHECK(d.is_constant(0));
}

TEST_CASE("evaluate: domain and assignment errors") {
  CHECK(evaluate(parse("-p1"), pt({{"p1", 0.0}})) == 0.0);
  CHECK(evaluate(parse("ln(abs(x2))"), pt({{"x2", -1.0}})) == 0.0);
  CHECK_THROWS_AS(evaluate(parse("ln(x2)"), pt({{"x2", -1.0}})), EvalError);
  CHECK_THROWS_AS(evaluate(parse("x1/x2"), pt({{"x1", 1.0}, {"x2", 0.0}})), EvalError);
  CHECK_THROWS_AS(evaluate(parse("x1"), pt({})), EvalError);
  CHECK_THROWS_AS(evaluate(parse("x1^(1/2)"), pt({{"x1", -2.0}})), EvalError);
  CHECK(evaluate(parse("x1^(1/2)"), pt({{"x1", 4.0}})) == doctest::Approx(2.0));
  // integer exponents work for negative bases
  CHECK(evaluate(parse("x1^3"), pt({{"x1", -2.0}})) == -8.0);
}

TEST_CASE("equal_on_samples: basic and discriminating cases") {
  SampleDomain dom;
  auto r1 = equal_on_samples(parse("x2 + x2"), parse("2*x2"), dom, 100, 1e-9, 42);
  CHECK(r1.equal);

  SampleDomain pos;
  pos.per_variable["x2"] = {{0.1, 2.0}};
  auto r2 = equal_on_samples(parse("exp(ln(abs(x2)))"), parse("abs(x2)"), pos, 100,
                             1e-9, 42);
  CHECK(r2.equal);

  auto r3 = equal_on_samples(parse("p2^2 - 2*p1*p3"), parse("p2^2 - 2*p1*p2"), dom,
                             100, 1e-9, 42);
  CHECK_FALSE(r3.equal);
  // residual at the discriminating point from the catalog errata
  Point at = pt({{"p1", 0.9}, {"p2", 0.2}, {"p3", -1.1}});
  double lhs = evaluate(parse("p2^2 - 2*p1*p3"), at);
  double rhs = evaluate(parse("p2^2 - 2*p1*p2"), at);
  CHECK(lhs == doctest::Approx(2.02));
  CHECK(rhs == doctest::Approx(-0.32));
}

TEST_CASE("equal_on_samples: determinism and monotonicity in n") {
  SampleDomain dom;
  Expr lhs = parse("sin(x1)*p1 + x1/(p1*p1 + 1.5)");
  Expr rhs = parse("sin(x1)*p1");
  auto a = equal_on_samples(lhs, rhs, dom, 100, 1e-9, 123);
  auto b = equal_on_samples(lhs, rhs, dom, 100, 1e-9, 123);
  CHECK(a.max_residual == b.max_residual);
  auto small = equal_on_samples(lhs, rhs, dom, 50, 1e-9, 123);
  CHECK(small.max_residual <= a.max_residual);
}

TEST_CASE("equal_on_samples: unsatisfiable domain raises") {
  Expr e = parse("ln(x1 - 10)");  // never valid on [-2,2]
  CHECK_THROWS_AS(equal_on_samples(e, e, SampleDomain{}, 5, 1e-9, 1), DomainError);
}

TEST_CASE("print/parse round trip on random expressions") {
  std::mt19937_64 rng(2024);
  std::vector<std::string> vars = {"x1", "x2", "p1", "p2"};
  SampleDomain dom;
  for (int i = 0; i < 200; ++i) {
    Expr e = oracles::random_expr(rng, vars, 4);
    Expr back = parse(to_string(e));
    auto res = equal_on_samples(e, back, dom, 10, 1e-12, 55u + static_cast<unsigned>(i),
                                {}, std::vector<std::string>(vars));
    CHECK(res.equal);
  }
}

TEST_CASE("derivatives agree with central finite differences on random expressions") {
  std::mt19937_64 rng(99);
  std::vector<std::string> vars = {"x1", "x2", "p1"};
  SampleDomain dom;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Expr e = oracles::random_expr(rng, vars, 4);
    Expr d = differentiate(e, "x1");
    SampleRng srng(mix_seed(4242, "fd" + std::to_string(i)));
    int valid = 0;
    for (int attempt = 0; attempt < 200 && valid < 10; ++attempt) {
      Point at;
      for (const auto& v : vars) {
        double mag = 0.1 + 1.9 * srng.uniform01();
        at.vars[v] = srng.uniform01() < 0.5 ? -mag : mag;
      }
      double sym, fd;
      try {
        sym = evaluate(d, at);
        fd = oracles::finite_difference(e, at, "x1", 1e-6);
      } catch (const EvalError&) {
        continue;
      }
      if (!std::isfinite(sym) || !std::isfinite(fd)) continue;
      ++valid;
      ++checked;
      CHECK(std::abs(sym - fd) <= 1e-6 * (1.0 + std::max(std::abs(sym), std::abs(fd))));
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("differentiation is linear") {
  std::mt19937_64 rng(7);
  std::vector<std::string> vars = {"x1", "x2", "p1"};
  SampleDomain dom;
  for (int i = 0; i < 40; ++i) {
    Expr e1 = oracles::random_expr(rng, vars, 3);
    Expr e2 = oracles::random_expr(rng, vars, 3);
    Expr lhs = differentiate(e1 + e2, "x2");
    Expr rhs = differentiate(e1, "x2") + differentiate(e2, "x2");
    auto res = equal_on_samples(lhs, rhs, dom, 20, 1e-9, 31u + static_cast<unsigned>(i),
                                {}, std::vector<std::string>(vars));
    CHECK(res.equal);
  }
}

TEST_CASE("compiled evaluation matches tree evaluation") {
  ParseOptions po;
  po.parameters = {"a"};
  Expr e = parse("exp(-(a*x4))*x1 + x4^2/(x1 + 3)", po);
  std::vector<std::string> slots = {"x1", "x4"};
  CompiledExpr c(e, slots, {{"a", 0.7}});
  std::vector<double> z = {1.2, -0.4};
  Point at = pt({{"x1", 1.2}, {"x4", -0.4}}, {{"a", 0.7}});
  CHECK(c.eval(z) == doctest::Approx(evaluate(e, at)).epsilon(1e-15));
}

TEST_CASE("is_polynomial classification") {
  CHECK(is_polynomial(parse("p2^2 - 2*p1*p3")));
  CHECK(is_polynomial(parse("-(x2^2/2)*p1")));
  CHECK_FALSE(is_polynomial(parse("exp(x1)")));
  CHECK_FALSE(is_polynomial(parse("x1^(1/2)")));
  CHECK_FALSE(is_polynomial(parse("ln(abs(x2))")));
  CHECK_FALSE(is_polynomial(parse("x1/x2")));
}

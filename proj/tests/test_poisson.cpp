#include <doctest.h>

#include "hamcat/catalog.hpp"
#include "hamcat/poisson.hpp"
#include "oracles.hpp"

using namespace hamcat;

namespace {

// The bracket convention pinned by the worked realization: with
// Q2 = -p2 and Q4 = -x2*p1 - x3*p2 on N=3, {Q2,Q4} must equal Q1 = -p1.
TEST_CASE("sign convention: worked realization closes") {
  Expr q2 = parse("-p2");
  Expr q4 = parse("-x2*p1 - x3*p2");
  Expr br = canonical_bracket(q2, q4, CanonicalStructure{3});
  auto res = equal_on_samples(br, parse("-p1"), SampleDomain{}, 100, 1e-12, 42);
  CHECK(res.equal);
}

TEST_CASE("canonical bracket of F with itself vanishes") {
  Expr f = parse("x1*p2 + sin(x2)*p1^2");
  Expr br = canonical_bracket(f, f, CanonicalStructure{2});
  auto res = equal_on_samples(br, Expr::constant(0), SampleDomain{}, 50, 1e-12, 3);
  CHECK(res.equal);
}

TEST_CASE("two-dof closure example") {
  Expr br = canonical_bracket(parse("-x2*p1"), parse("p2"), CanonicalStructure{2});
  auto res = equal_on_samples(br, parse("-p1"), SampleDomain{}, 100, 1e-12, 42);
  CHECK(res.equal);
}

PoissonBivector bivector_A4_1(double c, double d) {
  ParseOptions po;
  po.parameters = {"c", "d"};
  PoissonBivector P(4);
  std::map<std::string, Expr> sub = {{"c", Expr::constant(c)}, {"d", Expr::constant(d)}};
  P.set(1, 2, substitute(parse("-(c/2)*x4^2", po), sub));
  P.set(1, 3, substitute(parse("c*x4", po), sub));
  P.set(1, 4, substitute(parse("-d", po), sub));
  P.set(2, 3, substitute(parse("-c", po), sub));
  return P;
}

TEST_CASE("bivector bracket reproduces its own entries") {
  PoissonBivector P = bivector_A4_1(1.0, 1.0);
  Expr br = bivector_bracket(parse("x1"), parse("x3"), P);
  auto res = equal_on_samples(br, parse("x4"), SampleDomain{}, 100, 1e-12, 5);
  CHECK(res.equal);

  Expr self = bivector_bracket(parse("x2"), parse("x2"), P);
  auto zero = equal_on_samples(self, Expr::constant(0), SampleDomain{}, 20, 1e-15, 5);
  CHECK(zero.equal);

  // consistency for every coordinate pair
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      Expr lhs = bivector_bracket(Expr::variable("x" + std::to_string(mu)),
                                  Expr::variable("x" + std::to_string(nu)), P);
      auto r = equal_on_samples(lhs, P.entry(mu, nu), SampleDomain{}, 25, 1e-12, 6);
      CHECK(r.equal);
    }
}

TEST_CASE("darboux pair of the polynomial group structure") {
  // y1 and y3 at c=d=1 satisfy {y1,y3} = 1 at the catalog's sample point
  const auto& reg = Registry::builtin();
  auto sys = reg.materialize("group/A4_1");
  Expr br = bivector_bracket(sys.darboux[0], sys.darboux[2], *sys.bivector);
  Point at;
  at.vars = {{"x1", 0.3}, {"x2", -1.2}, {"x3", 0.7}, {"x4", 0.5}};
  at.params = sys.params;
  CHECK(std::abs(evaluate(br, at) - 1.0) <= 1e-9);
}

TEST_CASE("jacobi defect of bivectors") {
  // constant bivector: exactly zero
  PoissonBivector C(4);
  C.set(2, 3, Expr::constant(1.0));
  CHECK(bivector_jacobi_defect(C, SampleDomain{}, 50, 42) == 0.0);

  // the polynomial group structure
  CHECK(bivector_jacobi_defect(bivector_A4_1(1.0, 1.0), SampleDomain{}, 100, 42) <=
        1e-12);

  // the trigonometric group structure
  const auto& reg = Registry::builtin();
  auto sys = reg.materialize("group/A4_12");
  CHECK(bivector_jacobi_defect(*sys.bivector, sys.domain, 100, 42, sys.params) <=
        1e-12);
}

TEST_CASE("bracket properties on random expressions") {
  std::mt19937_64 rng(918);
  std::vector<std::string> vars = {"x1", "x2", "p1", "p2"};
  CanonicalStructure s{2};
  SampleDomain dom;

  // Degenerate triples whose bracket is nowhere evaluable (identically zero
  // arguments under abs) are discarded and regenerated.
  int valid = 0;
  for (int i = 0; valid < 200 && i < 600; ++i) {
    Expr F = oracles::random_expr(rng, vars, 3);
    Expr G = oracles::random_expr(rng, vars, 3);
    Expr H = oracles::random_expr(rng, vars, 3);
    unsigned int si = static_cast<unsigned>(i);
    try {
      // antisymmetry
      Expr anti = canonical_bracket(F, G, s) + canonical_bracket(G, F, s);
      bool anti_ok = equal_on_samples(anti, Expr::constant(0), dom, 10, 1e-12,
                                      100u + si, {}, std::vector<std::string>(vars))
                         .equal;
      // Leibniz
      Expr lhs = canonical_bracket(F, G * H, s);
      Expr rhs = canonical_bracket(F, G, s) * H + G * canonical_bracket(F, H, s);
      bool leib_ok = equal_on_samples(lhs, rhs, dom, 10, 1e-10, 200u + si, {},
                                      std::vector<std::string>(vars))
                         .equal;
      ++valid;
      CHECK(anti_ok);
      CHECK(leib_ok);
    } catch (const DomainError&) {
      continue;
    }
  }
  CHECK(valid == 200);

  // Jacobi on polynomial triples
  valid = 0;
  for (int i = 0; valid < 200 && i < 600; ++i) {
    Expr F = oracles::random_expr(rng, vars, 3, true);
    Expr G = oracles::random_expr(rng, vars, 3, true);
    Expr H = oracles::random_expr(rng, vars, 3, true);
    try {
      Expr cyc = canonical_bracket(F, canonical_bracket(G, H, s), s) +
                 canonical_bracket(G, canonical_bracket(H, F, s), s) +
                 canonical_bracket(H, canonical_bracket(F, G, s), s);
      bool jac_ok = equal_on_samples(cyc, Expr::constant(0), dom, 10, 1e-9,
                                     300u + static_cast<unsigned>(i), {},
                                     std::vector<std::string>(vars))
                        .equal;
      ++valid;
      CHECK(jac_ok);
    } catch (const DomainError&) {
      continue;
    }
  }
  CHECK(valid == 200);
}

}  // namespace

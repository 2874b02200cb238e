#include <doctest.h>

#include "hamcat/catalog.hpp"
#include "oracles.hpp"

using namespace hamcat;

TEST_CASE("A4_1 structure constants") {
  const auto& alg = Registry::builtin().algebra("A4_1");
  Point pt;
  CHECK(evaluate(alg.f(2, 4, 1), pt) == 1.0);
  CHECK(evaluate(alg.f(3, 4, 2), pt) == 1.0);
  CHECK(evaluate(alg.f(4, 2, 1), pt) == -1.0);  // antisymmetric partner
  CHECK(evaluate(alg.f(1, 2, 1), pt) == 0.0);
  CHECK(evaluate(alg.f(2, 2, 1), pt) == 0.0);
}

TEST_CASE("A4_9 at b=1") {
  const auto& alg = Registry::builtin().algebra("A4_9");
  Point pt;
  pt.params = {{"b", 1.0}};
  CHECK(evaluate(alg.f(2, 3, 1), pt) == 1.0);
  CHECK(evaluate(alg.f(1, 4, 1), pt) == 2.0);
  CHECK(evaluate(alg.f(2, 4, 2), pt) == 1.0);
  CHECK(evaluate(alg.f(3, 4, 3), pt) == 1.0);
}

TEST_CASE("inadmissible parameters are rejected") {
  const auto& a5 = Registry::builtin().algebra("A4_5");
  CHECK_THROWS_AS(a5.resolve_params({{"a", 0.0}, {"b", 0.5}, {"c", 1.0}}),
                  ConstraintError);
  CHECK_NOTHROW(a5.resolve_params({{"a", -0.5}, {"b", 0.5}, {"c", 1.0}}));
  const auto& a9 = Registry::builtin().algebra("A4_9");
  CHECK_THROWS_AS(a9.resolve_params({{"b", 1.5}}), ConstraintError);
  CHECK_NOTHROW(a9.resolve_params({{"b", -1.0}}));  // boundary is admissible
  CHECK_THROWS_AS(a9.resolve_params({{"q", 1.0}}), ConstraintError);
}

TEST_CASE("constraint language") {
  std::map<std::string, double> p = {{"a", -1.0}, {"b", 0.5}};
  CHECK(constraint_holds("a*b != 0", p));
  CHECK(constraint_holds("abs(a) <= 1", p));
  CHECK(constraint_holds("b > 0 if a == -1", p));
  CHECK_FALSE(constraint_holds("b > 0.6 if a == -1", p));
  CHECK(constraint_holds("b > 0.6 if a == -2", p));  // vacuous
  CHECK(constraint_holds("-1 <= a", p));
  CHECK_FALSE(constraint_holds("a < -1", p));
}

TEST_CASE("jacobi defect vanishes for every catalog algebra") {
  const auto& reg = Registry::builtin();
  // nilpotent case, direct
  CHECK(jacobi_defect(reg.algebra("A4_1"), {}) == 0.0);
  // brute-force oracle over all 256 tuples, all algebras, defaults
  for (const auto& name : reg.algebra_names()) {
    const auto& alg = reg.algebra(name);
    CHECK(jacobi_defect(alg, {}) <= 1e-12);
    CHECK(oracles::brute_jacobi(alg, {}) <= 1e-12);
  }
  // A4_7 exercises the extra [e2,e3]=e1 relation
  CHECK(jacobi_defect(reg.algebra("A4_7"), {}) == 0.0);
  CHECK(jacobi_defect(reg.algebra("A4_12"), {}) == 0.0);
}

TEST_CASE("jacobi defect over admissible parameter samples") {
  const auto& reg = Registry::builtin();
  SampleRng rng(mix_seed(42, "algebra-params"));
  for (const auto& name : reg.algebra_names()) {
    const auto& alg = reg.algebra(name);
    int accepted = 0;
    for (int attempt = 0; attempt < 500 && accepted < 20; ++attempt) {
      std::map<std::string, double> p;
      for (const auto& pn : alg.param_names()) {
        double mag = 0.05 + 1.2 * rng.uniform01();
        p[pn] = rng.uniform01() < 0.5 ? -mag : mag;
      }
      try {
        alg.resolve_params(p);
      } catch (const ConstraintError&) {
        continue;
      }
      ++accepted;
      CHECK(jacobi_defect(alg, p) <= 1e-12);
    }
    CHECK(accepted == 20);
  }
}

TEST_CASE("antisymmetry holds structurally") {
  const auto& reg = Registry::builtin();
  Point pt;
  pt.params = {{"a", 0.7}, {"b", 0.5}, {"c", 2.0}};
  for (const auto& name : reg.algebra_names()) {
    const auto& alg = reg.algebra(name);
    Point p;
    p.params = alg.resolve_params({});
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k)
          CHECK(evaluate(alg.f(i, j, k), p) == -evaluate(alg.f(j, i, k), p));
  }
}

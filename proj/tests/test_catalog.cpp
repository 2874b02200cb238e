#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "hamcat/catalog.hpp"
#include "hamcat/verify.hpp"

using namespace hamcat;

TEST_CASE("listing follows table order and carries the claimed classes") {
  const auto& reg = Registry::builtin();
  auto entries = reg.list();
  CHECK(entries.size() >= 29);

  auto find = [&](const std::string& id) -> const ListEntry* {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  };
  REQUIRE(find("A4_1/R4"));
  CHECK(find("A4_1/R4")->claimed_class == "superintegrable");
  for (int i = 1; i <= 4; ++i) REQUIRE(find("A4_1/R6/" + std::to_string(i)));
  REQUIRE(find("group/A4_2^-1"));
  CHECK(find("group/A4_2^-1")->claimed_class == "maximal");

  int groups = 0;
  for (const auto& e : entries)
    if (glob_match("group/*", e.id)) ++groups;
  CHECK(groups == 7);

  // realization rows: 9 on R4 + 25 on R6
  int r4 = 0, r6 = 0;
  for (const auto& e : entries) {
    if (glob_match("*/R4", e.id)) ++r4;
    if (glob_match("*/R6/*", e.id)) ++r6;
  }
  CHECK(r4 == 9);
  CHECK(r6 == 25);
  CHECK(entries.size() == 41);
}

TEST_CASE("worked R6 realization materializes with the mechanical Hamiltonian") {
  const auto& reg = Registry::builtin();
  auto sys = reg.materialize("A4_1/R6/1");
  CHECK(sys.N == 3);
  auto q = [&](int i) { return sys.Q[static_cast<std::size_t>(i - 1)]; };
  SampleDomain dom;
  CHECK(equal_on_samples(q(1), parse("-p1"), dom, 20, 1e-12, 1).equal);
  CHECK(equal_on_samples(q(4), parse("-x2*p1 - x3*p2"), dom, 20, 1e-12, 1).equal);
  // substituted Hamiltonian is derived from the Q's, not transcribed
  CHECK(equal_on_samples(sys.hamiltonians[0], parse("p2^2 - 2*p1*p3"), dom, 50,
                         1e-12, 2)
            .equal);
}

TEST_CASE("materialization is pure") {
  const auto& reg = Registry::builtin();
  auto a = reg.materialize("A4_4/R4");
  auto b = reg.materialize("A4_4/R4");
  for (int i = 0; i < 4; ++i)
    CHECK(equal_on_samples(a.Q[static_cast<std::size_t>(i)],
                           b.Q[static_cast<std::size_t>(i)], a.domain, 20, 1e-15, 3,
                           a.params)
              .equal);
  CHECK(equal_on_samples(a.hamiltonians[0], b.hamiltonians[0], a.domain, 20, 1e-15, 3,
                         a.params)
            .equal);
}

TEST_CASE("the degenerate Casimir of the first R4 row substitutes to zero") {
  const auto& reg = Registry::builtin();
  auto sys = reg.materialize("A4_1/R4");
  ParseOptions po;
  po.extra_variables = {"Q1", "Q2", "Q3", "Q4"};
  Expr casimir = parse("Q2^2 - 2*Q1*Q3", po);
  Expr subst = substitute(casimir, {{"Q1", sys.Q[0]},
                                    {"Q2", sys.Q[1]},
                                    {"Q3", sys.Q[2]},
                                    {"Q4", sys.Q[3]}});
  CHECK(equal_on_samples(subst, Expr::constant(0), sys.domain, 50, 1e-12, 4).equal);
}

TEST_CASE("as-printed and curated variants differ exactly where stated") {
  const auto& reg = Registry::builtin();
  auto curated = reg.materialize("A4_3/R4");
  auto printed = reg.materialize("A4_3/R4", {}, Variant::AsPrinted);
  SampleDomain dom = curated.domain;
  CHECK(equal_on_samples(curated.Q[1], parse("-x2*p1"), dom, 20, 1e-12, 5).equal);
  CHECK(equal_on_samples(printed.Q[1], parse("-x2*p2"), dom, 20, 1e-12, 5).equal);
  // Q1, Q3, Q4 agree between the variants
  for (int i : {0, 2, 3})
    CHECK(equal_on_samples(curated.Q[static_cast<std::size_t>(i)],
                           printed.Q[static_cast<std::size_t>(i)], dom, 20, 1e-12, 5)
              .equal);
}

TEST_CASE("group system materializes its stated bivector") {
  const auto& reg = Registry::builtin();
  auto sys = reg.materialize("group/A4_6^{a,0}", {{"a", 1.0}, {"c", 1.0}, {"d", 1.0}});
  REQUIRE(sys.bivector);
  SampleDomain dom = sys.domain;
  CHECK(equal_on_samples(sys.bivector->entry(1, 4), parse("exp(-x4)"), dom, 30, 1e-12,
                         6, sys.params)
            .equal);
  CHECK(equal_on_samples(sys.bivector->entry(2, 3), Expr::constant(1), dom, 30, 1e-12,
                         6, sys.params)
            .equal);
  CHECK(equal_on_samples(sys.bivector->entry(3, 2), Expr::constant(-1), dom, 30,
                         1e-12, 6, sys.params)
            .equal);
}

TEST_CASE("errors: unknown ids, inadmissible and unknown parameters") {
  const auto& reg = Registry::builtin();
  CHECK_THROWS_AS(reg.materialize("nope/such"), CatalogError);
  CHECK_THROWS_AS(reg.materialize("group/A4_1", {{"c", 0.0}}), ConstraintError);
  CHECK_THROWS_AS(reg.materialize("group/A4_1", {{"zeta", 1.0}}), ConstraintError);
  CHECK_THROWS_AS(reg.materialize("A4_5/R4", {{"a", 0.7}, {"b", 0.5}}),
                  ConstraintError);  // a < b violated
}

// Every group-coordinate generator must equal the R4 realization composed
// with the Darboux map (x1,x2,p1,p2) -> (y1,y2,y3,y4).  This pins down the
// curated forms independently of the printed group formulas.
TEST_CASE("group generators are the Darboux composition of the R4 realizations") {
  const auto& reg = Registry::builtin();
  struct Row {
    const char* group;
    const char* r4;
    std::map<std::string, double> r4_params;
  };
  const std::vector<Row> rows = {
      {"group/A4_1", "A4_1/R4", {}},
      {"group/A4_2^-1", "A4_2^-1/R4", {}},
      {"group/A4_3", "A4_3/R4", {}},
      {"group/A4_6^{a,0}", "A4_6/R4", {{"a", 1.0}, {"b", 0.0}}},
      {"group/A4_7", "A4_7/R4", {}},
      {"group/A4_9^1", "A4_9/R4", {{"b", 1.0}}},
      {"group/A4_12", "A4_12/R4", {}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.group);
    auto g = reg.materialize(row.group);
    auto r = reg.materialize(row.r4, row.r4_params);
    REQUIRE(g.darboux.size() == 4);
    std::map<std::string, Expr> sub = {{"x1", g.darboux[0]},
                                       {"x2", g.darboux[1]},
                                       {"p1", g.darboux[2]},
                                       {"p2", g.darboux[3]}};
    std::map<std::string, double> params = g.params;
    params.insert(r.params.begin(), r.params.end());
    for (int i = 0; i < 4; ++i) {
      Expr composed = substitute(r.Q[static_cast<std::size_t>(i)], sub);
      auto res = equal_on_samples(composed, g.Q[static_cast<std::size_t>(i)], g.domain,
                                  50, 1e-9, 70u + static_cast<unsigned>(i), params,
                                  g.phase_vars);
      CAPTURE(i);
      CHECK(res.equal);
    }
  }
}

TEST_CASE("user catalog files: round trip, reproduction, and validation") {
  const char* minimal = R"({
    "systems": [
      {"id": "user/min", "kind": "realization", "algebra": "A4_1", "N": 3,
       "Q": ["-p1", "-p2", "-p3", "-x2*p1 - x3*p2"],
       "H": [{"casimir": "Q2^2 - 2*Q1*Q3"}],
       "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
       "claimed_class": "superintegrable", "casimir_h": true}
    ]})";

  Registry reg = Registry::builtin();
  reg.load_json_text(minimal, "test");
  CHECK(reg.has("user/min"));
  CHECK(reg.list().size() == 42);

  // the duplicate reproduces the built-in verification results exactly
  VerifyOptions opt;
  auto mine = verify_system(reg, "user/min", {}, opt);
  auto ref = verify_system(reg, "A4_1/R6/1", {}, opt);
  REQUIRE(mine.checks.size() <= ref.checks.size());
  for (const auto& c : mine.checks) {
    bool found = false;
    for (const auto& rc : ref.checks)
      if (rc.name == c.name) {
        found = true;
        CHECK(rc.residual == c.residual);
        CHECK(rc.pass == c.pass);
      }
    CHECK(found);
  }
  CHECK(mine.k == ref.k);
  CHECK(mine.class_computed == ref.class_computed);

  // id collision
  CHECK_THROWS_AS(reg.load_json_text(minimal, "test"), CatalogError);

  // non-antisymmetric bivector
  const char* bad_bivector = R"({
    "systems": [
      {"id": "user/bad", "kind": "group", "algebra": "A4_1", "N": 2,
       "Q": ["x1", "x2", "x3", "x4"],
       "H": [{"casimir": "Q1"}],
       "bivector": [[1,2,"x1"],[2,1,"x1"]]}
    ]})";
  CHECK_THROWS_WITH_AS(reg.load_json_text(bad_bivector, "test"),
                       doctest::Contains("not antisymmetric"), CatalogError);

  // formula errors carry a JSON-pointer-ish path
  const char* bad_formula = R"({
    "systems": [
      {"id": "user/badformula", "kind": "realization", "algebra": "A4_1", "N": 2,
       "Q": ["-p1", "-x2*p1", "oops7", "p2"],
       "H": [{"casimir": "Q1"}]}
    ]})";
  CHECK_THROWS_WITH_AS(reg.load_json_text(bad_formula, "test"),
                       doctest::Contains("/systems/0/Q/2"), CatalogError);
}

TEST_CASE("glob matching") {
  CHECK(glob_match("group/*", "group/A4_1"));
  CHECK_FALSE(glob_match("group/*", "A4_1/R4"));
  CHECK(glob_match("A4_?/R6/*", "A4_1/R6/2"));
  CHECK(glob_match("*", "anything"));
  CHECK(glob_match("group/A4_6^{a,0}", "group/A4_6^{a,0}"));
  CHECK_FALSE(glob_match("nope*", "group/A4_1"));
}

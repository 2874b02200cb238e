#include "hamcat/catalog.hpp"

// The built-in catalog: nine four-dimensional real Lie algebras, the
// realization systems on R^4 and R^6, and the seven group-manifold systems.
// Curated formulas are the ones that verify; where the source text differs,
// the stated form is kept under "as_printed"/"printed" and the finding is
// recorded in "errata".

namespace hamcat {

const char* builtin_catalog_json() {
  return R"cat({
  "algebras": [
    {"name": "A4_1", "params": {},
     "relations": [[2,4,{"1":"1"}], [3,4,{"2":"1"}]]},
    {"name": "A4_2", "params": {"b": 1}, "constraints": ["b != 0"],
     "relations": [[1,4,{"1":"b"}], [2,4,{"2":"1"}], [3,4,{"2":"1","3":"1"}]]},
    {"name": "A4_3", "params": {},
     "relations": [[1,4,{"1":"1"}], [3,4,{"2":"1"}]]},
    {"name": "A4_4", "params": {},
     "relations": [[1,4,{"1":"1"}], [2,4,{"1":"1","2":"1"}], [3,4,{"2":"1","3":"1"}]]},
    {"name": "A4_5", "params": {"a": 1, "b": 1, "c": 1}, "constraints": ["a*b*c != 0"],
     "relations": [[1,4,{"1":"a"}], [2,4,{"2":"b"}], [3,4,{"3":"c"}]]},
    {"name": "A4_6", "params": {"a": 1, "b": 1}, "constraints": ["a != 0", "b >= 0"],
     "relations": [[1,4,{"1":"a"}], [2,4,{"2":"b","3":"-1"}], [3,4,{"2":"1","3":"b"}]]},
    {"name": "A4_7", "params": {},
     "relations": [[1,4,{"1":"2"}], [2,4,{"2":"1"}], [3,4,{"2":"1","3":"1"}], [2,3,{"1":"1"}]]},
    {"name": "A4_9", "params": {"b": 1}, "constraints": ["abs(b) <= 1"],
     "relations": [[2,3,{"1":"1"}], [1,4,{"1":"1 + b"}], [2,4,{"2":"1"}], [3,4,{"3":"b"}]]},
    {"name": "A4_12", "params": {},
     "relations": [[1,3,{"1":"1"}], [2,3,{"2":"1"}], [1,4,{"2":"-1"}], [2,4,{"1":"1"}]]}
  ],
  "systems": [

    {"id": "A4_1/R4", "kind": "realization", "algebra": "A4_1", "N": 2,
     "Q": ["-p1", "-x2*p1", "-(x2^2/2)*p1", "p2"],
     "H": [{"casimir": "Q1", "printed": ["-p1"]}],
     "core": ["H", "Q2"], "extra": ["Q3"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "notes": ["the Casimir form Q2^2-2*Q1*Q3 substitutes to zero under this realization; the explicit H=Q1 from the table is kept and the degeneracy recorded"]},

    {"id": "A4_2^-1/R4", "kind": "realization", "algebra": "A4_2",
     "algebra_params": {"b": "-1"}, "N": 2,
     "Q": ["-p1", "-x2*p1", "-(x2/2)*ln(abs(x2))*p1", "x1*p1 + 2*x2*p2"],
     "H": [{"casimir": "1/(Q1*Q2)", "printed": ["1/(x2*p1^2)"]},
           {"casimir": "Q2*exp(-(Q3/Q2))", "printed": ["-x2^(1/2)*p1"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"x2": [[0.1, 2.0]]}},

    {"id": "A4_3/R4", "kind": "realization", "algebra": "A4_3", "N": 2,
     "Q": ["-p1", "-x2*p1", "x2*ln(abs(x2))*p1", "-x1*p1 - x2*p2"],
     "as_printed": {"Q": {"2": "-x2*p2"}},
     "H": [{"casimir": "Q1*exp(-(Q3/Q2))", "printed": ["-x2*p1"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"x2": [[0.1, 2.0]]},
     "errata": ["as-printed Q2=-x2*p2 fails closure: {Q3,Q4} evaluates to -x2*p1, forcing the curated Q2=-x2*p1"]},

    {"id": "A4_4/R4", "kind": "realization", "algebra": "A4_4", "N": 2,
     "Q": ["-p1", "-x2*p1", "-(1/2)*x2^2*p1", "-x1*p1 + p2"],
     "H": [{"casimir": "Q1*exp(-(Q2/Q1))", "printed": ["-exp(x2)*p1"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "errata": ["as-printed substituted Hamiltonian -exp(x2)*p1 fails h_substitution; the Q-substitution gives -exp(-x2)*p1"]},

    {"id": "A4_5/R4", "kind": "realization", "algebra": "A4_5",
     "algebra_params": {"a": "a", "b": "b", "c": "1"}, "N": 2,
     "defaults": {"a": -0.5, "b": 0.5},
     "constraints": ["-1 <= a", "a < b", "b < 1", "b > 0 if a == -1", "a != 0", "b != 0"],
     "Q": ["-p1", "-exp((a - b)*x2)*p1", "-exp((a - 1)*x2)*p1", "-a*x1*p1 - p2"],
     "H": [{"casimir": "Q1^b/Q2", "printed": ["p1^(b - 1)/exp((b - a)*x2)"]},
           {"casimir": "Q1/Q3", "printed": ["p1^(b - 1)/exp((a - 1)*x2)"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "superintegrable", "casimir_h": false,
     "domain": {"p1": [[-2.0, -0.1]]},
     "errata": ["as-printed substituted Hamiltonian p1^(b-1)/exp((b-a)*x2) fails h_substitution: the Q-substitution gives (-p1)^(b-1)*exp((b-a)*x2)",
                "the second Hamiltonian is printed as Q1^b/Q2 with substitution p1^(b-1)/exp((a-1)*x2); the exponent pattern matches Q1/Q3 at c=1, which is the curated Casimir form",
                "the printed Hamiltonians commute with the listed invariants but not with Q4 for any admissible (a,b); casimir_all_q is not applicable"]},

    {"id": "A4_6/R4", "kind": "realization", "algebra": "A4_6",
     "algebra_params": {"a": "a", "b": "b"}, "N": 2,
     "defaults": {"a": 1, "b": 1},
     "Q": ["-p1", "-exp((a - b)*x2)*cos(x2)*p1", "exp((a - b)*x2)*sin(x2)*p1", "-a*x1*p1 - p2"],
     "H": [{"casimir": "Q1^(2*b/a)/(Q2^2 + Q3^2)",
            "printed": ["(-(p1^(2*b/a)) - 2)/(2*exp(2*(a - b)*x2)*p1)"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.1]]},
     "errata": ["the printed substituted Hamiltonian (-(p1^(2b/a))-2)/(2*exp(2(a-b)x2)*p1) appears garbled in the source and fails h_substitution against the Q-substitution"]},

    {"id": "A4_7/R4", "kind": "realization", "algebra": "A4_7", "N": 2,
     "Q": ["-p1", "-x2*p1", "p2", "-(2*x1 - (1/2)*x2^2)*p1 - x2*p2"],
     "H": [{"casimir": "Q2", "printed": ["-x2*p1"]}],
     "core": ["H", "Q1"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "notes": ["H is a generator of the algebra rather than a Casimir; only the listed invariants commute with it"]},

    {"id": "A4_9/R4", "kind": "realization", "algebra": "A4_9",
     "algebra_params": {"b": "b"}, "N": 2,
     "defaults": {"b": 1},
     "Q": ["-p1", "-p2", "-x2*p1", "-(1 + b)*x1*p1 - x2*p2"],
     "H": [{"casimir": "Q1", "printed": ["-p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "notes": ["H is a generator of the algebra rather than a Casimir; only the listed invariants commute with it"]},

    {"id": "A4_12/R4", "kind": "realization", "algebra": "A4_12", "N": 2,
     "Q": ["-p1", "-x2*p1", "-x1*p1", "x1*x2*p1 + (1 + x2^2)*p2"],
     "H": [{"casimir": "Q2", "printed": ["-x2*p1"]}],
     "core": ["H", "Q1"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "notes": ["H is a generator of the algebra rather than a Casimir; only the listed invariants commute with it"]},

    {"id": "A4_1/R6/1", "kind": "realization", "algebra": "A4_1", "N": 3,
     "Q": ["-p1", "-p2", "-p3", "-x2*p1 - x3*p2"],
     "H": [{"casimir": "Q2^2 - 2*Q1*Q3", "printed": ["p2^2 - 2*p1*p2", "p2^2 - p1*p3"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "errata": ["as-printed substituted Hamiltonians p2^2-2*p1*p2 (worked example) and p2^2-p1*p3 (table row) both fail h_substitution against the Q-substitution p2^2-2*p1*p3"]},

    {"id": "A4_1/R6/2", "kind": "realization", "algebra": "A4_1", "N": 3,
     "Q": ["-p1", "-p2", "(1/2)*x3^2*p1 - x3*p2", "-x2*p1 + p3"],
     "H": [{"casimir": "Q2^2 - 2*Q1*Q3",
            "printed": ["p2^2 + (1/2)*x3^2*p1^2 - x3*p1*p2"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "errata": ["as-printed substituted Hamiltonian p2^2+(1/2)*x3^2*p1^2-x3*p1*p2 fails h_substitution; the Q-substitution gives p2^2+x3^2*p1^2-2*x3*p1*p2"]},

    {"id": "A4_1/R6/3", "kind": "realization", "algebra": "A4_1", "N": 3,
     "Q": ["-p1", "-x2*p1", "-p3", "-x2*x3*p1 + p2"],
     "H": [{"casimir": "Q2^2 - 2*Q1*Q3", "printed": ["x2^2*p1^2 - 2*p1*p3"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true},

    {"id": "A4_1/R6/4", "kind": "realization", "algebra": "A4_1", "N": 3,
     "Q": ["-p1", "-x2*p1", "-x3*p1", "p2 + x2*p3"],
     "H": [{"casimir": "Q2^2 - 2*Q1*Q3", "printed": ["(x2^2 - 2*x3)*p1^2"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true},

    {"id": "A4_2/R6/1", "kind": "realization", "algebra": "A4_2",
     "algebra_params": {"b": "b"}, "N": 3, "defaults": {"b": 1},
     "Q": ["-p1", "-p2", "-p3", "-b*x1*p1 - (x2 + x3)*p2 - x3*p3"],
     "H": [{"casimir": "Q2*exp(-(Q3/Q2))", "printed": ["-p2*exp(-(p3/p2))"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p2": [[-2.0, -0.2], [0.2, 2.0]]}},

    {"id": "A4_2/R6/2", "kind": "realization", "algebra": "A4_2",
     "algebra_params": {"b": "b"}, "N": 3, "defaults": {"b": 1},
     "Q": ["-p1", "-p2", "-x3*p2", "-b*x1*p1 - x2*p2 + p3"],
     "H": [{"casimir": "Q2*exp(-(Q3/Q2))", "printed": ["-p2*exp(-x3)"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true},

    {"id": "A4_2/R6/3", "kind": "realization", "algebra": "A4_2",
     "algebra_params": {"b": "b"}, "N": 3, "defaults": {"b": 1},
     "Q": ["-p1", "-x2*p1", "-x3*p1", "-b*x1*p1 - (b - 1)*x2*p2 - ((b - 1)*x3 - x2)*p3"],
     "H": [{"casimir": "Q2*exp(-(Q3/Q2))", "printed": ["-x2*p1*exp(-(x3/x2))"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"x2": [[-2.0, -0.2], [0.2, 2.0]]}},

    {"id": "A4_3/R6/1", "kind": "realization", "algebra": "A4_3", "N": 3,
     "Q": ["-p1", "-p2", "-p3", "-x1*p1 - x3*p2"],
     "H": [{"casimir": "Q1*exp(-(Q3/Q2))", "printed": ["-p1*exp(-(p3/p2))"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p2": [[-2.0, -0.2], [0.2, 2.0]]}},

    {"id": "A4_3/R6/2", "kind": "realization", "algebra": "A4_3", "N": 3,
     "Q": ["-p1", "-x2*p1", "-p3", "-(x1 + x2*x3)*p1 - x2*p2"],
     "H": [{"casimir": "Q1*exp(-(Q3/Q2))", "printed": ["-p1*exp(-(p3/(x2*p1)))"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"x2": [[-2.0, -0.45], [0.45, 2.0]], "p1": [[-2.0, -0.45], [0.45, 2.0]]}},

    {"id": "A4_3/R6/3", "kind": "realization", "algebra": "A4_3", "N": 3,
     "Q": ["-p1", "-x2*p1", "-x3*p1", "-x1*p1 - x2*p2 - (x3 - x2)*p3"],
     "H": [{"casimir": "Q1*exp(-(Q3/Q2))", "printed": ["-p1*exp(-(x3/x2))"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"x2": [[-2.0, -0.2], [0.2, 2.0]]}},

    {"id": "A4_4/R6/1", "kind": "realization", "algebra": "A4_4", "N": 3,
     "Q": ["-p1", "-p2", "-p3", "-(x1 + x2)*p1 - (x2 + x3)*p2 - x3*p3"],
     "H": [{"casimir": "Q1*exp(-(Q2/Q1))", "printed": ["-p1*exp(-(p2/p1))"]},
           {"casimir": "(2*Q1*Q3 - Q2^2)/Q1^2", "printed": ["(2*p1*p3 - p2^2)/p1^2"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.2], [0.2, 2.0]]}},

    {"id": "A4_4/R6/2", "kind": "realization", "algebra": "A4_4", "N": 3,
     "Q": ["-p1", "-p2", "(1/2)*x3^2*p1 - x3*p2", "-(x1 + x2)*p1 - x2*p2 + p3"],
     "H": [{"casimir": "Q1*exp(-(Q2/Q1))", "printed": ["-p1*exp(-(p2/p1))"]},
           {"casimir": "(2*Q1*Q3 - Q2^2)/Q1^2",
            "printed": ["(-x3^2*p1^2 + 2*x3*p1*p2 - p2^2)/p1^2"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.2], [0.2, 2.0]]}},

    {"id": "A4_4/R6/3", "kind": "realization", "algebra": "A4_4", "N": 3,
     "Q": ["-p1", "-x2*p1", "-x3*p1", "-x1*p1 + p2 + x2*p3"],
     "H": [{"casimir": "Q1*exp(-(Q2/Q1))", "printed": ["-p1*exp(-(x3/x2))"]},
           {"casimir": "(2*Q1*Q3 - Q2^2)/Q1^2", "printed": ["2*x3 - x2^2"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"x2": [[-2.0, -0.2], [0.2, 2.0]]},
     "errata": ["as-printed substituted Hamiltonian -p1*exp(-x3/x2) fails h_substitution; the Q-substitution of Q1*exp(-(Q2/Q1)) gives -p1*exp(-x2)"]},

    {"id": "A4_5/R6/1", "kind": "realization", "algebra": "A4_5",
     "algebra_params": {"a": "a", "b": "b", "c": "c"}, "N": 3,
     "defaults": {"a": 1, "b": 1, "c": 1},
     "Q": ["-p1", "-p2", "-p3", "-a*x1*p1 - b*x2*p2 - c*x3*p3"],
     "H": [{"casimir": "Q1^b/Q2", "printed": ["(-p1)^b/p2"]},
           {"casimir": "Q1^c/Q3", "printed": ["(-p1)^c/p3"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.1]]},
     "errata": ["as-printed substituted Hamiltonians (-p1)^b/p2 and (-p1)^c/p3 fail h_substitution by an overall sign; the Q-substitutions give (-p1)^b/(-p2) and (-p1)^c/(-p3)"]},

    {"id": "A4_5/R6/2", "kind": "realization", "algebra": "A4_5",
     "algebra_params": {"a": "a", "b": "b", "c": "c"}, "N": 3,
     "defaults": {"a": 1, "b": 1, "c": 1},
     "Q": ["-p1", "-x2*p1", "-x3*p1", "-a*x1*p1 - (a - b)*x2*p2 - (a - c)*x3*p3"],
     "H": [{"casimir": "Q1^b/Q2", "printed": ["(-p1)^(b - 1)/x2"]},
           {"casimir": "Q1^c/Q3", "printed": ["(-p1)^(c - 1)/x3"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.1]]},
     "errata": ["the row prints H=-Q1^b/Q2 whose own substitution (-p1)^(b-1)/x2 matches +Q1^b/Q2; the sign is dropped in the curated Casimir form"]},

    {"id": "A4_5/R6/3", "kind": "realization", "algebra": "A4_5",
     "algebra_params": {"a": "1", "b": "1", "c": "c"}, "N": 3,
     "defaults": {"c": 2}, "constraints": ["c != 0", "c != 1"],
     "Q": ["-p1", "-x2*p1", "-p3", "-x1*p1 - c*x3*p3"],
     "H": [{"casimir": "Q1/Q2", "printed": ["1/x2"]},
           {"casimir": "Q1^c/Q3", "printed": ["(-p1)^c/(-p3)"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.1]]},
     "notes": ["the source gives no default for c beyond c != 1; 2 is used"]},

    {"id": "A4_5/R6/4", "kind": "realization", "algebra": "A4_5",
     "algebra_params": {"a": "a", "b": "b", "c": "1"}, "N": 3,
     "defaults": {"a": -0.5, "b": 0.5},
     "constraints": ["-1 <= a", "a < b", "b < 1", "b > 0 if a == -1", "a != 0", "b != 0"],
     "Q": ["-p1", "-x2*p1", "-p3", "-a*x1*p1 - (a - b)*x2*p2 - x3*p3"],
     "H": [{"casimir": "Q1^b/Q2", "printed": ["(-p1)^(b - 1)/x2"]},
           {"casimir": "Q1/Q3", "printed": ["p1/p3"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": false,
     "domain": {"p1": [[-2.0, -0.1]]},
     "errata": ["the printed Hamiltonians commute with the listed invariants but not with Q4 for any admissible (a,b) with a<1; casimir_all_q is not applicable"]},

    {"id": "A4_6/R6/1", "kind": "realization", "algebra": "A4_6",
     "algebra_params": {"a": "a", "b": "b"}, "N": 3,
     "defaults": {"a": 1, "b": 1}, "constraints": ["a > 0"],
     "Q": ["-p1", "-p2", "-p3", "-a*x1*p1 - (b*x2 + x3)*p2 - (-x2 + b*x3)*p3"],
     "H": [{"casimir": "Q1^(2*b/a)/(Q2^2 + Q3^2)",
            "printed": ["(-p1)^(2*b/a)/(p2^2 + p3^2)"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.1]]}},

    {"id": "A4_6/R6/2", "kind": "realization", "algebra": "A4_6",
     "algebra_params": {"a": "a", "b": "b"}, "N": 3,
     "defaults": {"a": 1, "b": 1}, "constraints": ["a > 0"],
     "Q": ["-p1", "-x2*p1", "-x3*p1",
           "-a*x1*p1 - ((a - b)*x2 + x3)*p2 - (-x2 + (a - b)*x3)*p3"],
     "as_printed": {"Q": {"4": "-a*x1*p1 - ((a - b)*x2 + x3)*p2 - (-x2 + (a - c)*x3)*p3"},
                    "params": {"c": 1}},
     "H": [{"casimir": "Q1^(2*b/a)/(Q2^2 + Q3^2)",
            "printed": ["(-p1)^(2*(b - a)/a)/(x2^2 + x3^2)"]}],
     "core": ["Q1", "Q2", "Q3"], "extra": ["H"],
     "claimed_class": "superintegrable", "casimir_h": true,
     "domain": {"p1": [[-2.0, -0.1]]},
     "errata": ["the printed Q4 contains (a-c)*x3*p3 with undeclared c; the curated entry uses (a-b), the as-printed one keeps c as a parameter defaulting to 1"]},

    {"id": "A4_9/R6/1", "kind": "realization", "algebra": "A4_9",
     "algebra_params": {"b": "b"}, "N": 3, "defaults": {"b": 1},
     "Q": ["-p1", "-p2", "-x2*p1 - p3", "-(1 + b)*x1*p1 - x2*p2 - b*x3*p3"],
     "H": [{"casimir": "Q1", "printed": ["p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["as-printed substituted Hamiltonian p1 fails h_substitution; Q1 substitutes to -p1"],
     "notes": ["only (H,Q2) are listed for N=3; the involutive core is smaller than N"]},

    {"id": "A4_9/R6/2", "kind": "realization", "algebra": "A4_9",
     "algebra_params": {"b": "b"}, "N": 3, "defaults": {"b": 1},
     "Q": ["-p1", "-p2", "-x2*p1 - x3*p2", "-(1 + b)*x1*p1 - x2*p2 - (1 - b)*x3*p3"],
     "H": [{"casimir": "Q1", "printed": ["p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["as-printed substituted Hamiltonian p1 fails h_substitution; Q1 substitutes to -p1"],
     "notes": ["only (H,Q2) are listed for N=3; the involutive core is smaller than N"]},

    {"id": "A4_9/R6/3", "kind": "realization", "algebra": "A4_9",
     "algebra_params": {"b": "b"}, "N": 3, "defaults": {"b": 1},
     "Q": ["-p1", "-p2", "-x2*p1", "-(1 + b)*x1*p1 - x2*p2 - p3"],
     "H": [{"casimir": "Q1", "printed": ["p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["as-printed substituted Hamiltonian p1 fails h_substitution; Q1 substitutes to -p1"],
     "notes": ["only (H,Q2) are listed for N=3; the involutive core is smaller than N"]},

    {"id": "A4_12/R6/1", "kind": "realization", "algebra": "A4_12", "N": 3,
     "defaults": {"C": 1},
     "Q": ["-p1", "-p2", "-x1*p1 - x2*p2 - p3", "-x2*p1 + x1*p2 - C*p3"],
     "H": [{"casimir": "Q1", "printed": ["p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["as-printed substituted Hamiltonian p1 fails h_substitution; Q1 substitutes to -p1"],
     "notes": ["the printed Q4 carries -C*p3 with undeclared C; C is stored as a parameter defaulting to 1 (closure holds for every C)",
               "only (H,Q2) are listed for N=3; the involutive core is smaller than N"]},

    {"id": "A4_12/R6/2", "kind": "realization", "algebra": "A4_12", "N": 3,
     "Q": ["-p1", "-x2*p1", "-x1*p1 - p3", "x1*x2*p1 + (1 + x2^2)*p2"],
     "H": [{"casimir": "Q1", "printed": ["p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["as-printed substituted Hamiltonian p1 fails h_substitution; Q1 substitutes to -p1"],
     "notes": ["only (H,Q2) are listed for N=3; the involutive core is smaller than N"]},

    {"id": "A4_12/R6/3", "kind": "realization", "algebra": "A4_12", "N": 3,
     "Q": ["-p1", "-p2", "-x1*p1 - x2*p2", "-x2*p1 + x1*p2 - p3"],
     "H": [{"casimir": "Q1", "printed": ["p1"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["as-printed substituted Hamiltonian p1 fails h_substitution; Q1 substitutes to -p1"],
     "notes": ["only (H,Q2) are listed for N=3; the involutive core is smaller than N"]},

    {"id": "group/A4_1", "kind": "group", "algebra": "A4_1", "N": 2,
     "defaults": {"c": 1, "d": 1}, "constraints": ["c != 0", "d != 0"],
     "bivector": [[1,2,"-(c/2)*x4^2"], [1,3,"c*x4"], [1,4,"-d"], [2,3,"-c"]],
     "darboux": ["x3/c + c*x4^2/8 + x4^2/(2*d)",
                 "-x1 + x3^2/c^2 + (1/4)*c*d*x2*x4 - x3*x4^2/4 + x3*x4^2/(c*d) - 3*c^2*x4^4/64 + x4^4/(4*d^2) - c*x4^4/(8*d)",
                 "x2 - 2*x3*x4/(c*d) - x4^3/d^2 - c*x4^3/(4*d)",
                 "x4/d"],
     "pairing": [[1,3],[2,4]],
     "Q": ["-x2 + 2*x3*x4/(c*d) + x4^3/d^2 + c*x4^3/(4*d)",
           "(x1 - x3^2/c^2 - (1/4)*c*d*x2*x4 + x3*x4^2/4 - x3*x4^2/(c*d) + 3*c^2*x4^4/64 - x4^4/(4*d^2) + c*x4^4/(8*d))*(x2 - (8*d*x3*x4 + 4*c*x4^3 + c^2*d*x4^3)/(4*c*d^2))",
           "-(1/2)*(-x1 + x3^2/c^2 + (1/4)*c*d*x2*x4 - x3*x4^2/4 + x3*x4^2/(c*d) - 3*c^2*x4^4/64 + x4^4/(4*d^2) - c*x4^4/(8*d))^2*(x2 - (8*d*x3*x4 + 4*c*x4^3 + c^2*d*x4^3)/(4*c*d^2))",
           "x4/d"],
     "H": [{"casimir": "Q1",
            "printed": ["-x2 + 2*x3*x4/(c*d) + x4^3/d^2 + c*x4^3/(4*d)"]}],
     "core": ["H", "Q2"], "extra": ["Q3"],
     "claimed_class": "superintegrable", "casimir_h": true},

    {"id": "group/A4_2^-1", "kind": "group", "algebra": "A4_2",
     "algebra_params": {"b": "-1"}, "N": 2,
     "defaults": {"a": 1, "b": 1}, "constraints": ["a != 0", "b != 0"],
     "bivector": [[1,2,"2*a"], [1,3,"-a"], [2,4,"b*exp(-x4)"]],
     "darboux": ["-exp(x4)/b + x3",
                 "(-2*a*exp(x4) - b*x1 + a*b*x2)/(a*b^2)",
                 "2*exp(x4)/b + x1/a",
                 "exp(x4)"],
     "pairing": [[1,3],[2,4]],
     "Q": ["-2*exp(x4)/b - x1/a",
           "-(((-2*a*exp(x4) - b*x1 + a*b*x2)/(a*b^2))*(2*exp(x4)/b + x1/a))",
           "-(1/2)*((-2*a*exp(x4) - b*x1 + a*b*x2)/(a*b^2))*(2*exp(x4)/b + x1/a)*ln(abs((-2*a*exp(x4) - b*x1 + a*b*x2)/(a*b^2)))",
           "2*exp(x4)*((-2*a*exp(x4) - b*x1 + a*b*x2)/(a*b^2)) + (-exp(x4)/b + x3)*(2*exp(x4)/b + x1/a)"],
     "H": [{"casimir": "1/(Q1*Q2)",
            "printed": ["1/((2*exp(x4)/b + x1/a)^2*((-2*a*exp(x4) - b*x1 + a*b*x2)/(a*b^2)))"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "maximal", "casimir_h": true,
     "domain": {"x1": [[0.1, 2.0]], "x4": [[0.1, 2.0]]},
     "notes": ["the structure constants a,b here are the bivector coefficients, distinct from the algebra parameter fixed at -1"]},

    {"id": "group/A4_3", "kind": "group", "algebra": "A4_3", "N": 2,
     "defaults": {"c": 1, "d": 1, "h": 1, "f": 1},
     "constraints": ["c != 0", "d != 0", "h != 0", "f != 0"],
     "bivector": [[1,2,"c*x4*exp(-x4)"], [1,3,"d*exp(-x4)"], [1,4,"h*exp(-x4)"], [2,3,"f"]],
     "darboux": ["d*x2/f + c*h*x3^2/(2*d*f) - c*x3*x4/f",
                 "x1/h - d*exp(-x4)*x2/(f*h) - c*exp(-x4)*x3^2/(2*d*f) + c*exp(-x4)*x3*x4/(f*h)",
                 "x3/d",
                 "exp(x4)"],
     "pairing": [[1,3],[2,4]],
     "Q": ["-x3/d",
           "(x3/d)*(-x1/h + d*exp(-x4)*x2/(f*h) + c*exp(-x4)*x3^2/(2*d*f) - c*exp(-x4)*x3*x4/(f*h))",
           "(x3/d)*(x1/h - d*exp(-x4)*x2/(f*h) - c*exp(-x4)*x3^2/(2*d*f) + c*exp(-x4)*x3*x4/(f*h))*ln(abs(x1/h - d*exp(-x4)*x2/(f*h) - c*exp(-x4)*x3^2/(2*d*f) + c*exp(-x4)*x3*x4/(f*h)))",
           "-exp(x4)*x1/h + (d - h*x3)*(2*d^2*x2 + c*h*x3^2 - 2*c*d*x3*x4)/(2*d^2*h*f)"],
     "H": [{"casimir": "Q1*exp(-(Q3/Q2))",
            "printed": ["exp(-x4)*x3*(c*h*x3^2 - 2*d*(f*exp(x4)*x1 - d*x2 + c*x3*x4))/(2*d^2*f*h)"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "maximal", "casimir_h": true,
     "domain": {"x1": [[0.1, 2.0]], "x2": [[-2.0, -0.1]], "x3": [[0.1, 0.6]], "x4": [[1.0, 2.0]]}},

    {"id": "group/A4_6^{a,0}", "kind": "group", "algebra": "A4_6",
     "algebra_params": {"a": "a", "b": "0"}, "N": 2,
     "defaults": {"a": 1, "c": 1, "d": 1},
     "constraints": ["a != 0", "c != 0", "d != 0"],
     "bivector": [[1,4,"d*exp(-a*x4)"], [2,3,"c"]],
     "darboux": ["x3", "-exp(2*a*x4)*x1/(a*d)", "-x2/c", "exp(-a*x4)"],
     "pairing": [[1,3],[2,4]],
     "Q": ["x2/c",
           "exp(-(exp(2*a*x4)*x1/d))*x2*cos(exp(2*a*x4)*x1/(a*d))/c",
           "exp(-(exp(2*a*x4)*x1/d))*x2*sin(exp(2*a*x4)*x1/(a*d))/c",
           "-exp(-a*x4) + (a/c)*x2*x3"],
     "H": [{"casimir": "Q2^2 + Q3^2",
            "printed": ["exp(-(2*exp(2*a*x4)*x1/d))*x2^2/c^2"]}],
     "core": ["H", "Q1"], "extra": ["Q2", "Q3"],
     "claimed_class": "maximal", "casimir_h": true,
     "domain": {"x1": [[0.1, 2.0]], "x2": [[0.1, 0.3]], "x4": [[-2.0, -0.1]]}},

    {"id": "group/A4_7", "kind": "group", "algebra": "A4_7", "N": 2,
     "defaults": {"c": 1}, "constraints": ["c != 0"],
     "bivector": [[1,3,"-2*c*x3*exp(-2*x4)"], [1,4,"c*exp(-2*x4)"], [2,3,"2*c*exp(-2*x4)"]],
     "darboux": ["exp(2*x4)*x2/(2*c)",
                 "-(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)",
                 "x3",
                 "exp(-2*x4)"],
     "pairing": [[1,3],[2,4]],
     "Q": ["-x3",
           "x3*(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)",
           "exp(-2*x4)",
           "x3*(-(exp(2*x4)*x2/c) + (-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)^2/(8*c^2)) + exp(-2*x4)*(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)"],
     "H": [{"casimir": "Q2",
            "printed": ["x3*(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)"]}],
     "core": ["H", "Q1"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "domain": {"x4": [[0.1, 1.0]]},
     "notes": ["H is a generator of the algebra rather than a Casimir; only the listed invariants commute with it"]},

    {"id": "group/A4_9^1", "kind": "group", "algebra": "A4_9",
     "algebra_params": {"b": "1"}, "N": 2,
     "defaults": {"c": 1}, "constraints": ["c != 0"],
     "bivector": [[1,3,"2*c*x3*exp(-2*x4)"], [1,4,"-c*exp(-2*x4)"], [2,3,"-2*c*exp(-2*x4)"]],
     "darboux": ["-exp(2*x4)*x2/(2*c)",
                 "(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)",
                 "x3",
                 "exp(-2*x4)"],
     "pairing": [[1,3],[2,4]],
     "Q": ["-x3",
           "-exp(-2*x4)",
           "-x3*(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)",
           "exp(2*x4)*x2*x3/c - exp(-2*x4)*(-1 - exp(2*x4) + exp(4*x4)*x1 + exp(4*x4)*x2*x3)/(2*c)"],
     "H": [{"casimir": "Q1", "printed": ["-x3"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "domain": {"x4": [[0.1, 1.0]]},
     "notes": ["H is a generator of the algebra rather than a Casimir; only the listed invariants commute with it"]},

    {"id": "group/A4_12", "kind": "group", "algebra": "A4_12", "N": 2,
     "defaults": {"a": 1, "b": 1}, "derived": {"c": "1/(a^2 + b^2)"},
     "bivector": [[1,3,"-c*exp(-x3)*(a*cos(x4) + b*sin(x4))"],
                  [1,4,"c*exp(-x3)*(-(b*cos(x4)) + a*sin(x4))"],
                  [2,3,"c*exp(-x3)*(b*cos(x4) - a*sin(x4))"],
                  [2,4,"-c*exp(-x3)*(a*cos(x4) + b*sin(x4))"]],
     "darboux": ["exp(2*x3)*(a*x1*cos(x4) - b*x2*cos(x4) + b*x1*sin(x4) + a*x2*sin(x4))",
                 "-exp(x3)*(b*x1*cos(x4) + a*x2*cos(x4) - a*x1*sin(x4) + b*x2*sin(x4))",
                 "exp(-x3)",
                 "x4"],
     "pairing": [[1,3],[2,4]],
     "as_printed": {"darboux": {"3": "exp(x3)"},
                    "Q": {"4": "-exp(2*x3)*(a*x1*cos(x4) - b*x2*cos(x4) + b*x1*sin(x4) + a*x2*sin(x4))*(b*x1*cos(x4) + a*x2*cos(x4) - a*x1*sin(x4) + b*x2*sin(x4)) + x4*(1 - exp(2*x3)*(b*x1*cos(x4) + a*x2*cos(x4) - a*x1*sin(x4) + b*x2*sin(x4)))"}},
     "Q": ["-exp(-x3)",
           "b*x1*cos(x4) + a*x2*cos(x4) - a*x1*sin(x4) + b*x2*sin(x4)",
           "-exp(x3)*(a*x1*cos(x4) - b*x2*cos(x4) + b*x1*sin(x4) + a*x2*sin(x4))",
           "-exp(2*x3)*(a*x1*cos(x4) - b*x2*cos(x4) + b*x1*sin(x4) + a*x2*sin(x4))*(b*x1*cos(x4) + a*x2*cos(x4) - a*x1*sin(x4) + b*x2*sin(x4)) + x4*(1 + exp(2*x3)*(b*x1*cos(x4) + a*x2*cos(x4) - a*x1*sin(x4) + b*x2*sin(x4))^2)"],
     "H": [{"casimir": "Q1", "printed": ["-exp(-2*x4)"]}],
     "core": ["H", "Q2"], "extra": [],
     "claimed_class": "integrable", "casimir_h": false,
     "errata": ["printed y3=exp(x3) fails the darboux check ({y1,y3} is not 1); exp(-x3), consistent with the printed Q1 and Q3, is curated",
                "the printed Q4 term x4*(1 - exp(2*x3)*B) fails closure; the Darboux substitution of the phase-space realization gives x4*(1 + exp(2*x3)*B^2)",
                "the printed H=-exp(-2*x4) fails invariance against Q2; the curated H=Q1=-exp(-x3) commutes"],
     "notes": ["the structure constant c is fixed to 1/(a^2+b^2) as printed; a,b remain free",
               "H is a generator of the algebra rather than a Casimir; only the listed invariants commute with it"]}
  ]
})cat";
}

}  // namespace hamcat

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamcat/dynamics.hpp"
#include "hamcat/verify.hpp"

namespace py = pybind11;
using namespace hamcat;

namespace {

Expr parse_with_params(const std::string& text, const std::vector<std::string>& params) {
  ParseOptions po;
  po.parameters.insert(params.begin(), params.end());
  return parse(text, po);
}

double eval_expr(const Expr& e, const std::map<std::string, double>& vars,
                 const std::map<std::string, double>& params) {
  Point pt;
  pt.vars = vars;
  pt.params = params;
  return evaluate(e, pt);
}

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      return py::none();
  }
}

}  // namespace

PYBIND11_MODULE(_hamcat, m) {
  m.doc() = "Symbolic-numeric verification of Hamiltonian systems built on "
            "four-dimensional real Lie algebras";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<EvalError>(m, "EvalError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<ConstraintError>(m, "ConstraintError");
  py::register_exception<CatalogError>(m, "CatalogError");
  py::register_exception<IntegrationError>(m, "IntegrationError");

  py::class_<Expr>(m, "Expr")
      .def("__str__", [](const Expr& e) { return to_string(e); })
      .def("__repr__",
           [](const Expr& e) { return "Expr('" + to_string(e) + "')"; })
      .def("diff",
           [](const Expr& e, const std::string& var) { return differentiate(e, var); },
           py::arg("var"))
      .def("__call__", &eval_expr, py::arg("vars"),
           py::arg("params") = std::map<std::string, double>{})
      .def("free_variables", [](const Expr& e) { return free_variables(e); })
      .def(
          "subs",
          [](const Expr& e, const std::map<std::string, Expr>& repl) {
            return substitute(e, repl);
          },
          py::arg("replacements"));

  m.def("parse", &parse_with_params, py::arg("text"),
        py::arg("parameters") = std::vector<std::string>{},
        "Parse a formula over x1..x9, p1..p9, y1..y9 and declared parameters");
  m.def("differentiate",
        [](const Expr& e, const std::string& var) { return differentiate(e, var); },
        py::arg("expr"), py::arg("var"));
  m.def("evaluate", &eval_expr, py::arg("expr"), py::arg("vars"),
        py::arg("params") = std::map<std::string, double>{});
  m.def(
      "equal_on_samples",
      [](const Expr& a, const Expr& b, int n, double tol, std::uint64_t seed,
         const std::map<std::string, double>& params) {
        auto res = equal_on_samples(a, b, SampleDomain{}, n, tol, seed, params);
        return py::make_tuple(res.equal, res.max_residual);
      },
      py::arg("a"), py::arg("b"), py::arg("n") = 100, py::arg("tol") = 1e-9,
      py::arg("seed") = 42, py::arg("params") = std::map<std::string, double>{});

  m.def(
      "canonical_bracket",
      [](const Expr& F, const Expr& G, int N) {
        return canonical_bracket(F, G, CanonicalStructure{N});
      },
      py::arg("F"), py::arg("G"), py::arg("N"));

  m.def("jacobi_defect",
        [](const std::string& algebra, const std::map<std::string, double>& params) {
          return jacobi_defect(Registry::builtin().algebra(algebra), params);
        },
        py::arg("algebra"), py::arg("params") = std::map<std::string, double>{});

  m.def("list_systems", [] {
    py::list out;
    for (const auto& e : Registry::builtin().list()) {
      py::dict d;
      d["id"] = e.id;
      d["kind"] = e.kind == SystemKind::Group ? "group" : "realization";
      d["algebra"] = e.algebra;
      d["claimed_class"] = e.claimed_class;
      out.append(d);
    }
    return out;
  });

  m.def(
      "verify",
      [](const std::string& id, const std::map<std::string, double>& params,
         int samples, double tol, std::uint64_t seed) {
        VerifyOptions opt;
        opt.n_samples = samples;
        opt.tol = tol;
        opt.seed = seed;
        return json_to_py(report_to_json(verify_system(Registry::builtin(), id,
                                                       params, opt)));
      },
      py::arg("id"), py::arg("params") = std::map<std::string, double>{},
      py::arg("samples") = 100, py::arg("tol") = 1e-9, py::arg("seed") = 42);

  m.def(
      "simulate",
      [](const std::string& id, const std::map<std::string, double>& params,
         std::vector<double> z0, double dt, double T, const std::string& method) {
        auto sys = Registry::builtin().materialize(id, params);
        if (z0.empty()) z0 = sys.default_state();
        IntegrateOptions opt;
        opt.dt = dt;
        opt.T = T;
        opt.method = method_from_string(method);
        auto traj = integrate(sys, z0, opt);
        std::vector<std::pair<std::string, Expr>> inv = {{"H", sys.hamiltonians[0]}};
        for (const auto& [name, e] : sys.listed_invariants)
          if (name != "H") inv.emplace_back(name, e);
        py::dict out;
        out["system"] = id;
        out["times"] = traj.times;
        out["states"] = traj.states;
        out["variables"] = sys.phase_vars;
        py::dict drift;
        for (const auto& [name, d] : drift_report(sys, traj, inv))
          drift[py::str(name)] = d;
        out["drift"] = drift;
        if (traj.exit_time) {
          out["exit_time"] = *traj.exit_time;
          out["exit_reason"] = traj.exit_reason;
        }
        return out;
      },
      py::arg("id"), py::arg("params") = std::map<std::string, double>{},
      py::arg("z0") = std::vector<double>{}, py::arg("dt") = 1e-3,
      py::arg("T") = 10.0, py::arg("method") = "rk4");
}

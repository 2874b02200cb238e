#include "hamcat/catalog.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace hamcat {

using nlohmann::json;

// --- MaterializedSystem -------------------------------------------------------

Expr MaterializedSystem::bracket(const Expr& F, const Expr& G) const {
  if (kind == SystemKind::Group) return bivector_bracket(F, G, *bivector);
  return canonical_bracket(F, G, CanonicalStructure{N});
}

Expr MaterializedSystem::named(const std::string& name) const {
  for (std::size_t i = 0; i < hamiltonian_names.size(); ++i)
    if (hamiltonian_names[i] == name) return hamiltonians[i];
  if (name.size() == 2 && name[0] == 'Q' && name[1] >= '1' && name[1] <= '4')
    return Q[static_cast<std::size_t>(name[1] - '1')];
  throw CatalogError(id + ": unknown invariant name '" + name + "'");
}

std::vector<double> MaterializedSystem::default_state() const {
  std::vector<double> z;
  for (const auto& v : phase_vars) z.push_back(domain.default_coordinate(v));
  return z;
}

// --- glob ----------------------------------------------------------------------

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star_p = std::string::npos, star_t = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '[') {
      std::size_t close = pattern.find(']', p + 1);
      if (close == std::string::npos) return false;
      bool neg = pattern[p + 1] == '!';
      bool hit = false;
      for (std::size_t i = p + (neg ? 2 : 1); i < close; ++i)
        if (pattern[i] == text[t]) hit = true;
      if (hit == neg) {
        if (star_p == std::string::npos) return false;
        p = star_p + 1;
        t = ++star_t;
      } else {
        p = close + 1;
        ++t;
      }
    } else if (p < pattern.size() && pattern[p] == '*') {
      star_p = p++;
      star_t = t;
    } else if (star_p != std::string::npos) {
      p = star_p + 1;
      t = ++star_t;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

// --- loading --------------------------------------------------------------------

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw CatalogError("catalog schema violation at " + path + ": " + msg);
}

std::string require_string(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_string())
    schema_error(path + "/" + key, "expected a string");
  return j[key].get<std::string>();
}

void parse_or_fail(const std::string& text, const ParseOptions& po,
                   const std::string& path) {
  try {
    parse(text, po);
  } catch (const ParseError& pe) {
    schema_error(path, "formula error at byte " + std::to_string(pe.offset()) +
                           ": " + pe.what() + " in '" + text + "'");
  }
}

std::vector<Interval> read_intervals(const json& j, const std::string& path) {
  std::vector<Interval> out;
  if (!j.is_array() || j.empty()) schema_error(path, "expected [[lo,hi],...]");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& iv = j[i];
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      schema_error(path + "/" + std::to_string(i), "expected [lo,hi]");
    double lo = iv[0].get<double>(), hi = iv[1].get<double>();
    if (!(lo < hi)) schema_error(path + "/" + std::to_string(i), "lo must be < hi");
    out.push_back({lo, hi});
  }
  return out;
}

}  // namespace

void Registry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_json_text(ss.str(), path);
}

void Registry::load_json_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CatalogError(origin + ": not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw CatalogError(origin + ": top level must be an object");

  bool is_builtin = systems_.empty() && algebras_.empty();

  if (doc.contains("algebras")) {
    const auto& algs = doc["algebras"];
    if (!algs.is_array()) schema_error("/algebras", "expected an array");
    for (std::size_t ai = 0; ai < algs.size(); ++ai) {
      std::string apath = "/algebras/" + std::to_string(ai);
      const auto& a = algs[ai];
      std::string name = require_string(a, "name", apath);
      if (algebras_.count(name))
        schema_error(apath + "/name", "algebra '" + name + "' already defined");
      std::vector<std::string> pnames;
      std::map<std::string, double> pdefaults;
      if (a.contains("params")) {
        for (auto it = a["params"].begin(); it != a["params"].end(); ++it) {
          if (!it.value().is_number())
            schema_error(apath + "/params/" + it.key(), "expected a number default");
          pnames.push_back(it.key());
          pdefaults[it.key()] = it.value().get<double>();
        }
      }
      std::vector<std::string> constraints;
      if (a.contains("constraints"))
        for (const auto& c : a["constraints"]) constraints.push_back(c.get<std::string>());

      LieAlgebra alg(name, pnames, pdefaults, constraints);
      ParseOptions po;
      po.parameters.insert(pnames.begin(), pnames.end());
      if (!a.contains("relations") || !a["relations"].is_array())
        schema_error(apath, "missing relations array");
      const auto& rels = a["relations"];
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        std::string rpath = apath + "/relations/" + std::to_string(ri);
        const auto& r = rels[ri];
        if (!r.is_array() || r.size() != 3 || !r[0].is_number_integer() ||
            !r[1].is_number_integer() || !r[2].is_object())
          schema_error(rpath, "expected [i, j, {k: expr}]");
        int i = r[0].get<int>(), j = r[1].get<int>();
        for (auto it = r[2].begin(); it != r[2].end(); ++it) {
          int k = std::stoi(it.key());
          std::string f = it.value().get<std::string>();
          parse_or_fail(f, po, rpath + "/" + it.key());
          try {
            alg.set(i, j, k, parse(f, po));
          } catch (const ConstraintError& ce) {
            schema_error(rpath, ce.what());
          }
        }
      }
      algebras_.emplace(name, std::move(alg));
      algebra_order_.push_back(name);
    }
  }

  if (doc.contains("systems")) {
    const auto& systems = doc["systems"];
    if (!systems.is_array()) schema_error("/systems", "expected an array");
    for (std::size_t si = 0; si < systems.size(); ++si) {
      std::string spath = "/systems/" + std::to_string(si);
      const auto& s = systems[si];
      SystemEntry e;
      e.builtin = is_builtin;
      e.id = require_string(s, "id", spath);
      if (systems_.count(e.id))
        schema_error(spath + "/id", "system id '" + e.id + "' already defined");
      std::string kind = require_string(s, "kind", spath);
      if (kind == "realization")
        e.kind = SystemKind::Realization;
      else if (kind == "group")
        e.kind = SystemKind::Group;
      else
        schema_error(spath + "/kind", "must be 'realization' or 'group'");
      e.algebra = require_string(s, "algebra", spath);
      if (!algebras_.count(e.algebra))
        schema_error(spath + "/algebra", "unknown algebra '" + e.algebra + "'");
      if (s.contains("algebra_params"))
        for (auto it = s["algebra_params"].begin(); it != s["algebra_params"].end(); ++it)
          e.algebra_params[it.key()] =
              it.value().is_string() ? it.value().get<std::string>()
                                     : it.value().dump();
      if (s.contains("defaults"))
        for (auto it = s["defaults"].begin(); it != s["defaults"].end(); ++it)
          e.defaults[it.key()] = it.value().get<double>();
      if (s.contains("constraints"))
        for (const auto& c : s["constraints"]) e.constraints.push_back(c.get<std::string>());
      if (s.contains("derived"))
        for (auto it = s["derived"].begin(); it != s["derived"].end(); ++it)
          e.derived[it.key()] = it.value().get<std::string>();

      if (!s.contains("N") || !s["N"].is_number_integer())
        schema_error(spath + "/N", "expected an integer");
      e.N = s["N"].get<int>();
      if (e.kind == SystemKind::Realization && e.N != 2 && e.N != 3)
        schema_error(spath + "/N", "realization systems have N=2 or N=3");
      if (e.kind == SystemKind::Group && e.N != 2)
        schema_error(spath + "/N", "group phase spaces are four-dimensional (N=2)");

      ParseOptions po;
      for (const auto& [k, v] : e.defaults) po.parameters.insert(k);
      for (const auto& [k, v] : e.derived) po.parameters.insert(k);
      ParseOptions po_printed = po;
      if (s.contains("as_printed") && s["as_printed"].contains("params"))
        for (auto it = s["as_printed"]["params"].begin();
             it != s["as_printed"]["params"].end(); ++it) {
          e.printed_params[it.key()] = it.value().get<double>();
          po_printed.parameters.insert(it.key());
        }

      if (!s.contains("Q") || !s["Q"].is_array() || s["Q"].size() != 4)
        schema_error(spath + "/Q", "expected an array of 4 formulas");
      for (std::size_t qi = 0; qi < 4; ++qi) {
        std::string q = s["Q"][qi].get<std::string>();
        parse_or_fail(q, po, spath + "/Q/" + std::to_string(qi));
        e.Q.push_back(q);
      }

      if (!s.contains("H") || !s["H"].is_array() || s["H"].empty())
        schema_error(spath + "/H", "expected a non-empty array");
      ParseOptions po_cas = po;
      po_cas.extra_variables = {"Q1", "Q2", "Q3", "Q4"};
      for (std::size_t hi = 0; hi < s["H"].size(); ++hi) {
        std::string hpath = spath + "/H/" + std::to_string(hi);
        const auto& h = s["H"][hi];
        HamiltonianSpec spec;
        if (h.is_string()) {
          spec.casimir = h.get<std::string>();
        } else if (h.is_object()) {
          spec.casimir = require_string(h, "casimir", hpath);
          if (h.contains("printed"))
            for (const auto& p : h["printed"]) spec.printed.push_back(p.get<std::string>());
        } else {
          schema_error(hpath, "expected a string or {casimir, printed}");
        }
        parse_or_fail(spec.casimir, po_cas, hpath + "/casimir");
        for (std::size_t pi = 0; pi < spec.printed.size(); ++pi)
          parse_or_fail(spec.printed[pi], po_printed,
                        hpath + "/printed/" + std::to_string(pi));
        e.H.push_back(std::move(spec));
      }

      if (s.contains("core"))
        for (const auto& c : s["core"]) e.core.push_back(c.get<std::string>());
      if (s.contains("extra"))
        for (const auto& c : s["extra"]) e.extra.push_back(c.get<std::string>());
      e.claimed_class = s.contains("claimed_class")
                            ? s["claimed_class"].get<std::string>()
                            : "integrable";
      e.casimir_h = s.value("casimir_h", false);

      if (e.kind == SystemKind::Group) {
        if (!s.contains("bivector") || !s["bivector"].is_array())
          schema_error(spath + "/bivector", "group systems need a bivector");
        std::set<std::pair<int, int>> seen;
        for (std::size_t bi = 0; bi < s["bivector"].size(); ++bi) {
          std::string bpath = spath + "/bivector/" + std::to_string(bi);
          const auto& b = s["bivector"][bi];
          if (!b.is_array() || b.size() != 3 || !b[0].is_number_integer() ||
              !b[1].is_number_integer() || !b[2].is_string())
            schema_error(bpath, "expected [mu, nu, expr]");
          int mu = b[0].get<int>(), nu = b[1].get<int>();
          if (mu < 1 || nu < 1 || mu > 4 || nu > 4)
            schema_error(bpath, "indices must be in 1..4");
          if (mu == nu || seen.count({nu, mu}) || seen.count({mu, nu}))
            schema_error(bpath, "bivector not antisymmetric");
          seen.insert({mu, nu});
          std::string f = b[2].get<std::string>();
          parse_or_fail(f, po, bpath + "/2");
          e.bivector_idx.push_back({mu, nu});
          e.bivector_expr.push_back(f);
        }
        if (s.contains("darboux")) {
          if (!s["darboux"].is_array() || s["darboux"].size() != 4)
            schema_error(spath + "/darboux", "expected 4 formulas");
          for (std::size_t di = 0; di < 4; ++di) {
            std::string dstr = s["darboux"][di].get<std::string>();
            parse_or_fail(dstr, po, spath + "/darboux/" + std::to_string(di));
            e.darboux.push_back(dstr);
          }
        }
        if (s.contains("pairing"))
          for (const auto& pr : s["pairing"])
            e.pairing.push_back({pr[0].get<int>(), pr[1].get<int>()});
      }

      if (s.contains("as_printed")) {
        const auto& ap = s["as_printed"];
        if (ap.contains("Q"))
          for (auto it = ap["Q"].begin(); it != ap["Q"].end(); ++it) {
            parse_or_fail(it.value().get<std::string>(), po_printed,
                          spath + "/as_printed/Q/" + it.key());
            e.printed_Q[std::stoi(it.key())] = it.value().get<std::string>();
          }
        if (ap.contains("darboux"))
          for (auto it = ap["darboux"].begin(); it != ap["darboux"].end(); ++it) {
            parse_or_fail(it.value().get<std::string>(), po_printed,
                          spath + "/as_printed/darboux/" + it.key());
            e.printed_darboux[std::stoi(it.key())] = it.value().get<std::string>();
          }
      }

      if (s.contains("domain"))
        for (auto it = s["domain"].begin(); it != s["domain"].end(); ++it)
          e.domain[it.key()] =
              read_intervals(it.value(), spath + "/domain/" + it.key());

      if (s.contains("errata"))
        for (const auto& t : s["errata"]) e.errata.push_back(t.get<std::string>());
      if (s.contains("notes"))
        for (const auto& t : s["notes"]) e.notes.push_back(t.get<std::string>());

      order_.push_back(e.id);
      systems_.emplace(e.id, std::move(e));
    }
  }
}

const Registry& Registry::builtin() {
  static const Registry* reg = [] {
    auto* r = new Registry();
    r->load_json_text(builtin_catalog_json(), "builtin catalog");
    return r;
  }();
  return *reg;
}

std::vector<ListEntry> Registry::list() const {
  std::vector<ListEntry> out;
  for (const auto& id : order_) {
    const auto& e = systems_.at(id);
    out.push_back({e.id, e.kind, e.algebra, e.claimed_class});
  }
  return out;
}

bool Registry::has(const std::string& id) const { return systems_.count(id) != 0; }

const SystemEntry& Registry::entry(const std::string& id) const {
  auto it = systems_.find(id);
  if (it == systems_.end()) throw CatalogError("unknown system '" + id + "'");
  return it->second;
}

const LieAlgebra& Registry::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw CatalogError("unknown algebra '" + name + "'");
  return it->second;
}

std::vector<std::string> Registry::algebra_names() const { return algebra_order_; }

// --- materialization -------------------------------------------------------------

MaterializedSystem Registry::materialize(const std::string& id,
                                         const std::map<std::string, double>& overrides,
                                         Variant variant) const {
  const SystemEntry& e = entry(id);
  MaterializedSystem m;
  m.id = e.id;
  m.kind = e.kind;
  m.variant = variant;
  m.N = e.N;
  m.claimed_class = e.claimed_class;
  m.casimir_h = e.casimir_h;
  m.errata = e.errata;
  m.notes = e.notes;

  // parameters: defaults, printed extras (as-printed only), overrides
  std::map<std::string, double> params = e.defaults;
  if (variant == Variant::AsPrinted)
    for (const auto& [k, v] : e.printed_params) params.emplace(k, v);
  for (const auto& [k, v] : overrides) {
    if (!params.count(k))
      throw ConstraintError(e.id + ": unknown parameter '" + k + "'");
    params[k] = v;
  }
  check_constraints(e.constraints, params, e.id);

  // derived parameters (evaluated after admissibility)
  for (const auto& [name, formula] : e.derived) {
    ParseOptions dpo;
    for (const auto& [k, v] : params) dpo.parameters.insert(k);
    Point pt;
    pt.params = params;
    double value;
    try {
      value = evaluate(parse(formula, dpo), pt);
    } catch (const EvalError& ee) {
      throw ConstraintError(e.id + ": derived parameter " + name + " = " + formula +
                            " undefined for the given parameters (" + ee.what() + ")");
    }
    if (!std::isfinite(value))
      throw ConstraintError(e.id + ": derived parameter " + name + " = " + formula +
                            " is not finite for the given parameters");
    params[name] = value;
  }
  m.params = params;

  // algebra parameters: fixed numbers or references to system parameters
  const LieAlgebra& alg = algebra(e.algebra);
  m.algebra = &alg;
  std::map<std::string, double> algebra_overrides;
  for (const auto& [aname, ref] : e.algebra_params) {
    char* end = nullptr;
    double num = std::strtod(ref.c_str(), &end);
    if (end == ref.c_str() + ref.size() && !ref.empty()) {
      algebra_overrides[aname] = num;
    } else {
      auto it = params.find(ref);
      if (it == params.end())
        throw CatalogError(e.id + ": algebra parameter '" + aname +
                           "' references unknown parameter '" + ref + "'");
      algebra_overrides[aname] = it->second;
    }
  }
  m.algebra_values = alg.resolve_params(algebra_overrides);

  ParseOptions po;
  for (const auto& [k, v] : params) po.parameters.insert(k);

  // generators
  for (int i = 1; i <= 4; ++i) {
    std::string text = e.Q[static_cast<std::size_t>(i - 1)];
    if (variant == Variant::AsPrinted) {
      auto it = e.printed_Q.find(i);
      if (it != e.printed_Q.end()) text = it->second;
    }
    m.Q.push_back(parse(text, po));
  }

  // Hamiltonians: curated substitution is always mechanical from the Q's
  ParseOptions po_cas = po;
  po_cas.extra_variables = {"Q1", "Q2", "Q3", "Q4"};
  std::map<std::string, Expr> qsub = {{"Q1", m.Q[0]},
                                      {"Q2", m.Q[1]},
                                      {"Q3", m.Q[2]},
                                      {"Q4", m.Q[3]}};
  for (std::size_t hi = 0; hi < e.H.size(); ++hi) {
    const auto& spec = e.H[hi];
    m.casimir_forms.push_back(spec.casimir);
    Expr ham;
    if (variant == Variant::AsPrinted && !spec.printed.empty())
      ham = parse(spec.printed.front(), po);
    else
      ham = substitute(parse(spec.casimir, po_cas), qsub);
    m.hamiltonians.push_back(ham);
    m.hamiltonian_names.push_back(hi == 0 ? "H" : "H" + std::to_string(hi + 1));
  }

  m.core_names = e.core;
  for (const auto& name : e.core) m.core_exprs.push_back(m.named(name));
  for (const auto& name : e.core) m.listed_invariants.emplace_back(name, m.named(name));
  for (const auto& name : e.extra) m.listed_invariants.emplace_back(name, m.named(name));

  if (e.kind == SystemKind::Group) {
    PoissonBivector P(4);
    for (std::size_t bi = 0; bi < e.bivector_idx.size(); ++bi) {
      auto [mu, nu] = e.bivector_idx[bi];
      Expr val = parse(e.bivector_expr[bi], po);
      if (mu < nu)
        P.set(mu, nu, val);
      else
        P.set(nu, mu, -val);
    }
    m.bivector = P;
    for (int di = 1; di <= 4; ++di) {
      if (e.darboux.empty()) break;
      std::string text = e.darboux[static_cast<std::size_t>(di - 1)];
      if (variant == Variant::AsPrinted) {
        auto it = e.printed_darboux.find(di);
        if (it != e.printed_darboux.end()) text = it->second;
      }
      m.darboux.push_back(parse(text, po));
    }
    m.pairing = e.pairing;
    for (int i = 1; i <= 4; ++i) m.phase_vars.push_back("x" + std::to_string(i));
  } else {
    for (int i = 1; i <= e.N; ++i) m.phase_vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= e.N; ++i) m.phase_vars.push_back("p" + std::to_string(i));
  }

  for (const auto& [var, ivs] : e.domain) m.domain.per_variable[var] = ivs;
  return m;
}

}  // namespace hamcat

#include "hamcat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hamcat {

namespace {

std::string fmt_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", r);
  return buf;
}

// Structure constants with the algebra parameters folded to their resolved
// numeric values, so that expected closure expressions carry only system
// parameters.
Expr folded_f(const MaterializedSystem& sys, int i, int j, int k) {
  std::map<std::string, Expr> sub;
  for (const auto& [name, value] : sys.algebra_values)
    sub.emplace(name, Expr::constant(value));
  return substitute(sys.algebra->f(i, j, k), sub);
}

CheckRecord residual_check(const MaterializedSystem& sys, const std::string& name,
                           const std::vector<std::pair<std::string, std::pair<Expr, Expr>>>& pairs,
                           const VerifyOptions& opt) {
  CheckRecord rec;
  rec.name = name;
  rec.tol = opt.tol;
  rec.samples = opt.n_samples;
  rec.seed = opt.seed;
  rec.pass = true;
  for (const auto& [tag, lr] : pairs) {
    auto res = equal_on_samples(lr.first, lr.second, sys.domain, opt.n_samples,
                                opt.tol, mix_seed(opt.seed, name + ":" + tag),
                                sys.params, sys.phase_vars);
    if (res.max_residual >= rec.residual) {
      rec.residual = res.max_residual;
      rec.detail = tag;
    }
    rec.pass = rec.pass && res.equal;
  }
  return rec;
}

}  // namespace

CheckRecord verify_closure(const MaterializedSystem& sys, const VerifyOptions& opt) {
  std::vector<std::pair<std::string, std::pair<Expr, Expr>>> pairs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      Expr lhs = sys.bracket(sys.Q[static_cast<std::size_t>(i - 1)],
                             sys.Q[static_cast<std::size_t>(j - 1)]);
      Expr rhs = Expr::constant(0);
      for (int k = 1; k <= 4; ++k)
        rhs = rhs + folded_f(sys, i, j, k) * sys.Q[static_cast<std::size_t>(k - 1)];
      std::string tag = "{Q" + std::to_string(i) + ",Q" + std::to_string(j) + "}";
      pairs.push_back({tag, {lhs, rhs}});
    }
  return residual_check(sys, "closure", pairs, opt);
}

CheckRecord verify_involution_core(const MaterializedSystem& sys,
                                   const VerifyOptions& opt) {
  std::vector<std::pair<std::string, std::pair<Expr, Expr>>> pairs;
  for (std::size_t i = 0; i < sys.core_exprs.size(); ++i)
    for (std::size_t j = i + 1; j < sys.core_exprs.size(); ++j) {
      std::string tag = "{" + sys.core_names[i] + "," + sys.core_names[j] + "}";
      pairs.push_back(
          {tag, {sys.bracket(sys.core_exprs[i], sys.core_exprs[j]), Expr::constant(0)}});
    }
  return residual_check(sys, "involution_core", pairs, opt);
}

CheckRecord verify_invariance(const MaterializedSystem& sys, std::size_t h_index,
                              const VerifyOptions& opt) {
  const Expr& H = sys.hamiltonians[h_index];
  const std::string& hname = sys.hamiltonian_names[h_index];
  std::vector<std::pair<std::string, std::pair<Expr, Expr>>> pairs;
  for (const auto& [name, inv] : sys.listed_invariants)
    pairs.push_back({"{" + hname + "," + name + "}",
                     {sys.bracket(H, inv), Expr::constant(0)}});
  for (std::size_t j = 0; j < sys.hamiltonians.size(); ++j)
    pairs.push_back({"{" + hname + "," + sys.hamiltonian_names[j] + "}",
                     {sys.bracket(H, sys.hamiltonians[j]), Expr::constant(0)}});
  return residual_check(sys, "invariance:" + hname, pairs, opt);
}

CheckRecord verify_casimir_all_q(const MaterializedSystem& sys, std::size_t h_index,
                                 const VerifyOptions& opt) {
  const Expr& H = sys.hamiltonians[h_index];
  const std::string& hname = sys.hamiltonian_names[h_index];
  std::vector<std::pair<std::string, std::pair<Expr, Expr>>> pairs;
  for (int i = 1; i <= 4; ++i)
    pairs.push_back({"{" + hname + ",Q" + std::to_string(i) + "}",
                     {sys.bracket(H, sys.Q[static_cast<std::size_t>(i - 1)]),
                      Expr::constant(0)}});
  return residual_check(sys, "casimir_all_q:" + hname, pairs, opt);
}

CheckRecord verify_darboux(const MaterializedSystem& sys, const VerifyOptions& opt) {
  std::vector<std::pair<std::string, std::pair<Expr, Expr>>> pairs;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      bool declared = false;
      for (const auto& pr : sys.pairing)
        if (pr[0] == i && pr[1] == j) declared = true;
      Expr lhs = bivector_bracket(sys.darboux[static_cast<std::size_t>(i - 1)],
                                  sys.darboux[static_cast<std::size_t>(j - 1)],
                                  *sys.bivector);
      std::string tag = "{y" + std::to_string(i) + ",y" + std::to_string(j) + "}";
      pairs.push_back({tag, {lhs, Expr::constant(declared ? 1 : 0)}});
    }
  return residual_check(sys, "darboux", pairs, opt);
}

CheckRecord verify_bivector_jacobi(const MaterializedSystem& sys,
                                   const VerifyOptions& opt) {
  CheckRecord rec;
  rec.name = "bivector_jacobi";
  rec.tol = opt.tol;
  rec.samples = opt.n_samples;
  rec.seed = opt.seed;
  rec.residual = bivector_jacobi_defect(*sys.bivector, sys.domain, opt.n_samples,
                                        mix_seed(opt.seed, "bivector_jacobi"),
                                        sys.params);
  rec.pass = rec.residual <= opt.tol;
  return rec;
}

// --- rank ---------------------------------------------------------------------

namespace {

// Singular values by one-sided Jacobi rotations on the rows of J (never
// forming J J^T, which would square the condition number and blur exactly
// the 1e-8 * sigma_max decision boundary the rank test uses).
std::vector<double> singular_values(std::vector<std::vector<double>> J) {
  std::size_t m = J.size();
  auto dot = [&](std::size_t p, std::size_t q) {
    double s = 0.0;
    for (std::size_t k = 0; k < J[p].size(); ++k) s += J[p][k] * J[q][k];
    return s;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        double app = dot(p, p), aqq = dot(q, q), apq = dot(p, q);
        if (std::abs(apq) <= 1e-28 * std::sqrt(app * aqq) || apq == 0.0) continue;
        rotated = true;
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double cs = 1.0 / std::sqrt(1.0 + t * t);
        double sn = t * cs;
        for (std::size_t k = 0; k < J[p].size(); ++k) {
          double vp = J[p][k], vq = J[q][k];
          J[p][k] = cs * vp - sn * vq;
          J[q][k] = sn * vp + cs * vq;
        }
      }
    if (!rotated) break;
  }
  std::vector<double> sigma(m);
  for (std::size_t p = 0; p < m; ++p) sigma[p] = std::sqrt(dot(p, p));
  return sigma;
}

int jacobian_rank(const std::vector<std::vector<double>>& J) {
  if (J.empty()) return 0;
  auto sigma = singular_values(J);
  double smax = 0.0;
  for (double s : sigma) smax = std::max(smax, s);
  if (smax == 0.0) return 0;
  int rank = 0;
  for (double s : sigma)
    if (s > 1e-8 * smax) ++rank;
  return rank;
}

}  // namespace

int independence_rank(const std::vector<Expr>& funcs,
                      const std::vector<std::string>& vars, const SampleDomain& dom,
                      const std::map<std::string, double>& params, int n_samples,
                      std::uint64_t seed) {
  std::vector<std::vector<CompiledExpr>> grads;
  for (const auto& f : funcs) {
    std::vector<CompiledExpr> row;
    for (const auto& v : vars) row.emplace_back(differentiate(f, v), vars, params);
    grads.push_back(std::move(row));
  }
  SampleRng rng(seed);
  std::vector<double> slots(vars.size());
  int best = 0;
  for (int s = 0; s < n_samples; ++s) {
    std::vector<std::vector<double>> J;
    bool ok = false;
    for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
      for (std::size_t k = 0; k < vars.size(); ++k) {
        const auto& ivs = dom.intervals_for(vars[k]);
        double total = 0.0;
        for (const auto& iv : ivs) total += iv.hi - iv.lo;
        double u = rng.uniform01() * total;
        double val = ivs.back().hi;
        for (const auto& iv : ivs) {
          double len = iv.hi - iv.lo;
          if (u <= len) {
            val = iv.lo + u;
            break;
          }
          u -= len;
        }
        slots[k] = val;
      }
      try {
        J.clear();
        for (const auto& row : grads) {
          std::vector<double> r;
          for (const auto& g : row) {
            double v = g.eval(slots);
            if (!std::isfinite(v)) throw EvalError("non-finite gradient");
            r.push_back(v);
          }
          J.push_back(std::move(r));
        }
        ok = true;
      } catch (const EvalError&) {
        ok = false;
      }
    }
    if (!ok) throw DomainError("no valid sample point for rank evaluation");
    best = std::max(best, jacobian_rank(J));
  }
  return best;
}

std::string classify(bool core_verified, int core_size, int N, int k) {
  if (!core_verified || core_size != N || k < N) return "unverified";
  if (k == 2 * N - 1) return "maximal";
  if (k >= N + 1) return "superintegrable";
  return "integrable";
}

// --- whole-system verification ---------------------------------------------------

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool VerificationReport::has_note(const std::string& kind) const {
  for (const auto& n : notes)
    if (n.kind == kind) return true;
  return false;
}

namespace {

// Compare a stated substituted Hamiltonian against the mechanical
// Q-substitution; failures (or evaluation impossibilities) become errata.
void audit_printed_hamiltonians(const Registry& reg, const std::string& id,
                                const MaterializedSystem& sys,
                                const VerifyOptions& opt, VerificationReport& rep) {
  const SystemEntry& e = reg.entry(id);
  ParseOptions po;
  for (const auto& [k, v] : sys.params) po.parameters.insert(k);
  for (const auto& [k, v] : e.printed_params) po.parameters.insert(k);
  std::map<std::string, double> params = sys.params;
  for (const auto& [k, v] : e.printed_params) params.emplace(k, v);

  for (std::size_t hi = 0; hi < e.H.size(); ++hi) {
    const std::string hname = hi == 0 ? "H" : "H" + std::to_string(hi + 1);
    for (std::size_t pi = 0; pi < e.H[hi].printed.size(); ++pi) {
      const std::string& text = e.H[hi].printed[pi];
      std::string what = "h_substitution " + hname +
                         (e.H[hi].printed.size() > 1 ? " variant " + std::to_string(pi + 1)
                                                     : std::string());
      try {
        Expr printed = parse(text, po);
        auto res = equal_on_samples(printed, sys.hamiltonians[hi], sys.domain,
                                    opt.n_samples, opt.tol,
                                    mix_seed(opt.seed, "h_subst:" + hname + ":" +
                                                           std::to_string(pi)),
                                    params, sys.phase_vars);
        if (!res.equal)
          rep.notes.push_back(
              {"errata", "as-printed " + what + " ('" + text +
                             "') differs from the Q-substituted Hamiltonian, residual " +
                             fmt_residual(res.max_residual)});
      } catch (const DomainError&) {
        rep.notes.push_back({"errata", "as-printed " + what + " ('" + text +
                                           "') cannot be evaluated on the system's "
                                           "sampling domain (domain error)"});
      }
    }
  }
}

void audit_as_printed_variant(const Registry& reg, const std::string& id,
                              const std::map<std::string, double>& params,
                              const VerifyOptions& opt, VerificationReport& rep) {
  const SystemEntry& e = reg.entry(id);
  bool structural = !e.printed_Q.empty() || !e.printed_darboux.empty();
  if (!structural) return;
  MaterializedSystem ap = reg.materialize(id, params, Variant::AsPrinted);
  std::vector<CheckRecord> recs;
  try {
    recs.push_back(verify_closure(ap, opt));
    if (ap.kind == SystemKind::Group && !ap.darboux.empty())
      recs.push_back(verify_darboux(ap, opt));
    for (std::size_t hi = 0; hi < ap.hamiltonians.size(); ++hi)
      recs.push_back(verify_invariance(ap, hi, opt));
  } catch (const DomainError& de) {
    rep.notes.push_back({"errata", std::string("as-printed variant: ") + de.what()});
  }
  for (const auto& r : recs)
    if (!r.pass)
      rep.notes.push_back({"errata", "as-printed " + r.name + " fails" +
                                         (r.detail.empty() ? "" : " at " + r.detail) +
                                         ", residual " + fmt_residual(r.residual)});
}

}  // namespace

VerificationReport verify_system(const Registry& reg, const std::string& id,
                                 const std::map<std::string, double>& params,
                                 const VerifyOptions& opt) {
  MaterializedSystem sys = reg.materialize(id, params, Variant::Curated);
  VerificationReport rep;
  rep.system = id;
  rep.N = sys.N;
  rep.class_claimed = sys.claimed_class;
  for (const auto& t : sys.errata) rep.notes.push_back({"errata", t});
  for (const auto& t : sys.notes) rep.notes.push_back({"info", t});

  rep.checks.push_back(verify_closure(sys, opt));
  CheckRecord involution = verify_involution_core(sys, opt);
  rep.checks.push_back(involution);
  for (std::size_t hi = 0; hi < sys.hamiltonians.size(); ++hi)
    rep.checks.push_back(verify_invariance(sys, hi, opt));
  if (sys.casimir_h)
    for (std::size_t hi = 0; hi < sys.hamiltonians.size(); ++hi)
      rep.checks.push_back(verify_casimir_all_q(sys, hi, opt));
  if (sys.kind == SystemKind::Group) {
    if (!sys.darboux.empty()) rep.checks.push_back(verify_darboux(sys, opt));
    rep.checks.push_back(verify_bivector_jacobi(sys, opt));
  }

  // commuting pool and independence rank
  std::vector<Expr> pool = {sys.hamiltonians[0]};
  for (int i = 1; i <= 4; ++i) {
    Expr br = sys.bracket(sys.Q[static_cast<std::size_t>(i - 1)], sys.hamiltonians[0]);
    auto res = equal_on_samples(br, Expr::constant(0), sys.domain, opt.n_samples,
                                opt.tol, mix_seed(opt.seed, "pool:Q" + std::to_string(i)),
                                sys.params, sys.phase_vars);
    if (res.equal) pool.push_back(sys.Q[static_cast<std::size_t>(i - 1)]);
  }
  rep.k = independence_rank(pool, sys.phase_vars, sys.domain, sys.params,
                            opt.rank_samples, mix_seed(opt.seed, "rank"));
  rep.core_size = involution.pass ? static_cast<int>(sys.core_exprs.size()) : 0;
  rep.class_computed = classify(involution.pass, rep.core_size, sys.N, rep.k);
  if (rep.class_computed != rep.class_claimed) {
    std::ostringstream os;
    os << "claimed " << rep.class_claimed << ", computed " << rep.class_computed
       << " (N=" << sys.N << ", k=" << rep.k << ", core=" << rep.core_size << ")";
    rep.notes.push_back({"class", os.str()});
  }

  audit_printed_hamiltonians(reg, id, sys, opt, rep);
  audit_as_printed_variant(reg, id, params, opt, rep);
  return rep;
}

// --- serialization ---------------------------------------------------------------

nlohmann::json report_to_json(const VerificationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["residual"] = c.residual;
    jc["tol"] = c.tol;
    jc["samples"] = c.samples;
    jc["seed"] = c.seed;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["worst"] = c.detail;
    checks.push_back(jc);
  }
  nlohmann::json notes = nlohmann::json::array();
  for (const auto& n : rep.notes) notes.push_back(n.kind + ": " + n.text);
  nlohmann::json j;
  j["system"] = rep.system;
  j["N"] = rep.N;
  j["checks"] = checks;
  j["k"] = rep.k;
  j["core_size"] = rep.core_size;
  j["class_computed"] = rep.class_computed;
  j["class_claimed"] = rep.class_claimed;
  j["notes"] = notes;
  return j;
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << rep.system << "  N=" << rep.N << "  k=" << rep.k
     << "  core=" << rep.core_size << "  computed=" << rep.class_computed
     << "  claimed=" << rep.class_claimed << "\n";
  for (const auto& c : rep.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-22s %-10.3g tol=%-8.1g %s%s%s\n",
                  c.name.c_str(), c.residual, c.tol, c.pass ? "pass" : "FAIL",
                  c.detail.empty() ? "" : "  worst ", c.detail.c_str());
    os << line;
  }
  for (const auto& n : rep.notes) os << "  [" << n.kind << "] " << n.text << "\n";
  return os.str();
}

}  // namespace hamcat

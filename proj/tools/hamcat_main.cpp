#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hamcat/dynamics.hpp"
#include "hamcat/verify.hpp"

using namespace hamcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HAMCAT_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

bool valid_glob(const std::string& pattern) {
  bool in_set = false;
  for (char c : pattern) {
    if (c == '[') {
      if (in_set) return false;
      in_set = true;
    } else if (c == ']') {
      if (!in_set) return false;
      in_set = false;
    }
  }
  return !in_set;
}

std::map<std::string, double> parse_param_overrides(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConstraintError("--param expects name=value, got '" + kv + "'");
    std::string name = kv.substr(0, eq);
    std::string val = kv.substr(eq + 1);
    char* end = nullptr;
    double v = std::strtod(val.c_str(), &end);
    if (end != val.c_str() + val.size() || val.empty())
      throw ConstraintError("--param " + name + ": '" + val + "' is not a number");
    out[name] = v;
  }
  return out;
}

Registry load_registry(const std::vector<std::string>& extra_files) {
  Registry reg = Registry::builtin();
  for (const auto& f : extra_files) reg.load_file(f);
  return reg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw CatalogError("cannot write '" + out_path + "'");
  os << text;
}

std::string kind_name(SystemKind k) {
  return k == SystemKind::Group ? "group" : "realization";
}

int cmd_catalog(const Registry& reg, const std::string& pattern) {
  if (!valid_glob(pattern)) {
    std::cerr << "hamcat: malformed glob '" << pattern << "'\n";
    return kExitUsage;
  }
  char line[192];
  for (const auto& e : reg.list()) {
    if (!glob_match(pattern, e.id)) continue;
    std::snprintf(line, sizeof line, "%-18s %-12s %-6s %s\n", e.id.c_str(),
                  kind_name(e.kind).c_str(), e.algebra.c_str(),
                  e.claimed_class.c_str());
    std::cout << line;
  }
  return kExitOk;
}

void print_errata_diff(const Registry& reg, const std::string& id) {
  const SystemEntry& e = reg.entry(id);
  bool any = !e.printed_Q.empty() || !e.printed_darboux.empty() || !e.errata.empty();
  if (!any) return;
  std::cout << "errata for " << id << ":\n";
  for (const auto& [i, text] : e.printed_Q)
    std::cout << "  Q" << i << " printed: " << text << "\n"
              << "     curated: " << e.Q[static_cast<std::size_t>(i - 1)] << "\n";
  for (const auto& [i, text] : e.printed_darboux)
    std::cout << "  y" << i << " printed: " << text << "\n"
              << "     curated: " << e.darboux[static_cast<std::size_t>(i - 1)] << "\n";
  for (std::size_t hi = 0; hi < e.H.size(); ++hi)
    for (const auto& p : e.H[hi].printed)
      std::cout << "  H" << (hi ? std::to_string(hi + 1) : "") << " printed: " << p
                << "   (curated: substitution of " << e.H[hi].casimir << ")\n";
  for (const auto& t : e.errata) std::cout << "  note: " << t << "\n";
}

int cmd_verify(const Registry& reg, const std::string& pattern, bool all,
               const std::map<std::string, double>& params, const VerifyOptions& opt,
               bool as_json, bool show_errata, const std::string& out_path) {
  std::vector<std::string> ids;
  if (all) {
    for (const auto& e : reg.list()) ids.push_back(e.id);
  } else {
    if (!valid_glob(pattern)) {
      std::cerr << "hamcat: malformed glob '" << pattern << "'\n";
      return kExitUsage;
    }
    for (const auto& e : reg.list())
      if (glob_match(pattern, e.id)) ids.push_back(e.id);
    if (ids.empty()) {
      std::cerr << "hamcat: no system matches '" << pattern << "'\n";
      return kExitUsage;
    }
  }

  bool all_pass = true;
  nlohmann::json jreports = nlohmann::json::array();
  std::string text;
  for (const auto& id : ids) {
    auto rep = verify_system(reg, id, params, opt);
    all_pass = all_pass && rep.passed();
    if (as_json)
      jreports.push_back(report_to_json(rep));
    else
      text += report_to_text(rep);
  }
  if (as_json)
    emit(jreports.dump(1) + "\n", out_path);
  else
    emit(text, out_path);
  if (show_errata)
    for (const auto& id : ids) print_errata_diff(reg, id);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_simulate(const Registry& reg, const std::string& id,
                 const std::map<std::string, double>& params,
                 const std::vector<double>& z0_arg, const IntegrateOptions& iopt,
                 bool as_json, const std::string& out_path) {
  auto sys = reg.materialize(id, params);
  std::vector<double> z0 = z0_arg;
  bool defaulted = z0.empty();
  if (defaulted) z0 = sys.default_state();

  auto traj = integrate(sys, z0, iopt);

  std::string csv_path = out_path.empty() ? "trajectory.csv" : out_path;
  std::ofstream os(csv_path, std::ios::binary);
  if (!os) {
    std::cerr << "hamcat: cannot write '" << csv_path << "'\n";
    return kExitUsage;
  }
  write_csv(os, sys, traj);

  std::vector<std::pair<std::string, Expr>> invariants = {{"H", sys.hamiltonians[0]}};
  for (const auto& [name, e] : sys.listed_invariants)
    if (name != "H") invariants.emplace_back(name, e);
  auto drifts = drift_report(sys, traj, invariants);

  if (as_json) {
    nlohmann::json j;
    j["system"] = id;
    j["method"] = traj.method;
    j["dt"] = traj.dt;
    j["steps"] = traj.states.size() - 1;
    j["csv"] = csv_path;
    if (defaulted) j["z0_default"] = z0;
    nlohmann::json jd;
    for (const auto& [name, d] : drifts) jd[name] = d;
    j["drift"] = jd;
    if (traj.exit_time) {
      j["exit_time"] = *traj.exit_time;
      j["exit_reason"] = traj.exit_reason;
    }
    std::cout << j.dump(1) << "\n";
  } else {
    if (defaulted) {
      std::cout << "using default z0 = (";
      for (std::size_t i = 0; i < z0.size(); ++i)
        std::cout << (i ? "," : "") << z0[i];
      std::cout << ")\n";
    }
    std::cout << "trajectory written to " << csv_path << " (" << traj.states.size()
              << " rows)\n";
    if (traj.exit_time)
      std::cout << "domain exit at t=" << *traj.exit_time << ": " << traj.exit_reason
                << "\n";
    char line[96];
    std::cout << "invariant drift:\n";
    for (const auto& [name, d] : drifts) {
      std::snprintf(line, sizeof line, "  %-4s %.3e\n", name.c_str(), d);
      std::cout << line;
    }
  }
  return traj.exit_time ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamcat: catalog, verification and dynamics of Hamiltonian systems "
               "built on four-dimensional real Lie algebras"};
  app.require_subcommand(1);

  std::vector<std::string> catalog_files;
  app.add_option("--catalog", catalog_files, "extra catalog JSON files");

  auto* c_cat = app.add_subcommand("catalog", "list systems");
  std::string cat_glob = "*";
  c_cat->add_option("pattern", cat_glob, "id glob filter");

  auto* c_ver = app.add_subcommand("verify", "run the verification suite");
  std::string ver_glob;
  bool ver_all = false, ver_json = false, ver_errata = false;
  std::vector<std::string> ver_params;
  VerifyOptions vopt;
  vopt.seed = default_seed();
  c_ver->add_option("pattern", ver_glob, "system id or glob");
  c_ver->add_flag("--all", ver_all, "verify every catalog system");
  c_ver->add_flag("--json", ver_json, "machine-readable report");
  c_ver->add_flag("--errata", ver_errata, "print the as-printed vs curated diff");
  c_ver->add_option("--param", ver_params, "parameter override name=value");
  c_ver->add_option("--seed", vopt.seed, "sampling seed");
  c_ver->add_option("--samples", vopt.n_samples, "samples per check");
  c_ver->add_option("--tol", vopt.tol, "residual tolerance");
  std::string ver_out;
  c_ver->add_option("--out", ver_out, "write the report to a file");

  auto* c_sim = app.add_subcommand("simulate", "integrate and monitor drift");
  std::string sim_id, sim_method = "rk4", sim_out;
  std::vector<std::string> sim_params;
  std::vector<double> sim_z0;
  bool sim_json = false;
  IntegrateOptions iopt;
  c_sim->add_option("system", sim_id, "system id")->required();
  c_sim->add_option("--z0", sim_z0, "initial state, comma separated")->delimiter(',');
  c_sim->add_option("--dt", iopt.dt, "time step");
  c_sim->add_option("--T", iopt.T, "final time");
  c_sim->add_option("--method", sim_method, "rk4 | implicit_midpoint");
  c_sim->add_option("--param", sim_params, "parameter override name=value");
  c_sim->add_option("--out", sim_out, "trajectory CSV path");
  c_sim->add_flag("--json", sim_json, "JSON drift summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Registry reg = load_registry(catalog_files);
    if (c_cat->parsed()) return cmd_catalog(reg, cat_glob);
    if (c_ver->parsed()) {
      if (!ver_all && ver_glob.empty()) {
        std::cerr << "hamcat verify: give a system id/glob or --all\n";
        return kExitUsage;
      }
      return cmd_verify(reg, ver_glob, ver_all, parse_param_overrides(ver_params),
                        vopt, ver_json, ver_errata, ver_out);
    }
    if (c_sim->parsed()) {
      IntegrateOptions io = iopt;
      io.method = method_from_string(sim_method);
      return cmd_simulate(reg, sim_id, parse_param_overrides(sim_params), sim_z0, io,
                          sim_json, sim_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "hamcat: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

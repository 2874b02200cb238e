#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hamcat/algebra.hpp"
#include "hamcat/expr.hpp"
#include "hamcat/poisson.hpp"

namespace hamcat {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SystemKind { Realization, Group };
enum class Variant { Curated, AsPrinted };

/// A Hamiltonian given as a function of the generators Q1..Q4 (the form the
/// invariant is stated in) together with the substituted phase-space strings
/// the source states for it.  The curated substituted expression is always
/// derived mechanically from the Q's; the stated strings are audit data.
struct HamiltonianSpec {
  std::string casimir;               // over Q1..Q4 and parameters
  std::vector<std::string> printed;  // stated substituted forms, possibly empty
};

/// Raw catalog entry, formulas as strings.
struct SystemEntry {
  std::string id;
  SystemKind kind = SystemKind::Realization;
  std::string algebra;
  // algebra parameter -> fixed number or the name of a system parameter
  std::map<std::string, std::string> algebra_params;

  std::map<std::string, double> defaults;       // system parameters
  std::vector<std::string> constraints;
  std::map<std::string, std::string> derived;   // parameter -> formula in params

  int N = 2;
  std::vector<std::string> Q;  // 4 strings
  std::vector<HamiltonianSpec> H;
  std::vector<std::string> core;   // names among H, H2, Q1..Q4
  std::vector<std::string> extra;
  std::string claimed_class;
  bool casimir_h = false;

  // group systems
  std::vector<std::array<int, 2>> bivector_idx;
  std::vector<std::string> bivector_expr;
  std::vector<std::string> darboux;           // y1..y4
  std::vector<std::array<int, 2>> pairing;    // {y_i,y_j} = 1

  // as-printed overrides (1-based index -> string)
  std::map<int, std::string> printed_Q;
  std::map<int, std::string> printed_darboux;
  std::map<std::string, double> printed_params;  // extra symbols in printed text

  std::map<std::string, std::vector<Interval>> domain;  // sampling overrides
  std::vector<std::string> errata;  // transcription findings, prose
  std::vector<std::string> notes;   // informational
  bool builtin = false;
};

/// A system with every formula parsed and parameters bound.
struct MaterializedSystem {
  std::string id;
  SystemKind kind = SystemKind::Realization;
  Variant variant = Variant::Curated;
  int N = 2;

  std::vector<std::string> phase_vars;          // sampling/order layout
  std::map<std::string, double> params;         // system + derived
  std::map<std::string, double> algebra_values; // algebra params, resolved
  const LieAlgebra* algebra = nullptr;

  std::vector<Expr> Q;             // Q1..Q4
  std::vector<Expr> hamiltonians;  // one per HamiltonianSpec (substituted)
  std::vector<std::string> hamiltonian_names;  // "H", "H2", ...
  std::vector<std::string> casimir_forms;

  std::vector<std::pair<std::string, Expr>> listed_invariants;  // core + extra
  std::vector<std::string> core_names;
  std::vector<Expr> core_exprs;

  std::optional<PoissonBivector> bivector;
  std::vector<Expr> darboux;
  std::vector<std::array<int, 2>> pairing;

  SampleDomain domain;
  std::string claimed_class;
  bool casimir_h = false;
  std::vector<std::string> errata;
  std::vector<std::string> notes;

  /// Bracket of two expressions in this system's phase space.
  Expr bracket(const Expr& F, const Expr& G) const;
  /// Resolve "H", "H2", "Q1".. to the corresponding expression.
  Expr named(const std::string& name) const;
  /// The documented default phase point (per-variable domain midpoints).
  std::vector<double> default_state() const;
};

struct ListEntry {
  std::string id;
  SystemKind kind;
  std::string algebra;
  std::string claimed_class;
};

/// The system catalog: built-ins parsed from an embedded document at first
/// use, optionally extended by user files in the same JSON schema.
class Registry {
 public:
  static const Registry& builtin();

  Registry() = default;

  /// Merge a user catalog file. User ids and algebra names must not collide
  /// with existing ones. Throws CatalogError with a JSON-pointer-style path
  /// on schema violations.
  void load_file(const std::string& path);
  void load_json_text(const std::string& text, const std::string& origin);

  std::vector<ListEntry> list() const;
  bool has(const std::string& id) const;
  const SystemEntry& entry(const std::string& id) const;
  const LieAlgebra& algebra(const std::string& name) const;
  std::vector<std::string> algebra_names() const;

  MaterializedSystem materialize(const std::string& id,
                                 const std::map<std::string, double>& overrides = {},
                                 Variant variant = Variant::Curated) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, SystemEntry> systems_;
  std::map<std::string, LieAlgebra> algebras_;
  std::vector<std::string> algebra_order_;

  friend const char* builtin_catalog_json();
};

/// Raw JSON text of the built-in catalog (defined in builtin_catalog.cpp).
const char* builtin_catalog_json();

/// Shell-style glob (*, ?, [set]) used by the CLI filters.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace hamcat

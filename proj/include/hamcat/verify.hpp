#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hamcat/catalog.hpp"

namespace hamcat {

struct VerifyOptions {
  int n_samples = 100;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int rank_samples = 20;
};

struct CheckRecord {
  std::string name;
  double residual = 0.0;  // max over samples of |lhs-rhs|/(1+max(|lhs|,|rhs|))
  double tol = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;  // e.g. the worst pair
};

struct Note {
  std::string kind;  // "errata" | "class" | "info"
  std::string text;
};

struct VerificationReport {
  std::string system;
  int N = 0;
  std::vector<CheckRecord> checks;
  int k = 0;          // rank of the commuting pool
  int core_size = 0;  // verified involutive-core size (0 when the check fails)
  std::string class_computed;
  std::string class_claimed;
  std::vector<Note> notes;

  bool passed() const;
  bool has_note(const std::string& kind) const;
};

// Individual checks (each draws its own deterministic sample stream).
CheckRecord verify_closure(const MaterializedSystem& sys, const VerifyOptions& opt);
CheckRecord verify_involution_core(const MaterializedSystem& sys, const VerifyOptions& opt);
CheckRecord verify_invariance(const MaterializedSystem& sys, std::size_t h_index,
                              const VerifyOptions& opt);
CheckRecord verify_casimir_all_q(const MaterializedSystem& sys, std::size_t h_index,
                                 const VerifyOptions& opt);
CheckRecord verify_darboux(const MaterializedSystem& sys, const VerifyOptions& opt);
CheckRecord verify_bivector_jacobi(const MaterializedSystem& sys, const VerifyOptions& opt);

/// Max over sample points of the numerical rank of the Jacobian of `funcs`
/// with respect to `vars` (singular values, threshold 1e-8 * sigma_max).
int independence_rank(const std::vector<Expr>& funcs,
                      const std::vector<std::string>& vars,
                      const SampleDomain& dom,
                      const std::map<std::string, double>& params, int n_samples,
                      std::uint64_t seed);

/// Classification from computed quantities only:
/// integrable iff the involutive core of size N verified and k >= N;
/// superintegrable iff additionally k >= N+1; maximal iff k = 2N-1.
std::string classify(bool core_verified, int core_size, int N, int k);

/// Run every check for a catalog system (curated variant gates pass/fail;
/// as-printed deviations are audited and reported as errata notes).
VerificationReport verify_system(const Registry& reg, const std::string& id,
                                 const std::map<std::string, double>& params,
                                 const VerifyOptions& opt);

nlohmann::json report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

}  // namespace hamcat

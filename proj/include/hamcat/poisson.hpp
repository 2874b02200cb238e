#pragma once

#include <string>
#include <vector>

#include "hamcat/expr.hpp"

namespace hamcat {

/// Canonical phase space with N degrees of freedom, variables x1..xN, p1..pN.
///
/// Bracket convention, fixed project-wide:
///   {F,G} = sum_a  dF/dx_a * dG/dp_a  -  dF/dp_a * dG/dx_a
/// The sign is pinned by requiring the A4_1 realization on R^6 to close with
/// the catalog's structure constants (see tests).
struct CanonicalStructure {
  int N = 2;
};

Expr canonical_bracket(const Expr& F, const Expr& G, const CanonicalStructure& s);

/// Antisymmetric bivector P^{mu nu}(x) on coordinates x1..xn; only the upper
/// triangle is stored, the accessor expands antisymmetry.
class PoissonBivector {
 public:
  explicit PoissonBivector(int dim = 4);

  int dim() const { return dim_; }
  const std::vector<std::string>& coords() const { return coords_; }

  void set(int mu, int nu, Expr e);  // requires mu < nu (1-based)
  Expr entry(int mu, int nu) const;

 private:
  int dim_;
  std::vector<std::string> coords_;
  std::vector<Expr> upper_;  // packed mu<nu
  int pack(int mu, int nu) const;
};

/// {F,G} = sum_{mu<nu} P^{mu nu} (d_mu F d_nu G - d_nu F d_mu G)
Expr bivector_bracket(const Expr& F, const Expr& G, const PoissonBivector& P);

/// Max absolute value over coordinate triples and sample points of the cyclic
/// sum  P^{mu s} d_s P^{nu rho} + P^{nu s} d_s P^{rho mu} + P^{rho s} d_s P^{mu nu}.
double bivector_jacobi_defect(const PoissonBivector& P, const SampleDomain& dom,
                              int n_samples, std::uint64_t seed,
                              const std::map<std::string, double>& params = {});

}  // namespace hamcat

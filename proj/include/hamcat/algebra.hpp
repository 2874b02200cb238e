#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hamcat/expr.hpp"

namespace hamcat {

class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Admissibility predicates over parameter assignments, written as short
/// strings: "a != 0", "a*b*c != 0", "abs(b) <= 1", "a < b", "b > 0 if a == -1".
bool constraint_holds(const std::string& text,
                      const std::map<std::string, double>& params);
void check_constraints(const std::vector<std::string>& constraints,
                       const std::map<std::string, double>& params,
                       const std::string& context);

/// A four-dimensional real Lie algebra given by parameterized structure
/// constants f_ij^k.  Only the i<j triangle is stored; the accessor expands
/// antisymmetry, so f_ij^k = -f_ji^k holds by construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::vector<std::string> param_names,
             std::map<std::string, double> param_defaults,
             std::vector<std::string> constraints);

  /// Set f_ij^k for i<j (1-based indices).
  void set(int i, int j, int k, Expr f);

  /// f_ij^k with antisymmetric expansion; zero when i == j.
  Expr f(int i, int j, int k) const;

  const std::string& name() const { return name_; }
  int dim() const { return 4; }
  const std::vector<std::string>& param_names() const { return param_names_; }
  const std::map<std::string, double>& param_defaults() const {
    return param_defaults_;
  }
  const std::vector<std::string>& constraints() const { return constraints_; }

  /// Merge defaults with overrides and validate admissibility.
  std::map<std::string, double> resolve_params(
      const std::map<std::string, double>& overrides) const;

 private:
  std::string name_;
  std::vector<std::string> param_names_;
  std::map<std::string, double> param_defaults_;
  std::vector<std::string> constraints_;
  // upper triangle (i<j), 1-based
  std::map<std::array<int, 3>, Expr> upper_;
};

/// Max over all index tuples (i,j,k,l) of the absolute Jacobi sum
///   sum_m f_ij^m f_mk^l + f_jk^m f_mi^l + f_ki^m f_mj^l
/// evaluated at the given parameter values; 0 for a correct transcription.
double jacobi_defect(const LieAlgebra& alg,
                     const std::map<std::string, double>& params);

}  // namespace hamcat

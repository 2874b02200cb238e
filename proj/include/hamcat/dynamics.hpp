#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamcat/catalog.hpp"

namespace hamcat {

enum class Method { Rk4, ImplicitMidpoint };

Method method_from_string(const std::string& name);

struct Trajectory {
  std::string system;
  std::string method;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  std::optional<double> exit_time;  // set when the flow left the domain
  std::string exit_reason;
};

/// Hamiltonian vector field of a materialized system, compiled against the
/// system's phase-variable layout.  Canonical systems use
/// (dx_a, dp_a) = (dH/dp_a, -dH/dx_a); group systems use
/// dx_mu = sum_nu P^{mu nu} dH/dx_nu.
class Flow {
 public:
  Flow(const MaterializedSystem& sys, std::size_t h_index = 0);
  int dim() const { return static_cast<int>(rhs_.size()); }
  void eval(std::span<const double> z, std::span<double> out) const;

 private:
  std::vector<CompiledExpr> rhs_;
};

std::vector<double> vector_field(const MaterializedSystem& sys,
                                 std::span<const double> z,
                                 std::size_t h_index = 0);

struct IntegrateOptions {
  double dt = 1e-3;
  double T = 10.0;
  Method method = Method::Rk4;
  double stage_tol = 1e-12;  // implicit midpoint fixed-point tolerance
  int max_stage_iters = 50;
};

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrate from z0 over t = 0, dt, ..., floor(T/dt)*dt.  On a domain error
/// the partial trajectory is returned with exit_time/exit_reason set.
Trajectory integrate(const MaterializedSystem& sys, std::vector<double> z0,
                     const IntegrateOptions& opt, std::size_t h_index = 0);

/// Max over the trajectory of |I(z(t)) - I(z(0))| / (1 + |I(z(0))|), per
/// invariant name.
std::vector<std::pair<std::string, double>> drift_report(
    const MaterializedSystem& sys, const Trajectory& traj,
    const std::vector<std::pair<std::string, Expr>>& invariants);

/// CSV with header t,x1,...(,p1,...) and 17-significant-digit values.
void write_csv(std::ostream& os, const MaterializedSystem& sys, const Trajectory& traj);

}  // namespace hamcat

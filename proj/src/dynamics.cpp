#include "hamcat/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace hamcat {

Method method_from_string(const std::string& name) {
  if (name == "rk4") return Method::Rk4;
  if (name == "implicit_midpoint") return Method::ImplicitMidpoint;
  throw IntegrationError("unknown method '" + name + "'");
}

Flow::Flow(const MaterializedSystem& sys, std::size_t h_index) {
  const Expr& H = sys.hamiltonians.at(h_index);
  std::vector<Expr> field;
  if (sys.kind == SystemKind::Group) {
    for (int mu = 1; mu <= 4; ++mu) {
      Expr coord = Expr::variable("x" + std::to_string(mu));
      field.push_back(bivector_bracket(coord, H, *sys.bivector));
    }
  } else {
    for (int a = 1; a <= sys.N; ++a)
      field.push_back(differentiate(H, "p" + std::to_string(a)));
    for (int a = 1; a <= sys.N; ++a)
      field.push_back(-differentiate(H, "x" + std::to_string(a)));
  }
  for (const auto& f : field) rhs_.emplace_back(f, sys.phase_vars, sys.params);
}

void Flow::eval(std::span<const double> z, std::span<double> out) const {
  for (std::size_t i = 0; i < rhs_.size(); ++i) {
    out[i] = rhs_[i].eval(z);
    if (!std::isfinite(out[i])) throw EvalError("non-finite vector field component");
  }
}

std::vector<double> vector_field(const MaterializedSystem& sys,
                                 std::span<const double> z, std::size_t h_index) {
  Flow flow(sys, h_index);
  std::vector<double> out(static_cast<std::size_t>(flow.dim()));
  flow.eval(z, out);
  return out;
}

namespace {

void rk4_step(const Flow& f, std::vector<double>& z, double dt,
              std::vector<double>& k1, std::vector<double>& k2,
              std::vector<double>& k3, std::vector<double>& k4,
              std::vector<double>& tmp) {
  std::size_t n = z.size();
  f.eval(z, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] + 0.5 * dt * k1[i];
  f.eval(tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] + 0.5 * dt * k2[i];
  f.eval(tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] + dt * k3[i];
  f.eval(tmp, k4);
  for (std::size_t i = 0; i < n; ++i)
    z[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

void midpoint_step(const Flow& f, std::vector<double>& z, double dt,
                   double stage_tol, int max_iters, std::vector<double>& s,
                   std::vector<double>& s_next, std::vector<double>& mid) {
  std::size_t n = z.size();
  f.eval(z, s);  // initial guess: explicit Euler stage
  for (int it = 0;; ++it) {
    for (std::size_t i = 0; i < n; ++i) mid[i] = z[i] + 0.5 * dt * s[i];
    f.eval(mid, s_next);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      delta = std::max(delta, std::abs(s_next[i] - s[i]));
    std::swap(s, s_next);
    if (delta <= stage_tol) break;
    if (it + 1 >= max_iters)
      throw IntegrationError("implicit midpoint stage did not converge");
  }
  for (std::size_t i = 0; i < n; ++i) z[i] += dt * s[i];
}

}  // namespace

Trajectory integrate(const MaterializedSystem& sys, std::vector<double> z0,
                     const IntegrateOptions& opt, std::size_t h_index) {
  if (!(opt.dt > 0.0) || opt.T < opt.dt)
    throw IntegrationError("integration requires dt > 0 and T >= dt");
  Flow flow(sys, h_index);
  std::size_t n = static_cast<std::size_t>(flow.dim());
  if (z0.size() != n)
    throw IntegrationError("initial state has wrong dimension (expected " +
                           std::to_string(n) + ")");

  Trajectory traj;
  traj.system = sys.id;
  traj.method = opt.method == Method::Rk4 ? "rk4" : "implicit_midpoint";
  traj.dt = opt.dt;
  long long steps = static_cast<long long>(std::floor(opt.T / opt.dt + 1e-12));
  traj.times.push_back(0.0);
  traj.states.push_back(z0);

  std::vector<double> z = z0, k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (long long step = 1; step <= steps; ++step) {
    try {
      if (opt.method == Method::Rk4)
        rk4_step(flow, z, opt.dt, k1, k2, k3, k4, tmp);
      else
        midpoint_step(flow, z, opt.dt, opt.stage_tol, opt.max_stage_iters, k1, k2, tmp);
    } catch (const EvalError& e) {
      traj.exit_time = static_cast<double>(step) * opt.dt;
      traj.exit_reason = e.what();
      return traj;
    }
    traj.times.push_back(static_cast<double>(step) * opt.dt);
    traj.states.push_back(z);
  }
  return traj;
}

std::vector<std::pair<std::string, double>> drift_report(
    const MaterializedSystem& sys, const Trajectory& traj,
    const std::vector<std::pair<std::string, Expr>>& invariants) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, expr] : invariants) {
    CompiledExpr c(expr, sys.phase_vars, sys.params);
    double i0 = c.eval(traj.states.front());
    double denom = 1.0 + std::abs(i0);
    double worst = 0.0;
    for (const auto& z : traj.states)
      worst = std::max(worst, std::abs(c.eval(z) - i0) / denom);
    out.emplace_back(name, worst);
  }
  return out;
}

void write_csv(std::ostream& os, const MaterializedSystem& sys, const Trajectory& traj) {
  os << 't';
  for (const auto& v : sys.phase_vars) os << ',' << v;
  os << '\n';
  char buf[32];
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", traj.times[i]);
    os << buf;
    for (double v : traj.states[i]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace hamcat

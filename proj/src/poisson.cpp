#include "hamcat/poisson.hpp"

#include <cmath>
#include <limits>

namespace hamcat {

Expr canonical_bracket(const Expr& F, const Expr& G, const CanonicalStructure& s) {
  Expr sum = Expr::constant(0);
  for (int a = 1; a <= s.N; ++a) {
    std::string x = "x" + std::to_string(a);
    std::string p = "p" + std::to_string(a);
    sum = sum + differentiate(F, x) * differentiate(G, p) -
          differentiate(F, p) * differentiate(G, x);
  }
  return sum;
}

PoissonBivector::PoissonBivector(int dim) : dim_(dim) {
  for (int mu = 1; mu <= dim; ++mu) coords_.push_back("x" + std::to_string(mu));
  upper_.assign(static_cast<std::size_t>(dim * (dim - 1) / 2), Expr::constant(0));
}

int PoissonBivector::pack(int mu, int nu) const {
  // index of (mu,nu), mu<nu, in row-major upper triangle
  int idx = 0;
  for (int r = 1; r < mu; ++r) idx += dim_ - r;
  return idx + (nu - mu - 1);
}

void PoissonBivector::set(int mu, int nu, Expr e) {
  if (!(mu >= 1 && nu >= 1 && mu <= dim_ && nu <= dim_ && mu < nu))
    throw EvalError("bivector entries are set with 1 <= mu < nu <= dim");
  upper_[static_cast<std::size_t>(pack(mu, nu))] = std::move(e);
}

Expr PoissonBivector::entry(int mu, int nu) const {
  if (mu == nu) return Expr::constant(0);
  if (mu < nu) return upper_[static_cast<std::size_t>(pack(mu, nu))];
  return -upper_[static_cast<std::size_t>(pack(nu, mu))];
}

Expr bivector_bracket(const Expr& F, const Expr& G, const PoissonBivector& P) {
  const auto& x = P.coords();
  std::vector<Expr> dF, dG;
  for (int mu = 0; mu < P.dim(); ++mu) {
    dF.push_back(differentiate(F, x[static_cast<std::size_t>(mu)]));
    dG.push_back(differentiate(G, x[static_cast<std::size_t>(mu)]));
  }
  Expr sum = Expr::constant(0);
  for (int mu = 1; mu <= P.dim(); ++mu)
    for (int nu = mu + 1; nu <= P.dim(); ++nu) {
      std::size_t m = static_cast<std::size_t>(mu - 1), n = static_cast<std::size_t>(nu - 1);
      sum = sum + P.entry(mu, nu) * (dF[m] * dG[n] - dF[n] * dG[m]);
    }
  return sum;
}

double bivector_jacobi_defect(const PoissonBivector& P, const SampleDomain& dom,
                              int n_samples, std::uint64_t seed,
                              const std::map<std::string, double>& params) {
  const auto& x = P.coords();
  double worst = 0.0;
  for (int mu = 1; mu <= P.dim(); ++mu)
    for (int nu = mu + 1; nu <= P.dim(); ++nu)
      for (int rho = nu + 1; rho <= P.dim(); ++rho) {
        Expr cyc = Expr::constant(0);
        for (int sig = 1; sig <= P.dim(); ++sig) {
          const std::string& xs = x[static_cast<std::size_t>(sig - 1)];
          cyc = cyc + P.entry(mu, sig) * differentiate(P.entry(nu, rho), xs) +
                P.entry(nu, sig) * differentiate(P.entry(rho, mu), xs) +
                P.entry(rho, sig) * differentiate(P.entry(mu, nu), xs);
        }
        std::string tag = "jacobi:" + std::to_string(mu) + std::to_string(nu) +
                          std::to_string(rho);
        auto res = equal_on_samples(cyc, Expr::constant(0), dom, n_samples,
                                    std::numeric_limits<double>::infinity(),
                                    mix_seed(seed, tag), params, x);
        worst = std::max(worst, res.max_residual);
      }
  return worst;
}

}  // namespace hamcat

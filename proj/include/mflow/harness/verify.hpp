#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mflow/flow_solver.hpp"
#include "mflow/measure.hpp"
#include "mflow/pseudometric.hpp"

namespace mflow::harness {

// Independent exact re-checks of solver output, built only from measure
// primitives. `tol` is 0 for exact results and the float tolerance for
// results that were computed in floating point and converted exactly.
struct Check {
  std::string name;
  bool ok;
};

class Verification {
 public:
  void add(std::string name, bool ok) { checks_.push_back({std::move(name), ok}); }
  void merge(const Verification& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }
  bool passed() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }

 private:
  std::vector<Check> checks_;
};

using Q = Rational;
using M1 = Measure1<Rational>;
using M2 = Measure2<Rational>;

Verification check_bounds(const M2& lower, const M2& upper, const M2& x, const Q& tol);
Verification check_circulation(const M2& alpha, const Q& tol);
// x^1 - x^2 = net
Verification check_net_flow(const M2& x, const M1& net, const Q& tol);
Verification check_marginals(const M2& mu, const M1& alpha, const M1& beta, const Q& tol);
Verification check_value(const M2& x, const M2& v, const Q& target, const Q& tol, const std::string& what);

// X with phi(X x X^c) > psi(X^c x X).
Verification check_hoffman_cut(const M2& phi, const M2& psi, const AtomSet& x, const Q& lhs, const Q& rhs,
                               const Q& tol);
// JJFB-type: psi(|F + b v|_+) < phi(|F + b v|_-) + b c.
Verification check_jjfb(const M2& phi, const M2& psi, const M2& v, const Q& c, const std::vector<Q>& f, int b,
                        const Q& lhs, const Q& rhs, const Q& tol);
// psi(|f(y) - f(x) + b v|_+) < tau(f) - sigma(f) + b target.
Verification check_mincost_potential(const M2& psi, const M1& sigma, const M1& tau, const M2& v, const Q& target,
                                     const std::vector<Q>& f, int b, const Q& lhs, const Q& rhs, const Q& tol);
// sigma(S) - tau(S) > psi(S x S^c).
Verification check_supply_cut(const M2& psi, const M1& sigma, const M1& tau, const AtomSet& s, const Q& lhs,
                              const Q& rhs, const Q& tol);
// psi(S x T) < alpha(S) + beta(T) - alpha(J).
Verification check_rectangle(const M2& psi, const M1& alpha, const M1& beta, const AtomSet& s, const AtomSet& t,
                             const Q& lhs, const Q& rhs, const Q& tol);
// S x T misses E and alpha(S) + beta(T) > 1.
Verification check_strassen_rectangle(const M1& alpha, const M1& beta, const PairSet& e, const AtomSet& s,
                                      const AtomSet& t, const Q& lhs, const Q& tol);
Verification check_support(const M2& mu, const PairSet& e, const Q& tol);
Verification check_max_flow(const M2& psi, std::size_t s, std::size_t t, const M2& flow, const Q& value,
                            const AtomSet& cut, const Q& tol);
// Dual feasibility g(x) + h(y) <= c(x,y) and primal cost = dual value.
Verification check_transship_duality(const M1& alpha, const M1& beta, const M2& c, const M2& mu, const Q& cost,
                                     const std::vector<Q>& g, const std::vector<Q>& h, const Q& tol);
// Walks use support pairs, E(tau) = phi.
Verification check_walks(const M2& phi, const std::vector<std::vector<std::size_t>>& walks, const std::vector<Q>& w,
                         const Q& tol);
// Nonzero circulation dominated by phi.
Verification check_cycle(const M2& phi, const M2& cycle, const Q& tol);
Verification check_metric_certificate(const M2& sigma, const M2& psi, const Pseudometric<Q>& d, const Q& lhs,
                                      const Q& rhs, const Q& tol);

bool near(const Q& a, const Q& b, const Q& tol);

}  // namespace mflow::harness

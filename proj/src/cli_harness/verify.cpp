#include "mflow/harness/verify.hpp"

namespace mflow::harness {

bool Verification::passed() const {
  for (const auto& c : checks_) {
    if (!c.ok) return false;
  }
  return true;
}

bool near(const Q& a, const Q& b, const Q& tol) {
  if (tol == 0) return a == b;
  const Q scale = Q(1) + std::max(abs_value(a), abs_value(b));
  return abs_value(a - b) <= tol * scale;
}

namespace {

// Table of F(x,y) + b v(x,y) with F(x,y) = f(x) - f(y).
M2 shifted(const SpacePtr& sp, const std::vector<Q>& f, int b, const M2& v) {
  M2 g(sp);
  for (std::size_t x = 0; x < sp->size(); ++x)
    for (std::size_t y = 0; y < sp->size(); ++y) g(x, y) = f.at(x) - f.at(y) + Q(b) * v(x, y);
  return g;
}

}  // namespace

Verification check_bounds(const M2& lower, const M2& upper, const M2& x, const Q& tol) {
  Verification v;
  bool lo = true, hi = true;
  for (std::size_t k = 0; k < x.weights().size(); ++k) {
    const Q& w = x.weights()[k];
    if (w < lower.weights()[k] - tol) lo = false;
    if (w > upper.weights()[k] + tol) hi = false;
  }
  v.add("lower bound respected", lo);
  v.add("upper bound respected", hi);
  return v;
}

Verification check_circulation(const M2& alpha, const Q& tol) {
  Verification v;
  auto [out, in] = marginals(alpha);
  v.add("marginals equal", tv_norm(out - in) <= tol * Q(static_cast<long>(alpha.size() + 1)));
  return v;
}

Verification check_net_flow(const M2& x, const M1& net, const Q& tol) {
  Verification v;
  auto [out, in] = marginals(x);
  v.add("net outflow matches", tv_norm(out - in - net) <= tol * Q(static_cast<long>(x.size() + 1)));
  return v;
}

Verification check_marginals(const M2& mu, const M1& alpha, const M1& beta, const Q& tol) {
  Verification v;
  auto [first, second] = marginals(mu);
  const Q slack = tol * Q(static_cast<long>(mu.size() + 1));
  v.add("first marginal matches", tv_norm(first - alpha) <= slack);
  v.add("second marginal matches", tv_norm(second - beta) <= slack);
  return v;
}

Verification check_value(const M2& x, const M2& val, const Q& target, const Q& tol, const std::string& what) {
  Verification v;
  v.add(what, near(x.integrate(val), target, tol * Q(static_cast<long>(x.size() * x.size() + 1))));
  return v;
}

Verification check_hoffman_cut(const M2& phi, const M2& psi, const AtomSet& x, const Q& lhs, const Q& rhs,
                               const Q& tol) {
  Verification v;
  const AtomSet xc = x.complement();
  const Q l = phi.rect(x, xc), r = psi.rect(xc, x);
  v.add("reported sides match", near(l, lhs, tol) && near(r, rhs, tol));
  v.add("cut inequality violated", l > r);
  return v;
}

Verification check_jjfb(const M2& phi, const M2& psi, const M2& val, const Q& c, const std::vector<Q>& f, int b,
                        const Q& lhs, const Q& rhs, const Q& tol) {
  Verification v;
  const M2 g = shifted(phi.space(), f, b, val);
  const Q l = psi.integrate(positive_part(g));
  const Q r = phi.integrate(negative_part(g)) + Q(b) * c;
  v.add("b in {-1,0,1}", b >= -1 && b <= 1);
  v.add("reported sides match", near(l, lhs, tol) && near(r, rhs, tol));
  v.add("potential inequality violated", l < r);
  return v;
}

Verification check_mincost_potential(const M2& psi, const M1& sigma, const M1& tau, const M2& val, const Q& target,
                                     const std::vector<Q>& f, int b, const Q& lhs, const Q& rhs, const Q& tol) {
  Verification v;
  const std::size_t n = psi.size();
  M2 g(psi.space());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) g(x, y) = f.at(y) - f.at(x) + Q(b) * val(x, y);
  const Q l = psi.integrate(positive_part(g));
  const Q r = tau.integrate(f) - sigma.integrate(f) + Q(b) * target;
  v.add("b in {-1,0,1}", b >= -1 && b <= 1);
  v.add("reported sides match", near(l, lhs, tol) && near(r, rhs, tol));
  v.add("potential inequality violated", l < r);
  return v;
}

Verification check_supply_cut(const M2& psi, const M1& sigma, const M1& tau, const AtomSet& s, const Q& lhs,
                              const Q& rhs, const Q& tol) {
  Verification v;
  const Q l = sigma.of(s) - tau.of(s), r = psi.rect(s, s.complement());
  v.add("reported sides match", near(l, lhs, tol) && near(r, rhs, tol));
  v.add("cut inequality violated", l > r);
  return v;
}

Verification check_rectangle(const M2& psi, const M1& alpha, const M1& beta, const AtomSet& s, const AtomSet& t,
                             const Q& lhs, const Q& rhs, const Q& tol) {
  Verification v;
  const Q l = psi.rect(s, t), r = alpha.of(s) + beta.of(t) - alpha.total();
  v.add("reported sides match", near(l, lhs, tol) && near(r, rhs, tol));
  v.add("rectangle inequality violated", l < r);
  return v;
}

Verification check_strassen_rectangle(const M1& alpha, const M1& beta, const PairSet& e, const AtomSet& s,
                                      const AtomSet& t, const Q& lhs, const Q& tol) {
  Verification v;
  bool disjoint = true;
  for (auto x : s.indices())
    for (auto y : t.indices())
      if (e.contains(x, y)) disjoint = false;
  const Q l = alpha.of(s) + beta.of(t);
  v.add("rectangle avoids E", disjoint);
  v.add("reported side matches", near(l, lhs, tol));
  v.add("alpha(S) + beta(T) > 1", l > 1);
  return v;
}

Verification check_support(const M2& mu, const PairSet& e, const Q& tol) {
  Verification v;
  bool ok = true;
  for (std::size_t x = 0; x < mu.size(); ++x)
    for (std::size_t y = 0; y < mu.size(); ++y)
      if (!e.contains(x, y) && abs_value(mu(x, y)) > tol) ok = false;
  v.add("supported on E", ok);
  return v;
}

Verification check_max_flow(const M2& psi, std::size_t s, std::size_t t, const M2& flow, const Q& value,
                            const AtomSet& cut, const Q& tol) {
  Verification v = check_bounds(M2(psi.space()), psi, flow, tol);
  M1 net(psi.space());
  net(s) = value;
  net(t) = -value;
  v.merge(check_net_flow(flow, net, tol));
  v.add("cut separates s from t", cut.contains(s) && !cut.contains(t));
  v.add("cut capacity equals value", near(psi.rect(cut, cut.complement()), value, tol * Q(static_cast<long>(psi.size() + 1))));
  return v;
}

Verification check_transship_duality(const M1& alpha, const M1& beta, const M2& c, const M2& mu, const Q& cost,
                                     const std::vector<Q>& g, const std::vector<Q>& h, const Q& tol) {
  Verification v;
  const std::size_t n = alpha.size();
  bool feasible = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (g.at(x) + h.at(y) > c(x, y) + tol) feasible = false;
  const Q slack = tol * Q(static_cast<long>(n * n + 1));
  v.add("dual feasible", feasible);
  v.add("reported cost matches", near(mu.integrate(c), cost, slack));
  v.add("primal cost equals dual value", near(mu.integrate(c), alpha.integrate(g) + beta.integrate(h), slack));
  return v;
}

Verification check_walks(const M2& phi, const std::vector<std::vector<std::size_t>>& walks, const std::vector<Q>& w,
                         const Q& tol) {
  Verification v;
  M2 e(phi.space());
  bool support = true, positive = true, simple = true;
  for (std::size_t k = 0; k < walks.size(); ++k) {
    if (!(w[k] > 0)) positive = false;
    std::vector<bool> seen(phi.size(), false);
    for (std::size_t i = 0; i < walks[k].size(); ++i) {
      if (seen[walks[k][i]]) simple = false;
      seen[walks[k][i]] = true;
      if (i + 1 == walks[k].size()) continue;
      if (!(phi(walks[k][i], walks[k][i + 1]) > 0)) support = false;
      e(walks[k][i], walks[k][i + 1]) += w[k];
    }
  }
  v.add("walk weights positive", positive);
  v.add("walks follow the support", support);
  v.add("walks are paths", simple);
  v.add("edge traversals reproduce the flow", tv_norm(e - phi) <= tol * Q(static_cast<long>(phi.size() * phi.size() + 1)));
  return v;
}

Verification check_cycle(const M2& phi, const M2& cycle, const Q& tol) {
  Verification v = check_circulation(cycle, tol);
  v.merge(check_bounds(M2(phi.space()), phi, cycle, tol));
  v.add("witness is nonzero", cycle.total() > 0);
  return v;
}

Verification check_metric_certificate(const M2& sigma, const M2& psi, const Pseudometric<Q>& d, const Q& lhs,
                                      const Q& rhs, const Q& tol) {
  Verification v;
  v.add("certificate is a pseudometric", !is_pseudometric(d, tol).has_value());
  const Q l = sigma.integrate(d.d), r = psi.integrate(d.d);
  v.add("reported sides match", near(l, lhs, tol) && near(r, rhs, tol));
  v.add("volume condition violated", l > r);
  return v;
}

}  // namespace mflow::harness

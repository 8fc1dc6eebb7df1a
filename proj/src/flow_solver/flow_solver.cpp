#include "mflow/flow_solver.hpp"

#include <algorithm>

#include "mflow/bounded_simplex.hpp"
#include "mflow/push_relabel.hpp"

namespace mflow {

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::JJFB1: return "JJFB1";
    case Condition::JJFB2: return "JJFB2";
    case Condition::JJFB3: return "JJFB3";
    case Condition::ERG: return "ERG";
    case Condition::MINCOST: return "MINCOST";
  }
  return "?";
}

namespace {

template <Scalar T>
void require_order(const Measure2<T>& phi, const Measure2<T>& psi) {
  require_same_space(phi.space(), psi.space());
  for (std::size_t x = 0; x < phi.size(); ++x) {
    for (std::size_t y = 0; y < phi.size(); ++y) {
      if (phi(x, y) > psi(x, y)) {
        throw Error(ErrorCode::BoundOrderViolation, "lower bound exceeds upper bound at (" +
                                                        phi.space()->label(x) + "," + phi.space()->label(y) + ")");
      }
    }
  }
}

template <Scalar T>
void require_capacity(const Measure2<T>& psi) {
  if (!psi.is_nonnegative()) throw Error(ErrorCode::NegativeCapacity, "capacity measure has a negative weight");
}

template <Scalar T>
void require_nonnegative(const Measure1<T>& m, const char* what) {
  if (!m.is_nonnegative()) throw Error(ErrorCode::NegativeMeasure, std::string(what) + " has a negative weight");
}

template <Scalar T>
void require_equal_mass(const Measure1<T>& a, const Measure1<T>& b, const T& tol) {
  require_same_space(a.space(), b.space());
  if (abs_value(a.total() - b.total()) > tol) {
    throw Error(ErrorCode::MassMismatch, "total masses differ (" + format_number(a.total()) + " vs " +
                                             format_number(b.total()) + ")");
  }
}

template <Scalar T>
Potential<T> indicator_potential(const SpacePtr& space, const AtomSet& set) {
  std::vector<T> f(space->size(), T(0));
  for (auto x : set.indices()) f[x] = T(1);
  return Potential<T>(space, std::move(f));
}

// Maximize sign * alpha(v) over circulations in the box [phi, psi]. Returns
// the optimum, the maximizer and the potential read off the row prices.
template <Scalar T>
struct BoxCirculationOptimum {
  T value;
  Measure2<T> alpha;
  Potential<T> f;
};

template <Scalar T>
BoxCirculationOptimum<T> optimize_box_circulation(const Measure2<T>& phi, const Measure2<T>& psi,
                                                  const PairFunction<T>& v, int sign, const T& tol) {
  const std::size_t n = phi.size();
  BoxLp<T> lp(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = x * n + y;
      lp.lower[j] = phi(x, y);
      lp.upper[j] = psi(x, y);
      lp.objective[j] = sign > 0 ? v(x, y) : T(-v(x, y));
    }
  }
  // Balance rows alpha^1(x) - alpha^2(x) = 0; the last one is implied.
  for (std::size_t x = 0; x + 1 < n; ++x) {
    std::vector<T> row(n * n, T(0));
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      row[x * n + y] += T(1);
      row[y * n + x] -= T(1);
    }
    lp.add_row(std::move(row), T(0));
  }
  auto res = solve_box_lp(lp, kernel_tolerance(tol));
  if (res.status != LpStatus::Optimal) throw std::logic_error("box circulation LP lost feasibility");
  std::vector<T> f(n, T(0));
  for (std::size_t x = 0; x + 1 < n; ++x) f[x] = -res.duals[x];
  return {res.value, Measure2<T>(phi.space(), res.x), Potential<T>(phi.space(), std::move(f)).normalized()};
}

template <Scalar T>
Measure2<T> blend(const Measure2<T>& hi, const Measure2<T>& lo, const T& lambda) {
  return lambda * hi + (T(1) - lambda) * lo;
}

}  // namespace

template <Scalar T>
CirculationOutcome<T> feasible_circulation(const Measure2<T>& phi, const Measure2<T>& psi, const T& tol) {
  require_order(phi, psi);
  const std::size_t n = phi.size();
  const T kt = kernel_tolerance(tol);
  // alpha = phi + beta, 0 <= beta <= psi - phi, with beta balancing the
  // imbalance of phi.
  FlowNetwork<T> net(n + 2);
  const std::size_t src = n, snk = n + 1;
  std::vector<std::size_t> arc(n * n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      T room = psi(x, y) - phi(x, y);
      if (room > 0) arc[x * n + y] = net.add_arc(x, y, room);
    }
  }
  auto [out, in] = marginals(phi);
  T demand(0);
  for (std::size_t x = 0; x < n; ++x) {
    T d = in(x) - out(x);
    if (d > 0) {
      net.add_arc(src, x, d);
      demand += d;
    } else if (d < 0) {
      net.add_arc(x, snk, T(-d));
    }
  }
  T value = net.max_flow(src, snk, kt);
  if (value + tol >= demand && (!is_exact_v<T> || value == demand)) {
    Measure2<T> alpha = phi;
    for (std::size_t k = 0; k < n * n; ++k) {
      if (arc[k] != SIZE_MAX) alpha(k / n, k % n) += net.flow(arc[k]);
    }
    return alpha;
  }
  auto reach = net.residual_reachable(src, kt);
  AtomSet x_set(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!reach[x]) x_set.insert(x);
  }
  const AtomSet xc = x_set.complement();
  return CutCertificate<T>{x_set, phi.rect(x_set, xc), psi.rect(xc, x_set)};
}

template <Scalar T>
ValuedOutcome<T> valued_circulation(const Measure2<T>& phi, const Measure2<T>& psi, const PairFunction<T>& v,
                                    const T& c, const T& tol) {
  require_order(phi, psi);
  require_same_space(phi.space(), v.space());
  const auto& space = phi.space();

  auto hoffman = feasible_circulation(phi, psi, tol);
  if (!hoffman.feasible()) {
    // f = 1 on X^c turns the cut into psi(|F|_+) = psi(X^c x X) < phi(X x X^c) = phi(|F|_-).
    auto f = indicator_potential<T>(space, hoffman.certificate().set.complement());
    T lhs = psi.integrate(positive_part(f.as_pair_function()));
    T rhs = phi.integrate(negative_part(f.as_pair_function()));
    return PotentialCertificate<T>{f, 0, Condition::JJFB3, lhs, rhs};
  }

  auto hi = optimize_box_circulation(phi, psi, v, +1, tol);
  if (c > hi.value + tol) {
    const Measure2<T> g = hi.f.as_pair_function() + v;
    return PotentialCertificate<T>{hi.f, 1, Condition::JJFB1, psi.integrate(positive_part(g)),
                                   T(phi.integrate(negative_part(g)) + c)};
  }
  auto lo = optimize_box_circulation(phi, psi, v, -1, tol);
  const T min_value = -lo.value;
  if (c < min_value - tol) {
    const Measure2<T> g = lo.f.as_pair_function() - v;
    return PotentialCertificate<T>{lo.f, -1, Condition::JJFB2, psi.integrate(positive_part(g)),
                                   T(phi.integrate(negative_part(g)) - c)};
  }
  if (hi.value == min_value) return hi.alpha;
  T lambda = (c - min_value) / (hi.value - min_value);
  if (lambda < 0) lambda = T(0);
  if (lambda > 1) lambda = T(1);
  return blend(hi.alpha, lo.alpha, lambda);
}

template <Scalar T>
ValuedOutcome<T> ergodic_circulation(const Measure2<T>& psi, const T& tol) {
  require_capacity(psi);
  const auto& space = psi.space();
  auto res = valued_circulation(Measure2<T>(space), psi, Measure2<T>::constant(space, T(1)), T(1), tol);
  if (res.feasible()) return res;
  auto cert = res.certificate();
  cert.violated = Condition::ERG;
  cert.rhs = T(1);
  return cert;
}

template <Scalar T>
T partition_condition(const Measure2<T>& psi, const std::vector<AtomSet>& partition) {
  const std::size_t n = psi.size();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].universe() != n) throw Error(ErrorCode::PartitionInvalid, "part has the wrong universe");
    for (auto x : partition[i].indices()) {
      if (owner[x] >= 0) throw Error(ErrorCode::PartitionInvalid, "parts overlap at " + psi.space()->label(x));
      owner[x] = static_cast<int>(i);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (owner[x] < 0) throw Error(ErrorCode::PartitionInvalid, "atom " + psi.space()->label(x) + " is uncovered");
  }
  T total(0);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (std::size_t j = i; j < partition.size(); ++j) {
      T mass = psi.rect(partition[j], partition[i]);
      if (mass != 0) total += T(static_cast<double>(j - i + 1)) * mass;
    }
  }
  return total;
}

template <Scalar T>
T jjfb_slack(const Potential<T>& f, int b, const PairFunction<T>& v, const Measure2<T>& phi, const Measure2<T>& psi) {
  Measure2<T> g = f.as_pair_function();
  if (b != 0) g += T(static_cast<double>(b)) * v;
  return psi.integrate(positive_part(g)) - phi.integrate(negative_part(g));
}

namespace {

template <Scalar T>
Potential<T> floor_shift(const Potential<T>& f, const T& a) {
  std::vector<T> out;
  for (const auto& x : f.values()) out.push_back(floor_of(T(x + a)));
  return Potential<T>(f.space(), std::move(out));
}

template <Scalar T>
void require_integer_table(const PairFunction<T>& v) {
  for (const auto& x : v.weights()) {
    if (!is_integer(x)) throw Error(ErrorCode::NonIntegerCost, "value table has a non-integer entry");
  }
}

}  // namespace

template <Scalar T>
IntegralPotential<T> integralize_potential(const Potential<T>& f, const PairFunction<T>& v, const Measure2<T>& phi,
                                           const Measure2<T>& psi) {
  require_integer_table(v);
  std::vector<T> shifts{T(0)};
  for (const auto& x : f.values()) {
    T neg = -x;
    shifts.push_back(neg - floor_of(neg));
  }
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

  std::optional<IntegralPotential<T>> best;
  T best_slack(0);
  for (const auto& a : shifts) {
    auto candidate = floor_shift(f, a);
    T slack = jjfb_slack(candidate, 1, v, phi, psi);
    if (!best || slack < best_slack) {
      best = IntegralPotential<T>{std::move(candidate), a};
      best_slack = slack;
    }
  }
  return *best;
}

template <Scalar T>
FractionalSplit<T> fractional_split(const Potential<T>& f, const T& shift, const PairFunction<T>& v,
                                    const Measure2<T>& phi, const Measure2<T>& psi) {
  const std::size_t n = phi.size();
  auto whole = floor_shift(f, shift);
  std::vector<T> frac;
  for (std::size_t x = 0; x < n; ++x) frac.push_back(f(x) + shift - whole(x));

  FractionalSplit<T> out{jjfb_slack(f, 1, v, phi, psi), jjfb_slack(whole, 1, v, phi, psi), T(0), T(0)};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const T tilde = frac[x] - frac[y];
      if (f.pair(x, y) + v(x, y) > 0) {
        out.psi_part += psi(x, y) * tilde;
      } else {
        out.phi_part += phi(x, y) * tilde;
      }
    }
  }
  return out;
}

template <Scalar T>
MaxFlowResult<T> max_flow(const Measure2<T>& psi, std::size_t s, std::size_t t, const T& tol) {
  require_capacity(psi);
  const std::size_t n = psi.size();
  if (s >= n || t >= n) throw Error(ErrorCode::InvalidArgument, "endpoint out of range");
  if (s == t) throw Error(ErrorCode::SameEndpoints, "source and sink coincide");
  const T kt = kernel_tolerance(tol);
  FlowNetwork<T> net(n);
  std::vector<std::size_t> arc(n * n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && psi(x, y) > 0) arc[x * n + y] = net.add_arc(x, y, psi(x, y));
    }
  }
  T value = net.max_flow(s, t, kt);
  Measure2<T> flow(psi.space());
  for (std::size_t k = 0; k < n * n; ++k) {
    if (arc[k] != SIZE_MAX) flow(k / n, k % n) = net.flow(arc[k]);
  }
  auto reach = net.residual_reachable(s, kt);
  AtomSet cut(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (reach[x]) cut.insert(x);
  }
  return {std::move(flow), std::move(value), std::move(cut)};
}

template <Scalar T>
CirculationOutcome<T> supply_demand_flow(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                                         const T& tol) {
  require_capacity(psi);
  require_nonnegative(sigma, "supply");
  require_nonnegative(tau, "demand");
  require_equal_mass(sigma, tau, tol);
  require_same_space(psi.space(), sigma.space());
  const std::size_t n = psi.size();
  const T kt = kernel_tolerance(tol);
  // Two new points: s feeds every atom by sigma, every atom drains to t by tau.
  FlowNetwork<T> net(n + 2);
  const std::size_t s = n, t = n + 1;
  std::vector<std::size_t> arc(n * n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && psi(x, y) > 0) arc[x * n + y] = net.add_arc(x, y, psi(x, y));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (sigma(x) > 0) net.add_arc(s, x, sigma(x));
    if (tau(x) > 0) net.add_arc(x, t, tau(x));
  }
  const T value = net.max_flow(s, t, kt);
  const T need = sigma.total();
  if (value + tol >= need && (!is_exact_v<T> || value == need)) {
    Measure2<T> flow(psi.space());
    for (std::size_t k = 0; k < n * n; ++k) {
      if (arc[k] != SIZE_MAX) flow(k / n, k % n) = net.flow(arc[k]);
    }
    return flow;
  }
  auto reach = net.residual_reachable(s, kt);
  AtomSet set(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (reach[x]) set.insert(x);
  }
  return CutCertificate<T>{set, T(sigma.of(set) - tau.of(set)), psi.rect(set, set.complement())};
}

namespace {

template <Scalar T>
struct FlowValueOptimum {
  T value;
  Measure2<T> flow;
  Potential<T> f;
};

// Maximize sign * phi(v) over feasible sigma-tau flows. The returned
// potential satisfies psi(|f(y) - f(x) + sign v|_+) = value + tau(f) - sigma(f).
template <Scalar T>
FlowValueOptimum<T> optimize_flow_value(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                                        const PairFunction<T>& v, int sign, const T& tol) {
  const std::size_t n = psi.size();
  BoxLp<T> lp(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t j = x * n + y;
      lp.lower[j] = T(0);
      lp.upper[j] = psi(x, y);
      lp.objective[j] = sign > 0 ? v(x, y) : T(-v(x, y));
    }
  }
  for (std::size_t x = 0; x + 1 < n; ++x) {
    std::vector<T> row(n * n, T(0));
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      row[x * n + y] += T(1);
      row[y * n + x] -= T(1);
    }
    lp.add_row(std::move(row), T(sigma(x) - tau(x)));
  }
  auto res = solve_box_lp(lp, kernel_tolerance(tol));
  if (res.status != LpStatus::Optimal) throw std::logic_error("flow value LP lost feasibility");
  std::vector<T> f(n, T(0));
  for (std::size_t x = 0; x + 1 < n; ++x) f[x] = res.duals[x];
  return {res.value, Measure2<T>(psi.space(), res.x), Potential<T>(psi.space(), std::move(f)).normalized()};
}

template <Scalar T>
PotentialCertificate<T> mincost_certificate(const Potential<T>& f, int b, const Measure2<T>& psi,
                                            const Measure1<T>& sigma, const Measure1<T>& tau,
                                            const PairFunction<T>& v, const T& target) {
  // G(x,y) = f(y) - f(x) + b v(x,y)
  Measure2<T> g = transpose(f.as_pair_function());
  if (b != 0) g += T(static_cast<double>(b)) * v;
  T lhs = psi.integrate(positive_part(g));
  T rhs = tau.integrate(f.values()) - sigma.integrate(f.values()) + T(static_cast<double>(b)) * target;
  return {f, b, Condition::MINCOST, lhs, rhs};
}

}  // namespace

template <Scalar T>
ValuedOutcome<T> min_cost_flow(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                               const PairFunction<T>& v, const T& target, const T& tol) {
  auto base = supply_demand_flow(psi, sigma, tau, tol);
  require_same_space(psi.space(), v.space());
  if (!base.feasible()) {
    // f = 1 on S^c: psi(S x S^c) >= tau(S^c) - sigma(S^c) = sigma(S) - tau(S) fails.
    auto f = indicator_potential<T>(psi.space(), base.certificate().set.complement());
    return mincost_certificate(f, 0, psi, sigma, tau, v, target);
  }
  auto hi = optimize_flow_value(psi, sigma, tau, v, +1, tol);
  if (target > hi.value + tol) return mincost_certificate(hi.f, 1, psi, sigma, tau, v, target);
  auto lo = optimize_flow_value(psi, sigma, tau, v, -1, tol);
  const T min_value = -lo.value;
  if (target < min_value - tol) return mincost_certificate(lo.f, -1, psi, sigma, tau, v, target);
  if (hi.value == min_value) return hi.flow;
  T lambda = (target - min_value) / (hi.value - min_value);
  if (lambda < 0) lambda = T(0);
  if (lambda > 1) lambda = T(1);
  return blend(hi.flow, lo.flow, lambda);
}

template <Scalar T>
CouplingOutcome<T> transship_feasible(const Measure2<T>& psi, const Measure1<T>& alpha, const Measure1<T>& beta,
                                      const T& tol) {
  require_capacity(psi);
  require_nonnegative(alpha, "alpha");
  require_nonnegative(beta, "beta");
  require_equal_mass(alpha, beta, tol);
  require_same_space(psi.space(), alpha.space());
  const std::size_t n = psi.size();
  const T kt = kernel_tolerance(tol);
  // Left copy 0..n-1, right copy n..2n-1, source 2n, sink 2n+1.
  FlowNetwork<T> net(2 * n + 2);
  const std::size_t s = 2 * n, t = 2 * n + 1;
  std::vector<std::size_t> arc(n * n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (alpha(x) > 0) net.add_arc(s, x, alpha(x));
    if (beta(x) > 0) net.add_arc(n + x, t, beta(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (psi(x, y) > 0) arc[x * n + y] = net.add_arc(x, n + y, psi(x, y));
    }
  }
  const T value = net.max_flow(s, t, kt);
  const T need = alpha.total();
  if (value + tol >= need && (!is_exact_v<T> || value == need)) {
    Measure2<T> mu(psi.space());
    for (std::size_t k = 0; k < n * n; ++k) {
      if (arc[k] != SIZE_MAX) mu(k / n, k % n) = net.flow(arc[k]);
    }
    return mu;
  }
  auto reach = net.residual_reachable(s, kt);
  AtomSet s_set(n), t_set(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (reach[x]) s_set.insert(x);
    if (!reach[n + x]) t_set.insert(x);
  }
  return RectangleCertificate<T>{s_set, t_set, psi.rect(s_set, t_set),
                                 T(alpha.of(s_set) + beta.of(t_set) - alpha.total())};
}

template <Scalar T>
TransshipOptimum<T> transship_min_cost(const Measure1<T>& alpha, const Measure1<T>& beta, const PairFunction<T>& c,
                                       const T& tol) {
  require_nonnegative(alpha, "alpha");
  require_nonnegative(beta, "beta");
  require_equal_mass(alpha, beta, tol);
  require_same_space(alpha.space(), c.space());
  const std::size_t n = alpha.size();
  BoxLp<T> lp(n * n);
  for (std::size_t j = 0; j < n * n; ++j) lp.objective[j] = -c(j / n, j % n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<T> row(n * n, T(0));
    for (std::size_t y = 0; y < n; ++y) row[x * n + y] = T(1);
    lp.add_row(std::move(row), alpha(x));
  }
  // The last second-marginal row is implied by equal total mass.
  for (std::size_t y = 0; y + 1 < n; ++y) {
    std::vector<T> row(n * n, T(0));
    for (std::size_t x = 0; x < n; ++x) row[x * n + y] = T(1);
    lp.add_row(std::move(row), beta(y));
  }
  auto res = solve_box_lp(lp, kernel_tolerance(tol));
  if (res.status != LpStatus::Optimal) throw std::logic_error("transshipment LP is not optimal");
  std::vector<T> g(n), h(n, T(0));
  for (std::size_t x = 0; x < n; ++x) g[x] = -res.duals[x];
  for (std::size_t y = 0; y + 1 < n; ++y) h[y] = -res.duals[n + y];
  // Canonical shift: g(first atom) = 0.
  if (n > 0) {
    const T k = g[0];
    for (auto& x : g) x -= k;
    for (auto& x : h) x += k;
  }
  TransshipOptimum<T> out{Measure2<T>(alpha.space(), res.x), T(-res.value), {}};
  out.dual.value = alpha.integrate(g) + beta.integrate(h);
  out.dual.g = std::move(g);
  out.dual.h = std::move(h);
  return out;
}

template <Scalar T>
CouplingOutcome<T> strassen_coupling(const Measure1<T>& alpha, const Measure1<T>& beta, const PairSet& support,
                                     const T& tol) {
  require_same_space(alpha.space(), beta.space());
  if (abs_value(alpha.total() - T(1)) > tol || abs_value(beta.total() - T(1)) > tol) {
    throw Error(ErrorCode::NotProbability, "alpha and beta must be probability measures");
  }
  const std::size_t n = alpha.size();
  if (support.universe() != n) throw Error(ErrorCode::InvalidArgument, "pair set has the wrong universe");
  // Any coupling puts at most mass 1 on a pair, so capacity 1 on E suffices.
  Measure2<T> psi(alpha.space());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (support.contains(x, y)) psi(x, y) = T(1);
    }
  }
  auto res = transship_feasible(psi, alpha, beta, tol);
  if (res.feasible()) return res;
  const auto& cert = res.certificate();
  return RectangleCertificate<T>{cert.s, cert.t, T(alpha.of(cert.s) + beta.of(cert.t)), T(1)};
}

#define MFLOW_INSTANTIATE(T)                                                                                      \
  template CirculationOutcome<T> feasible_circulation(const Measure2<T>&, const Measure2<T>&, const T&);          \
  template ValuedOutcome<T> valued_circulation(const Measure2<T>&, const Measure2<T>&, const PairFunction<T>&,    \
                                               const T&, const T&);                                              \
  template ValuedOutcome<T> ergodic_circulation(const Measure2<T>&, const T&);                                    \
  template T partition_condition(const Measure2<T>&, const std::vector<AtomSet>&);                                \
  template T jjfb_slack(const Potential<T>&, int, const PairFunction<T>&, const Measure2<T>&, const Measure2<T>&); \
  template IntegralPotential<T> integralize_potential(const Potential<T>&, const PairFunction<T>&,                \
                                                      const Measure2<T>&, const Measure2<T>&);                   \
  template FractionalSplit<T> fractional_split(const Potential<T>&, const T&, const PairFunction<T>&,             \
                                               const Measure2<T>&, const Measure2<T>&);                          \
  template MaxFlowResult<T> max_flow(const Measure2<T>&, std::size_t, std::size_t, const T&);                     \
  template CirculationOutcome<T> supply_demand_flow(const Measure2<T>&, const Measure1<T>&, const Measure1<T>&,   \
                                                    const T&);                                                   \
  template ValuedOutcome<T> min_cost_flow(const Measure2<T>&, const Measure1<T>&, const Measure1<T>&,             \
                                          const PairFunction<T>&, const T&, const T&);                           \
  template CouplingOutcome<T> transship_feasible(const Measure2<T>&, const Measure1<T>&, const Measure1<T>&,      \
                                                 const T&);                                                      \
  template TransshipOptimum<T> transship_min_cost(const Measure1<T>&, const Measure1<T>&, const PairFunction<T>&, \
                                                  const T&);                                                     \
  template CouplingOutcome<T> strassen_coupling(const Measure1<T>&, const Measure1<T>&, const PairSet&, const T&);

MFLOW_INSTANTIATE(double)
MFLOW_INSTANTIATE(Rational)

#undef MFLOW_INSTANTIATE

}  // namespace mflow

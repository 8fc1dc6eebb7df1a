#include "mflow/path_decomp.hpp"

#include <algorithm>

namespace mflow {

template <Scalar T>
void WalkMeasure<T>::add(std::vector<std::size_t> atoms, T weight) {
  if (atoms.empty()) throw Error(ErrorCode::InvalidArgument, "walk must be nonempty");
  if (!(weight > 0)) throw Error(ErrorCode::InvalidArgument, "walk weight must be positive");
  for (auto a : atoms) {
    if (a >= space_->size()) throw Error(ErrorCode::InvalidArgument, "walk visits an unknown atom");
  }
  entries_.push_back({std::move(atoms), std::move(weight)});
}

namespace {

template <Scalar T>
void require_nonnegative(const Measure2<T>& m) {
  if (!m.is_nonnegative()) throw Error(ErrorCode::NegativeMeasure, "measure has a negative weight");
}

// Iterative DFS over the support; returns the first directed cycle found.
template <Scalar T>
std::vector<std::size_t> find_cycle(const Measure2<T>& beta, const T& tol) {
  const std::size_t n = beta.size();
  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(n, White);
  std::vector<std::size_t> parent(n, n);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = Grey;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next == n) {
        color[u] = Black;
        stack.pop_back();
        continue;
      }
      const std::size_t w = next++;
      if (!(beta(u, w) > tol)) continue;
      if (color[w] == Grey) {
        std::vector<std::size_t> cycle{w};
        for (std::size_t x = u; x != w; x = parent[x]) cycle.push_back(x);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[w] == White) {
        color[w] = Grey;
        parent[w] = u;
        stack.push_back({w, 0});
      }
    }
  }
  return {};
}

}  // namespace

template <Scalar T>
AcyclicCheck<T> is_acyclic(const Measure2<T>& beta, const T& tol) {
  require_nonnegative(beta);
  AcyclicCheck<T> out;
  out.circulation = Measure2<T>(beta.space());
  out.cycle = find_cycle(beta, tol);
  if (out.cycle.empty()) return out;
  out.acyclic = false;
  const auto& c = out.cycle;
  T low = beta(c.back(), c.front());
  for (std::size_t i = 0; i + 1 < c.size(); ++i) low = std::min(low, beta(c[i], c[i + 1]));
  for (std::size_t i = 0; i < c.size(); ++i) out.circulation(c[i], c[(i + 1) % c.size()]) += low;
  return out;
}

template <Scalar T>
std::pair<Measure2<T>, Measure2<T>> split_acyclic_circulation(const Measure2<T>& mu, const T& tol) {
  require_nonnegative(mu);
  Measure2<T> rest = mu;
  Measure2<T> circ(mu.space());
  for (;;) {
    auto check = is_acyclic(rest, tol);
    if (check.acyclic) break;
    rest -= check.circulation;
    circ += check.circulation;
    // Peeling zeroes at least one edge; clear float crumbs so it stays zero.
    for (std::size_t x = 0; x < rest.size(); ++x) {
      for (std::size_t y = 0; y < rest.size(); ++y) {
        if (rest(x, y) <= tol) rest(x, y) = T(0);
      }
    }
  }
  return {std::move(rest), std::move(circ)};
}

template <Scalar T>
WalkOperators<T> walk_operators(const WalkMeasure<T>& tau) {
  WalkOperators<T> ops{Measure1<T>(tau.space()), Measure2<T>(tau.space()), Measure2<T>(tau.space())};
  for (const auto& w : tau.entries()) {
    const auto& a = w.atoms;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      ops.v(a[i]) += w.weight;
      ops.e(a[i], a[i + 1]) += w.weight;
    }
    ops.z(a.front(), a.back()) += w.weight;
  }
  return ops;
}

template <Scalar T>
WalkMeasure<T> decompose_paths(const Measure2<T>& phi, const T& tol) {
  auto check = is_acyclic(phi, tol);
  if (!check.acyclic) throw Error(ErrorCode::NotAcyclic, "measure has a directed cycle in its support");
  const std::size_t n = phi.size();
  Measure2<T> rest = phi;
  WalkMeasure<T> tau(phi.space());
  auto excess = [&](std::size_t x) {
    T e(0);
    for (std::size_t y = 0; y < n; ++y) e += rest(x, y) - rest(y, x);
    return e;
  };
  for (;;) {
    std::size_t start = n;
    T start_excess(0);
    for (std::size_t x = 0; x < n && start == n; ++x) {
      T e = excess(x);
      if (e > tol) {
        start = x;
        start_excess = e;
      }
    }
    if (start == n) break;

    std::vector<std::size_t> path{start};
    T bottleneck = start_excess;
    for (;;) {
      const std::size_t u = path.back();
      std::size_t best = n;
      for (std::size_t y = 0; y < n; ++y) {
        if (rest(u, y) > tol && (best == n || rest(u, y) > rest(u, best))) best = y;
      }
      if (best == n) break;
      bottleneck = std::min(bottleneck, rest(u, best));
      path.push_back(best);
    }
    if (path.size() == 1) break;  // only float residue left
    bottleneck = std::min(bottleneck, T(-excess(path.back())));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      T& r = rest(path[i], path[i + 1]);
      r -= bottleneck;
      if (r <= tol) r = T(0);
    }
    if (bottleneck > 0) tau.add(std::move(path), bottleneck);
  }
  return tau;
}

template <Scalar T>
std::pair<T, T> shortcut_check(const Pseudometric<T>& d, const WalkMeasure<T>& tau, const T& tol) {
  require_pseudometric(d, tol);
  auto ops = walk_operators(tau);
  return {ops.e.integrate(d.d), ops.z.integrate(d.d)};
}

template class WalkMeasure<double>;
template class WalkMeasure<Rational>;

#define MFLOW_INSTANTIATE(T)                                                                                  \
  template AcyclicCheck<T> is_acyclic(const Measure2<T>&, const T&);                                          \
  template std::pair<Measure2<T>, Measure2<T>> split_acyclic_circulation(const Measure2<T>&, const T&);       \
  template WalkOperators<T> walk_operators(const WalkMeasure<T>&);                                            \
  template WalkMeasure<T> decompose_paths(const Measure2<T>&, const T&);                                      \
  template std::pair<T, T> shortcut_check(const Pseudometric<T>&, const WalkMeasure<T>&, const T&);

MFLOW_INSTANTIATE(double)
MFLOW_INSTANTIATE(Rational)

#undef MFLOW_INSTANTIATE

}  // namespace mflow

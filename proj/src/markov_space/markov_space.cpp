#include "mflow/markov_space.hpp"

#include <random>

namespace mflow {

template <Scalar T>
MarkovSpace<T> from_circulation(const Measure2<T>& eta, const T& tol) {
  if (!eta.is_nonnegative()) throw Error(ErrorCode::NotErgodicCirculation, "eta has a negative weight");
  if (abs_value(eta.total() - T(1)) > tol) throw Error(ErrorCode::NotErgodicCirculation, "eta must have mass 1");
  if (!is_circulation(eta, tol)) throw Error(ErrorCode::NotErgodicCirculation, "eta marginals differ");
  const std::size_t n = eta.size();
  MarkovSpace<T> ms;
  ms.eta_ = eta;
  ms.pi_ = marginals(eta).first;
  ms.kernel_ = Measure2<T>(eta.space());
  for (std::size_t u = 0; u < n; ++u) {
    const T& p = ms.pi_(u);
    if (p > 0) {
      for (std::size_t y = 0; y < n; ++y) ms.kernel_(u, y) = eta(u, y) / p;
    } else {
      ms.kernel_(u, u) = T(1);
    }
  }
  return ms;
}

template <Scalar T>
bool is_reversible(const MarkovSpace<T>& ms, const T& tol) {
  const auto& eta = ms.eta();
  for (std::size_t x = 0; x < ms.size(); ++x) {
    for (std::size_t y = x + 1; y < ms.size(); ++y) {
      if (abs_value(eta(x, y) - eta(y, x)) > tol) return false;
    }
  }
  return true;
}

template <Scalar T>
MarkovSpace<T> reverse_chain(const MarkovSpace<T>& ms, const T& tol) {
  return from_circulation(transpose(ms.eta()), tol);
}

namespace {

template <Scalar T>
std::vector<bool> reach(const Measure2<T>& eta, const std::vector<bool>& alive, std::size_t root, bool forward,
                        const T& tol) {
  const std::size_t n = eta.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y) {
      const T& w = forward ? eta(u, y) : eta(y, u);
      if (alive[y] && !seen[y] && w > tol) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

template <Scalar T>
Indecomposability is_indecomposable(const MarkovSpace<T>& ms, const T& tol) {
  const std::size_t n = ms.size();
  std::vector<bool> alive(n);
  std::size_t root = n;
  for (std::size_t x = 0; x < n; ++x) {
    alive[x] = ms.pi()(x) > tol;
    if (alive[x] && root == n) root = x;
  }
  Indecomposability out;
  if (root == n) return out;
  auto fwd = reach(ms.eta(), alive, root, true, tol);
  auto bwd = reach(ms.eta(), alive, root, false, tol);
  AtomSet forward_set(n), backward_gap(n);
  bool closed = true, open = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    if (fwd[x]) {
      forward_set.insert(x);
    } else {
      closed = false;
    }
    if (!bwd[x]) {
      backward_gap.insert(x);
      open = false;
    }
  }
  // The forward-reachable set has no outflow; so does the complement of the
  // backward-reachable set.
  if (!closed) {
    out.indecomposable = false;
    out.witness = forward_set;
  } else if (!open) {
    out.indecomposable = false;
    out.witness = backward_gap;
  }
  return out;
}

namespace {

std::discrete_distribution<std::size_t> row_distribution(const std::vector<double>& w) {
  return std::discrete_distribution<std::size_t>(w.begin(), w.end());
}

template <Scalar T>
std::vector<std::discrete_distribution<std::size_t>> kernel_rows(const MarkovSpace<T>& ms) {
  const std::size_t n = ms.size();
  std::vector<std::discrete_distribution<std::size_t>> rows;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<double> w(n);
    for (std::size_t y = 0; y < n; ++y) w[y] = to_double(ms.kernel()(u, y));
    rows.push_back(row_distribution(w));
  }
  return rows;
}

}  // namespace

template <Scalar T>
std::vector<std::size_t> simulate_walk(const MarkovSpace<T>& ms, const Measure1<T>& start, std::size_t steps,
                                       std::uint64_t seed) {
  require_same_space(ms.space(), start.space());
  if (!start.is_nonnegative() || abs_value(to_double(start.total()) - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotProbability, "start must be a probability vector");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> w;
  for (const auto& x : start.weights()) w.push_back(to_double(x));
  auto rows = kernel_rows(ms);
  std::vector<std::size_t> walk{row_distribution(w)(rng)};
  for (std::size_t i = 0; i < steps; ++i) walk.push_back(rows[walk.back()](rng));
  return walk;
}

template <Scalar T>
double hitting_stats(const MarkovSpace<T>& ms, std::size_t start, const AtomSet& target, std::size_t max_steps,
                     std::size_t trials, std::uint64_t seed, const T& tol) {
  if (!is_indecomposable(ms, tol).indecomposable) throw Error(ErrorCode::Decomposable, "chain is decomposable");
  if (!(ms.pi().of(target) > tol)) throw Error(ErrorCode::EmptyTarget, "target has zero stationary mass");
  if (start >= ms.size()) throw Error(ErrorCode::InvalidArgument, "start atom out of range");
  if (trials == 0) return 0.0;
  std::mt19937_64 rng(seed);
  auto rows = kernel_rows(ms);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    std::size_t u = start;
    for (std::size_t step = 0;; ++step) {
      if (target.contains(u)) {
        ++hits;
        break;
      }
      if (step == max_steps) break;
      u = rows[u](rng);
    }
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

#define MFLOW_INSTANTIATE(T)                                                                                    \
  template MarkovSpace<T> from_circulation(const Measure2<T>&, const T&);                                       \
  template bool is_reversible(const MarkovSpace<T>&, const T&);                                                 \
  template MarkovSpace<T> reverse_chain(const MarkovSpace<T>&, const T&);                                       \
  template Indecomposability is_indecomposable(const MarkovSpace<T>&, const T&);                                \
  template std::vector<std::size_t> simulate_walk(const MarkovSpace<T>&, const Measure1<T>&, std::size_t,       \
                                                  std::uint64_t);                                               \
  template double hitting_stats(const MarkovSpace<T>&, std::size_t, const AtomSet&, std::size_t, std::size_t,   \
                                std::uint64_t, const T&);

MFLOW_INSTANTIATE(double)
MFLOW_INSTANTIATE(Rational)

#undef MFLOW_INSTANTIATE

}  // namespace mflow

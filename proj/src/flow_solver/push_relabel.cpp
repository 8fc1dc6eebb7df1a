#include "mflow/push_relabel.hpp"

#include <deque>

#include "mflow/error.hpp"

namespace mflow {

template <Scalar T>
std::size_t FlowNetwork<T>::add_arc(std::size_t from, std::size_t to, T capacity) {
  if (from >= adj_.size() || to >= adj_.size()) throw Error(ErrorCode::InvalidArgument, "arc endpoint out of range");
  if (capacity < 0) throw Error(ErrorCode::NegativeCapacity, "arc capacity must be nonnegative");
  const std::size_t k = arcs_.size();
  arcs_.push_back({to, std::move(capacity), T(0)});
  arcs_.push_back({from, T(0), T(0)});
  adj_[from].push_back(k);
  adj_[to].push_back(k + 1);
  return k;
}

template <Scalar T>
T FlowNetwork<T>::max_flow(std::size_t source, std::size_t sink, const T& tol) {
  const std::size_t n = adj_.size();
  if (source == sink) throw Error(ErrorCode::SameEndpoints, "source equals sink");
  for (auto& a : arcs_) a.flow = T(0);

  std::vector<std::size_t> height(n, 0);
  std::vector<T> excess(n, T(0));
  std::vector<std::size_t> cursor(n, 0);
  std::deque<std::size_t> active;
  std::vector<bool> queued(n, false);

  auto push = [&](std::size_t k, std::size_t from, T amount) {
    arcs_[k].flow += amount;
    arcs_[k ^ 1].flow -= amount;
    excess[from] -= amount;
    const std::size_t to = arcs_[k].to;
    excess[to] += amount;
    if (to != source && to != sink && !queued[to] && excess[to] > tol) {
      queued[to] = true;
      active.push_back(to);
    }
  };

  height[source] = n;
  for (std::size_t k : adj_[source]) {
    T r = residual(k);
    if (r > tol) push(k, source, r);
  }

  while (!active.empty()) {
    const std::size_t u = active.front();
    active.pop_front();
    queued[u] = false;
    // Discharge u.
    while (excess[u] > tol) {
      if (cursor[u] == adj_[u].size()) {
        std::size_t lowest = 2 * n + 1;
        for (std::size_t k : adj_[u]) {
          if (residual(k) > tol && height[arcs_[k].to] < lowest) lowest = height[arcs_[k].to];
        }
        if (lowest > 2 * n) break;  // only reachable with float round-off
        height[u] = lowest + 1;
        cursor[u] = 0;
        continue;
      }
      const std::size_t k = adj_[u][cursor[u]];
      const T r = residual(k);
      if (r > tol && height[u] == height[arcs_[k].to] + 1) {
        push(k, u, excess[u] < r ? excess[u] : r);
      } else {
        ++cursor[u];
      }
    }
  }
  return excess[sink];
}

template <Scalar T>
std::vector<bool> FlowNetwork<T>::residual_reachable(std::size_t source, const T& tol) const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t k : adj_[u]) {
      const std::size_t v = arcs_[k].to;
      if (!seen[v] && residual(k) > tol) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

template class FlowNetwork<double>;
template class FlowNetwork<Rational>;

}  // namespace mflow

#pragma once

#include <cstddef>
#include <vector>

#include "mflow/numeric.hpp"

namespace mflow {

// FIFO push-relabel maximum flow on a small directed network. Arcs are stored
// in pairs: arc k and its residual twin k ^ 1.
template <Scalar T>
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  std::size_t node_count() const noexcept { return adj_.size(); }

  // Returns the index of the forward arc.
  std::size_t add_arc(std::size_t from, std::size_t to, T capacity);

  // Runs to completion and returns the flow value. The flow on every arc
  // respects capacity and conservation holds at every node except s and t.
  T max_flow(std::size_t source, std::size_t sink, const T& tol = default_tolerance<T>());

  const T& flow(std::size_t arc) const { return arcs_[arc].flow; }
  const T& capacity(std::size_t arc) const { return arcs_[arc].cap; }

  // Nodes reachable from `source` through arcs with positive residual
  // capacity, after max_flow().
  std::vector<bool> residual_reachable(std::size_t source, const T& tol = default_tolerance<T>()) const;

 private:
  struct Arc {
    std::size_t to;
    T cap;
    T flow;
  };
  T residual(std::size_t k) const { return arcs_[k].cap - arcs_[k].flow; }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
};

}  // namespace mflow

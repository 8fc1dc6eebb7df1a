#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mflow/measure.hpp"

namespace mflow {

// Finite Markov space: an ergodic circulation eta, its common marginal pi and
// the row-normalized kernel. Rows at pi-null atoms are a self-loop.
template <Scalar T>
class MarkovSpace {
 public:
  const SpacePtr& space() const noexcept { return eta_.space(); }
  std::size_t size() const noexcept { return eta_.size(); }
  const Measure2<T>& eta() const noexcept { return eta_; }
  const Measure1<T>& pi() const noexcept { return pi_; }
  // kernel()(u, y) = P(next = y | current = u)
  const Measure2<T>& kernel() const noexcept { return kernel_; }

  template <Scalar U>
  friend MarkovSpace<U> from_circulation(const Measure2<U>& eta, const U& tol);

 private:
  Measure2<T> eta_;
  Measure1<T> pi_;
  Measure2<T> kernel_;
};

// Throws NotErgodicCirculation unless eta >= 0, eta(J x J) = 1 and eta is a
// circulation.
template <Scalar T>
MarkovSpace<T> from_circulation(const Measure2<T>& eta, const T& tol = default_tolerance<T>());

template <Scalar T>
bool is_reversible(const MarkovSpace<T>& ms, const T& tol = default_tolerance<T>());

template <Scalar T>
MarkovSpace<T> reverse_chain(const MarkovSpace<T>& ms, const T& tol = default_tolerance<T>());

// Empty `witness` when indecomposable; otherwise a set A with
// 0 < pi(A) < 1 and eta(A x A^c) = 0.
struct Indecomposability {
  bool indecomposable = true;
  AtomSet witness;
};

template <Scalar T>
Indecomposability is_indecomposable(const MarkovSpace<T>& ms, const T& tol = default_tolerance<T>());

// steps + 1 atoms; start is a probability vector.
template <Scalar T>
std::vector<std::size_t> simulate_walk(const MarkovSpace<T>& ms, const Measure1<T>& start, std::size_t steps,
                                       std::uint64_t seed);

// Fraction of `trials` walks from `start` that meet `target` within
// max_steps steps (time 0 included). Throws Decomposable, EmptyTarget.
template <Scalar T>
double hitting_stats(const MarkovSpace<T>& ms, std::size_t start, const AtomSet& target, std::size_t max_steps,
                     std::size_t trials, std::uint64_t seed, const T& tol = default_tolerance<T>());

}  // namespace mflow

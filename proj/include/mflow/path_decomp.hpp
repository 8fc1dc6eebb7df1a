#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mflow/measure.hpp"
#include "mflow/pseudometric.hpp"

namespace mflow {

template <Scalar T>
struct Walk {
  std::vector<std::size_t> atoms;
  T weight;
};

// Finite nonnegative combination of atom walks.
template <Scalar T>
class WalkMeasure {
 public:
  WalkMeasure() = default;
  explicit WalkMeasure(SpacePtr space) : space_(std::move(space)) {}

  // Throws InvalidArgument for an empty walk, an unknown atom or a
  // nonpositive weight.
  void add(std::vector<std::size_t> atoms, T weight);

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<Walk<T>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

 private:
  SpacePtr space_;
  std::vector<Walk<T>> entries_;
};

template <Scalar T>
struct WalkOperators {
  Measure1<T> v;  // exits, counted with multiplicity
  Measure2<T> e;  // edge traversals
  Measure2<T> z;  // (first, last) endpoints
};

template <Scalar T>
struct AcyclicCheck {
  bool acyclic = true;
  std::vector<std::size_t> cycle;  // x0 -> x1 -> ... -> x0
  Measure2<T> circulation;         // min edge weight on every cycle edge
};

// Support is pairs with weight > tol. Throws NegativeMeasure.
template <Scalar T>
AcyclicCheck<T> is_acyclic(const Measure2<T>& beta, const T& tol = default_tolerance<T>());

// (acyclic part, circulation part) by repeated cycle peeling.
template <Scalar T>
std::pair<Measure2<T>, Measure2<T>> split_acyclic_circulation(const Measure2<T>& mu,
                                                              const T& tol = default_tolerance<T>());

template <Scalar T>
WalkOperators<T> walk_operators(const WalkMeasure<T>& tau);

// Greedy path peeling of an acyclic measure: E(tau) = phi. Throws NotAcyclic.
template <Scalar T>
WalkMeasure<T> decompose_paths(const Measure2<T>& phi, const T& tol = default_tolerance<T>());

// (E(tau)(d), Z(tau)(d)). Throws NotPseudometric.
template <Scalar T>
std::pair<T, T> shortcut_check(const Pseudometric<T>& d, const WalkMeasure<T>& tau,
                               const T& tol = default_tolerance<T>());

}  // namespace mflow

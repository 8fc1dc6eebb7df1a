#pragma once

#include <cstddef>
#include <optional>

#include "mflow/measure.hpp"

namespace mflow {

// A pair table meant to be a pseudometric. Construction does not validate;
// use is_pseudometric or require_pseudometric.
template <Scalar T>
struct Pseudometric {
  Measure2<T> d;

  const SpacePtr& space() const noexcept { return d.space(); }
  std::size_t size() const noexcept { return d.size(); }
  const T& operator()(std::size_t x, std::size_t y) const { return d(x, y); }
};

enum class MetricDefect { Negative, Diagonal, Asymmetric, Triangle };

// First violated axiom. For Triangle, d(x,z) > d(x,y) + d(y,z).
struct MetricViolation {
  MetricDefect defect;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
};

template <Scalar T>
std::optional<MetricViolation> is_pseudometric(const Pseudometric<T>& d, const T& tol = default_tolerance<T>());

template <Scalar T>
void require_pseudometric(const Pseudometric<T>& d, const T& tol = default_tolerance<T>());

// d(x,y) = 1 iff exactly one of x, y lies in A.
template <Scalar T>
Pseudometric<T> cut_metric(const SpacePtr& space, const AtomSet& a);

}  // namespace mflow

#include "mflow/pseudometric.hpp"

namespace mflow {

template <Scalar T>
std::optional<MetricViolation> is_pseudometric(const Pseudometric<T>& d, const T& tol) {
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (abs_value(d(x, x)) > tol) return MetricViolation{MetricDefect::Diagonal, x, x, x};
    for (std::size_t y = 0; y < n; ++y) {
      if (d(x, y) < -tol) return MetricViolation{MetricDefect::Negative, x, y, y};
      if (abs_value(d(x, y) - d(y, x)) > tol) return MetricViolation{MetricDefect::Asymmetric, x, y, y};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (d(x, z) > d(x, y) + d(y, z) + tol) return MetricViolation{MetricDefect::Triangle, x, y, z};
      }
    }
  }
  return std::nullopt;
}

template <Scalar T>
void require_pseudometric(const Pseudometric<T>& d, const T& tol) {
  if (auto v = is_pseudometric(d, tol)) {
    const auto& sp = *d.space();
    throw Error(ErrorCode::NotPseudometric, "pseudometric axiom fails at (" + sp.label(v->x) + "," + sp.label(v->y) +
                                                "," + sp.label(v->z) + ")");
  }
}

template <Scalar T>
Pseudometric<T> cut_metric(const SpacePtr& space, const AtomSet& a) {
  Measure2<T> d(space);
  for (std::size_t x = 0; x < space->size(); ++x) {
    for (std::size_t y = 0; y < space->size(); ++y) {
      if (a.contains(x) != a.contains(y)) d(x, y) = T(1);
    }
  }
  return {std::move(d)};
}

template std::optional<MetricViolation> is_pseudometric(const Pseudometric<double>&, const double&);
template std::optional<MetricViolation> is_pseudometric(const Pseudometric<Rational>&, const Rational&);
template void require_pseudometric(const Pseudometric<double>&, const double&);
template void require_pseudometric(const Pseudometric<Rational>&, const Rational&);
template Pseudometric<double> cut_metric(const SpacePtr&, const AtomSet&);
template Pseudometric<Rational> cut_metric(const SpacePtr&, const AtomSet&);

}  // namespace mflow

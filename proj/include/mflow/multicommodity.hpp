#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mflow/flow_solver.hpp"
#include "mflow/pseudometric.hpp"

namespace mflow {

// Symmetric multicommodity flow: one unit s-t flow per ordered demand pair
// with sigma(s,t) > 0, flow(t,s) the transpose of flow(s,t).
template <Scalar T>
struct MultiFlow {
  Measure2<T> sigma;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Measure2<T>> flows;  // flows[k] serves pairs[k]
  Measure2<T> total_load;          // sum of sigma(s,t) * flow(s,t)
  T overload;                      // ||total_load \ psi||

  const Measure2<T>* flow(std::size_t s, std::size_t t) const;
};

template <Scalar T>
struct MultiflowCertificate {
  Pseudometric<T> d;
  T lhs;            // sigma(d)
  T rhs;            // psi(d)
  T min_overload;   // attained optimum of the overload LP
};

template <Scalar T>
using MultiflowOutcome = Outcome<MultiFlow<T>, MultiflowCertificate<T>>;

// Table over ordered 4-tuples (x, y, s, t).
template <Scalar T>
class LoadTensor {
 public:
  LoadTensor() = default;
  explicit LoadTensor(SpacePtr space)
      : space_(std::move(space)), n_(space_->size()), w_(n_ * n_ * n_ * n_, T(0)) {}

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return n_; }
  const T& operator()(std::size_t x, std::size_t y, std::size_t s, std::size_t t) const { return w_[index(x, y, s, t)]; }
  T& operator()(std::size_t x, std::size_t y, std::size_t s, std::size_t t) { return w_[index(x, y, s, t)]; }

  // Phi^{12}
  Measure2<T> load() const;
  // Phi^{34}
  Measure2<T> demand() const;
  // Phi** : swap both coordinate pairs.
  LoadTensor swapped() const;

 private:
  std::size_t index(std::size_t x, std::size_t y, std::size_t s, std::size_t t) const {
    return ((x * n_ + y) * n_ + s) * n_ + t;
  }
  SpacePtr space_;
  std::size_t n_ = 0;
  std::vector<T> w_;
};

// (sigma(d), psi(d)). Throws NotSymmetric, NotPseudometric.
template <Scalar T>
std::pair<T, T> volume_condition(const Measure2<T>& sigma, const Measure2<T>& psi, const Pseudometric<T>& d,
                                 const T& tol = default_tolerance<T>());

// Pseudometric d <= 1 maximizing sigma(d) - psi(d); returns (d, gap).
template <Scalar T>
std::pair<Pseudometric<T>, T> worst_pseudometric(const Measure2<T>& sigma, const Measure2<T>& psi,
                                                 const T& tol = default_tolerance<T>());

// Multiflow with overload <= epsilon, or a pseudometric with sigma(d) > psi(d).
template <Scalar T>
MultiflowOutcome<T> solve_multicommodity(const Measure2<T>& sigma, const Measure2<T>& psi, const T& epsilon = T(0),
                                         const T& tol = default_tolerance<T>());

template <Scalar T>
LoadTensor<T> build_load_tensor(const MultiFlow<T>& mf);

// Disintegrates Phi along sigma. Slices with sigma(s,t) = 0 are discarded
// first. Throws ExtractFailure if Phi is negative or the load identity fails.
template <Scalar T>
MultiFlow<T> extract_flows(const LoadTensor<T>& phi, const Measure2<T>& sigma, const T& tol = default_tolerance<T>());

struct AxiomReport {
  bool diagonal = true;   // (a)
  bool symmetric = true;  // (b)
  bool triangle = true;   // (c)
  std::size_t probes = 0;
  std::optional<std::array<std::size_t, 3>> triangle_witness;  // point-mass triple

  bool passed() const { return diagonal && symmetric && triangle; }
};

// Tests the metrical axioms for mu -> mu(d) on point masses and `trials`
// random measures. Accepts any pair table so failures can be reported.
template <Scalar T>
AxiomReport metrical_axiom_check(const Pseudometric<T>& d, std::size_t trials, std::uint64_t seed,
                                 const T& tol = default_tolerance<T>());

}  // namespace mflow

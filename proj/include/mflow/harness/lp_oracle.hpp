#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mflow/measure.hpp"

namespace mflow::oracle {

enum class Sense { Le, Eq, Ge };

// maximize objective . x  subject to rows, x >= 0.
template <Scalar T>
struct Lp {
  std::size_t vars = 0;
  struct Row {
    std::vector<T> a;
    Sense sense;
    T b;
  };
  std::vector<Row> rows;
  std::vector<T> objective;

  explicit Lp(std::size_t n = 0) : vars(n), objective(n, T(0)) {}
  void add(std::vector<T> a, Sense sense, T b) {
    a.resize(vars, T(0));
    rows.push_back({std::move(a), sense, std::move(b)});
  }
};

template <Scalar T>
struct Verdict {
  bool feasible = false;
  bool unbounded = false;
  T optimum{0};
  std::vector<T> x;
};

inline constexpr std::size_t kMaxVariables = 10000;

// Two-phase dense simplex. Throws TooLarge above kMaxVariables.
template <Scalar T>
Verdict<T> solve(const Lp<T>& lp, const T& tol = default_tolerance<T>());

// One LP per solver operation. Feasibility problems have a zero objective;
// optimization problems report their optimum in the natural sign (maximum
// flow value, minimum cost, minimum overload, maximum circulation mass).
template <Scalar T>
Verdict<T> circulation(const Measure2<T>& phi, const Measure2<T>& psi, const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> valued_circulation(const Measure2<T>& phi, const Measure2<T>& psi, const Measure2<T>& v, const T& c,
                              const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> ergodic(const Measure2<T>& psi, const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> max_flow(const Measure2<T>& psi, std::size_t s, std::size_t t, const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> supply_demand(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                         const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> min_cost_flow(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                         const Measure2<T>& v, const T& target, const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> transship(const Measure2<T>& psi, const Measure1<T>& alpha, const Measure1<T>& beta,
                     const T& tol = default_tolerance<T>());
template <Scalar T>
Verdict<T> transship_cost(const Measure1<T>& alpha, const Measure1<T>& beta, const Measure2<T>& c,
                          const T& tol = default_tolerance<T>());
// Couplings supported on the pairs where `allowed` is nonzero.
template <Scalar T>
Verdict<T> strassen(const Measure1<T>& alpha, const Measure1<T>& beta, const Measure2<T>& allowed,
                    const T& tol = default_tolerance<T>());
// Largest mass of a circulation 0 <= alpha <= beta.
template <Scalar T>
Verdict<T> circulation_mass(const Measure2<T>& beta, const T& tol = default_tolerance<T>());
// Minimum overload of a multiflow, one commodity per ordered demand pair;
// feasible iff that minimum is <= epsilon.
template <Scalar T>
Verdict<T> multiflow(const Measure2<T>& sigma, const Measure2<T>& psi, const T& epsilon,
                     const T& tol = default_tolerance<T>());

}  // namespace mflow::oracle

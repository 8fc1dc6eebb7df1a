#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mflow/measure.hpp"

namespace mflow {

// Either a witness (feasible) or a certificate of infeasibility.
template <class Witness, class Certificate>
class Outcome {
 public:
  Outcome(Witness w) : v_(std::move(w)) {}                        // NOLINT
  Outcome(Certificate c) : v_(std::in_place_index<1>, std::move(c)) {}  // NOLINT

  bool feasible() const noexcept { return v_.index() == 0; }
  const Witness& witness() const { return std::get<0>(v_); }
  const Certificate& certificate() const { return std::get<1>(v_); }

 private:
  std::variant<Witness, Certificate> v_;
};

// A set whose two sides of a cut inequality are out of order: lhs > rhs.
template <Scalar T>
struct CutCertificate {
  AtomSet set;
  T lhs;
  T rhs;
};

enum class Condition { JJFB1, JJFB2, JJFB3, ERG, MINCOST };
std::string_view condition_name(Condition c);

// A potential f (F(x,y) = f(x) - f(y)) and a sign b with lhs < rhs for the
// tagged inequality.
template <Scalar T>
struct PotentialCertificate {
  Potential<T> f;
  int b = 0;
  Condition violated = Condition::JJFB3;
  T lhs;
  T rhs;
};

// Sets S, T violating a rectangle inequality (orientation depends on the
// operation; see the individual operations).
template <Scalar T>
struct RectangleCertificate {
  AtomSet s;
  AtomSet t;
  T lhs;
  T rhs;
};

// g(x) + h(y) <= c(x,y) for all pairs; value = alpha(g) + beta(h).
template <Scalar T>
struct DualPair {
  std::vector<T> g;
  std::vector<T> h;
  T value;
};

template <Scalar T>
struct MaxFlowResult {
  Measure2<T> flow;
  T value;
  AtomSet min_cut;  // contains s, not t, psi(A x A^c) = value
};

template <Scalar T>
struct TransshipOptimum {
  Measure2<T> coupling;
  T cost;
  DualPair<T> dual;
};

template <Scalar T>
struct IntegralPotential {
  Potential<T> f;
  T shift;  // f = floor(f_real + shift)
};

// Splits the slack of f into the slack of its floor plus fractional parts.
template <Scalar T>
struct FractionalSplit {
  T total;        // psi(|F+v|_+) - phi(|F+v|_-)
  T integral;     // same with F replaced by the floor potential
  T psi_part;     // psi restricted to S = {F+v > 0}, integrated against the fractional potential
  T phi_part;     // phi restricted to S^c, integrated against the fractional potential
};

// Set of atom pairs.
class PairSet {
 public:
  explicit PairSet(std::size_t n) : n_(n), in_(n * n, false) {}
  std::size_t universe() const noexcept { return n_; }
  void insert(std::size_t x, std::size_t y) { in_.at(x * n_ + y) = true; }
  bool contains(std::size_t x, std::size_t y) const { return in_.at(x * n_ + y); }
  bool operator==(const PairSet&) const = default;

 private:
  std::size_t n_;
  std::vector<bool> in_;
};

template <Scalar T>
using CirculationOutcome = Outcome<Measure2<T>, CutCertificate<T>>;
template <Scalar T>
using ValuedOutcome = Outcome<Measure2<T>, PotentialCertificate<T>>;
template <Scalar T>
using CouplingOutcome = Outcome<Measure2<T>, RectangleCertificate<T>>;

// Circulation alpha with phi <= alpha <= psi, or X with phi(X x X^c) > psi(X^c x X).
template <Scalar T>
CirculationOutcome<T> feasible_circulation(const Measure2<T>& phi, const Measure2<T>& psi,
                                           const T& tol = default_tolerance<T>());

// Circulation alpha with phi <= alpha <= psi and alpha(v) = c, or a potential
// violating one of JJFB1 (b=+1), JJFB2 (b=-1), JJFB3 (b=0).
template <Scalar T>
ValuedOutcome<T> valued_circulation(const Measure2<T>& phi, const Measure2<T>& psi, const PairFunction<T>& v,
                                    const T& c, const T& tol = default_tolerance<T>());

// Circulation eta <= psi of total mass 1, or F with psi(|1+F|_+) < 1.
template <Scalar T>
ValuedOutcome<T> ergodic_circulation(const Measure2<T>& psi, const T& tol = default_tolerance<T>());

// sum_{i <= j} (j - i + 1) psi(S_j x S_i) for the ordered partition S_1..S_k.
template <Scalar T>
T partition_condition(const Measure2<T>& psi, const std::vector<AtomSet>& partition);

// psi(|F + b v|_+) - phi(|F + b v|_-).
template <Scalar T>
T jjfb_slack(const Potential<T>& f, int b, const PairFunction<T>& v, const Measure2<T>& phi,
             const Measure2<T>& psi);

// Integer potential floor(f + a) whose JJFB1 slack is no larger than that of
// f. The shift a is chosen among the breakpoints {frac(-f(x))}.
template <Scalar T>
IntegralPotential<T> integralize_potential(const Potential<T>& f, const PairFunction<T>& v, const Measure2<T>& phi,
                                           const Measure2<T>& psi);

template <Scalar T>
FractionalSplit<T> fractional_split(const Potential<T>& f, const T& shift, const PairFunction<T>& v,
                                    const Measure2<T>& phi, const Measure2<T>& psi);

template <Scalar T>
MaxFlowResult<T> max_flow(const Measure2<T>& psi, std::size_t s, std::size_t t,
                          const T& tol = default_tolerance<T>());

// sigma-tau flow phi <= psi, or S with sigma(S) - tau(S) > psi(S x S^c).
template <Scalar T>
CirculationOutcome<T> supply_demand_flow(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                                         const T& tol = default_tolerance<T>());

// Feasible sigma-tau flow with phi(v) = target, or (f, b) violating
// psi(|f(y) - f(x) + b v(x,y)|_+) >= tau(f) - sigma(f) + b * target.
template <Scalar T>
ValuedOutcome<T> min_cost_flow(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                               const PairFunction<T>& v, const T& target, const T& tol = default_tolerance<T>());

// Coupling mu <= psi of alpha and beta, or (S, T) with
// lhs = psi(S x T) < rhs = alpha(S) + beta(T) - alpha(J).
template <Scalar T>
CouplingOutcome<T> transship_feasible(const Measure2<T>& psi, const Measure1<T>& alpha, const Measure1<T>& beta,
                                      const T& tol = default_tolerance<T>());

template <Scalar T>
TransshipOptimum<T> transship_min_cost(const Measure1<T>& alpha, const Measure1<T>& beta, const PairFunction<T>& c,
                                       const T& tol = default_tolerance<T>());

// Coupling concentrated on E, or (S, T) with S x T disjoint from E and
// lhs = alpha(S) + beta(T) > rhs = 1.
template <Scalar T>
CouplingOutcome<T> strassen_coupling(const Measure1<T>& alpha, const Measure1<T>& beta, const PairSet& support,
                                     const T& tol = default_tolerance<T>());

}  // namespace mflow

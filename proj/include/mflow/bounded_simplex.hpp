#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mflow/numeric.hpp"

namespace mflow {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// maximize  objective . x
// subject to rows x = rhs,  lower <= x <= upper   (upper absent = +inf)
//
// Lower bounds must be finite. Rows are dense.
template <Scalar T>
struct BoxLp {
  std::size_t num_vars = 0;
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;
  std::vector<T> lower;
  std::vector<std::optional<T>> upper;
  std::vector<T> objective;

  explicit BoxLp(std::size_t n = 0)
      : num_vars(n), lower(n, T(0)), upper(n, std::nullopt), objective(n, T(0)) {}

  std::size_t add_row(std::vector<T> coefficients, T value) {
    coefficients.resize(num_vars, T(0));
    rows.push_back(std::move(coefficients));
    rhs.push_back(std::move(value));
    return rows.size() - 1;
  }
};

template <Scalar T>
struct BoxLpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<T> x;
  T value{0};
  // Row prices y at the final basis: reduced cost of column j is
  // objective_j - y . column_j, which is <= 0 at lower and >= 0 at upper.
  std::vector<T> duals;
  std::size_t iterations = 0;
};

// Two-phase bounded-variable primal simplex on a dense tableau. Entering and
// leaving variables follow Bland's smallest-index rule, so the result is
// deterministic and the method cannot cycle.
template <Scalar T>
BoxLpResult<T> solve_box_lp(const BoxLp<T>& lp, const T& tol = default_tolerance<T>());

}  // namespace mflow

#include "mflow/bounded_simplex.hpp"

#include <stdexcept>

#include "mflow/error.hpp"

namespace mflow {

namespace {

enum class Place { Basic, AtLower, AtUpper };

template <Scalar T>
class Tableau {
 public:
  Tableau(const BoxLp<T>& lp, const T& tol) : lp_(lp), tol_(tol), m_(lp.rows.size()), n_(lp.num_vars) {
    const std::size_t total = n_ + m_;
    lower_ = lp.lower;
    upper_ = lp.upper;
    lower_.resize(total, T(0));
    upper_.resize(total, std::nullopt);
    place_.assign(total, Place::AtLower);
    value_.assign(total, T(0));
    for (std::size_t j = 0; j < n_; ++j) value_[j] = lower_[j];

    tab_.assign(m_, std::vector<T>(total, T(0)));
    sign_.assign(m_, T(1));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      T residual = lp.rhs[i];
      for (std::size_t j = 0; j < n_; ++j) {
        if (lp.rows[i][j] != 0) residual -= lp.rows[i][j] * lower_[j];
      }
      sign_[i] = residual < 0 ? T(-1) : T(1);
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = sign_[i] * lp.rows[i][j];
      tab_[i][n_ + i] = T(1);
      basis_[i] = n_ + i;
      place_[n_ + i] = Place::Basic;
      value_[n_ + i] = sign_[i] * residual;
    }
  }

  BoxLpResult<T> run() {
    BoxLpResult<T> result;
    // Phase 1: drive artificials to zero.
    cost_.assign(n_ + m_, T(0));
    for (std::size_t i = 0; i < m_; ++i) cost_[n_ + i] = T(-1);
    if (!iterate(result.iterations)) throw std::logic_error("phase 1 cannot be unbounded");
    T infeasibility(0);
    for (std::size_t i = 0; i < m_; ++i) infeasibility += value_[n_ + i];
    if (infeasibility > tol_ * T(static_cast<double>(m_ + 1))) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Phase 2: artificials are pinned at zero.
    for (std::size_t i = 0; i < m_; ++i) {
      upper_[n_ + i] = T(0);
      if (place_[n_ + i] != Place::Basic) value_[n_ + i] = T(0);
    }
    cost_.assign(n_ + m_, T(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = lp_.objective[j];
    if (!iterate(result.iterations)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(value_.begin(), value_.begin() + static_cast<std::ptrdiff_t>(n_));
    result.value = T(0);
    for (std::size_t j = 0; j < n_; ++j) result.value += lp_.objective[j] * result.x[j];
    result.duals.assign(m_, T(0));
    for (std::size_t i = 0; i < m_; ++i) {
      T y(0);
      for (std::size_t k = 0; k < m_; ++k) {
        const T& c = cost_[basis_[k]];
        if (c != 0) y += c * tab_[k][n_ + i];
      }
      result.duals[i] = sign_[i] * y;
    }
    return result;
  }

 private:
  bool can_move(std::size_t j) const {
    return !upper_[j] || *upper_[j] > lower_[j];
  }

  T reduced_cost(std::size_t j) const {
    T d = cost_[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const T& c = cost_[basis_[i]];
      if (c != 0 && tab_[i][j] != 0) d -= c * tab_[i][j];
    }
    return d;
  }

  // Returns false when the objective is unbounded.
  bool iterate(std::size_t& iterations) {
    const std::size_t total = n_ + m_;
    for (;;) {
      std::size_t entering = total;
      int direction = 0;
      for (std::size_t j = 0; j < total && entering == total; ++j) {
        if (place_[j] == Place::Basic || !can_move(j)) continue;
        // Artificials never re-enter once phase 1 is over.
        if (j >= n_ && upper_[j] && *upper_[j] == 0) continue;
        T d = reduced_cost(j);
        if (place_[j] == Place::AtLower && d > tol_) {
          entering = j;
          direction = 1;
        } else if (place_[j] == Place::AtUpper && d < -tol_) {
          entering = j;
          direction = -1;
        }
      }
      if (entering == total) return true;
      ++iterations;

      // Ratio test. Basic variable i moves by -direction * tab[i][entering] * t.
      std::optional<T> step;
      std::size_t leave_row = m_;
      bool leave_to_upper = false;
      if (upper_[entering]) step = *upper_[entering] - lower_[entering];
      for (std::size_t i = 0; i < m_; ++i) {
        T a = tab_[i][entering];
        if (direction < 0) a = -a;
        if (a > tol_ || (is_exact_v<T> && a > 0)) {
          const std::size_t b = basis_[i];
          T limit = (value_[b] - lower_[b]) / a;
          if (limit < 0) limit = T(0);
          if (better(limit, step, i, leave_row)) {
            step = step && *step < limit ? *step : limit;
            leave_row = i;
            leave_to_upper = false;
          }
        } else if (a < -tol_ || (is_exact_v<T> && a < 0)) {
          const std::size_t b = basis_[i];
          if (!upper_[b]) continue;
          T limit = (*upper_[b] - value_[b]) / (-a);
          if (limit < 0) limit = T(0);
          if (better(limit, step, i, leave_row)) {
            step = step && *step < limit ? *step : limit;
            leave_row = i;
            leave_to_upper = true;
          }
        }
      }
      if (!step) return false;

      const T t = *step;
      const T signed_step = direction > 0 ? t : T(-t);
      for (std::size_t i = 0; i < m_; ++i) {
        if (tab_[i][entering] != 0) value_[basis_[i]] -= tab_[i][entering] * signed_step;
      }
      value_[entering] += signed_step;

      if (leave_row == m_) {
        // Bound flip.
        place_[entering] = direction > 0 ? Place::AtUpper : Place::AtLower;
        value_[entering] = direction > 0 ? *upper_[entering] : lower_[entering];
        continue;
      }
      const std::size_t leaving = basis_[leave_row];
      place_[leaving] = leave_to_upper ? Place::AtUpper : Place::AtLower;
      value_[leaving] = leave_to_upper ? *upper_[leaving] : lower_[leaving];
      pivot(leave_row, entering);
      place_[entering] = Place::Basic;
      basis_[leave_row] = entering;
    }
  }

  // Smaller step wins; near-ties go to the smaller basic variable index. An
  // existing bound-flip candidate (row == m_) keeps precedence on ties.
  bool better(const T& limit, const std::optional<T>& step, std::size_t row, std::size_t best_row) const {
    if (!step) return true;
    const T slack = is_exact_v<T> ? T(0) : T(tol_ * T(1e-3));
    if (limit < *step - slack) return true;
    if (limit <= *step + slack && best_row != m_) return basis_[row] < basis_[best_row];
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t total = n_ + m_;
    const T p = tab_[r][c];
    for (std::size_t j = 0; j < total; ++j) {
      if (tab_[r][j] != 0) tab_[r][j] /= p;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      const T f = tab_[i][c];
      for (std::size_t j = 0; j < total; ++j) {
        if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
      }
      if constexpr (!is_exact_v<T>) tab_[i][c] = 0.0;
    }
  }

  const BoxLp<T>& lp_;
  T tol_;
  std::size_t m_, n_;
  std::vector<std::vector<T>> tab_;
  std::vector<T> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Place> place_;
  std::vector<T> value_;
  std::vector<T> lower_;
  std::vector<std::optional<T>> upper_;
  std::vector<T> cost_;
};

}  // namespace

template <Scalar T>
BoxLpResult<T> solve_box_lp(const BoxLp<T>& lp, const T& tol) {
  if (lp.rows.size() != lp.rhs.size() || lp.lower.size() != lp.num_vars || lp.upper.size() != lp.num_vars ||
      lp.objective.size() != lp.num_vars) {
    throw Error(ErrorCode::InvalidArgument, "inconsistent LP dimensions");
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (lp.upper[j] && *lp.upper[j] < lp.lower[j]) {
      BoxLpResult<T> r;
      r.status = LpStatus::Infeasible;
      return r;
    }
  }
  Tableau<T> tableau(lp, tol);
  return tableau.run();
}

template BoxLpResult<double> solve_box_lp(const BoxLp<double>&, const double&);
template BoxLpResult<Rational> solve_box_lp(const BoxLp<Rational>&, const Rational&);

}  // namespace mflow

#include "mflow/harness/lp_oracle.hpp"

#include <string>

namespace mflow::oracle {

namespace {

// Textbook tableau: Dantzig pricing, switching to Bland's rule after a run of
// degenerate pivots.
template <Scalar T>
class Simplex {
 public:
  Simplex(const Lp<T>& lp, const T& tol) : tol_(tol), m_(lp.rows.size()), n_(lp.vars) {
    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : lp.rows) {
      const Sense s = effective(r);
      if (s != Sense::Eq) ++slacks;
      if (s != Sense::Le) ++artificials;
    }
    art_begin_ = n_ + slacks;
    cols_ = art_begin_ + artificials;
    tab_.assign(m_, std::vector<T>(cols_ + 1, T(0)));
    basis_.assign(m_, 0);
    std::size_t next_slack = n_, next_art = art_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = lp.rows[i];
      const bool flip = r.b < 0;
      for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = flip ? T(-r.a[j]) : r.a[j];
      tab_[i][cols_] = flip ? T(-r.b) : r.b;
      const Sense s = effective(r);
      if (s == Sense::Le) {
        tab_[i][next_slack] = T(1);
        basis_[i] = next_slack++;
      } else {
        if (s == Sense::Ge) tab_[i][next_slack++] = T(-1);
        tab_[i][next_art] = T(1);
        basis_[i] = next_art++;
      }
    }
    objective_ = lp.objective;
  }

  Verdict<T> run() {
    Verdict<T> out;
    std::vector<T> phase1(cols_, T(0));
    for (std::size_t j = art_begin_; j < cols_; ++j) phase1[j] = T(-1);
    price(phase1);
    iterate(cols_);
    const T scale(static_cast<double>(m_ + 1));
    if (zrow_[cols_] < -tol_ * scale) return out;
    expel_artificials();

    std::vector<T> phase2(cols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = objective_[j];
    price(phase2);
    out.feasible = true;
    if (!iterate(art_begin_)) {
      out.unbounded = true;
      return out;
    }
    out.x.assign(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = tab_[i][cols_];
    }
    out.optimum = T(0);
    for (std::size_t j = 0; j < n_; ++j) out.optimum += objective_[j] * out.x[j];
    return out;
  }

 private:
  static Sense effective(const typename Lp<T>::Row& r) {
    if (!(r.b < 0) || r.sense == Sense::Eq) return r.sense;
    return r.sense == Sense::Le ? Sense::Ge : Sense::Le;
  }

  // zrow_[j] = c_B B^-1 A_j - c_j; zrow_[cols_] = current objective.
  void price(const std::vector<T>& c) {
    cost_ = c;
    zrow_.assign(cols_ + 1, T(0));
    for (std::size_t j = 0; j < cols_; ++j) zrow_[j] = -c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const T& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) zrow_[j] += cb * tab_[i][j];
    }
  }

  bool negative(const T& x) const { return is_exact_v<T> ? x < 0 : x < -tol_; }
  bool positive(const T& x) const { return is_exact_v<T> ? x > 0 : x > tol_; }

  // Columns >= limit never enter. Returns false on unboundedness.
  bool iterate(std::size_t limit) {
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (!negative(zrow_[j])) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter == limit || zrow_[j] < zrow_[enter]) enter = j;
      }
      if (enter == limit) return true;
      std::size_t leave = m_;
      T best(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (!positive(tab_[i][enter])) continue;
        T ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      if (best == 0) {
        if (++degenerate_run > 20) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T p = tab_[r][c];
    for (auto& x : tab_[r]) x /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      const T f = tab_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
    }
    if (zrow_[c] != 0) {
      const T f = zrow_[c];
      for (std::size_t j = 0; j <= cols_; ++j) zrow_[j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  // Pivot zero-valued artificials out of the basis where possible. Rows
  // without a usable pivot are redundant and stay inert.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (abs_value(tab_[i][j]) > tol_ || (is_exact_v<T> && tab_[i][j] != 0)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  T tol_;
  std::size_t m_, n_, cols_ = 0, art_begin_ = 0;
  std::vector<std::vector<T>> tab_;
  std::vector<std::size_t> basis_;
  std::vector<T> zrow_;
  std::vector<T> cost_;
  std::vector<T> objective_;
};

template <Scalar T>
std::vector<T> zeros(std::size_t n) {
  return std::vector<T>(n, T(0));
}

// Pair variables (x, y) in row-major order.
inline std::size_t pv(std::size_t n, std::size_t x, std::size_t y) { return x * n + y; }

template <Scalar T>
void add_balance(Lp<T>& lp, std::size_t n, std::size_t offset, const std::vector<T>& net) {
  for (std::size_t a = 0; a < n; ++a) {
    auto row = zeros<T>(lp.vars);
    for (std::size_t y = 0; y < n; ++y) {
      row[offset + pv(n, a, y)] += T(1);
      row[offset + pv(n, y, a)] -= T(1);
    }
    lp.add(std::move(row), Sense::Eq, net[a]);
  }
}

template <Scalar T>
void add_bounds(Lp<T>& lp, std::size_t n, const Measure2<T>* lower, const Measure2<T>* upper) {
  for (std::size_t k = 0; k < n * n; ++k) {
    auto row = zeros<T>(lp.vars);
    row[k] = T(1);
    if (lower && (*lower)(k / n, k % n) > 0) lp.add(row, Sense::Ge, (*lower)(k / n, k % n));
    if (upper) lp.add(std::move(row), Sense::Le, (*upper)(k / n, k % n));
  }
}

}  // namespace

template <Scalar T>
Verdict<T> solve(const Lp<T>& lp, const T& tol) {
  if (lp.vars > kMaxVariables) {
    throw Error(ErrorCode::TooLarge, "oracle LP has " + std::to_string(lp.vars) + " variables");
  }
  Simplex<T> s(lp, tol);
  return s.run();
}

template <Scalar T>
Verdict<T> circulation(const Measure2<T>& phi, const Measure2<T>& psi, const T& tol) {
  const std::size_t n = phi.size();
  Lp<T> lp(n * n);
  add_bounds(lp, n, &phi, &psi);
  add_balance(lp, n, 0, zeros<T>(n));
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> valued_circulation(const Measure2<T>& phi, const Measure2<T>& psi, const Measure2<T>& v, const T& c,
                              const T& tol) {
  const std::size_t n = phi.size();
  Lp<T> lp(n * n);
  add_bounds(lp, n, &phi, &psi);
  add_balance(lp, n, 0, zeros<T>(n));
  lp.add(v.weights(), Sense::Eq, c);
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> ergodic(const Measure2<T>& psi, const T& tol) {
  return valued_circulation(Measure2<T>(psi.space()), psi, Measure2<T>::constant(psi.space(), T(1)), T(1), tol);
}

template <Scalar T>
Verdict<T> max_flow(const Measure2<T>& psi, std::size_t s, std::size_t t, const T& tol) {
  const std::size_t n = psi.size();
  // Pair variables, then the flow value.
  Lp<T> lp(n * n + 1);
  add_bounds<T>(lp, n, nullptr, &psi);
  for (std::size_t a = 0; a < n; ++a) {
    auto row = zeros<T>(lp.vars);
    for (std::size_t y = 0; y < n; ++y) {
      row[pv(n, a, y)] += T(1);
      row[pv(n, y, a)] -= T(1);
    }
    if (a == s) row[n * n] = T(-1);
    if (a == t) row[n * n] = T(1);
    lp.add(std::move(row), Sense::Eq, T(0));
  }
  lp.objective[n * n] = T(1);
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> supply_demand(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau, const T& tol) {
  const std::size_t n = psi.size();
  Lp<T> lp(n * n);
  add_bounds<T>(lp, n, nullptr, &psi);
  add_balance(lp, n, 0, (sigma - tau).weights());
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> min_cost_flow(const Measure2<T>& psi, const Measure1<T>& sigma, const Measure1<T>& tau,
                         const Measure2<T>& v, const T& target, const T& tol) {
  const std::size_t n = psi.size();
  Lp<T> lp(n * n);
  add_bounds<T>(lp, n, nullptr, &psi);
  add_balance(lp, n, 0, (sigma - tau).weights());
  lp.add(v.weights(), Sense::Eq, target);
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> transship(const Measure2<T>& psi, const Measure1<T>& alpha, const Measure1<T>& beta, const T& tol) {
  const std::size_t n = psi.size();
  Lp<T> lp(n * n);
  add_bounds<T>(lp, n, nullptr, &psi);
  for (std::size_t a = 0; a < n; ++a) {
    auto out = zeros<T>(lp.vars), in = zeros<T>(lp.vars);
    for (std::size_t y = 0; y < n; ++y) {
      out[pv(n, a, y)] = T(1);
      in[pv(n, y, a)] = T(1);
    }
    lp.add(std::move(out), Sense::Eq, alpha(a));
    lp.add(std::move(in), Sense::Eq, beta(a));
  }
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> transship_cost(const Measure1<T>& alpha, const Measure1<T>& beta, const Measure2<T>& c, const T& tol) {
  const std::size_t n = alpha.size();
  Lp<T> lp(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto out = zeros<T>(lp.vars), in = zeros<T>(lp.vars);
    for (std::size_t y = 0; y < n; ++y) {
      out[pv(n, a, y)] = T(1);
      in[pv(n, y, a)] = T(1);
    }
    lp.add(std::move(out), Sense::Eq, alpha(a));
    lp.add(std::move(in), Sense::Eq, beta(a));
  }
  for (std::size_t k = 0; k < n * n; ++k) lp.objective[k] = -c.weights()[k];
  auto v = solve(lp, tol);
  v.optimum = -v.optimum;
  return v;
}

template <Scalar T>
Verdict<T> strassen(const Measure1<T>& alpha, const Measure1<T>& beta, const Measure2<T>& allowed, const T& tol) {
  Measure2<T> psi(alpha.space());
  for (std::size_t k = 0; k < psi.size() * psi.size(); ++k) {
    if (allowed.weights()[k] != 0) psi(k / psi.size(), k % psi.size()) = alpha.total();
  }
  return transship(psi, alpha, beta, tol);
}

template <Scalar T>
Verdict<T> circulation_mass(const Measure2<T>& beta, const T& tol) {
  const std::size_t n = beta.size();
  Lp<T> lp(n * n);
  add_bounds<T>(lp, n, nullptr, &beta);
  add_balance(lp, n, 0, zeros<T>(n));
  lp.objective.assign(n * n, T(1));
  return solve(lp, tol);
}

template <Scalar T>
Verdict<T> multiflow(const Measure2<T>& sigma, const Measure2<T>& psi, const T& epsilon, const T& tol) {
  const std::size_t n = sigma.size();
  std::vector<std::pair<std::size_t, std::size_t>> demands;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (s != t && sigma(s, t) > 0) demands.emplace_back(s, t);
  // Per ordered demand pair a full pair table, then per-pair overload.
  const std::size_t k = demands.size(), block = n * n, over = k * block;
  Lp<T> lp(over + block);
  for (std::size_t c = 0; c < k; ++c) {
    auto net = zeros<T>(n);
    net[demands[c].first] = T(1);
    net[demands[c].second] = T(-1);
    add_balance(lp, n, c * block, net);
  }
  for (std::size_t e = 0; e < block; ++e) {
    auto row = zeros<T>(lp.vars);
    for (std::size_t c = 0; c < k; ++c) row[c * block + e] = sigma(demands[c].first, demands[c].second);
    row[over + e] = T(-1);
    lp.add(std::move(row), Sense::Le, psi.weights()[e]);
    lp.objective[over + e] = T(-1);
  }
  auto v = solve(lp, tol);
  v.optimum = -v.optimum;
  v.feasible = v.feasible && v.optimum <= epsilon + tol;
  return v;
}

#define MFLOW_INSTANTIATE(T)                                                                                    \
  template Verdict<T> solve(const Lp<T>&, const T&);                                                            \
  template Verdict<T> circulation(const Measure2<T>&, const Measure2<T>&, const T&);                            \
  template Verdict<T> valued_circulation(const Measure2<T>&, const Measure2<T>&, const Measure2<T>&, const T&,  \
                                         const T&);                                                             \
  template Verdict<T> ergodic(const Measure2<T>&, const T&);                                                    \
  template Verdict<T> max_flow(const Measure2<T>&, std::size_t, std::size_t, const T&);                         \
  template Verdict<T> supply_demand(const Measure2<T>&, const Measure1<T>&, const Measure1<T>&, const T&);      \
  template Verdict<T> min_cost_flow(const Measure2<T>&, const Measure1<T>&, const Measure1<T>&,                 \
                                    const Measure2<T>&, const T&, const T&);                                    \
  template Verdict<T> transship(const Measure2<T>&, const Measure1<T>&, const Measure1<T>&, const T&);          \
  template Verdict<T> transship_cost(const Measure1<T>&, const Measure1<T>&, const Measure2<T>&, const T&);     \
  template Verdict<T> strassen(const Measure1<T>&, const Measure1<T>&, const Measure2<T>&, const T&);           \
  template Verdict<T> circulation_mass(const Measure2<T>&, const T&);                                           \
  template Verdict<T> multiflow(const Measure2<T>&, const Measure2<T>&, const T&, const T&);

MFLOW_INSTANTIATE(double)
MFLOW_INSTANTIATE(Rational)

#undef MFLOW_INSTANTIATE

}  // namespace mflow::oracle

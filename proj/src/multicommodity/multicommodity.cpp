#include "mflow/multicommodity.hpp"

#include <random>

#include "mflow/bounded_simplex.hpp"

namespace mflow {

template <Scalar T>
const Measure2<T>* MultiFlow<T>::flow(std::size_t s, std::size_t t) const {
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (pairs[k] == std::pair{s, t}) return &flows[k];
  }
  return nullptr;
}

template <Scalar T>
Measure2<T> LoadTensor<T>::load() const {
  Measure2<T> m(space_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) m(x, y) += (*this)(x, y, s, t);
  return m;
}

template <Scalar T>
Measure2<T> LoadTensor<T>::demand() const {
  Measure2<T> m(space_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) m(s, t) += (*this)(x, y, s, t);
  return m;
}

template <Scalar T>
LoadTensor<T> LoadTensor<T>::swapped() const {
  LoadTensor out(space_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t s = 0; s < n_; ++s)
        for (std::size_t t = 0; t < n_; ++t) out(y, x, t, s) = (*this)(x, y, s, t);
  return out;
}

namespace {

template <Scalar T>
void require_symmetric(const Measure2<T>& m, const char* what, const T& tol) {
  if (!m.is_nonnegative()) throw Error(ErrorCode::NegativeMeasure, std::string(what) + " has a negative weight");
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      if (abs_value(m(x, y) - m(y, x)) > tol) {
        throw Error(ErrorCode::NotSymmetric, std::string(what) + " is not symmetric at (" + m.space()->label(x) +
                                                 "," + m.space()->label(y) + ")");
      }
    }
  }
}

// Unordered pairs x < y, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> edges(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) out.emplace_back(x, y);
  return out;
}

std::size_t edge_index(std::size_t n, std::size_t x, std::size_t y) {
  if (x > y) std::swap(x, y);
  return x * n - x * (x + 1) / 2 + (y - x - 1);
}

// Ordered pairs x != y.
std::size_t arc_index(std::size_t n, std::size_t x, std::size_t y) { return x * (n - 1) + (y < x ? y : y - 1); }

}  // namespace

template <Scalar T>
std::pair<T, T> volume_condition(const Measure2<T>& sigma, const Measure2<T>& psi, const Pseudometric<T>& d,
                                 const T& tol) {
  require_same_space(sigma.space(), psi.space());
  require_same_space(sigma.space(), d.space());
  require_symmetric(sigma, "demand", tol);
  require_symmetric(psi, "capacity", tol);
  require_pseudometric(d, tol);
  return {sigma.integrate(d.d), psi.integrate(d.d)};
}

template <Scalar T>
std::pair<Pseudometric<T>, T> worst_pseudometric(const Measure2<T>& sigma, const Measure2<T>& psi, const T& tol) {
  require_same_space(sigma.space(), psi.space());
  require_symmetric(sigma, "demand", tol);
  require_symmetric(psi, "capacity", tol);
  const std::size_t n = sigma.size();
  const auto es = edges(n);
  const std::size_t u = es.size();
  const std::size_t triangles = n >= 3 ? u * (n - 2) : 0;

  BoxLp<T> lp(u + triangles);
  for (std::size_t e = 0; e < u; ++e) {
    const auto [x, y] = es[e];
    lp.upper[e] = T(1);
    lp.objective[e] = sigma(x, y) + sigma(y, x) - psi(x, y) - psi(y, x);
  }
  std::size_t slack = u;
  for (std::size_t e = 0; e < u; ++e) {
    const auto [x, z] = es[e];
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || y == z) continue;
      std::vector<T> row(lp.num_vars, T(0));
      row[e] = T(1);
      row[edge_index(n, x, y)] = T(-1);
      row[edge_index(n, y, z)] = T(-1);
      row[slack++] = T(1);
      lp.add_row(std::move(row), T(0));
    }
  }
  auto res = solve_box_lp(lp, kernel_tolerance(tol));
  if (res.status != LpStatus::Optimal) throw std::logic_error("pseudometric LP is not optimal");
  Measure2<T> d(sigma.space());
  for (std::size_t e = 0; e < u; ++e) {
    const auto [x, y] = es[e];
    d(x, y) = d(y, x) = res.x[e];
  }
  T gap = sigma.integrate(d) - psi.integrate(d);
  return {Pseudometric<T>{std::move(d)}, std::move(gap)};
}

template <Scalar T>
MultiflowOutcome<T> solve_multicommodity(const Measure2<T>& sigma, const Measure2<T>& psi, const T& epsilon,
                                         const T& tol) {
  require_same_space(sigma.space(), psi.space());
  require_symmetric(sigma, "demand", tol);
  require_symmetric(psi, "capacity", tol);
  if (epsilon < 0) throw Error(ErrorCode::NegativeEpsilon, "overload bound must be nonnegative");
  const std::size_t n = sigma.size();
  const auto es = edges(n);
  const std::size_t u = es.size();
  std::vector<std::pair<std::size_t, std::size_t>> commodities;
  for (const auto& [s, t] : es) {
    if (sigma(s, t) > 0) commodities.emplace_back(s, t);
  }
  const std::size_t k = commodities.size();
  const std::size_t arcs = n * (n - 1);
  const std::size_t over = k * arcs, slack = over + u;

  // Unit flows for s < t; the reverse commodity is the transpose, so each
  // unordered edge carries sigma(s,t) * (phi(x,y) + phi(y,x)) in each direction.
  BoxLp<T> lp(slack + u);
  for (std::size_t e = 0; e < u; ++e) lp.objective[over + e] = T(-2);
  for (std::size_t c = 0; c < k; ++c) {
    const auto [s, t] = commodities[c];
    for (std::size_t a = 0; a + 1 < n; ++a) {
      std::vector<T> row(lp.num_vars, T(0));
      for (std::size_t y = 0; y < n; ++y) {
        if (y == a) continue;
        row[c * arcs + arc_index(n, a, y)] += T(1);
        row[c * arcs + arc_index(n, y, a)] -= T(1);
      }
      lp.add_row(std::move(row), T(a == s ? 1 : 0) - T(a == t ? 1 : 0));
    }
  }
  for (std::size_t e = 0; e < u; ++e) {
    const auto [x, y] = es[e];
    std::vector<T> row(lp.num_vars, T(0));
    for (std::size_t c = 0; c < k; ++c) {
      const auto [s, t] = commodities[c];
      row[c * arcs + arc_index(n, x, y)] += sigma(s, t);
      row[c * arcs + arc_index(n, y, x)] += sigma(s, t);
    }
    row[over + e] = T(-1);
    row[slack + e] = T(1);
    lp.add_row(std::move(row), psi(x, y));
  }
  auto res = solve_box_lp(lp, kernel_tolerance(tol));
  if (res.status != LpStatus::Optimal) throw std::logic_error("overload LP is not optimal");
  const T min_overload = -res.value;

  if (min_overload > epsilon + tol) {
    auto [d, gap] = worst_pseudometric(sigma, psi, tol);
    const T lhs = sigma.integrate(d.d), rhs = psi.integrate(d.d);
    return MultiflowCertificate<T>{std::move(d), lhs, rhs, min_overload};
  }

  MultiFlow<T> mf;
  mf.sigma = sigma;
  mf.total_load = Measure2<T>(sigma.space());
  for (std::size_t c = 0; c < k; ++c) {
    const auto [s, t] = commodities[c];
    Measure2<T> f(sigma.space());
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x != y) f(x, y) = res.x[c * arcs + arc_index(n, x, y)];
      }
    }
    Measure2<T> g = transpose(f);
    mf.total_load += sigma(s, t) * f;
    mf.total_load += sigma(t, s) * g;
    mf.pairs.emplace_back(s, t);
    mf.flows.push_back(std::move(f));
    mf.pairs.emplace_back(t, s);
    mf.flows.push_back(std::move(g));
  }
  mf.overload = setminus(mf.total_load, psi).total();
  return mf;
}

template <Scalar T>
LoadTensor<T> build_load_tensor(const MultiFlow<T>& mf) {
  LoadTensor<T> phi(mf.sigma.space());
  const std::size_t n = phi.size();
  for (std::size_t c = 0; c < mf.pairs.size(); ++c) {
    const auto [s, t] = mf.pairs[c];
    const T& w = mf.sigma(s, t);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) phi(x, y, s, t) = w * mf.flows[c](x, y);
  }
  return phi;
}

template <Scalar T>
MultiFlow<T> extract_flows(const LoadTensor<T>& phi, const Measure2<T>& sigma, const T& tol) {
  require_same_space(phi.space(), sigma.space());
  const std::size_t n = phi.size();
  MultiFlow<T> mf;
  mf.sigma = sigma;
  mf.total_load = Measure2<T>(sigma.space());
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!(sigma(s, t) > 0) || s == t) continue;
      Measure2<T> f(sigma.space());
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const T& w = phi(x, y, s, t);
          if (w < -tol) throw Error(ErrorCode::ExtractFailure, "load tensor has a negative entry");
          f(x, y) = w / sigma(s, t);
        }
      }
      // Phi^{134} - Phi^{234} = sigma-bar on this slice.
      for (std::size_t a = 0; a < n; ++a) {
        T net(0);
        for (std::size_t y = 0; y < n; ++y) net += phi(a, y, s, t) - phi(y, a, s, t);
        T expect = a == s ? sigma(s, t) : (a == t ? T(-sigma(s, t)) : T(0));
        if (abs_value(net - expect) > tol) {
          throw Error(ErrorCode::ExtractFailure, "load identity fails at atom " + sigma.space()->label(a));
        }
      }
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) mf.total_load(x, y) += phi(x, y, s, t);
      mf.pairs.emplace_back(s, t);
      mf.flows.push_back(std::move(f));
    }
  }
  return mf;
}

template <Scalar T>
AxiomReport metrical_axiom_check(const Pseudometric<T>& d, std::size_t trials, std::uint64_t seed, const T& tol) {
  const std::size_t n = d.size();
  AxiomReport rep;
  // Point masses first: delta_xx, delta_xy against delta_yx, and kappa = delta_xyz.
  for (std::size_t x = 0; x < n; ++x) {
    ++rep.probes;
    if (abs_value(d(x, x)) > tol) rep.diagonal = false;
    for (std::size_t y = 0; y < n; ++y) {
      ++rep.probes;
      if (abs_value(d(x, y) - d(y, x)) > tol) rep.symmetric = false;
      for (std::size_t z = 0; z < n; ++z) {
        ++rep.probes;
        if (d(x, y) + d(y, z) < d(x, z) - tol) {
          rep.triangle = false;
          if (!rep.triangle_witness) rep.triangle_witness = std::array<std::size_t, 3>{x, y, z};
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(0, 9);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    T diag(0), forward(0), backward(0);
    for (std::size_t x = 0; x < n; ++x) diag += T(weight(rng)) * d(x, x);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const T w(weight(rng));
        forward += w * d(x, y);
        backward += w * d(y, x);
      }
    }
    T d12(0), d23(0), d13(0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          const T w(weight(rng));
          if (w == 0) continue;
          d12 += w * d(x, y);
          d23 += w * d(y, z);
          d13 += w * d(x, z);
        }
      }
    }
    rep.probes += 3;
    const T scale(static_cast<double>(n * n * n * 9 + 1));
    if (abs_value(diag) > tol * scale) rep.diagonal = false;
    if (abs_value(forward - backward) > tol * scale) rep.symmetric = false;
    if (d12 + d23 < d13 - tol * scale) rep.triangle = false;
  }
  return rep;
}

template struct MultiFlow<double>;
template struct MultiFlow<Rational>;
template class LoadTensor<double>;
template class LoadTensor<Rational>;

#define MFLOW_INSTANTIATE(T)                                                                                      \
  template std::pair<T, T> volume_condition(const Measure2<T>&, const Measure2<T>&, const Pseudometric<T>&,       \
                                            const T&);                                                            \
  template std::pair<Pseudometric<T>, T> worst_pseudometric(const Measure2<T>&, const Measure2<T>&, const T&);     \
  template MultiflowOutcome<T> solve_multicommodity(const Measure2<T>&, const Measure2<T>&, const T&, const T&);  \
  template LoadTensor<T> build_load_tensor(const MultiFlow<T>&);                                                  \
  template MultiFlow<T> extract_flows(const LoadTensor<T>&, const Measure2<T>&, const T&);                        \
  template AxiomReport metrical_axiom_check(const Pseudometric<T>&, std::size_t, std::uint64_t, const T&);

MFLOW_INSTANTIATE(double)
MFLOW_INSTANTIATE(Rational)

#undef MFLOW_INSTANTIATE

}  // namespace mflow

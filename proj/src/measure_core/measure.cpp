#include "mflow/measure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace mflow {

AtomSpace::AtomSpace(std::vector<std::string> labels, std::optional<std::vector<Interval>> intervals)
    : labels_(std::move(labels)), intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate atom label '" + labels_[i] + "'");
    }
  }
  if (!intervals_) return;
  if (intervals_->size() != labels_.size()) {
    throw Error(ErrorCode::InvalidArgument, "interval map length differs from atom count");
  }
  std::vector<Interval> sorted = *intervals_;
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational cursor(0);
  for (const auto& iv : sorted) {
    if (!(iv.lo < iv.hi)) throw Error(ErrorCode::InvalidArgument, "empty interval in interval map");
    if (iv.lo != cursor) throw Error(ErrorCode::InvalidArgument, "intervals overlap or leave a gap");
    cursor = iv.hi;
  }
  if (cursor != 1) throw Error(ErrorCode::InvalidArgument, "intervals do not cover [0,1)");
}

std::optional<std::size_t> AtomSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t AtomSpace::require_index(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown atom '" + label + "'");
  return *idx;
}

SpacePtr make_space(std::vector<std::string> labels, std::optional<std::vector<Interval>> intervals) {
  return std::make_shared<const AtomSpace>(std::move(labels), std::move(intervals));
}

SpacePtr make_uniform_space(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Interval> intervals;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    intervals.push_back({Rational(i) / Rational(n), Rational(i + 1) / Rational(n)});
  }
  return make_space(std::move(labels), std::move(intervals));
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorCode::SpaceMismatch, "measures live on different atom spaces");
}

AtomSet::AtomSet(std::size_t n, std::initializer_list<std::size_t> atoms) : member_(n, false) {
  for (auto a : atoms) member_.at(a) = true;
}

AtomSet AtomSet::from_mask(std::size_t n, std::uint64_t mask) {
  AtomSet s(n);
  for (std::size_t i = 0; i < n; ++i) s.member_[i] = ((mask >> i) & 1U) != 0;
  return s;
}

AtomSet AtomSet::from_indices(std::size_t n, const std::vector<std::size_t>& atoms) {
  AtomSet s(n);
  for (auto a : atoms) s.member_.at(a) = true;
  return s;
}

AtomSet AtomSet::all(std::size_t n) {
  AtomSet s(n);
  s.member_.assign(n, true);
  return s;
}

std::size_t AtomSet::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

AtomSet AtomSet::complement() const {
  AtomSet s(member_.size());
  for (std::size_t i = 0; i < member_.size(); ++i) s.member_[i] = !member_[i];
  return s;
}

std::vector<std::size_t> AtomSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) out.push_back(i);
  }
  return out;
}

template <Scalar T>
Measure2<T> Potential<T>::as_pair_function() const {
  Measure2<T> g(space_);
  for (std::size_t x = 0; x < f_.size(); ++x) {
    for (std::size_t y = 0; y < f_.size(); ++y) g(x, y) = f_[x] - f_[y];
  }
  return g;
}

template <Scalar T>
Potential<T> Potential<T>::normalized() const {
  if (f_.empty()) return *this;
  T lo = *std::min_element(f_.begin(), f_.end());
  std::vector<T> g = f_;
  for (auto& v : g) v -= lo;
  return Potential(space_, std::move(g));
}

template <Scalar T>
std::pair<Measure1<T>, Measure1<T>> marginals(const Measure2<T>& mu) {
  const std::size_t n = mu.size();
  Measure1<T> first(mu.space()), second(mu.space());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      first(x) += mu(x, y);
      second(y) += mu(x, y);
    }
  }
  return {std::move(first), std::move(second)};
}

template <Scalar T>
Measure2<T> transpose(const Measure2<T>& mu) {
  Measure2<T> out(mu.space());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    for (std::size_t y = 0; y < mu.size(); ++y) out(y, x) = mu(x, y);
  }
  return out;
}

template <Scalar T>
JordanParts<Measure1<T>> jordan(const Measure1<T>& mu) {
  Measure1<T> pos(mu.space()), neg(mu.space());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu(i) >= 0) {
      pos(i) = mu(i);
    } else {
      neg(i) = -mu(i);
    }
  }
  return {std::move(pos), std::move(neg)};
}

template <Scalar T>
JordanParts<Measure2<T>> jordan(const Measure2<T>& mu) {
  return {positive_part(mu), negative_part(mu)};
}

template <Scalar T>
T tv_norm(const Measure1<T>& mu) {
  T s(0);
  for (const auto& w : mu.weights()) s += abs_value(w);
  return s;
}

template <Scalar T>
T tv_norm(const Measure2<T>& mu) {
  T s(0);
  for (const auto& w : mu.weights()) s += abs_value(w);
  return s;
}

namespace {

template <class M>
void require_nonnegative_pair(const M& a, const M& b) {
  if (!a.is_nonnegative() || !b.is_nonnegative()) {
    throw Error(ErrorCode::NegativeMeasure, "meet is defined for nonnegative measures");
  }
}

}  // namespace

template <Scalar T>
Measure1<T> setminus(const Measure1<T>& a, const Measure1<T>& b) {
  require_same_space(a.space(), b.space());
  Measure1<T> out(a.space());
  for (std::size_t i = 0; i < a.size(); ++i) {
    T d = a(i) - b(i);
    if (d > 0) out(i) = d;
  }
  return out;
}

template <Scalar T>
Measure2<T> setminus(const Measure2<T>& a, const Measure2<T>& b) {
  return positive_part(a - b);
}

template <Scalar T>
Measure1<T> meet(const Measure1<T>& a, const Measure1<T>& b) {
  require_nonnegative_pair(a, b);
  return a - setminus(a, b);
}

template <Scalar T>
Measure2<T> meet(const Measure2<T>& a, const Measure2<T>& b) {
  require_nonnegative_pair(a, b);
  return a - setminus(a, b);
}

template <Scalar T>
bool is_circulation(const Measure2<T>& alpha, const T& tol) {
  auto [out, in] = marginals(alpha);
  return tv_norm(out - in) <= tol;
}

template <Scalar T>
T eval_potential(const Measure2<T>& mu, const Potential<T>& f) {
  require_same_space(mu.space(), f.space());
  return mu.integrate_fn([&](std::size_t x, std::size_t y) { return f.pair(x, y); });
}

template <Scalar T>
CutChain<T> potential_to_cuts(const Potential<T>& f) {
  std::vector<T> levels = f.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  CutChain<T> chain;
  const std::size_t n = f.values().size();
  for (std::size_t k = 1; k < levels.size(); ++k) {
    AtomSet set(n);
    for (std::size_t x = 0; x < n; ++x) {
      if (f(x) >= levels[k]) set.insert(x);
    }
    chain.levels.push_back({levels[k], levels[k] - levels[k - 1], std::move(set)});
  }
  return chain;
}

template <Scalar T>
Measure2<T> cuts_to_pair_function(const SpacePtr& space, const CutChain<T>& chain) {
  Measure2<T> g(space);
  const std::size_t n = space->size();
  for (const auto& level : chain.levels) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        int d = int(level.set.contains(x)) - int(level.set.contains(y));
        if (d != 0) g(x, y) += T(d) * level.weight;
      }
    }
  }
  return g;
}

template <Scalar T>
Measure2<T> product(const Measure1<T>& a, const Measure1<T>& b) {
  require_same_space(a.space(), b.space());
  Measure2<T> out(a.space());
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) out(x, y) = a(x) * b(y);
  }
  return out;
}

template <Scalar T>
Measure2<T> positive_part(const Measure2<T>& g) {
  Measure2<T> out(g.space());
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (g(x, y) > 0) out(x, y) = g(x, y);
    }
  }
  return out;
}

template <Scalar T>
Measure2<T> negative_part(const Measure2<T>& g) {
  Measure2<T> out(g.space());
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (g(x, y) < 0) out(x, y) = -g(x, y);
    }
  }
  return out;
}

Measure1<Rational> to_exact(const Measure1<double>& m) {
  std::vector<Rational> w;
  for (double x : m.weights()) w.push_back(to_rational(x));
  return Measure1<Rational>(m.space(), std::move(w));
}
Measure2<Rational> to_exact(const Measure2<double>& m) {
  std::vector<Rational> w;
  for (double x : m.weights()) w.push_back(to_rational(x));
  return Measure2<Rational>(m.space(), std::move(w));
}
Measure1<double> to_float(const Measure1<Rational>& m) {
  std::vector<double> w;
  for (const auto& x : m.weights()) w.push_back(to_double(x));
  return Measure1<double>(m.space(), std::move(w));
}
Measure2<double> to_float(const Measure2<Rational>& m) {
  std::vector<double> w;
  for (const auto& x : m.weights()) w.push_back(to_double(x));
  return Measure2<double>(m.space(), std::move(w));
}

#define MFLOW_INSTANTIATE(T)                                                                   \
  template class Potential<T>;                                                                 \
  template std::pair<Measure1<T>, Measure1<T>> marginals(const Measure2<T>&);                 \
  template Measure2<T> transpose(const Measure2<T>&);                                          \
  template JordanParts<Measure1<T>> jordan(const Measure1<T>&);                                \
  template JordanParts<Measure2<T>> jordan(const Measure2<T>&);                                \
  template T tv_norm(const Measure1<T>&);                                                      \
  template T tv_norm(const Measure2<T>&);                                                      \
  template Measure1<T> meet(const Measure1<T>&, const Measure1<T>&);                           \
  template Measure2<T> meet(const Measure2<T>&, const Measure2<T>&);                           \
  template Measure1<T> setminus(const Measure1<T>&, const Measure1<T>&);                       \
  template Measure2<T> setminus(const Measure2<T>&, const Measure2<T>&);                       \
  template bool is_circulation(const Measure2<T>&, const T&);                                  \
  template T eval_potential(const Measure2<T>&, const Potential<T>&);                          \
  template CutChain<T> potential_to_cuts(const Potential<T>&);                                 \
  template Measure2<T> cuts_to_pair_function(const SpacePtr&, const CutChain<T>&);             \
  template Measure2<T> product(const Measure1<T>&, const Measure1<T>&);                        \
  template Measure2<T> positive_part(const Measure2<T>&);                                      \
  template Measure2<T> negative_part(const Measure2<T>&);

MFLOW_INSTANTIATE(double)
MFLOW_INSTANTIATE(Rational)

#undef MFLOW_INSTANTIATE

}  // namespace mflow

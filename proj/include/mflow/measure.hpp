#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mflow/error.hpp"
#include "mflow/numeric.hpp"

namespace mflow {

// Half-open subinterval [lo, hi) of [0,1).
struct Interval {
  Rational lo;
  Rational hi;
};

// A finite labeled partition of the ground set. Every measurable set is a
// union of atoms.
class AtomSpace {
 public:
  explicit AtomSpace(std::vector<std::string> labels,
                     std::optional<std::vector<Interval>> intervals = std::nullopt);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t require_index(const std::string& label) const;
  const std::optional<std::vector<Interval>>& intervals() const noexcept { return intervals_; }

  bool operator==(const AtomSpace& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::optional<std::vector<Interval>> intervals_;
};

using SpacePtr = std::shared_ptr<const AtomSpace>;

SpacePtr make_space(std::vector<std::string> labels,
                    std::optional<std::vector<Interval>> intervals = std::nullopt);
// Atoms labelled "0", "1", ..., with the uniform interval partition.
SpacePtr make_uniform_space(std::size_t n);

void require_same_space(const SpacePtr& a, const SpacePtr& b);

// A subset of atoms.
class AtomSet {
 public:
  AtomSet() = default;
  explicit AtomSet(std::size_t n) : member_(n, false) {}
  AtomSet(std::size_t n, std::initializer_list<std::size_t> atoms);

  static AtomSet from_mask(std::size_t n, std::uint64_t mask);
  static AtomSet from_indices(std::size_t n, const std::vector<std::size_t>& atoms);
  static AtomSet all(std::size_t n);

  std::size_t universe() const noexcept { return member_.size(); }
  bool contains(std::size_t i) const { return member_.at(i); }
  void insert(std::size_t i) { member_.at(i) = true; }
  void erase(std::size_t i) { member_.at(i) = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  AtomSet complement() const;
  std::vector<std::size_t> indices() const;

  bool operator==(const AtomSet&) const = default;

 private:
  std::vector<bool> member_;
};

template <Scalar T>
class Measure1 {
 public:
  Measure1() = default;
  explicit Measure1(SpacePtr space) : space_(std::move(space)), w_(space_->size(), T(0)) {}
  Measure1(SpacePtr space, std::vector<T> weights) : space_(std::move(space)), w_(std::move(weights)) {
    if (w_.size() != space_->size()) {
      throw Error(ErrorCode::InvalidArgument, "weight table length differs from atom count");
    }
  }

  static Measure1 point(SpacePtr space, std::size_t atom, T mass = T(1)) {
    Measure1 m(std::move(space));
    m.w_.at(atom) = std::move(mass);
    return m;
  }

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return w_.size(); }
  const T& operator()(std::size_t i) const { return w_[i]; }
  T& operator()(std::size_t i) { return w_[i]; }
  const std::vector<T>& weights() const noexcept { return w_; }

  T total() const {
    T s(0);
    for (const auto& x : w_) s += x;
    return s;
  }
  T of(const AtomSet& set) const {
    T s(0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (set.contains(i)) s += w_[i];
    }
    return s;
  }
  // Integral of a per-atom function.
  T integrate(const std::vector<T>& f) const {
    T s(0);
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * f.at(i);
    return s;
  }
  bool is_nonnegative() const {
    for (const auto& x : w_) {
      if (x < 0) return false;
    }
    return true;
  }

  Measure1& operator+=(const Measure1& o) {
    require_same_space(space_, o.space_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] += o.w_[i];
    return *this;
  }
  Measure1& operator-=(const Measure1& o) {
    require_same_space(space_, o.space_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] -= o.w_[i];
    return *this;
  }
  Measure1& operator*=(const T& k) {
    for (auto& x : w_) x *= k;
    return *this;
  }
  friend Measure1 operator+(Measure1 a, const Measure1& b) { return a += b; }
  friend Measure1 operator-(Measure1 a, const Measure1& b) { return a -= b; }
  friend Measure1 operator*(const T& k, Measure1 a) { return a *= k; }
  bool operator==(const Measure1& o) const { return *space_ == *o.space_ && w_ == o.w_; }

 private:
  SpacePtr space_;
  std::vector<T> w_;
};

// Signed measure on the square of the atom space, stored as a dense n x n
// table indexed (row = first coordinate, column = second coordinate). Also
// used for bounded pair functions (costs, values, distances).
template <Scalar T>
class Measure2 {
 public:
  Measure2() = default;
  explicit Measure2(SpacePtr space)
      : space_(std::move(space)), n_(space_->size()), w_(n_ * n_, T(0)) {}
  Measure2(SpacePtr space, std::vector<T> weights)
      : space_(std::move(space)), n_(space_->size()), w_(std::move(weights)) {
    if (w_.size() != n_ * n_) {
      throw Error(ErrorCode::InvalidArgument, "pair table is not n x n");
    }
  }

  static Measure2 constant(SpacePtr space, const T& value) {
    Measure2 m(std::move(space));
    for (auto& x : m.w_) x = value;
    return m;
  }
  static Measure2 point(SpacePtr space, std::size_t x, std::size_t y, T mass = T(1)) {
    Measure2 m(std::move(space));
    m(x, y) = std::move(mass);
    return m;
  }

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return n_; }
  const T& operator()(std::size_t x, std::size_t y) const { return w_[x * n_ + y]; }
  T& operator()(std::size_t x, std::size_t y) { return w_[x * n_ + y]; }
  const std::vector<T>& weights() const noexcept { return w_; }

  T total() const {
    T s(0);
    for (const auto& x : w_) s += x;
    return s;
  }
  // mu(A x B)
  T rect(const AtomSet& a, const AtomSet& b) const {
    T s(0);
    for (std::size_t x = 0; x < n_; ++x) {
      if (!a.contains(x)) continue;
      for (std::size_t y = 0; y < n_; ++y) {
        if (b.contains(y)) s += (*this)(x, y);
      }
    }
    return s;
  }
  // Integral of a pair function given as a table.
  T integrate(const Measure2& g) const {
    T s(0);
    for (std::size_t k = 0; k < w_.size(); ++k) s += w_[k] * g.w_.at(k);
    return s;
  }
  template <class Fn>
  T integrate_fn(Fn&& g) const {
    T s(0);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const T& w = (*this)(x, y);
        if (w != 0) s += w * g(x, y);
      }
    }
    return s;
  }
  bool is_nonnegative() const {
    for (const auto& x : w_) {
      if (x < 0) return false;
    }
    return true;
  }
  bool is_zero() const {
    for (const auto& x : w_) {
      if (x != 0) return false;
    }
    return true;
  }

  Measure2& operator+=(const Measure2& o) {
    require_same_space(space_, o.space_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] += o.w_[k];
    return *this;
  }
  Measure2& operator-=(const Measure2& o) {
    require_same_space(space_, o.space_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] -= o.w_[k];
    return *this;
  }
  Measure2& operator*=(const T& k) {
    for (auto& x : w_) x *= k;
    return *this;
  }
  friend Measure2 operator+(Measure2 a, const Measure2& b) { return a += b; }
  friend Measure2 operator-(Measure2 a, const Measure2& b) { return a -= b; }
  friend Measure2 operator*(const T& k, Measure2 a) { return a *= k; }
  bool operator==(const Measure2& o) const { return *space_ == *o.space_ && w_ == o.w_; }

 private:
  SpacePtr space_;
  std::size_t n_ = 0;
  std::vector<T> w_;
};

template <Scalar T>
using PairFunction = Measure2<T>;

// F(x,y) = f(x) - f(y).
template <Scalar T>
class Potential {
 public:
  Potential() = default;
  Potential(SpacePtr space, std::vector<T> f) : space_(std::move(space)), f_(std::move(f)) {
    if (f_.size() != space_->size()) {
      throw Error(ErrorCode::InvalidArgument, "potential length differs from atom count");
    }
  }

  const SpacePtr& space() const noexcept { return space_; }
  const std::vector<T>& values() const noexcept { return f_; }
  const T& operator()(std::size_t x) const { return f_[x]; }
  T pair(std::size_t x, std::size_t y) const { return f_[x] - f_[y]; }
  Measure2<T> as_pair_function() const;
  // Shift so that min f = 0.
  Potential normalized() const;

  bool operator==(const Potential& o) const { return f_ == o.f_; }

 private:
  SpacePtr space_;
  std::vector<T> f_;
};

template <Scalar T>
struct CutLevel {
  T threshold;
  T weight;
  AtomSet set;  // {x : f(x) >= threshold}
};

template <Scalar T>
struct CutChain {
  std::vector<CutLevel<T>> levels;
};

template <class M>
struct JordanParts {
  M positive;
  M negative;
};

// ---- operations ----

// (mu^1, mu^2): row sums mu(A x J) and column sums mu(J x A).
template <Scalar T>
std::pair<Measure1<T>, Measure1<T>> marginals(const Measure2<T>& mu);

template <Scalar T>
Measure2<T> transpose(const Measure2<T>& mu);

// Zero-weight atoms fall on the positive side of the Hahn split.
template <Scalar T>
JordanParts<Measure1<T>> jordan(const Measure1<T>& mu);
template <Scalar T>
JordanParts<Measure2<T>> jordan(const Measure2<T>& mu);

template <Scalar T>
T tv_norm(const Measure1<T>& mu);
template <Scalar T>
T tv_norm(const Measure2<T>& mu);

// Largest nonnegative measure dominated by both arguments.
template <Scalar T>
Measure1<T> meet(const Measure1<T>& a, const Measure1<T>& b);
template <Scalar T>
Measure2<T> meet(const Measure2<T>& a, const Measure2<T>& b);
// (a - b)_+
template <Scalar T>
Measure1<T> setminus(const Measure1<T>& a, const Measure1<T>& b);
template <Scalar T>
Measure2<T> setminus(const Measure2<T>& a, const Measure2<T>& b);

template <Scalar T>
bool is_circulation(const Measure2<T>& alpha, const T& tol = default_tolerance<T>());

template <Scalar T>
T eval_potential(const Measure2<T>& mu, const Potential<T>& f);

template <Scalar T>
CutChain<T> potential_to_cuts(const Potential<T>& f);
// F(x,y) rebuilt from a cut chain, as a pair table.
template <Scalar T>
Measure2<T> cuts_to_pair_function(const SpacePtr& space, const CutChain<T>& chain);

template <Scalar T>
Measure2<T> product(const Measure1<T>& a, const Measure1<T>& b);

// |g|_+ and |g|_- of a pair function.
template <Scalar T>
Measure2<T> positive_part(const Measure2<T>& g);
template <Scalar T>
Measure2<T> negative_part(const Measure2<T>& g);

// Conversions between numeric modes (float -> rational is exact).
Measure1<Rational> to_exact(const Measure1<double>& m);
Measure2<Rational> to_exact(const Measure2<double>& m);
Measure1<double> to_float(const Measure1<Rational>& m);
Measure2<double> to_float(const Measure2<Rational>& m);

}  // namespace mflow

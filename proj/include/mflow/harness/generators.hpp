#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "mflow/measure.hpp"

namespace mflow::harness {

// Density expression in x and y: numbers, + - * /, parentheses, min(a,b),
// max(a,b), abs(a). Evaluated exactly.
class Density {
 public:
  explicit Density(std::string_view expr);  // throws InvalidArgument
  Rational operator()(const Rational& x, const Rational& y) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

// Uniform n-atom partition; eta(A_i x A_j) = W(midpoint) / n^2. Throws
// DensityOutOfRange if some midpoint value leaves [0,1].
std::pair<SpacePtr, Measure2<Rational>> gen_graphon(const Density& w, std::size_t n);

// Directed q-cycle with weight 1/q on (i, i+1 mod q).
std::pair<SpacePtr, Measure2<Rational>> gen_cyclic(std::size_t q);

// Random rational instances for tests: weights k/den with k uniform in
// [0, max_num] and zero with probability `sparsity`.
class RandomInstances {
 public:
  explicit RandomInstances(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() noexcept { return rng_; }
  std::size_t atoms(std::size_t lo, std::size_t hi);
  Rational weight(long max_num, long den);
  Measure1<Rational> measure1(const SpacePtr& sp, long max_num, long den, double sparsity = 0.0);
  Measure2<Rational> measure2(const SpacePtr& sp, long max_num, long den, double sparsity = 0.0);
  Measure2<Rational> symmetric(const SpacePtr& sp, long max_num, long den, double sparsity = 0.0);
  // Nonnegative measure supported on pairs x -> y with rank(x) < rank(y)
  // for a random ranking.
  Measure2<Rational> acyclic(const SpacePtr& sp, long max_num, long den, double sparsity = 0.0);
  // Probability vector with the given denominator.
  Measure1<Rational> probability(const SpacePtr& sp, long den);
  bool coin(double p);

 private:
  std::mt19937_64 rng_;
};

}  // namespace mflow::harness

#include "mflow/harness/generators.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace mflow::harness {

struct Density::Node {
  enum Op { Num, X, Y, Add, Sub, Mul, Div, Neg, Min, Max, Abs } op;
  Rational value;
  std::shared_ptr<const Node> a, b;

  Rational eval(const Rational& x, const Rational& y) const {
    switch (op) {
      case Num: return value;
      case X: return x;
      case Y: return y;
      case Add: return a->eval(x, y) + b->eval(x, y);
      case Sub: return a->eval(x, y) - b->eval(x, y);
      case Mul: return a->eval(x, y) * b->eval(x, y);
      case Div: {
        Rational d = b->eval(x, y);
        if (d == 0) throw Error(ErrorCode::DensityOutOfRange, "density divides by zero");
        return a->eval(x, y) / d;
      }
      case Neg: return -a->eval(x, y);
      case Min: return std::min(a->eval(x, y), b->eval(x, y));
      case Max: return std::max(a->eval(x, y), b->eval(x, y));
      case Abs: return abs_value(a->eval(x, y));
    }
    return Rational(0);
  }
};

namespace {

using NodePtr = std::shared_ptr<const Density::Node>;

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return n;
  }

 private:
  using N = Density::Node;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::InvalidArgument, "density expression, offset " + std::to_string(i_) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  static NodePtr make(N::Op op, NodePtr a = nullptr, NodePtr b = nullptr, Rational v = Rational(0)) {
    return std::make_shared<const N>(N{op, std::move(v), std::move(a), std::move(b)});
  }

  NodePtr sum() {
    NodePtr n = product();
    for (;;) {
      if (eat('+')) {
        n = make(N::Add, n, product());
      } else if (eat('-')) {
        n = make(N::Sub, n, product());
      } else {
        return n;
      }
    }
  }
  NodePtr product() {
    NodePtr n = unary();
    for (;;) {
      if (eat('*')) {
        n = make(N::Mul, n, unary());
      } else if (eat('/')) {
        n = make(N::Div, n, unary());
      } else {
        return n;
      }
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(N::Neg, unary());
    if (eat('+')) return unary();
    return primary();
  }
  NodePtr primary() {
    skip();
    if (eat('(')) {
      NodePtr n = sum();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
      try {
        return make(N::Num, nullptr, nullptr, parse_rational(s_.substr(start, i_ - start)));
      } catch (const std::exception&) {
        fail("malformed number");
      }
    }
    std::string word;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) word += s_[i_++];
    if (word == "x") return make(N::X);
    if (word == "y") return make(N::Y);
    if (word == "min" || word == "max") {
      if (!eat('(')) fail("expected '('");
      NodePtr a = sum();
      if (!eat(',')) fail("expected ','");
      NodePtr b = sum();
      if (!eat(')')) fail("expected ')'");
      return make(word == "min" ? N::Min : N::Max, a, b);
    }
    if (word == "abs") {
      if (!eat('(')) fail("expected '('");
      NodePtr a = sum();
      if (!eat(')')) fail("expected ')'");
      return make(N::Abs, a);
    }
    fail(word.empty() ? "expected a term" : "unknown name '" + word + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Density::Density(std::string_view expr) : text_(expr), root_(ExprParser(expr).parse()) {}

Rational Density::operator()(const Rational& x, const Rational& y) const { return root_->eval(x, y); }

std::pair<SpacePtr, Measure2<Rational>> gen_graphon(const Density& w, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graphon needs at least one atom");
  auto sp = make_uniform_space(n);
  Measure2<Rational> eta(sp);
  const Rational cell(1, static_cast<long>(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational x(static_cast<long>(2 * i + 1), static_cast<long>(2 * n));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational y(static_cast<long>(2 * j + 1), static_cast<long>(2 * n));
      Rational v = w(x, y);
      if (v < 0 || v > 1) {
        throw Error(ErrorCode::DensityOutOfRange, "density " + format_number(v) + " at (" + format_number(x) + "," +
                                                      format_number(y) + ") leaves [0,1]");
      }
      eta(i, j) = v * cell;
    }
  }
  return {sp, std::move(eta)};
}

std::pair<SpacePtr, Measure2<Rational>> gen_cyclic(std::size_t q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "cycle length must be at least 2");
  auto sp = make_uniform_space(q);
  Measure2<Rational> eta(sp);
  for (std::size_t i = 0; i < q; ++i) eta(i, (i + 1) % q) = Rational(1, static_cast<long>(q));
  return {sp, std::move(eta)};
}

std::size_t RandomInstances::atoms(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Rational RandomInstances::weight(long max_num, long den) {
  return Rational(std::uniform_int_distribution<long>(0, max_num)(rng_), den);
}

bool RandomInstances::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Measure1<Rational> RandomInstances::measure1(const SpacePtr& sp, long max_num, long den, double sparsity) {
  Measure1<Rational> m(sp);
  for (std::size_t i = 0; i < sp->size(); ++i) {
    if (!coin(sparsity)) m(i) = weight(max_num, den);
  }
  return m;
}

Measure2<Rational> RandomInstances::measure2(const SpacePtr& sp, long max_num, long den, double sparsity) {
  Measure2<Rational> m(sp);
  for (std::size_t x = 0; x < sp->size(); ++x)
    for (std::size_t y = 0; y < sp->size(); ++y)
      if (!coin(sparsity)) m(x, y) = weight(max_num, den);
  return m;
}

Measure2<Rational> RandomInstances::symmetric(const SpacePtr& sp, long max_num, long den, double sparsity) {
  Measure2<Rational> m(sp);
  for (std::size_t x = 0; x < sp->size(); ++x)
    for (std::size_t y = x + 1; y < sp->size(); ++y)
      if (!coin(sparsity)) m(x, y) = m(y, x) = weight(max_num, den);
  return m;
}

Measure2<Rational> RandomInstances::acyclic(const SpacePtr& sp, long max_num, long den, double sparsity) {
  const std::size_t n = sp->size();
  std::vector<std::size_t> rank(n);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::shuffle(rank.begin(), rank.end(), rng_);
  Measure2<Rational> m(sp);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rank[x] < rank[y] && !coin(sparsity)) m(x, y) = weight(max_num, den);
  return m;
}

Measure1<Rational> RandomInstances::probability(const SpacePtr& sp, long den) {
  // Random composition of den into n parts.
  const std::size_t n = sp->size();
  std::vector<long> cuts{0, den};
  for (std::size_t i = 0; i + 1 < n; ++i) cuts.push_back(std::uniform_int_distribution<long>(0, den)(rng_));
  std::sort(cuts.begin(), cuts.end());
  Measure1<Rational> m(sp);
  for (std::size_t i = 0; i < n; ++i) m(i) = Rational(cuts[i + 1] - cuts[i], den);
  return m;
}

}  // namespace mflow::harness

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mflow/error.hpp"
#include "mflow/harness/generators.hpp"
#include "support.hpp"

using namespace mflow;
using namespace testing;

namespace {

// sup_A mu(A) - inf_B mu(B), by enumeration.
Q tv_by_sets(const M1& mu) {
  const std::size_t n = mu.size();
  Q sup(0), inf(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Q v = mu.of(AtomSet::from_mask(n, mask));
    if (v > sup) sup = v;
    if (v < inf) inf = v;
  }
  return sup - inf;
}

bool cut_form_balanced(const M2& a) {
  const std::size_t n = a.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const AtomSet x = AtomSet::from_mask(n, mask);
    if (a.rect(x, x.complement()) != a.rect(x.complement(), x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("marginals and transpose") {
  auto sp = labels({"a", "b"});
  auto [r0, c0] = marginals(M2(sp));
  CHECK(r0 == M1(sp));
  CHECK(c0 == M1(sp));

  const M2 mu = m2(sp, {"0", "1", "0", "0"});
  auto [r, c] = marginals(mu);
  CHECK(r == m1(sp, {"1", "0"}));
  CHECK(c == m1(sp, {"0", "1"}));
  CHECK(transpose(mu) == m2(sp, {"0", "0", "1", "0"}));
  auto [tr, tc] = marginals(transpose(mu));
  CHECK(tr == c);
  CHECK(tc == r);

  auto [u1, u2] = marginals(M2::constant(sp, q("1/4")));
  CHECK(u1 == m1(sp, {"1/2", "1/2"}));
  CHECK(u2 == u1);
}

TEST_CASE("jordan and total variation") {
  auto sp = labels({"a", "b"});
  auto parts = jordan(m1(sp, {"2", "-3"}));
  CHECK(parts.positive == m1(sp, {"2", "0"}));
  CHECK(parts.negative == m1(sp, {"0", "3"}));
  CHECK(tv_norm(m1(sp, {"7/10", "-3/10"})) == 1);
  CHECK(tv_norm(M1(sp)) == 0);
  CHECK(to_double(tv_norm(to_float(m1(sp, {"7/10", "-3/10"})))) == doctest::Approx(1.0));

  harness::RandomInstances rnd(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = make_uniform_space(rnd.atoms(2, 6));
    M1 mu = rnd.measure1(s, 9, 7) - rnd.measure1(s, 9, 5);
    auto j = jordan(mu);
    CHECK(j.positive - j.negative == mu);
    CHECK(j.positive.is_nonnegative());
    CHECK(j.negative.is_nonnegative());
    for (std::size_t i = 0; i < mu.size(); ++i) CHECK((j.positive(i) == 0 || j.negative(i) == 0));
    CHECK(tv_norm(mu) == j.positive.total() + j.negative.total());
    CHECK(tv_norm(mu) == tv_by_sets(mu));

    M2 nu = rnd.measure2(s, 5, 3) - rnd.measure2(s, 5, 4);
    CHECK(tv_norm(nu) == tv_norm(transpose(nu)));
    auto jn = jordan(nu);
    CHECK(jn.positive - jn.negative == nu);
  }
}

TEST_CASE("meet and setminus") {
  auto sp = labels({"a"});
  const M2 alpha = m2(sp, {"1"});
  CHECK(meet(alpha, alpha) == alpha);
  CHECK(setminus(alpha, M2(sp)) == alpha);

  auto sp2 = labels({"a", "b"});
  const M1 a = m1(sp2, {"1", "0"}), b = m1(sp2, {"2/5", "2"});
  CHECK(meet(a, b) == m1(sp2, {"2/5", "0"}));
  CHECK(setminus(a, b) == m1(sp2, {"3/5", "0"}));
  CHECK_THROWS_AS(meet(m1(sp2, {"-1", "0"}), b), Error);

  harness::RandomInstances rnd(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = make_uniform_space(rnd.atoms(1, 4));
    const M2 x = rnd.measure2(s, 6, 5, 0.3), y = rnd.measure2(s, 6, 5, 0.3), g = rnd.measure2(s, 6, 5, 0.3);
    const M2 m = meet(x, y);
    CHECK(m == meet(y, x));
    CHECK(setminus(x, y) + m == x);
    CHECK(m == y - setminus(y, x));
    CHECK(setminus(x, m).is_nonnegative());
    CHECK(setminus(y, m).is_nonnegative());
    // Any gamma below both is below the meet.
    const M2 gamma = meet(meet(g, x), y);
    CHECK((m - gamma).is_nonnegative());
  }
}

TEST_CASE("circulations and potentials") {
  auto sp = labels({"a", "b", "c"});
  CHECK(is_circulation(m2(sp, {"0", "1", "0", "0", "0", "1", "1", "0", "0"}), Q(0)));
  auto sp2 = labels({"a", "b"});
  CHECK_FALSE(is_circulation(m2(sp2, {"0", "1", "0", "0"}), Q(0)));
  CHECK(eval_potential(m2(sp2, {"0", "2", "0", "0"}), Potential<Q>(sp2, {Q(1), Q(0)})) == 2);

  harness::RandomInstances rnd(3);
  int circulations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto s = make_uniform_space(rnd.atoms(1, 5));
    const std::size_t n = s->size();
    M2 alpha = rnd.coin(0.5) ? rnd.symmetric(s, 3, 2, 0.5) : rnd.measure2(s, 2, 1, 0.6);
    if (rnd.coin(0.3)) alpha = alpha - transpose(alpha) + rnd.symmetric(s, 2, 1);
    const bool circ = is_circulation(alpha, Q(0));
    circulations += circ;
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Q> f(n, Q(0));
      f[i] = 1;
      if (eval_potential(alpha, Potential<Q>(s, f)) != 0) all_zero = false;
    }
    CHECK(circ == all_zero);
    CHECK(circ == cut_form_balanced(alpha));
    CHECK(is_circulation(rnd.symmetric(s, 4, 3), Q(0)));
    if (circ) {
      std::vector<Q> f;
      for (std::size_t i = 0; i < n; ++i) f.push_back(rnd.weight(20, 7) - 1);
      CHECK(eval_potential(alpha, Potential<Q>(s, f)) == 0);
    }
    CHECK(eval_potential(alpha, Potential<Q>(s, std::vector<Q>(n, Q(3)))) == 0);
  }
  CHECK(circulations > 50);
}

TEST_CASE("potential to cuts") {
  auto sp = labels({"a", "b"});
  CHECK(potential_to_cuts(Potential<Q>(sp, {Q(2), Q(2)})).levels.empty());
  auto one = potential_to_cuts(Potential<Q>(sp, {Q(1), Q(0)}));
  REQUIRE(one.levels.size() == 1);
  CHECK(one.levels[0].weight == 1);
  CHECK(one.levels[0].set == AtomSet(2, {0}));

  harness::RandomInstances rnd(17);
  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = make_uniform_space(5);
    std::vector<Q> f;
    for (int i = 0; i < 5; ++i) f.push_back(rnd.weight(6, 3));
    const Potential<Q> p(s, f);
    auto chain = potential_to_cuts(p);
    for (std::size_t k = 1; k < chain.levels.size(); ++k) {
      CHECK(chain.levels[k - 1].threshold < chain.levels[k].threshold);
      for (auto i : chain.levels[k].set.indices()) CHECK(chain.levels[k - 1].set.contains(i));
    }
    const M2 rebuilt = cuts_to_pair_function(s, chain);
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = 0; y < 5; ++y) {
        CHECK(rebuilt(x, y) == f[x] - f[y]);
        for (std::size_t z = 0; z < 5; ++z) CHECK(p.pair(x, y) + p.pair(y, z) + p.pair(z, x) == 0);
      }

    std::vector<double> fd;
    for (int i = 0; i < 5; ++i) fd.push_back(u(g));
    const Potential<double> pd(s, fd);
    const auto back = cuts_to_pair_function(s, potential_to_cuts(pd));
    for (std::size_t x = 0; x < 5; ++x)
      for (std::size_t y = 0; y < 5; ++y) CHECK(std::abs(back(x, y) - (fd[x] - fd[y])) <= 1e-12);
  }
}

TEST_CASE("product") {
  auto sp = labels({"a", "b"});
  CHECK(product(M1(sp), m1(sp, {"1", "2"})).is_zero());
  CHECK(product(m1(sp, {"1/2", "1/2"}), m1(sp, {"1/2", "1/2"})) == M2::constant(sp, q("1/4")));
  auto [r, c] = marginals(product(m1(sp, {"1", "2"}), m1(sp, {"3", "5"})));
  CHECK(r == m1(sp, {"8", "16"}));
  CHECK(c == m1(sp, {"9", "15"}));
}

TEST_CASE("space and parsing errors") {
  CHECK_THROWS_AS(make_space({"a", "a"}), Error);
  auto sp = labels({"a", "b"});
  auto other = labels({"a", "c"});
  CHECK_THROWS_AS(M1(sp) + M1(other), Error);
  CHECK(parse_rational("2/3") == Q(2) / 3);
  CHECK(format_number(Q(2) / 3) == "2/3");
  CHECK(floor_of(Q(-1) / 2) == -1);
}

TEST_CASE("leading zeros are decimal") {
  CHECK(parse_rational("0.25") == Q(1, 4));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("010/08") == Q(5, 4));
  CHECK(parse_rational("-0.0") == 0);
  CHECK(parse_rational("00") == 0);
}

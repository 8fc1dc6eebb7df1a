#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mflow/error.hpp"
#include "mflow/path_decomp.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace mflow;
using namespace testing;

TEST_CASE("acyclicity") {
  auto sp = labels({"s", "m", "t"});
  CHECK(is_acyclic(m2(sp, {"0", "1", "0", "0", "0", "1", "0", "0", "0"}), Q(0)).acyclic);

  auto two = labels({"a", "b"});
  auto r = is_acyclic(m2(two, {"0", "1", "3/10", "0"}), Q(0));
  REQUIRE_FALSE(r.acyclic);
  CHECK(r.circulation == m2(two, {"0", "3/10", "3/10", "0"}));
  CHECK(r.cycle.size() == 2);
  CHECK_THROWS_AS(is_acyclic(m2(two, {"0", "-1", "0", "0"}), Q(0)), Error);

  auto t = acyclicity(31, 300);
  INFO(t.summary());
  CHECK(t.ok());
  CHECK(t.positives > 20);
  CHECK(t.negatives > 20);
}

TEST_CASE("split into acyclic part and circulation") {
  auto sp = labels({"s", "m", "t"});
  const M2 path = m2(sp, {"0", "1", "0", "0", "0", "1", "0", "0", "0"});
  auto [a, c] = split_acyclic_circulation(path, Q(0));
  CHECK(a == path);
  CHECK(c.is_zero());

  const M2 overlay = path + m2(sp, {"0", "0", "0", "0", "0", "1/2", "0", "1/2", "0"});
  auto [a2, c2] = split_acyclic_circulation(overlay, Q(0));
  CHECK(a2 + c2 == overlay);
  CHECK(is_acyclic(a2, Q(0)).acyclic);
  CHECK(is_circulation(c2, Q(0)));
  CHECK(a2.is_nonnegative());
  CHECK(c2.is_nonnegative());
}

TEST_CASE("walk operators") {
  auto sp = labels({"s", "m", "t"});
  WalkMeasure<Q> tau(sp);
  tau.add({0, 1, 2}, Q(1));
  auto ops = walk_operators(tau);
  CHECK(ops.v == m1(sp, {"1", "1", "0"}));
  CHECK(ops.e == m2(sp, {"0", "1", "0", "0", "0", "1", "0", "0", "0"}));
  CHECK(ops.z == m2(sp, {"0", "0", "1", "0", "0", "0", "0", "0", "0"}));

  WalkMeasure<Q> single(sp);
  single.add({1}, Q(5));
  auto o1 = walk_operators(single);
  CHECK(o1.v.total() == 0);
  CHECK(o1.e.is_zero());
  CHECK(o1.z(1, 1) == 5);

  // Revisits count with multiplicity.
  WalkMeasure<Q> loop(sp);
  loop.add({0, 1, 0, 1}, Q(1));
  CHECK(walk_operators(loop).v == m1(sp, {"2", "1", "0"}));

  CHECK_THROWS_AS(tau.add({}, Q(1)), Error);
  CHECK_THROWS_AS(tau.add({0}, Q(0)), Error);
  CHECK_THROWS_AS(tau.add({7}, Q(1)), Error);
}

TEST_CASE("path decomposition") {
  auto sp = labels({"s", "m", "t"});
  auto tau = decompose_paths(m2(sp, {"0", "1", "0", "0", "0", "1", "0", "0", "0"}), Q(0));
  REQUIRE(tau.size() == 1);
  CHECK(tau.entries()[0].atoms == std::vector<std::size_t>{0, 1, 2});
  CHECK(tau.entries()[0].weight == 1);
  CHECK(decompose_paths(M2(sp), Q(0)).empty());
  auto two = labels({"a", "b"});
  CHECK_THROWS_AS(decompose_paths(m2(two, {"0", "1", "1", "0"}), Q(0)), Error);

  auto t = path_decomposition(41, 200);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("shortcut inequality") {
  auto sp = labels({"s", "m", "t"});
  WalkMeasure<Q> tau(sp);
  tau.add({0, 1, 2}, Q(1));
  const M2 discrete = m2(sp, {"0", "1", "1", "1", "0", "1", "1", "1", "0"});
  auto [lhs, rhs] = shortcut_check(Pseudometric<Q>{discrete}, tau, Q(0));
  CHECK(lhs == 2);
  CHECK(rhs == 1);
  auto [z1, z2] = shortcut_check(Pseudometric<Q>{M2(sp)}, tau, Q(0));
  CHECK(z1 == 0);
  CHECK(z2 == 0);
  const M2 bad = m2(sp, {"0", "1", "3", "1", "0", "1", "3", "1", "0"});
  CHECK_THROWS_AS(shortcut_check(Pseudometric<Q>{bad}, tau, Q(0)), Error);

  auto t = shortcut(51, 1000);
  INFO(t.summary());
  CHECK(t.ok());
}

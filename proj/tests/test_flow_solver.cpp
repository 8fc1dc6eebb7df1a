#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mflow/flow_solver.hpp"

using namespace mflow;
using Q = Rational;

namespace {

SpacePtr abc() { return make_space({"a", "b", "c"}); }
SpacePtr ab() { return make_space({"a", "b"}); }
SpacePtr smt() { return make_space({"s", "m", "t"}); }

Measure2<Q> path_psi() {
  Measure2<Q> psi(smt());
  psi(0, 1) = 1;
  psi(1, 2) = 1;
  return psi;
}

}  // namespace

TEST_CASE("hoffman examples") {
  auto sp = ab();
  Measure2<Q> phi(sp), psi(sp);
  phi(0, 1) = 1;
  psi(0, 1) = 1;
  psi(1, 0) = 1;
  auto ok = feasible_circulation(phi, psi);
  REQUIRE(ok.feasible());
  CHECK(ok.witness()(0, 1) == 1);
  CHECK(ok.witness()(1, 0) == 1);

  psi(1, 0) = Q(1, 2);
  auto bad = feasible_circulation(phi, psi);
  REQUIRE(!bad.feasible());
  CHECK(bad.certificate().set == AtomSet(2, {0}));
  CHECK(bad.certificate().lhs == 1);
  CHECK(bad.certificate().rhs == Q(1, 2));

  Measure2<Q> zero(sp);
  CHECK(feasible_circulation(zero, zero).witness().is_zero());
  CHECK_THROWS_AS(feasible_circulation(psi, phi), Error);
}

TEST_CASE("path counterexample") {
  auto psi = path_psi();
  auto r = ergodic_circulation(psi);
  REQUIRE(!r.feasible());
  const auto& c = r.certificate();
  CHECK(c.f.values() == std::vector<Q>{0, 1, 2});
  CHECK(c.b == 1);
  CHECK(c.violated == Condition::ERG);
  CHECK(c.lhs == 0);
  CHECK(c.rhs == 1);
  std::vector<AtomSet> parts{AtomSet(3, {0}), AtomSet(3, {1}), AtomSet(3, {2})};
  CHECK(partition_condition(psi, parts) == 0);
}

TEST_CASE("valued circulation on a 3-cycle") {
  auto sp = abc();
  Measure2<Q> psi(sp);
  psi(0, 1) = psi(1, 2) = psi(2, 0) = 1;
  auto v = Measure2<Q>::constant(sp, 1);
  auto r = valued_circulation(Measure2<Q>(sp), psi, v, Q(3));
  REQUIRE(r.feasible());
  CHECK(r.witness() == psi);
  auto out = valued_circulation(Measure2<Q>(sp), psi, v, Q(4));
  REQUIRE(!out.feasible());
  CHECK(out.certificate().violated == Condition::JJFB1);
  CHECK(out.certificate().lhs < out.certificate().rhs);
  auto neg = valued_circulation(Measure2<Q>(sp), psi, v, Q(-1));
  REQUIRE(!neg.feasible());
  CHECK(neg.certificate().violated == Condition::JJFB2);
  CHECK(neg.certificate().lhs < neg.certificate().rhs);
  auto erg = ergodic_circulation(psi);
  REQUIRE(erg.feasible());
  CHECK(erg.witness()(0, 1) == Q(1, 3));
}

TEST_CASE("flows") {
  auto sp = smt();
  Measure2<Q> psi(sp);
  psi(0, 1) = Q(2, 5);
  psi(1, 2) = 1;
  auto sigma = Measure1<Q>::point(sp, 0), tau = Measure1<Q>::point(sp, 2);
  auto r = supply_demand_flow(psi, sigma, tau);
  REQUIRE(!r.feasible());
  CHECK(r.certificate().set == AtomSet(3, {0}));
  CHECK(r.certificate().lhs == 1);
  CHECK(r.certificate().rhs == Q(2, 5));

  auto mf = max_flow(path_psi(), 0, 2);
  CHECK(mf.value == 1);
  CHECK(mf.min_cut.contains(0));
  CHECK(!mf.min_cut.contains(2));

  auto v = Measure2<Q>::constant(sp, 1);
  auto mc = min_cost_flow(path_psi(), sigma, tau, v, Q(3, 2));
  REQUIRE(!mc.feasible());
  CHECK(mc.certificate().lhs < mc.certificate().rhs);
  auto ok = min_cost_flow(path_psi(), sigma, tau, v, Q(2));
  REQUIRE(ok.feasible());
  CHECK(ok.witness()(0, 1) == 1);
}

TEST_CASE("transshipment") {
  auto sp = ab();
  Measure1<Q> alpha(sp, {1, 0}), beta(sp, {0, 1});
  auto psi = Measure2<Q>::constant(sp, 1);
  psi(0, 1) = 0;
  auto r = transship_feasible(psi, alpha, beta);
  REQUIRE(!r.feasible());
  CHECK(r.certificate().s == AtomSet(2, {0}));
  CHECK(r.certificate().t == AtomSet(2, {1}));
  CHECK(r.certificate().lhs == 0);
  CHECK(r.certificate().rhs == 1);

  auto c = Measure2<Q>::constant(sp, 1);
  c(0, 0) = c(1, 1) = 0;
  auto opt = transship_min_cost(alpha, beta, c);
  CHECK(opt.cost == 1);
  CHECK(opt.dual.value == 1);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) CHECK(opt.dual.g[x] + opt.dual.h[y] <= c(x, y));

  PairSet diag(2);
  diag.insert(0, 0);
  diag.insert(1, 1);
  auto s = strassen_coupling(alpha, beta, diag);
  REQUIRE(!s.feasible());
  CHECK(s.certificate().lhs == 2);
}

#include "properties.hpp"

namespace {

void expect(const testing::Tally& t) {
  INFO(t.summary());
  CHECK(t.ok());
}

}  // namespace

TEST_CASE("hoffman verdicts against sets and the oracle") {
  auto t = testing::hoffman_equivalence(101, 300);
  expect(t);
  CHECK(t.positives > 30);
  CHECK(t.negatives > 30);
}

TEST_CASE("valued circulation certificates") {
  auto t = testing::maxcirc_certificates(202, 150, false);
  expect(t);
  CHECK(t.positives > 10);
  CHECK(t.negatives > 10);
  expect(testing::maxcirc_certificates(203, 150, true));
}

TEST_CASE("ordered partitions decide ergodic feasibility") {
  auto t = testing::partition_completeness(303, 200);
  expect(t);
  CHECK(t.positives > 20);
  CHECK(t.negatives > 20);
}

TEST_CASE("integral potentials") { expect(testing::integrality(404, 150)); }

TEST_CASE("max flow against the oracle and the return-edge reduction") { expect(testing::max_flow_agreement(505, 200)); }

TEST_CASE("supply and demand") {
  auto t = testing::supply_demand_agreement(606, 200);
  expect(t);
  CHECK(t.positives > 10);
  CHECK(t.negatives > 10);
}

TEST_CASE("min-cost flow") {
  auto t = testing::min_cost_agreement(707, 150);
  expect(t);
  CHECK(t.positives > 10);
  CHECK(t.negatives > 10);
}

TEST_CASE("transshipment feasibility and duality") {
  auto t = testing::transship_agreement(808, 200);
  expect(t);
  CHECK(t.positives > 10);
  CHECK(t.negatives > 10);
  expect(testing::transship_duality(809, 200));
}

TEST_CASE("strassen couplings") {
  auto t = testing::strassen_agreement(909, 200);
  expect(t);
  CHECK(t.positives > 10);
  CHECK(t.negatives > 10);
}

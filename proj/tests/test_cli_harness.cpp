#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "golden.hpp"
#include "json.hpp"
#include "mflow/error.hpp"
#include "mflow/harness/cli.hpp"
#include "mflow/harness/generators.hpp"
#include "mflow/harness/instance.hpp"
#include "mflow/harness/lp_oracle.hpp"
#include "support.hpp"

using namespace mflow;
using namespace mflow::harness;
using namespace testing;
using nlohmann::json;

namespace {

struct Cli {
  int exit;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Cli cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mflow_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::string instance(const std::string& name) { return golden_dir() + "/instances/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("instance parsing") {
  const auto bare = parse_instance("space { atoms: [a, b] }");
  CHECK(bare.space->size() == 2);
  CHECK(bare.tables1.empty());
  CHECK(bare.tables2.empty());
  CHECK_FALSE(bare.problem);

  const std::string text = R"(# comment
space { atoms: [a, "b c"], intervals: [(0, 1/2), (1/2, 1)] }
measure1 mu { a: 2/3 }
potential f { "b c": -1 }
measure2 psi { (a, "b c"): 2/3  ("b c", a): 0.25 }
cost v { (a,a): 3 }
metric d { (a,"b c"): 1, ("b c",a): 1 }
pairs E { (a,a), ("b c", a) }
problem valued-circulation { upper: psi, value: v, target: 1/7, extra: [a, "b c"] }
)";
  const auto inst = parse_instance(text);
  CHECK(inst.space->label(1) == "b c");
  CHECK(inst.tables1.at("mu")(0) == Q(2, 3));
  CHECK(inst.tables1.at("f")(1) == -1);
  CHECK(inst.tables2.at("psi")(0, 1) == Q(2, 3));
  CHECK(inst.tables2.at("psi")(1, 0) == Q(1, 4));
  CHECK(inst.pair_sets.at("E").contains(1, 0));
  CHECK_FALSE(inst.pair_sets.at("E").contains(0, 1));
  REQUIRE(inst.problem);
  CHECK(inst.problem->op == "valued-circulation");
  CHECK(inst.problem->find("target")->word == "1/7");
  CHECK(inst.problem->find("extra")->list == std::vector<std::string>{"a", "b c"});

  // parse . emit . parse = parse, and fractions survive exactly.
  const std::string emitted = emit_instance(inst);
  const auto again = parse_instance(emitted);
  CHECK(again == inst);
  CHECK(emit_instance(again) == emitted);
  CHECK(emitted.find("2/3") != std::string::npos);
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(position("space { atoms: [a, b] }\nmeasure2 m { (a, q): 1 }") == std::pair<std::size_t, std::size_t>{2, 18});
  CHECK(position("space { atoms: [a] }\nmeasure1 m {\n  a: 1/0\n}") == std::pair<std::size_t, std::size_t>{3, 6});
  CHECK(position("measure1 m { a: 1 }") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(position("space { atoms: [a, a] }") == std::pair<std::size_t, std::size_t>{1, 20});
  CHECK(position("space { atoms: [a] }\nwidget w { }") == std::pair<std::size_t, std::size_t>{2, 1});
  CHECK(position("space { atoms: [a] }\nmeasure1 m { a: 1 ") == std::pair<std::size_t, std::size_t>{2, 19});
  CHECK(position("space { atoms: [\"a ] }") .first == 1);
}

TEST_CASE("graphon and cyclic generators") {
  auto [sp1, one] = gen_graphon(Density("1"), 3);
  CHECK(one == M2::constant(sp1, Q(1, 9)));
  auto [sp0, zero] = gen_graphon(Density("0"), 4);
  CHECK(zero.is_zero());
  auto [sp, xy] = gen_graphon(Density("x*y"), 2);
  CHECK(xy == m2(sp, {"1/64", "3/64", "3/64", "9/64"}));
  CHECK(xy == transpose(xy));
  auto [spm, mixed] = gen_graphon(Density("min(x, y) + abs(x - y)/2"), 5);
  CHECK(mixed == transpose(mixed));
  CHECK_THROWS_AS(gen_graphon(Density("2"), 2), Error);
  CHECK_THROWS_AS(Density("x +"), Error);

  auto [c2, two] = gen_cyclic(2);
  CHECK(two == m2(c2, {"0", "1/2", "1/2", "0"}));
  for (std::size_t q = 2; q <= 8; ++q) {
    auto [cs, eta] = gen_cyclic(q);
    CHECK(is_circulation(eta, Q(0)));
    CHECK(ergodic_circulation(eta).feasible());
    REQUIRE(cs->intervals());
    CHECK(cs->intervals()->back().hi == 1);
  }
  CHECK_THROWS_AS(gen_cyclic(1), Error);
}

TEST_CASE("oracle on the worked examples") {
  auto ab = labels({"a", "b"});
  const M2 phi = m2(ab, {"0", "1", "0", "0"});
  CHECK(oracle::circulation(phi, m2(ab, {"0", "1", "1", "0"})).feasible);
  CHECK_FALSE(oracle::circulation(phi, m2(ab, {"0", "1", "1/2", "0"})).feasible);

  auto smt = labels({"s", "m", "t"});
  const M2 path = m2(smt, {"0", "1", "0", "0", "0", "1", "0", "0", "0"});
  CHECK_FALSE(oracle::ergodic(path).feasible);
  const auto mf = oracle::max_flow(path, 0, 2);
  CHECK(mf.optimum == 1);

  oracle::Lp<Q> big(oracle::kMaxVariables + 1);
  CHECK_THROWS_AS(oracle::solve(big), Error);

  // max x + y, x + 2y <= 4, 3x + y <= 6: optimum at (8/5, 6/5).
  oracle::Lp<Q> lp(2);
  lp.objective = {Q(1), Q(1)};
  lp.add({Q(1), Q(2)}, oracle::Sense::Le, Q(4));
  lp.add({Q(3), Q(1)}, oracle::Sense::Le, Q(6));
  auto v = oracle::solve(lp);
  CHECK(v.feasible);
  CHECK(v.optimum == Q(14, 5));
  lp.add({Q(1), Q(1)}, oracle::Sense::Ge, Q(3));
  CHECK_FALSE(oracle::solve(lp).feasible);
  oracle::Lp<Q> open(1);
  open.objective = {Q(1)};
  CHECK(oracle::solve(open).unbounded);
}

TEST_CASE("command line") {
  SUBCASE("worked examples") {
    auto feasible = cli({"circulation", instance("hoffman_feasible.inst")});
    CHECK(feasible.exit == kFeasible);
    auto r = feasible.report();
    CHECK(r["verdict"] == "feasible");
    CHECK(r["witness"]["alpha"] == json::parse(R"([["0","1"],["1","0"]])"));
    CHECK(r["verification"]["status"] == "pass");

    auto path = cli({"ergodic", instance("path_ergodic.inst")});
    CHECK(path.exit == kInfeasible);
    auto p = path.report();
    CHECK(p["certificate"]["f"] == json::parse(R"(["0","1","2"])"));
    CHECK(p["certificate"]["lhs"] == "0");
    CHECK(p["certificate"]["rhs"] == "1");

    auto cut = cli({"supply-demand", instance("supply_cut.inst")}).report();
    CHECK(cut["certificate"]["set"] == json::parse(R"(["s"])"));
    CHECK(cut["certificate"]["lhs"] == "1");
    CHECK(cut["certificate"]["rhs"] == "2/5");

    auto dual = cli({"transship-cost", instance("transship_cost.inst")}).report();
    CHECK(dual["witness"]["cost"] == "1");
    CHECK(dual["witness"]["dual"]["g"] == json::parse(R"(["0","-1"])"));
    CHECK(dual["witness"]["dual"]["h"] == json::parse(R"(["0","1"])"));

    auto graphon = cli({"gen", "graphon", "--expr", "x*y", "--atoms", "2"});
    CHECK(graphon.exit == kFeasible);
    const auto gen = parse_instance(graphon.out);
    CHECK(gen.tables2.at("eta") == m2(gen.space, {"1/64", "3/64", "3/64", "9/64"}));
  }

  SUBCASE("report keys are sorted and rationals are strings") {
    auto r = cli({"maxflow", instance("diamond_maxflow.inst"), "--oracle"});
    CHECK(r.exit == kFeasible);
    const auto j = r.report();
    CHECK(j["witness"]["value"] == "7/2");
    CHECK(j["oracle"]["agrees"] == true);
    CHECK(j["mode"] == "rational");
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    auto f = cli({"maxflow", instance("diamond_maxflow.inst"), "--mode", "float"}).report();
    CHECK(f["witness"]["value"] == 3.5);
    CHECK(f["mode"] == "float");
  }

  SUBCASE("usage and input errors exit 2") {
    CHECK(cli({}).exit == kUsage);
    CHECK(cli({"bogus", "x.inst"}).exit == kUsage);
    CHECK(cli({"circulation"}).exit == kUsage);
    CHECK(cli({"circulation", "/nonexistent/file.inst"}).exit == kUsage);
    CHECK(cli({"circulation", instance("path_ergodic.inst")}).exit == kUsage);
    CHECK(cli({"circulation", instance("hoffman_feasible.inst"), "--mode", "fast"}).exit == kUsage);

    const auto bad = write_temp("bad.inst", "space { atoms: [a] }\nmeasure2 m { (a, b): 1 }\n");
    auto r = cli({"ergodic", bad});
    CHECK(r.exit == kUsage);
    CHECK(r.err.find("line 2, column 18") != std::string::npos);

    const auto missing = write_temp("missing.inst", "space { atoms: [a] }\nproblem ergodic { }\n");
    CHECK(cli({"ergodic", missing}).exit == kUsage);
    const auto order = write_temp("order.inst",
                                  "space { atoms: [a, b] }\nmeasure2 lo { (a,b): 2 }\nmeasure2 hi { (a,b): 1 }\n"
                                  "problem circulation { lower: lo, upper: hi }\n");
    auto o = cli({"circulation", order});
    CHECK(o.exit == kUsage);
    CHECK(o.err.find("BoundOrderViolation") != std::string::npos);
  }

  SUBCASE("oracle subcommand") {
    CHECK(cli({"oracle", instance("path_ergodic.inst")}).exit == kInfeasible);
    auto m = cli({"oracle", instance("diamond_maxflow.inst")});
    CHECK(m.exit == kFeasible);
    CHECK(m.report()["oracle"]["optimum"] == "7/2");
  }
}

TEST_CASE("golden suite") {
  const bool update = std::getenv("MFLOW_UPDATE_GOLDEN") != nullptr;
  const auto cases = load_manifest();
  CHECK(cases.size() >= 30);
  for (const auto& c : cases) {
    INFO(c.name);
    const auto r = run_golden(c);
    CHECK(r.exit == c.expected_exit);
    if (update) std::ofstream(expected_path(c)) << r.out;
    CHECK(r.out == read_text(expected_path(c)));
  }
}

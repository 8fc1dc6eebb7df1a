// Runs every acceptance criterion and prints one [PASS]/[FAIL] line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "json.hpp"
#include "mflow/flow_solver.hpp"
#include "mflow/harness/lp_oracle.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace mflow;
using namespace testing;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

Verdict from(const Tally& t) { return {t.ok(), t.summary()}; }

Verdict all_of(std::initializer_list<Tally> tallies) {
  Verdict v{true, ""};
  for (const auto& t : tallies) {
    v.ok = v.ok && t.ok();
    v.detail += (v.detail.empty() ? "" : "; ") + t.summary();
  }
  return v;
}

Verdict hoffman() {
  const auto start = std::chrono::steady_clock::now();
  auto v = from(hoffman_equivalence(1001, 500));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.ok = v.ok && secs < 30.0;
  v.detail += "; " + std::to_string(secs) + " s";
  return v;
}

Verdict path_counterexample() {
  auto sp = labels({"s", "m", "t"});
  M2 psi(sp);
  psi(0, 1) = psi(1, 2) = 1;
  const auto r = ergodic_circulation(psi);
  if (r.feasible()) return {false, "ergodic circulation reported feasible"};
  const auto& c = r.certificate();
  // psi(|1 + F|_+) evaluated directly.
  Q mass(0);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      const Q g = 1 + c.f(x) - c.f(y);
      if (g > 0) mass += psi(x, y) * g;
    }
  }
  const std::vector<AtomSet> parts{AtomSet(3, {0}), AtomSet(3, {1}), AtomSet(3, {2})};
  const Q partition = partition_condition(psi, parts);
  const bool oracle_agrees = !oracle::ergodic(psi).feasible;
  std::ostringstream d;
  d << "psi(|1+F|_+) = " << format_number(mass) << ", partition = " << format_number(partition);
  return {mass == 0 && c.lhs == 0 && c.rhs == 1 && partition == 0 && oracle_agrees, d.str()};
}

Verdict cut_gap() {
  auto agreement = multicommodity_agreement(1008, 300);
  std::size_t tried = 0;
  const auto found = search_cut_gap(1009, 100000, &tried);
  Verdict v = from(agreement);
  v.detail += "; searched " + std::to_string(tried) + " instances";
  if (!found) return {false, v.detail + ", no cut gap found"};
  const bool gap = found->lhs > found->rhs && !found->metric_is_cut && passes_cut_tests(found->sigma, found->psi);
  v.ok = v.ok && gap;
  v.detail += ", gap " + format_number(found->lhs) + " > " + format_number(found->rhs);
  return v;
}

Verdict golden() {
  std::size_t runs = 0, bad = 0;
  std::string first;
  for (const auto& c : load_manifest()) {
    ++runs;
    const auto r = run_golden(c);
    bool ok = r.exit == 0 || r.exit == 1;
    if (ok && c.args.front() != "gen") {
      const auto j = nlohmann::json::parse(r.out, nullptr, false);
      ok = !j.is_discarded() &&
           (c.args.front() == "oracle" || (j.contains("verification") && j["verification"]["status"] == "pass"));
    }
    if (!ok && bad++ == 0) first = c.name + " exited " + std::to_string(r.exit);
  }
  std::string d = std::to_string(runs) + " invocations, " + std::to_string(bad) + " bad";
  if (!first.empty()) d += " (first: " + first + ")";
  return {runs > 0 && bad == 0, d};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"hoffman equivalence, 500 instances", hoffman},
      {"directed path admits no ergodic circulation", path_counterexample},
      {"valued circulation certificates, 200 instances",
       [] { return all_of({maxcirc_certificates(1003, 200, false), maxcirc_certificates(1013, 200, true)}); }},
      {"integral potentials, 100 instances", [] { return from(integrality(1004, 100)); }},
      {"path decomposition, 200 instances",
       [] { return all_of({path_decomposition(1005, 200), acyclicity(1015, 200)}); }},
      {"shortcut inequality, 1000 pairs", [] { return from(shortcut(1006, 1000)); }},
      {"transshipment duality, 200 instances", [] { return from(transship_duality(1007, 200)); }},
      {"multicommodity agreement and cut gap", cut_gap},
      {"markov structure and hitting",
       [] { return all_of({markov_cyclic(8), markov_structure(1010, 100), hitting(1011, 50)}); }},
      {"golden suite self-verification", golden},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.ok ? 0 : 1;
    std::printf("[%s] %zu. %s (%s)\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

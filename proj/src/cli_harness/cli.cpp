#include "mflow/harness/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mflow/flow_solver.hpp"
#include "mflow/harness/generators.hpp"
#include "mflow/harness/instance.hpp"
#include "mflow/harness/lp_oracle.hpp"
#include "mflow/harness/verify.hpp"
#include "mflow/markov_space.hpp"
#include "mflow/multicommodity.hpp"
#include "mflow/path_decomp.hpp"

namespace mflow::harness {

using json = nlohmann::json;

std::string emit_report(const json& report) { return report.dump(2) + "\n"; }

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string mode = "auto";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string epsilon;
  bool oracle = false;
  std::string file;
};

// ---- conversions and JSON ----

template <Scalar T>
Measure1<T> as(const M1& m) {
  if constexpr (is_exact_v<T>) return m; else return to_float(m);
}
template <Scalar T>
Measure2<T> as(const M2& m) {
  if constexpr (is_exact_v<T>) return m; else return to_float(m);
}
template <Scalar T>
T as(const Q& x) {
  return from_rational<T>(x);
}
inline const M1& exact(const M1& m) { return m; }
inline const M2& exact(const M2& m) { return m; }
inline M1 exact(const Measure1<double>& m) { return to_exact(m); }
inline M2 exact(const Measure2<double>& m) { return to_exact(m); }
template <Scalar T>
Q exact(const T& x) {
  return to_rational(x);
}
template <Scalar T>
std::vector<Q> exact(const std::vector<T>& v) {
  std::vector<Q> out;
  for (const auto& x : v) out.push_back(to_rational(x));
  return out;
}

json jnum(const Rational& x) { return format_number(x); }
json jnum(double x) { return x; }

template <Scalar T>
json jvec(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jnum(x));
  return a;
}
template <Scalar T>
json jm1(const Measure1<T>& m) {
  return jvec(m.weights());
}
template <Scalar T>
json jm2(const Measure2<T>& m) {
  json rows = json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < m.size(); ++y) row.push_back(jnum(m(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}
json jset(const AtomSpace& sp, const AtomSet& s) {
  json a = json::array();
  for (auto i : s.indices()) a.push_back(sp.label(i));
  return a;
}
json jwalk(const AtomSpace& sp, const std::vector<std::size_t>& w) {
  json a = json::array();
  for (auto i : w) a.push_back(sp.label(i));
  return a;
}

// ---- problem arguments ----

class Args {
 public:
  Args(const Instance& inst, const Problem& p) : inst_(inst), p_(p) {}

  const Value& word(std::string_view key) const {
    const Value* v = p_.find(key);
    if (!v) throw UsageError(where(p_.line, p_.column) + "problem '" + p_.op + "' needs argument '" + std::string(key) + "'");
    if (v->is_list) throw UsageError(where(v->line, v->column) + "argument '" + std::string(key) + "' must not be a list");
    return *v;
  }
  bool has(std::string_view key) const { return p_.find(key) != nullptr; }

  const M2& table2(std::string_view key) const {
    const Value& v = word(key);
    auto it = inst_.tables2.find(v.word);
    if (it == inst_.tables2.end()) throw UsageError(where(v.line, v.column) + "no pair table named '" + v.word + "'");
    return it->second;
  }
  M2 table2_or_zero(std::string_view key) const { return has(key) ? table2(key) : M2(inst_.space); }
  const M1& table1(std::string_view key) const {
    const Value& v = word(key);
    auto it = inst_.tables1.find(v.word);
    if (it == inst_.tables1.end()) throw UsageError(where(v.line, v.column) + "no atom table named '" + v.word + "'");
    return it->second;
  }
  const PairSet& pairs(std::string_view key) const {
    const Value& v = word(key);
    auto it = inst_.pair_sets.find(v.word);
    if (it == inst_.pair_sets.end()) throw UsageError(where(v.line, v.column) + "no pair set named '" + v.word + "'");
    return it->second;
  }
  std::size_t atom(std::string_view key) const {
    const Value& v = word(key);
    if (auto i = inst_.space->index_of(v.word)) return *i;
    throw UsageError(where(v.line, v.column) + "unknown atom '" + v.word + "'");
  }
  Q number(std::string_view key, std::optional<Q> fallback = std::nullopt) const {
    if (!has(key) && fallback) return *fallback;
    const Value& v = word(key);
    try {
      return parse_rational(v.word);
    } catch (const std::exception&) {
      throw UsageError(where(v.line, v.column) + "argument '" + std::string(key) + "' is not a number");
    }
  }
  std::size_t count(std::string_view key, std::size_t fallback) const {
    if (!has(key)) return fallback;
    Q q = number(key);
    if (q < 0 || !is_integer(q)) throw UsageError("argument '" + std::string(key) + "' must be a nonnegative integer");
    return static_cast<std::size_t>(to_double(q));
  }
  std::optional<AtomSet> set(std::string_view key) const {
    const Value* v = p_.find(key);
    if (!v) return std::nullopt;
    AtomSet s(inst_.space->size());
    std::vector<std::string> items = v->is_list ? v->list : std::vector<std::string>{v->word};
    for (const auto& label : items) {
      auto i = inst_.space->index_of(label);
      if (!i) throw UsageError(where(v->line, v->column) + "unknown atom '" + label + "'");
      s.insert(*i);
    }
    return s;
  }

 private:
  static std::string where(std::size_t line, std::size_t col) {
    return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
  }
  const Instance& inst_;
  const Problem& p_;
};

// ---- per-operation runners ----

struct Run {
  const Instance& inst;
  Args args;
  Options opt;
  json report;
  Verification ver;
  std::optional<bool> feasible;  // unset for pure computations
  std::optional<Q> value;        // compared with the oracle optimum
};

template <Scalar T>
T solver_tol(const Options& o) {
  if constexpr (is_exact_v<T>) return T(0); else return o.tol;
}
template <Scalar T>
Q check_tol(const Options& o) {
  if constexpr (is_exact_v<T>) return Q(0); else return to_rational(o.tol);
}

template <Scalar T>
json potential_json(const PotentialCertificate<T>& c) {
  return {{"f", jvec(c.f.values())}, {"b", c.b}, {"condition", std::string(condition_name(c.violated))},
          {"lhs", jnum(c.lhs)}, {"rhs", jnum(c.rhs)}};
}

template <Scalar T>
void run_circulation(Run& r) {
  const M2 phi = r.args.table2_or_zero("lower"), psi = r.args.table2("upper");
  const T tol = solver_tol<T>(r.opt);
  const Q vt = check_tol<T>(r.opt);
  auto out = feasible_circulation(as<T>(phi), as<T>(psi), tol);
  r.feasible = out.feasible();
  if (out.feasible()) {
    const M2 a = exact(out.witness());
    r.report["witness"] = {{"alpha", jm2(out.witness())}};
    r.ver.merge(check_bounds(phi, psi, a, vt));
    r.ver.merge(check_circulation(a, vt));
  } else {
    const auto& c = out.certificate();
    r.report["certificate"] = {{"set", jset(*r.inst.space, c.set)}, {"lhs", jnum(c.lhs)}, {"rhs", jnum(c.rhs)}};
    r.ver.merge(check_hoffman_cut(phi, psi, c.set, exact(c.lhs), exact(c.rhs), vt));
  }
}

template <Scalar T>
void report_valued(Run& r, const ValuedOutcome<T>& out, const M2& phi, const M2& psi, const M2& v, const Q& c) {
  const Q vt = check_tol<T>(r.opt);
  r.feasible = out.feasible();
  if (out.feasible()) {
    const M2 a = exact(out.witness());
    r.report["witness"] = {{"alpha", jm2(out.witness())}};
    r.ver.merge(check_bounds(phi, psi, a, vt));
    r.ver.merge(check_circulation(a, vt));
    r.ver.merge(check_value(a, v, c, vt, "value constraint met"));
  } else {
    const auto& cert = out.certificate();
    r.report["certificate"] = potential_json(cert);
    r.ver.merge(check_jjfb(phi, psi, v, c, exact(cert.f.values()), cert.b, exact(cert.lhs), exact(cert.rhs), vt));
  }
}

template <Scalar T>
void run_valued(Run& r) {
  const M2 phi = r.args.table2_or_zero("lower"), psi = r.args.table2("upper"), v = r.args.table2("value");
  const Q c = r.args.number("target");
  report_valued<T>(r, valued_circulation(as<T>(phi), as<T>(psi), as<T>(v), as<T>(c), solver_tol<T>(r.opt)), phi, psi,
                   v, c);
}

template <Scalar T>
void run_ergodic(Run& r) {
  const M2 psi = r.args.table2("capacity");
  const M2 phi(r.inst.space), one = M2::constant(r.inst.space, Q(1));
  report_valued<T>(r, ergodic_circulation(as<T>(psi), solver_tol<T>(r.opt)), phi, psi, one, Q(1));
}

template <Scalar T>
void run_maxflow(Run& r) {
  const M2 psi = r.args.table2("capacity");
  const std::size_t s = r.args.atom("source"), t = r.args.atom("sink");
  auto res = max_flow(as<T>(psi), s, t, solver_tol<T>(r.opt));
  r.value = exact(res.value);
  r.report["witness"] = {{"flow", jm2(res.flow)}, {"value", jnum(res.value)}, {"min_cut", jset(*r.inst.space, res.min_cut)}};
  r.ver.merge(check_max_flow(psi, s, t, exact(res.flow), exact(res.value), res.min_cut, check_tol<T>(r.opt)));
}

template <Scalar T>
void report_flow(Run& r, const Measure2<T>& flow, const M2& psi, const M1& sigma, const M1& tau) {
  const Q vt = check_tol<T>(r.opt);
  const M2 f = exact(flow);
  r.report["witness"] = {{"flow", jm2(flow)}};
  r.ver.merge(check_bounds(M2(r.inst.space), psi, f, vt));
  r.ver.merge(check_net_flow(f, sigma - tau, vt));
}

template <Scalar T>
void run_supply_demand(Run& r) {
  const M2 psi = r.args.table2("capacity");
  const M1 sigma = r.args.table1("supply"), tau = r.args.table1("demand");
  auto out = supply_demand_flow(as<T>(psi), as<T>(sigma), as<T>(tau), solver_tol<T>(r.opt));
  r.feasible = out.feasible();
  if (out.feasible()) {
    report_flow(r, out.witness(), psi, sigma, tau);
  } else {
    const auto& c = out.certificate();
    r.report["certificate"] = {{"set", jset(*r.inst.space, c.set)}, {"lhs", jnum(c.lhs)}, {"rhs", jnum(c.rhs)}};
    r.ver.merge(check_supply_cut(psi, sigma, tau, c.set, exact(c.lhs), exact(c.rhs), check_tol<T>(r.opt)));
  }
}

template <Scalar T>
void run_mincost(Run& r) {
  const M2 psi = r.args.table2("capacity"), v = r.args.table2("cost");
  const M1 sigma = r.args.table1("supply"), tau = r.args.table1("demand");
  const Q target = r.args.number("target");
  auto out = min_cost_flow(as<T>(psi), as<T>(sigma), as<T>(tau), as<T>(v), as<T>(target), solver_tol<T>(r.opt));
  r.feasible = out.feasible();
  if (out.feasible()) {
    report_flow(r, out.witness(), psi, sigma, tau);
    r.ver.merge(check_value(exact(out.witness()), v, target, check_tol<T>(r.opt), "cost equals target"));
  } else {
    const auto& c = out.certificate();
    r.report["certificate"] = potential_json(c);
    r.ver.merge(check_mincost_potential(psi, sigma, tau, v, target, exact(c.f.values()), c.b, exact(c.lhs),
                                        exact(c.rhs), check_tol<T>(r.opt)));
  }
}

template <Scalar T>
void run_transship(Run& r) {
  const M2 psi = r.args.table2("capacity");
  const M1 alpha = r.args.table1("alpha"), beta = r.args.table1("beta");
  const Q vt = check_tol<T>(r.opt);
  auto out = transship_feasible(as<T>(psi), as<T>(alpha), as<T>(beta), solver_tol<T>(r.opt));
  r.feasible = out.feasible();
  if (out.feasible()) {
    const M2 mu = exact(out.witness());
    r.report["witness"] = {{"coupling", jm2(out.witness())}};
    r.ver.merge(check_bounds(M2(r.inst.space), psi, mu, vt));
    r.ver.merge(check_marginals(mu, alpha, beta, vt));
  } else {
    const auto& c = out.certificate();
    r.report["certificate"] = {{"s", jset(*r.inst.space, c.s)}, {"t", jset(*r.inst.space, c.t)},
                               {"lhs", jnum(c.lhs)}, {"rhs", jnum(c.rhs)}};
    r.ver.merge(check_rectangle(psi, alpha, beta, c.s, c.t, exact(c.lhs), exact(c.rhs), vt));
  }
}

template <Scalar T>
void run_transship_cost(Run& r) {
  const M1 alpha = r.args.table1("alpha"), beta = r.args.table1("beta");
  const M2 c = r.args.table2("cost");
  const Q vt = check_tol<T>(r.opt);
  auto res = transship_min_cost(as<T>(alpha), as<T>(beta), as<T>(c), solver_tol<T>(r.opt));
  r.value = exact(res.cost);
  const M2 mu = exact(res.coupling);
  r.report["witness"] = {{"coupling", jm2(res.coupling)}, {"cost", jnum(res.cost)},
                         {"dual", {{"g", jvec(res.dual.g)}, {"h", jvec(res.dual.h)}, {"value", jnum(res.dual.value)}}}};
  r.ver.merge(check_bounds(M2(r.inst.space), M2::constant(r.inst.space, alpha.total()), mu, vt));
  r.ver.merge(check_marginals(mu, alpha, beta, vt));
  r.ver.merge(check_transship_duality(alpha, beta, c, mu, exact(res.cost), exact(res.dual.g), exact(res.dual.h), vt));
}

template <Scalar T>
void run_strassen(Run& r) {
  const M1 alpha = r.args.table1("alpha"), beta = r.args.table1("beta");
  const PairSet& e = r.args.pairs("support");
  const Q vt = check_tol<T>(r.opt);
  auto out = strassen_coupling(as<T>(alpha), as<T>(beta), e, solver_tol<T>(r.opt));
  r.feasible = out.feasible();
  if (out.feasible()) {
    const M2 mu = exact(out.witness());
    r.report["witness"] = {{"coupling", jm2(out.witness())}};
    r.ver.merge(check_bounds(M2(r.inst.space), M2::constant(r.inst.space, Q(1)), mu, vt));
    r.ver.merge(check_marginals(mu, alpha, beta, vt));
    r.ver.merge(check_support(mu, e, vt));
  } else {
    const auto& c = out.certificate();
    r.report["certificate"] = {{"s", jset(*r.inst.space, c.s)}, {"t", jset(*r.inst.space, c.t)},
                               {"lhs", jnum(c.lhs)}, {"rhs", jnum(c.rhs)}};
    r.ver.merge(check_strassen_rectangle(alpha, beta, e, c.s, c.t, exact(c.lhs), vt));
  }
}

template <Scalar T>
void run_decompose(Run& r) {
  const M2 phi = r.args.table2("flow");
  const Q vt = check_tol<T>(r.opt);
  const T tol = solver_tol<T>(r.opt);
  auto check = is_acyclic(as<T>(phi), tol);
  r.feasible = check.acyclic;
  if (!check.acyclic) {
    r.report["certificate"] = {{"cycle", jwalk(*r.inst.space, check.cycle)}, {"circulation", jm2(check.circulation)}};
    r.ver.merge(check_cycle(phi, exact(check.circulation), vt));
    return;
  }
  auto tau = decompose_paths(as<T>(phi), tol);
  json walks = json::array();
  std::vector<std::vector<std::size_t>> ws;
  std::vector<Q> weights;
  for (const auto& w : tau.entries()) {
    walks.push_back({{"walk", jwalk(*r.inst.space, w.atoms)}, {"weight", jnum(w.weight)}});
    ws.push_back(w.atoms);
    weights.push_back(exact(w.weight));
  }
  r.report["witness"] = {{"walks", walks}};
  r.ver.merge(check_walks(phi, ws, weights, vt));
}

template <Scalar T>
void run_multiflow(Run& r) {
  const M2 sigma = r.args.table2("demand"), psi = r.args.table2("capacity");
  Q eps = r.args.number("epsilon", Q(0));
  if (!r.opt.epsilon.empty()) eps = parse_rational(r.opt.epsilon);
  const Q vt = check_tol<T>(r.opt);
  r.report["epsilon"] = jnum(as<T>(eps));
  auto out = solve_multicommodity(as<T>(sigma), as<T>(psi), as<T>(eps), solver_tol<T>(r.opt));
  r.feasible = out.feasible();
  if (out.feasible()) {
    const auto& mf = out.witness();
    json flows = json::array();
    M2 load(r.inst.space);
    bool unit = true;
    for (std::size_t k = 0; k < mf.pairs.size(); ++k) {
      const auto [s, t] = mf.pairs[k];
      flows.push_back({{"pair", {r.inst.space->label(s), r.inst.space->label(t)}}, {"flow", jm2(mf.flows[k])}});
      const M2 f = exact(mf.flows[k]);
      M1 net(r.inst.space);
      net(s) = Q(1);
      net(t) = Q(-1);
      unit = unit && check_net_flow(f, net, vt).passed() && f.is_nonnegative();
      load += sigma(s, t) * f;
    }
    r.report["witness"] = {{"flows", flows}, {"total_load", jm2(mf.total_load)}, {"overload", jnum(mf.overload)}};
    bool all_pairs = true;
    for (std::size_t s = 0; s < sigma.size(); ++s)
      for (std::size_t t = 0; t < sigma.size(); ++t)
        if (s != t && sigma(s, t) > 0 && !mf.flow(s, t)) all_pairs = false;
    r.ver.add("every demand pair routed", all_pairs);
    r.ver.add("per-pair flows have value 1", unit);
    r.ver.add("total load matches", tv_norm(load - exact(mf.total_load)) <= vt * Q(static_cast<long>(sigma.size() + 1)));
    r.ver.add("total load symmetric", tv_norm(load - transpose(load)) <= vt * Q(static_cast<long>(sigma.size() + 1)));
    r.ver.add("overload within epsilon", setminus(load, psi).total() <= eps + vt * Q(static_cast<long>(sigma.size() + 1)));
  } else {
    const auto& c = out.certificate();
    r.report["certificate"] = {{"metric", jm2(c.d.d)}, {"lhs", jnum(c.lhs)}, {"rhs", jnum(c.rhs)},
                               {"min_overload", jnum(c.min_overload)}};
    r.ver.merge(check_metric_certificate(sigma, psi, Pseudometric<Q>{exact(c.d.d)}, exact(c.lhs), exact(c.rhs), vt));
  }
}

template <Scalar T>
void run_markov(Run& r) {
  const M2 eta = r.args.table2("eta");
  const std::size_t start = r.args.atom("start");
  const std::size_t n = r.inst.space->size();
  const std::size_t steps = r.args.count("steps", 10);
  const T tol = solver_tol<T>(r.opt);
  const Q vt = check_tol<T>(r.opt);
  auto ms = from_circulation(as<T>(eta), tol);
  auto walk = simulate_walk(ms, Measure1<T>::point(r.inst.space, start), steps, r.opt.seed);
  const bool reversible = is_reversible(ms, tol);
  const auto ind = is_indecomposable(ms, tol);
  json w = {{"walk", jwalk(*r.inst.space, walk)}, {"pi", jm1(ms.pi())}, {"kernel", jm2(ms.kernel())},
            {"reversible", reversible}, {"indecomposable", ind.indecomposable}};
  if (!ind.indecomposable) w["decomposing_set"] = jset(*r.inst.space, ind.witness);

  // Kernel rows reassemble eta; walk steps have positive probability.
  const M2 kernel = exact(ms.kernel());
  const M1 pi = exact(ms.pi());
  M2 rebuilt(r.inst.space);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t y = 0; y < n; ++y) rebuilt(u, y) = pi(u) * kernel(u, y);
  r.ver.add("pi-weighted kernel reassembles eta", tv_norm(rebuilt - eta) <= vt * Q(static_cast<long>(n * n + 1)));
  r.ver.add("pi is the first marginal", tv_norm(marginals(eta).first - pi) <= vt * Q(static_cast<long>(n + 1)));
  bool steps_ok = walk.front() == start;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) steps_ok = steps_ok && kernel(walk[i], walk[i + 1]) > 0;
  r.ver.add("walk uses positive transitions", steps_ok);
  bool sym = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) sym = sym && near(eta(x, y), eta(y, x), vt);
  r.ver.add("reversibility verdict", sym == reversible);
  if (!ind.indecomposable) {
    const AtomSet& a = ind.witness;
    r.ver.add("decomposing set is closed", pi.of(a) > 0 && pi.of(a) < 1 && eta.rect(a, a.complement()) <= vt);
  } else if (n <= 12) {
    bool ok = true;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      const AtomSet a = AtomSet::from_mask(n, mask);
      if (pi.of(a) > vt && pi.of(a) < 1 - vt && !(eta.rect(a, a.complement()) > vt)) ok = false;
    }
    r.ver.add("no closed set (enumeration)", ok);
  }
  if (auto target = r.args.set("target")) {
    const std::size_t max_steps = r.args.count("max_steps", 50 * n);
    const std::size_t trials = r.args.count("trials", 1000);
    w["target"] = jset(*r.inst.space, *target);
    if (ind.indecomposable && pi.of(*target) > 0) {
      w["hit_fraction"] = hitting_stats(ms, start, *target, max_steps, trials, r.opt.seed, tol);
    } else {
      w["hit_fraction"] = nullptr;
    }
  }
  r.report["witness"] = w;
}

// Oracle verdict for the instance's problem, in exact arithmetic.
json run_oracle(const Instance& inst, const Args& a, const std::string& op, const Options& opt, bool& feasible,
                std::optional<Q>& optimum) {
  oracle::Verdict<Q> v;
  if (op == "circulation") {
    v = oracle::circulation(a.table2_or_zero("lower"), a.table2("upper"));
  } else if (op == "valued-circulation") {
    v = oracle::valued_circulation(a.table2_or_zero("lower"), a.table2("upper"), a.table2("value"), a.number("target"));
  } else if (op == "ergodic") {
    v = oracle::ergodic(a.table2("capacity"));
  } else if (op == "maxflow") {
    v = oracle::max_flow(a.table2("capacity"), a.atom("source"), a.atom("sink"));
    optimum = v.optimum;
  } else if (op == "supply-demand") {
    v = oracle::supply_demand(a.table2("capacity"), a.table1("supply"), a.table1("demand"));
  } else if (op == "mincost-flow") {
    v = oracle::min_cost_flow(a.table2("capacity"), a.table1("supply"), a.table1("demand"), a.table2("cost"),
                              a.number("target"));
  } else if (op == "transship") {
    v = oracle::transship(a.table2("capacity"), a.table1("alpha"), a.table1("beta"));
  } else if (op == "transship-cost") {
    v = oracle::transship_cost(a.table1("alpha"), a.table1("beta"), a.table2("cost"));
    optimum = v.optimum;
  } else if (op == "strassen") {
    const PairSet& e = a.pairs("support");
    M2 allowed(inst.space);
    for (std::size_t x = 0; x < allowed.size(); ++x)
      for (std::size_t y = 0; y < allowed.size(); ++y)
        if (e.contains(x, y)) allowed(x, y) = Q(1);
    v = oracle::strassen(a.table1("alpha"), a.table1("beta"), allowed);
  } else if (op == "decompose") {
    v = oracle::circulation_mass(a.table2("flow"));
    v.feasible = v.optimum == 0;
  } else if (op == "multiflow") {
    Q eps = a.number("epsilon", Q(0));
    if (!opt.epsilon.empty()) eps = parse_rational(opt.epsilon);
    v = oracle::multiflow(a.table2("demand"), a.table2("capacity"), eps);
  } else {
    throw UsageError("the oracle does not cover '" + op + "'");
  }
  feasible = v.feasible;
  json j = {{"feasible", v.feasible}};
  if (v.feasible) j["optimum"] = jnum(v.optimum);
  return j;
}

template <Scalar T>
void dispatch(Run& r, const std::string& op) {
  if (op == "circulation") return run_circulation<T>(r);
  if (op == "valued-circulation") return run_valued<T>(r);
  if (op == "ergodic") return run_ergodic<T>(r);
  if (op == "maxflow") return run_maxflow<T>(r);
  if (op == "supply-demand") return run_supply_demand<T>(r);
  if (op == "mincost-flow") return run_mincost<T>(r);
  if (op == "transship") return run_transship<T>(r);
  if (op == "transship-cost") return run_transship_cost<T>(r);
  if (op == "strassen") return run_strassen<T>(r);
  if (op == "decompose") return run_decompose<T>(r);
  if (op == "markov-sim") return run_markov<T>(r);
  if (op == "multiflow") return run_multiflow<T>(r);
  throw UsageError("unknown operation '" + op + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json check_list(const Verification& v) {
  json a = json::array();
  for (const auto& c : v.checks()) a.push_back({{"name", c.name}, {"ok", c.ok}});
  return a;
}

int solve_command(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(opt.file);
  Instance inst;
  try {
    inst = parse_instance(text);
  } catch (const ParseError& e) {
    err << opt.file << ": " << e.what() << "\n";
    return kUsage;
  }
  if (!inst.problem) throw UsageError(opt.file + ": no problem stanza");
  const std::string& op = inst.problem->op;
  if (command != "oracle" && op != command) {
    throw UsageError(opt.file + ": problem stanza is '" + op + "', not '" + command + "'");
  }
  const std::size_t n = inst.space->size();
  std::string mode = opt.mode;
  if (mode == "auto") mode = n <= 64 ? "rational" : "float";

  Args args(inst, *inst.problem);
  json report = {{"command", command}, {"operation", op}, {"atoms", inst.space->labels()}, {"seed", opt.seed}};

  if (command == "oracle") {
    bool feasible = false;
    std::optional<Q> optimum;
    report["mode"] = "rational";
    report["oracle"] = run_oracle(inst, args, op, opt, feasible, optimum);
    report["verdict"] = feasible ? "feasible" : "infeasible";
    out << emit_report(report);
    return feasible ? kFeasible : kInfeasible;
  }

  Run r{inst, args, opt, json::object(), {}, std::nullopt, std::nullopt};
  if (mode == "rational") {
    report["tolerance"] = "0";
    dispatch<Rational>(r, op);
  } else {
    report["tolerance"] = opt.tol;
    dispatch<double>(r, op);
  }
  report["mode"] = mode;
  for (auto& [k, v] : r.report.items()) report[k] = v;

  if (opt.oracle) {
    bool feasible = false;
    std::optional<Q> optimum;
    json o = run_oracle(inst, args, op, opt, feasible, optimum);
    bool agrees = true;
    if (r.feasible) agrees = *r.feasible == feasible;
    if (r.value && optimum) agrees = agrees && near(*r.value, *optimum, mode == "rational" ? Q(0) : to_rational(opt.tol));
    o["agrees"] = agrees;
    report["oracle"] = o;
    r.ver.add("oracle agrees", agrees);
  }

  report["verdict"] = !r.feasible ? "value" : (*r.feasible ? "feasible" : "infeasible");
  report["verification"] = {{"status", r.ver.passed() ? "pass" : "fail"}, {"checks", check_list(r.ver)}};
  out << emit_report(report);
  if (!r.ver.passed()) {
    err << "verification failed\n";
    return kVerificationFailed;
  }
  return r.feasible && !*r.feasible ? kInfeasible : kFeasible;
}

int gen_command(const std::string& kind, const std::string& expr, std::size_t atoms, std::size_t q, std::ostream& out) {
  Instance inst;
  Problem p;
  std::pair<SpacePtr, M2> g;
  if (kind == "graphon") {
    g = gen_graphon(Density(expr), atoms);
    p.op = "ergodic";
    p.args.push_back({"capacity", Value{"eta", {}, false, 0, 0}});
  } else if (kind == "cyclic") {
    g = gen_cyclic(q);
    p.op = "markov-sim";
    p.args.push_back({"eta", Value{"eta", {}, false, 0, 0}});
    p.args.push_back({"start", Value{"0", {}, false, 0, 0}});
    p.args.push_back({"steps", Value{std::to_string(q), {}, false, 0, 0}});
  } else {
    throw UsageError("unknown generator '" + kind + "' (graphon or cyclic)");
  }
  inst.space = g.first;
  inst.order.push_back({DeclKind::Measure2, "eta"});
  inst.tables2.emplace("eta", std::move(g.second));
  inst.problem = std::move(p);
  out << emit_instance(inst);
  return kFeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified measure flow solver", "mflow"};
  app.require_subcommand(1);
  Options opt;
  const std::vector<std::string> solvers{"circulation", "valued-circulation", "ergodic",  "maxflow",
                                         "supply-demand", "mincost-flow",     "transship", "transship-cost",
                                         "strassen",    "decompose",          "markov-sim", "multiflow", "oracle"};
  for (const auto& name : solvers) {
    auto* sub = app.add_subcommand(name, name == "oracle" ? "Run the LP oracle on an instance" : "Solve '" + name + "'");
    sub->add_option("instance", opt.file, "Instance file")->required();
    sub->add_option("--mode", opt.mode, "rational, float or auto")->check(CLI::IsMember({"auto", "rational", "float"}));
    sub->add_option("--tol", opt.tol, "Float tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--epsilon", opt.epsilon, "Overload bound (multiflow)");
    sub->add_flag("--oracle", opt.oracle, "Cross-check with the LP oracle");
  }
  std::string kind, expr = "1";
  std::size_t atoms = 4, q = 3;
  auto* gen = app.add_subcommand("gen", "Emit a generated instance");
  gen->add_option("kind", kind, "graphon or cyclic")->required();
  gen->add_option("--expr", expr, "Density W(x,y)");
  gen->add_option("--atoms", atoms, "Atom count for graphons")->check(CLI::PositiveNumber);
  gen->add_option("--q", q, "Cycle length")->check(CLI::Range(std::size_t{2}, std::size_t{100000}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFeasible;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) return gen_command(kind, expr, atoms, q, out);
    for (auto* sub : app.get_subcommands()) {
      if (sub->parsed()) return solve_command(sub->get_name(), opt, out, err);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << error_name(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mflow::harness

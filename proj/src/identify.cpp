#include "netident/identify.hpp"

#include "netident/error.hpp"
#include "netident/response.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace netident {

ResponseOracle::ResponseOracle(NodeId target, Evaluator evaluate, unsigned degree_bound)
    : target_(target), evaluate_(std::move(evaluate)), degree_bound_(degree_bound),
      queries_(std::make_shared<std::size_t>(0)) {}

Rational ResponseOracle::operator()(const Assignment& a) const {
  ++*queries_;
  return evaluate_(a);
}

ResponseOracle ResponseOracle::from_mpoly(NodeId target, MPoly F, unsigned degree_bound) {
  auto shared = std::make_shared<const MPoly>(F);
  ResponseOracle o(target, [shared](const Assignment& a) { return eval_response(*shared, a); }, degree_bound);
  o.expanded_ = std::move(F);
  return o;
}

ResponseOracle ResponseOracle::from_network(std::shared_ptr<const Network> net, NodeId target,
                                            unsigned degree_bound) {
  if (!net->graph().valid(target)) throw UnknownNode(target);
  return ResponseOracle(
      target, [net, target](const Assignment& a) { return evaluate_response(*net, target, a); }, degree_bound);
}

MeasurementPlan measurement_plan(const Graph& g, FunctionClass cls) {
  MeasurementPlan plan;
  plan.required = g.sinks();
  switch (cls) {
  case FunctionClass::General:
    if (g.is_path()) {
      auto sources = g.sources();
      for (std::size_t v = 0; v < g.node_count(); ++v)
        if (!sources.count(static_cast<NodeId>(v))) plan.required.insert(static_cast<NodeId>(v));
      plan.sufficient = Sufficiency::Yes;
      plan.rationale = "path-general: every non-source node (constant offsets are gauge-ambiguous)";
    } else {
      plan.sufficient = Sufficiency::Unknown;
      plan.rationale = "sinks-necessary: lower bound only for general functions beyond paths";
    }
    break;
  case FunctionClass::FZ:
    if (g.is_path()) {
      plan.sufficient = Sufficiency::Yes;
      plan.rationale = "path-fz: the sink suffices";
    } else if (g.is_forest()) {
      plan.sufficient = Sufficiency::Yes;
      plan.rationale = "tree-fz: all sinks suffice";
    } else {
      plan.sufficient = Sufficiency::Unknown;
      plan.rationale = "sinks-necessary: sufficiency for f(0)=0 functions on non-tree DAGs is open";
    }
    break;
  case FunctionClass::FZNL:
    plan.sufficient = Sufficiency::Yes;
    plan.rationale = "dag-fznl: all sinks suffice for nonlinear f(0)=0 functions";
    break;
  }
  return plan;
}

std::size_t incoming_sample_count(unsigned degree_bound) { return static_cast<std::size_t>(degree_bound) + 2; }

namespace {

std::string node_name(const NodeNamer& name, NodeId v) { return name ? name(v) : std::to_string(v); }

} // namespace

std::map<NodeId, Poly> identify_incoming(const ResponseOracle& oracle, const Graph& g, NodeId i,
                                         const NodeNamer& name) {
  if (oracle.target() != i)
    throw InvalidInput("oracle targets node " + std::to_string(oracle.target()) + ", not " + std::to_string(i));
  std::map<NodeId, Poly> out;
  const auto xs = sample_abscissae(incoming_sample_count(oracle.degree_bound()));
  for (NodeId j : g.in_neighbors(i)) {
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(xs.size());
    for (const auto& x : xs) {
      Assignment a;
      if (x != 0) a[{j, 2}] = x;
      points.emplace_back(x, oracle(a));
    }
    Poly f;
    try {
      f = interpolate(points, oracle.degree_bound());
    } catch (const InconsistentSamples& e) {
      throw InconsistentSamples("edge " + node_name(name, j) + "->" + node_name(name, i) + ": " + e.what());
    }
    if (f.is_zero())
      throw InconsistentSamples("node " + node_name(name, i) + " shows no dependence on its in-neighbor " +
                                node_name(name, j) + ", contradicting the known topology");
    out.emplace(j, std::move(f));
  }
  return out;
}

namespace {

Assignment delayed(const Assignment& y, int s) {
  Assignment out;
  for (const auto& [v, x] : y)
    if (x != 0) out.emplace_hint(out.end(), DelayedInput{v.node, v.delay + s}, x);
  return out;
}

} // namespace

ResponseOracle peel_upstream(const ResponseOracle& oracle, const Graph& g, NodeId i, NodeId j, const Poly& f_ij,
                             PeelMode mode) {
  if (oracle.target() != i)
    throw InvalidInput("oracle targets node " + std::to_string(oracle.target()) + ", not " + std::to_string(i));
  if (!g.has_edge(j, i)) throw InvalidInput("no edge " + std::to_string(j) + "->" + std::to_string(i));
  if (f_ij.is_zero()) throw InvalidInput("edge function must be nonzero");
  const unsigned d = *f_ij.degree();
  if (mode == PeelMode::DAG && d < 2)
    throw DegreeTooLow("edge " + std::to_string(j) + "->" + std::to_string(i) + " is " +
                       (d == 1 ? "linear" : "constant") +
                       ": with other branches adding an unknown constant, the argument shift of a linear "
                       "function cannot be separated from that constant");
  if (d == 0) throw DegreeTooLow("constant edge function carries no information upstream");

  auto memo = std::make_shared<std::map<Assignment, Rational>>();
  const DelayedInput probe{j, 2};
  auto evaluate = [oracle, f_ij, mode, d, memo, probe](const Assignment& y) -> Rational {
    Assignment base = delayed(y, 1);
    Assignment key = delayed(y, 0);
    if (auto it = memo->find(key); it != memo->end()) return it->second;

    Rational value;
    if (mode == PeelMode::Tree && d == 1) {
      // Other branches are silent, so oracle(0) = f(F_j(y)) = a0 + a1 * F_j(y).
      value = (oracle(base) - f_ij.coeff(0)) / f_ij.coeff(1);
    } else {
      std::vector<std::pair<Rational, Rational>> points;
      for (const auto& x : sample_abscissae(d + 1)) {
        Assignment a = base;
        if (x != 0) a[probe] = x;
        points.emplace_back(x, oracle(a));
      }
      Poly h = interpolate(points, d);
      value = mode == PeelMode::Tree ? recover_shift(f_ij, h) : recover_shift_modulo_constant(f_ij, h).shift;
    }
    memo->emplace(std::move(key), value);
    return value;
  };
  return ResponseOracle(j, std::move(evaluate), oracle.degree_bound());
}

namespace {

// Other in-neighbors of i receive no input from j's ancestors, so with only
// those inputs set they contribute f(0) = 0.
bool branches_disjoint(const Graph& g, NodeId i, NodeId j) {
  const auto anc_j = g.ancestors(j);
  for (NodeId l : g.in_neighbors(i)) {
    if (l == j) continue;
    for (NodeId a : g.ancestors(l))
      if (anc_j.count(a)) return false;
  }
  return true;
}

std::string edge_name(const NodeNamer& name, NodeId from, NodeId to) {
  return node_name(name, from) + "->" + node_name(name, to);
}

// Assignments over the ancestors' inputs of node m with sparse values in
// {-1, 0, 1}, for black-box cross-checks.
std::vector<Assignment> probe_assignments(const Graph& g, NodeId m, std::mt19937_64& rng, int count) {
  std::vector<DelayedInput> vars;
  const int max_delay = static_cast<int>(g.max_depth_to(m)) + 1;
  for (NodeId a : g.ancestors(m))
    for (int d = 2; d <= max_delay; ++d) vars.push_back({a, d});
  std::uniform_int_distribution<int> pick(-1, 1);
  std::vector<Assignment> out;
  for (int t = 0; t < count; ++t) {
    Assignment a;
    for (const auto& v : vars)
      if (int x = pick(rng); x != 0) a[v] = x;
    out.push_back(std::move(a));
  }
  return out;
}

IdentificationResult identify_general(const std::map<NodeId, ResponseOracle>& oracles, const Graph& g,
                                      unsigned degree_bound, std::map<Edge, Poly>& fns,
                                      std::vector<EdgeReport>& reports, const NodeNamer& name) {
  // Constant offsets only separate when every non-source node is measured
  // and has a single in-neighbor: f(x) = h(x - F_j(0)).
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto node = static_cast<NodeId>(v);
    const auto& in = g.in_neighbors(node);
    if (in.empty()) continue;
    if (!oracles.count(node))
      throw AmbiguityError("general functions: node " + node_name(name, node) +
                           " is not measured, so a constant gamma can move between its incoming and outgoing "
                           "edges without changing any measured response");
    if (in.size() > 1)
      throw AmbiguityError("general functions: node " + node_name(name, node) +
                           " has several in-neighbors and only the sum of their constant terms is determined");
  }
  const auto xs = sample_abscissae(incoming_sample_count(degree_bound));
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto node = static_cast<NodeId>(v);
    if (g.in_neighbors(node).empty()) continue;
    const NodeId j = *g.in_neighbors(node).begin();
    Rational offset = g.in_neighbors(j).empty() ? Rational(0) : oracles.at(j)(Assignment{});
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& x : xs) {
      Assignment a;
      if (x != 0) a[{j, 2}] = x;
      points.emplace_back(x, oracles.at(node)(a));
    }
    Poly f = shift_argument(interpolate(points, degree_bound), -offset);
    if (f.is_zero()) throw InconsistentSamples("edge " + edge_name(name, j, node) + " recovered as zero");
    fns.emplace(Edge{j, node}, f);
    reports.push_back({Edge{j, node}, f, node, std::nullopt});
  }
  return IdentificationResult{Network(g, fns), reports, 0, {}, false};
}

} // namespace

IdentificationResult identify_network(const std::map<NodeId, ResponseOracle>& oracles, const Graph& g,
                                      FunctionClass cls, unsigned degree_bound, std::uint64_t seed,
                                      const NodeNamer& name) {
  if (oracles.empty()) throw InvalidInput("no measured oracles given");
  std::size_t queries_before = 0;
  for (const auto& [node, o] : oracles) {
    if (!g.valid(node)) throw UnknownNode(node);
    if (o.target() != node)
      throw InvalidInput("oracle registered for node " + std::to_string(node) + " targets " +
                         std::to_string(o.target()));
    queries_before += o.queries();
  }
  for (NodeId s : g.sinks())
    if (!oracles.count(s) && !g.in_neighbors(s).empty())
      throw AmbiguityError("sink " + node_name(name, s) +
                           " is not measured; its incoming edges are invisible to every other node");

  std::map<Edge, Poly> fns;
  std::vector<EdgeReport> reports;
  std::optional<IdentificationResult> result;

  if (cls == FunctionClass::General) {
    result = identify_general(oracles, g, degree_bound, fns, reports, name);
  } else {
    const bool tree = cls == FunctionClass::FZ && g.is_forest();
    std::map<NodeId, ResponseOracle> known;
    std::map<NodeId, std::optional<PeelMode>> mode_of;
    std::deque<NodeId> work;
    for (const auto& [node, o] : oracles) {
      known.emplace(node, ResponseOracle(o.target(), [o](const Assignment& a) { return o(a); }, degree_bound));
      mode_of[node] = std::nullopt;
      work.push_back(node);
    }
    // Breadth first, so each node's oracle comes through the shortest chain
    // of peels and is built once even when reachable from several sinks.
    while (!work.empty()) {
      const NodeId i = work.front();
      work.pop_front();
      const ResponseOracle& oi = known.at(i);
      for (auto& [j, f] : identify_incoming(oi, g, i, name)) {
        reports.push_back({Edge{j, i}, f, i, mode_of[i]});
        fns.emplace(Edge{j, i}, f);
        if (known.count(j) || g.in_neighbors(j).empty()) continue;
        PeelMode mode;
        if (tree)
          mode = PeelMode::Tree;
        else if (*f.degree() >= 2)
          mode = PeelMode::DAG;
        else if (branches_disjoint(g, i, j))
          mode = PeelMode::Tree;
        else
          throw AmbiguityError("edge " + edge_name(name, j, i) + " is linear (" + f.to_string() +
                               ") and the branches into node " + node_name(name, i) +
                               " share ancestors: its argument shift cannot be separated from the other "
                               "branches' constant, so the upstream edges are not guaranteed identifiable");
        known.emplace(j, peel_upstream(oi, g, i, j, f, mode));
        mode_of[j] = mode;
        work.push_back(j);
      }
    }
    for (const auto& e : g.edges())
      if (!fns.count(e))
        throw UnreachedEdge("edge " + edge_name(name, e.from, e.to) + " lies on no path to a measured node");
    result = IdentificationResult{Network(g, fns), reports, 0, {}, false};
  }

  // Cross-check the recovered network against every measured oracle.
  std::mt19937_64 rng(seed);
  for (const auto& [m, o] : oracles) {
    MeasurementCheck check{m, false, 0, 0, false};
    if (o.expanded()) {
      try {
        check.ok = responses_equal(build_response(result->network, m, term_cap_from_env()), *o.expanded());
        check.canonical = true;
      } catch (const SizeLimitExceeded&) {
      }
    }
    if (!check.canonical) {
      const auto probes = probe_assignments(g, m, rng, 8);
      check.probes = probes.size();
      for (const auto& a : probes)
        if (evaluate_response(result->network, m, a) == o(a)) ++check.agreeing;
      check.ok = check.agreeing == check.probes;
    }
    result->checks.push_back(check);
  }
  std::size_t queries_after = 0;
  for (const auto& [node, o] : oracles) queries_after += o.queries();
  result->oracle_queries = queries_after - queries_before;
  result->verified = std::all_of(result->checks.begin(), result->checks.end(), [](const auto& c) { return c.ok; });
  return *result;
}

} // namespace netident

#include "netident/counterexamples.hpp"

#include "netident/error.hpp"
#include "netident/response.hpp"

#include <sstream>
#include <unordered_map>

namespace netident {

bool verify_witness(const AmbiguityWitness& w) {
  const Graph& ga = w.net_a.graph();
  const Graph& gb = w.net_b.graph();
  if (ga.node_count() != gb.node_count() || ga.edges() != gb.edges()) return false;
  if (w.differing_edges.empty()) return false;
  for (const auto& e : ga.edges()) {
    bool differs = w.net_a.edge_function(e.from, e.to) != w.net_b.edge_function(e.from, e.to);
    if (differs != (w.differing_edges.count(e) > 0)) return false;
  }
  for (NodeId m : w.measured)
    if (!responses_equal(build_response(w.net_a, m), build_response(w.net_b, m))) return false;
  return true;
}

AmbiguityWitness gauge_pair(const Network& path_net, NodeId i, const Rational& gamma) {
  const Graph& g = path_net.graph();
  if (!g.is_path()) throw InvalidInput("gauge construction needs a path graph");
  if (!g.valid(i)) throw UnknownNode(i);
  if (g.in_neighbors(i).empty() || g.out_neighbors(i).empty())
    throw InvalidInput("node " + std::to_string(i) + " is the source or the sink of the path");
  if (gamma == 0) throw InvalidInput("gamma must be nonzero");

  const NodeId up = *g.in_neighbors(i).begin();
  const NodeId down = *g.out_neighbors(i).begin();
  const Edge e_in{up, i}, e_out{i, down};
  Network b = path_net.with_edge_function(e_in, path_net.edge_function(up, i) + Poly::constant(gamma))
                  .with_edge_function(e_out, shift_argument(path_net.edge_function(i, down), -gamma));

  // Every node but i sees the same response: the offset added into i is
  // removed again before it leaves i.
  std::set<NodeId> measured;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (static_cast<NodeId>(v) != i) measured.insert(static_cast<NodeId>(v));
  AmbiguityWitness w{path_net, std::move(b), std::move(measured), {e_in, e_out}};
  if (!verify_witness(w)) throw Error("gauge witness failed verification");
  return w;
}

AmbiguityWitness unmeasured_sink_pair(const Network& net, NodeId sink) {
  const Graph& g = net.graph();
  if (!g.valid(sink)) throw UnknownNode(sink);
  if (!g.out_neighbors(sink).empty() || g.in_neighbors(sink).empty())
    throw InvalidInput("node " + std::to_string(sink) + " is not a sink with incoming edges");
  const Edge e{*g.in_neighbors(sink).begin(), sink};
  Network b = net.with_edge_function(e, net.edge_function(e.from, e.to) * Rational(2));
  std::set<NodeId> measured;
  for (std::size_t v = 0; v < g.node_count(); ++v)
    if (static_cast<NodeId>(v) != sink) measured.insert(static_cast<NodeId>(v));
  AmbiguityWitness w{net, std::move(b), std::move(measured), {e}};
  if (!verify_witness(w)) throw Error("unmeasured-sink witness failed verification");
  return w;
}

Graph bridge_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

Network bridge_network(const Poly& f21, const Poly& f31, const Poly& f42, const Poly& f43) {
  return Network(bridge_graph(), {{{0, 1}, f21}, {{0, 2}, f31}, {{1, 3}, f42}, {{2, 3}, f43}},
                 {"1", "2", "3", "4"});
}

AmbiguityWitness linear_bridge_pair(const Rational& alpha, const Rational& beta, const Rational& gamma_c,
                                    const Rational& delta) {
  if (alpha == 0 || gamma_c == 0) throw InvalidInput("alpha and gamma_c must be nonzero (edges carry nonzero functions)");
  if (beta == 0 || delta == 0) throw InvalidInput("beta and delta must be nonzero (edges carry nonzero functions)");
  auto lin = [](const Rational& c) { return Poly{Rational(0), c}; };
  // beta' = beta + t gamma_c, delta' = delta - t alpha keeps alpha beta + gamma_c delta;
  // take the first t in 1, -1, 2, -2, ... that leaves both edges nonzero.
  for (long k = 1;; ++k)
    for (long sign : {1L, -1L}) {
      Rational t(sign * k);
      Rational beta2 = beta + t * gamma_c;
      Rational delta2 = delta - t * alpha;
      if (beta2 == 0 || delta2 == 0) continue;
      AmbiguityWitness w{bridge_network(lin(beta), lin(delta), lin(alpha), lin(gamma_c)),
                         bridge_network(lin(beta2), lin(delta2), lin(alpha), lin(gamma_c)),
                         {3},
                         {{0, 1}, {0, 2}}};
      if (!verify_witness(w)) throw Error("linear bridge witness failed verification");
      return w;
    }
}

BridgeSweepResult bridge_sweep(int bound, bool nonlinear_only) {
  std::vector<Poly> fns;
  for (int a1 = -bound; a1 <= bound; ++a1)
    for (int a2 = -bound; a2 <= bound; ++a2) {
      if (a2 == 0 && (nonlinear_only || a1 == 0)) continue;
      fns.push_back(Poly{Rational(0), Rational(a1), Rational(a2)});
    }
  // The sink response splits into the two branches,
  //   f42(u2[k-2] + f21(u1[k-3])) + f43(u3[k-2] + f31(u1[k-3])),
  // so each branch is expanded once per (upstream, downstream) pair.
  const MPoly u1 = MPoly::variable({0, 3});
  auto branch = [&](NodeId mid) {
    std::vector<MPoly> out;
    for (const auto& up : fns)
      for (const auto& down : fns) out.push_back(compose(down, MPoly::variable({mid, 2}) + compose(up, u1)));
    return out;
  };
  const auto via2 = branch(1);
  const auto via3 = branch(2);

  std::unordered_map<std::string, std::size_t> classes;
  for (const auto& a : via2)
    for (const auto& b : via3) ++classes[(a + b).to_string()];

  BridgeSweepResult r;
  r.networks = via2.size() * via3.size();
  for (const auto& [key, count] : classes)
    if (count > 1) {
      ++r.collision_classes;
      r.colliding_networks += count;
    }
  return r;
}

std::string describe_difference(const Network& a, const Network& b) {
  std::ostringstream os;
  for (const auto& e : a.graph().edges()) {
    const Poly& fa = a.edge_function(e.from, e.to);
    const Poly& fb = b.edge_function(e.from, e.to);
    os << "edge " << a.label(e.from) << "->" << a.label(e.to) << ": " << fa.to_string();
    if (fa == fb)
      os << " (same)\n";
    else
      os << "  vs  " << fb.to_string() << "  (differs)\n";
  }
  return os.str();
}

} // namespace netident

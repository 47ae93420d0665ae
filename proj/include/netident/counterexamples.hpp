#ifndef NETIDENT_COUNTEREXAMPLES_HPP
#define NETIDENT_COUNTEREXAMPLES_HPP

#include "netident/network.hpp"

#include <set>
#include <string>

namespace netident {

// Two networks on the same graph that differ on `differing_edges` yet have
// canonically equal responses at every node in `measured`.
struct AmbiguityWitness {
  Network net_a;
  Network net_b;
  std::set<NodeId> measured;
  std::set<Edge> differing_edges;
};

// Re-derives the witness property from scratch with build_response and
// responses_equal.
bool verify_witness(const AmbiguityWitness& w);

// Gauge ambiguity on a path: f_{i,i-1} + gamma upstream of interior node i,
// f_{i+1,i}(x - gamma) downstream. Only the sink is measured. Throws
// InvalidInput when the graph is not a path, i is the source or the sink,
// or gamma is zero. The returned witness has been verified.
AmbiguityWitness gauge_pair(const Network& path_net, NodeId i, const Rational& gamma);

// Leaving a sink unmeasured: doubling one of its incoming edge functions
// changes no other node's response. Measured = every node except `sink`.
// Throws InvalidInput when `sink` is not a sink with an incoming edge.
AmbiguityWitness unmeasured_sink_pair(const Network& net, NodeId sink);

// Node ids of the bridge graph 1 -> {2, 3} -> 4 (0-based: 0 -> {1, 2} -> 3).
Graph bridge_graph();
Network bridge_network(const Poly& f21, const Poly& f31, const Poly& f42, const Poly& f43);

// Linear bridge f21 = beta x, f31 = delta x, f42 = alpha x, f43 = gamma_c x
// and the re-parameterization beta' = beta + gamma_c, delta' = delta - alpha
// which leaves the sink response unchanged. Throws InvalidInput when alpha
// or gamma_c is zero, or when either network would carry a zero edge.
AmbiguityWitness linear_bridge_pair(const Rational& alpha, const Rational& beta, const Rational& gamma_c,
                                    const Rational& delta);

struct BridgeSweepResult {
  std::size_t networks = 0;
  // Distinct networks sharing a sink response with another one.
  std::size_t colliding_networks = 0;
  // Classes of size > 1 among the sink responses.
  std::size_t collision_classes = 0;
};

// Exhaustive sweep over bridge networks whose edges are a1 x + a2 x^2 with
// coefficients in [-bound, bound]; `nonlinear_only` forces a2 != 0.
BridgeSweepResult bridge_sweep(int bound, bool nonlinear_only);

// Readable per-edge comparison of two networks on the same graph.
std::string describe_difference(const Network& a, const Network& b);

} // namespace netident

#endif

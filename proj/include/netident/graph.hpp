#ifndef NETIDENT_GRAPH_HPP
#define NETIDENT_GRAPH_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace netident {

using NodeId = int;

// Directed edge from -> to. In the network model the function on this edge
// maps the output of `from` into the input sum of `to`.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed acyclic graph over dense node ids 0..n-1.
//
// Construction validates the invariants (no self-loops, no duplicate edges,
// acyclicity) so every Graph value is a DAG. Immutable afterwards.
class Graph {
public:
  // Throws InvalidInput for bad ids, self-loops or duplicates, and
  // CycleError if the edge set contains a cycle.
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(NodeId from, NodeId to) const;
  bool valid(NodeId i) const { return i >= 0 && static_cast<std::size_t>(i) < node_count_; }

  const std::set<NodeId>& in_neighbors(NodeId i) const;
  const std::set<NodeId>& out_neighbors(NodeId i) const;

  std::set<NodeId> sources() const;
  std::set<NodeId> sinks() const;

  // All j != i with a directed path j -> ... -> i.
  std::set<NodeId> ancestors(NodeId i) const;
  std::set<NodeId> descendants(NodeId i) const;

  // Every edge goes from an earlier to a later position.
  const std::vector<NodeId>& topological_order() const { return topo_; }

  // Length (in edges) of the longest directed path ending at i.
  std::size_t max_depth_to(NodeId i) const;

  // Underlying undirected graph is a forest (a polytree per component).
  bool is_forest() const;
  // Connected and every node has in- and out-degree at most one.
  bool is_path() const;

private:
  void check(NodeId i) const;

  std::size_t node_count_;
  std::vector<Edge> edges_;
  std::vector<std::set<NodeId>> in_;
  std::vector<std::set<NodeId>> out_;
  std::vector<NodeId> topo_;
  std::vector<std::size_t> depth_;
};

// Kahn's algorithm; throws CycleError with one cycle when none exists.
std::vector<NodeId> topological_sort(std::size_t node_count, const std::vector<Edge>& edges);

} // namespace netident

#endif

#ifndef NETIDENT_NETWORK_HPP
#define NETIDENT_NETWORK_HPP

#include "netident/graph.hpp"
#include "netident/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace netident {

// A DAG together with one nonzero polynomial per edge. Optional node labels
// are carried along for file round-trips and reports.
class Network {
public:
  // Throws InvalidInput when the keys differ from the graph's edge set or an
  // edge function is the zero polynomial.
  Network(Graph graph, std::map<Edge, Poly> edge_fn, std::vector<std::string> labels = {});

  const Graph& graph() const { return graph_; }
  const std::map<Edge, Poly>& edge_functions() const { return edge_fn_; }
  const Poly& edge_function(NodeId from, NodeId to) const;

  // labels()[i] names node i; defaults to the decimal id.
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId i) const { return labels_.at(static_cast<std::size_t>(i)); }

  // Most specific class containing every edge function.
  FunctionClass function_class() const;
  unsigned max_edge_degree() const;

  // Same topology and labels with one edge function swapped out.
  Network with_edge_function(Edge e, Poly f) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.graph_.edges() == b.graph_.edges() && a.graph_.node_count() == b.graph_.node_count() &&
           a.edge_fn_ == b.edge_fn_;
  }

private:
  Graph graph_;
  std::map<Edge, Poly> edge_fn_;
  std::vector<std::string> labels_;
};

} // namespace netident

#endif

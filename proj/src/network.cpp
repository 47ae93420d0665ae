#include "netident/network.hpp"

#include "netident/error.hpp"

#include <algorithm>

namespace netident {

Network::Network(Graph graph, std::map<Edge, Poly> edge_fn, std::vector<std::string> labels)
    : graph_(std::move(graph)), edge_fn_(std::move(edge_fn)), labels_(std::move(labels)) {
  if (edge_fn_.size() != graph_.edges().size())
    throw InvalidInput("network has " + std::to_string(edge_fn_.size()) + " edge functions for " +
                       std::to_string(graph_.edges().size()) + " edges");
  for (const auto& e : graph_.edges()) {
    auto it = edge_fn_.find(e);
    if (it == edge_fn_.end())
      throw InvalidInput("missing function for edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
    if (it->second.is_zero())
      throw InvalidInput("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                         " carries the zero function");
  }
  if (labels_.empty()) {
    for (std::size_t v = 0; v < graph_.node_count(); ++v) labels_.push_back(std::to_string(v));
  } else if (labels_.size() != graph_.node_count()) {
    throw InvalidInput("expected " + std::to_string(graph_.node_count()) + " node labels");
  }
}

const Poly& Network::edge_function(NodeId from, NodeId to) const {
  auto it = edge_fn_.find(Edge{from, to});
  if (it == edge_fn_.end())
    throw InvalidInput("no edge " + std::to_string(from) + "->" + std::to_string(to));
  return it->second;
}

FunctionClass Network::function_class() const {
  FunctionClass cls = FunctionClass::FZNL;
  for (const auto& [e, f] : edge_fn_) {
    FunctionClass c = classify(f).tightest();
    if (static_cast<int>(c) < static_cast<int>(cls)) cls = c;
  }
  return cls;
}

unsigned Network::max_edge_degree() const {
  unsigned d = 0;
  for (const auto& [e, f] : edge_fn_) d = std::max(d, *f.degree());
  return d;
}

Network Network::with_edge_function(Edge e, Poly f) const {
  auto fns = edge_fn_;
  auto it = fns.find(e);
  if (it == fns.end()) throw InvalidInput("no edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
  it->second = std::move(f);
  return Network(graph_, std::move(fns), labels_);
}

} // namespace netident

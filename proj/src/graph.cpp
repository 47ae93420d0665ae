#include "netident/graph.hpp"

#include "netident/error.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace netident {

namespace {

std::string cycle_message(const std::vector<int>& cycle) {
  std::ostringstream os;
  os << "graph contains a cycle:";
  for (std::size_t k = 0; k < cycle.size(); ++k) os << (k ? " -> " : " ") << cycle[k];
  return os.str();
}

// Nodes left over by Kahn's algorithm all have an unprocessed in-edge from
// another leftover node; walking backwards along those edges must revisit a
// node, which closes a cycle.
std::vector<int> find_cycle(std::size_t n, const std::vector<Edge>& edges, const std::vector<bool>& done) {
  std::vector<int> pred(n, -1);
  for (const auto& e : edges)
    if (!done[e.from] && !done[e.to]) pred[e.to] = e.from;
  int start = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (!done[v]) {
      start = static_cast<int>(v);
      break;
    }
  std::vector<int> pos(n, -1);
  std::vector<int> walk;
  int v = start;
  while (pos[v] < 0) {
    pos[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = pred[v];
  }
  std::vector<int> cycle(walk.begin() + pos[v], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  cycle.push_back(cycle.front());
  return cycle;
}

} // namespace

CycleError::CycleError(std::vector<int> cycle) : Error(cycle_message(cycle)), cycle_(std::move(cycle)) {}

std::vector<NodeId> topological_sort(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<NodeId>> out(n);
  for (const auto& e : edges) {
    ++indeg[e.to];
    out[e.from].push_back(e.to);
  }
  std::deque<NodeId> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(static_cast<NodeId>(v));
  std::vector<NodeId> order;
  order.reserve(n);
  std::vector<bool> done(n, false);
  while (!ready.empty()) {
    NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    done[v] = true;
    for (NodeId w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) throw CycleError(find_cycle(n, edges, done));
  return order;
}

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)), in_(node_count), out_(node_count) {
  if (node_count_ == 0) throw InvalidInput("graph needs at least one node");
  for (const auto& e : edges_) {
    if (!valid(e.from) || !valid(e.to))
      throw InvalidInput("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " uses an unknown node");
    if (e.from == e.to) throw InvalidInput("self-loop on node " + std::to_string(e.from));
    if (!out_[e.from].insert(e.to).second)
      throw InvalidInput("duplicate edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
    in_[e.to].insert(e.from);
  }
  std::sort(edges_.begin(), edges_.end());
  topo_ = topological_sort(node_count_, edges_);
  depth_.assign(node_count_, 0);
  for (NodeId v : topo_)
    for (NodeId w : out_[v]) depth_[w] = std::max(depth_[w], depth_[v] + 1);
}

void Graph::check(NodeId i) const {
  if (!valid(i)) throw UnknownNode(i);
}

bool Graph::has_edge(NodeId from, NodeId to) const {
  return valid(from) && valid(to) && out_[from].count(to) > 0;
}

const std::set<NodeId>& Graph::in_neighbors(NodeId i) const {
  check(i);
  return in_[i];
}

const std::set<NodeId>& Graph::out_neighbors(NodeId i) const {
  check(i);
  return out_[i];
}

std::set<NodeId> Graph::sources() const {
  std::set<NodeId> s;
  for (std::size_t v = 0; v < node_count_; ++v)
    if (in_[v].empty()) s.insert(static_cast<NodeId>(v));
  return s;
}

std::set<NodeId> Graph::sinks() const {
  std::set<NodeId> s;
  for (std::size_t v = 0; v < node_count_; ++v)
    if (out_[v].empty()) s.insert(static_cast<NodeId>(v));
  return s;
}

namespace {

std::set<NodeId> reach(const std::vector<std::set<NodeId>>& adj, NodeId start) {
  std::set<NodeId> seen;
  std::vector<NodeId> stack(adj[start].begin(), adj[start].end());
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    stack.insert(stack.end(), adj[v].begin(), adj[v].end());
  }
  return seen;
}

} // namespace

std::set<NodeId> Graph::ancestors(NodeId i) const {
  check(i);
  return reach(in_, i);
}

std::set<NodeId> Graph::descendants(NodeId i) const {
  check(i);
  return reach(out_, i);
}

std::size_t Graph::max_depth_to(NodeId i) const {
  check(i);
  return depth_[i];
}

bool Graph::is_forest() const {
  // Union-find on the undirected edges: a repeated component means a cycle.
  std::vector<std::size_t> parent(node_count_);
  for (std::size_t v = 0; v < node_count_; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges_) {
    auto a = find(e.from), b = find(e.to);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool Graph::is_path() const {
  if (edges_.size() + 1 != node_count_) return false;
  for (std::size_t v = 0; v < node_count_; ++v)
    if (in_[v].size() > 1 || out_[v].size() > 1) return false;
  return is_forest();
}

} // namespace netident

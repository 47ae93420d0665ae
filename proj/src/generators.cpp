#include "netident/generators.hpp"

#include "netident/error.hpp"

#include <algorithm>
#include <numeric>

namespace netident {

Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound), den(1, den_bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Poly random_poly(std::mt19937_64& rng, const PolySpec& spec) {
  unsigned lo = std::max(spec.min_degree, spec.nonlinear ? 2u : (spec.zero_constant ? 1u : 0u));
  unsigned hi = std::max(lo, spec.max_degree);
  std::uniform_int_distribution<unsigned> deg(lo, hi);
  std::uniform_int_distribution<int> coef(-spec.coef_bound, spec.coef_bound);
  std::uniform_int_distribution<int> nonzero(1, 2 * spec.coef_bound);
  const unsigned d = deg(rng);
  std::vector<Rational> c(d + 1);
  for (unsigned n = 0; n < d; ++n) c[n] = coef(rng);
  // Leading coefficient drawn from the nonzero values.
  int lead = nonzero(rng);
  c[d] = lead <= spec.coef_bound ? lead : spec.coef_bound - lead;
  if (spec.zero_constant) c[0] = 0;
  if (d == 0 && c[0] == 0) c[0] = 1;
  return Poly(std::move(c));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(v + 1)});
  return Graph(n, std::move(edges));
}

Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  std::bernoulli_distribution flip(0.5);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    auto p = static_cast<NodeId>(parent(rng));
    auto c = static_cast<NodeId>(v);
    edges.push_back(flip(rng) ? Edge{p, c} : Edge{c, p});
  }
  return Graph(n, std::move(edges));
}

Graph random_dag(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  // Edges point from earlier to later positions of a random order.
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Edge> edges;
  for (std::size_t pos = 1; pos < n && edges.size() < max_edges; ++pos) {
    std::uniform_int_distribution<std::size_t> earlier(0, pos - 1);
    edges.insert({order[earlier(rng)], order[pos]});
  }
  const std::size_t possible = n * (n - 1) / 2;
  const std::size_t cap = std::min(max_edges, possible);
  if (edges.size() < cap) {
    std::uniform_int_distribution<std::size_t> total(edges.size(), cap);
    const std::size_t target = total(rng);
    std::uniform_int_distribution<std::size_t> pos(0, n - 1);
    while (edges.size() < target) {
      std::size_t a = pos(rng), b = pos(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      edges.insert({order[a], order[b]});
    }
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Network random_network(std::mt19937_64& rng, const Graph& g, const PolySpec& spec) {
  std::map<Edge, Poly> fns;
  for (const auto& e : g.edges()) fns.emplace(e, random_poly(rng, spec));
  return Network(g, std::move(fns));
}

} // namespace netident

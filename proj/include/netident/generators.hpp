#ifndef NETIDENT_GENERATORS_HPP
#define NETIDENT_GENERATORS_HPP

#include "netident/network.hpp"

#include <random>

namespace netident {

// Seeded random instances used by the CLI self-checks and the test suites.
// All draws go through the given engine so results are reproducible.

// Coefficients are small integers in [-coef_bound, coef_bound].
struct PolySpec {
  unsigned min_degree = 1;
  unsigned max_degree = 3;
  int coef_bound = 2;
  // Constant term forced to zero (class F_Z).
  bool zero_constant = true;
  // At least one coefficient above degree 1 nonzero (class F_{Z,NL}).
  bool nonlinear = false;
};

Poly random_poly(std::mt19937_64& rng, const PolySpec& spec);

// Random rational with numerator in [-num_bound, num_bound] and denominator
// in [1, den_bound].
Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound);

// Path 0 -> 1 -> ... -> n-1.
Graph path_graph(std::size_t n);

// Random oriented tree: node k attaches to a uniform earlier node, each edge
// oriented at random.
Graph random_tree(std::mt19937_64& rng, std::size_t n);

// Random DAG on n nodes with at most max_edges edges between nodes in a
// random order. Every node ends up on some edge when n > 1.
Graph random_dag(std::mt19937_64& rng, std::size_t n, std::size_t max_edges);

Network random_network(std::mt19937_64& rng, const Graph& g, const PolySpec& spec);

} // namespace netident

#endif

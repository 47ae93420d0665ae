#include "netident/counterexamples.hpp"
#include "netident/error.hpp"
#include "netident/generators.hpp"
#include "netident/lemma_checks.hpp"
#include "netident/response.hpp"

#include "oracle_sim.hpp"

#include <gtest/gtest.h>

using namespace netident;

namespace {

MPoly var(NodeId j, int d) { return MPoly::variable({j, d}); }

// Independent equality check: the two networks answer the same at many points.
bool same_by_simulation(const Network& a, const Network& b, NodeId m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 30; ++t) {
    auto x = testing_oracle::random_assignment(a.graph(), m, rng);
    if (testing_oracle::response_by_simulation(a, m, x) != testing_oracle::response_by_simulation(b, m, x)) return false;
  }
  return true;
}

} // namespace

TEST(Gauge, SquareThenCubePath) {
  Network base(path_graph(3), {{{0, 1}, Poly::monomial(1, 2)}, {{1, 2}, Poly::monomial(1, 3)}});
  auto w = gauge_pair(base, 1, 1);
  EXPECT_TRUE(verify_witness(w));
  EXPECT_EQ(w.net_b.edge_function(0, 1), (Poly{1, 0, 1}));
  EXPECT_EQ(w.net_b.edge_function(1, 2), (Poly{-1, 3, -3, 1}));
  EXPECT_EQ(build_response(w.net_a, 2), build_response(w.net_b, 2));
  EXPECT_TRUE(same_by_simulation(w.net_a, w.net_b, 2, 1));
  EXPECT_FALSE(classify(w.net_b.edge_function(0, 1)).in_fz);
  EXPECT_THROW(gauge_pair(base, 1, 0), InvalidInput);
  EXPECT_THROW(gauge_pair(base, 0, 1), InvalidInput);
  EXPECT_THROW(gauge_pair(bridge_network(Poly{0, 1}, Poly{0, 1}, Poly{0, 1}, Poly{0, 1}), 1, 1), InvalidInput);
}

TEST(Gauge, SweepOnRandomPaths) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<std::size_t> size(3, 4);
    const Graph g = path_graph(size(rng));
    Network net = random_network(rng, g, PolySpec{3, 3, 2, true, true});
    std::uniform_int_distribution<NodeId> node(1, static_cast<NodeId>(g.node_count()) - 2);
    for (Rational gamma : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(3)}) {
      auto w = gauge_pair(net, node(rng), gamma);
      EXPECT_TRUE(verify_witness(w));
      const NodeId sink = *g.sinks().begin();
      EXPECT_TRUE(same_by_simulation(w.net_a, w.net_b, sink, static_cast<std::uint64_t>(t)));
    }
  }
}

TEST(LinearBridge, Witness) {
  auto w = linear_bridge_pair(1, 1, 1, 1);
  EXPECT_TRUE(verify_witness(w));
  const MPoly F4 = var(1, 2) + var(2, 2) + var(0, 3) * Rational(2);
  EXPECT_EQ(build_response(w.net_a, 3), F4);
  EXPECT_EQ(build_response(w.net_b, 3), F4);
  EXPECT_NE(w.net_a.edge_function(0, 1), w.net_b.edge_function(0, 1));
  EXPECT_TRUE(same_by_simulation(w.net_a, w.net_b, 3, 2));
  EXPECT_THROW(linear_bridge_pair(0, 1, 1, 1), InvalidInput);
  // a generic parameterization follows the first candidate shift
  auto w2 = linear_bridge_pair(2, 3, Rational(1, 2), -1);
  EXPECT_TRUE(verify_witness(w2));
  EXPECT_EQ(w2.net_b.edge_function(0, 1), (Poly{0, Rational(7, 2)}));
  EXPECT_EQ(w2.net_b.edge_function(0, 2), (Poly{0, -3}));
}

TEST(LinearBridge, SweepFindsNoNonlinearCollision) {
  auto r = bridge_sweep(2, true);
  EXPECT_EQ(r.networks, 20u * 20u * 20u * 20u);
  EXPECT_EQ(r.colliding_networks, 0u);
}

TEST(LinearBridge, SweepSeesLinearCollisions) {
  auto r = bridge_sweep(1, false);
  EXPECT_GT(r.collision_classes, 0u);
}

TEST(Witness, RejectsNonWitness) {
  Network a(path_graph(2), {{{0, 1}, Poly{0, 1}}});
  Network b(path_graph(2), {{{0, 1}, Poly{0, 2}}});
  EXPECT_FALSE(verify_witness({a, b, {1}, {{0, 1}}}));
  EXPECT_FALSE(verify_witness({a, a, {1}, {}}));
  EXPECT_TRUE(verify_witness({a, b, {0}, {{0, 1}}}));
}

TEST(PropertySuites, SumDecomposition) {
  auto t = check_sum_decomposition(3, 200);
  EXPECT_EQ(t.passed, t.instances);
  EXPECT_GT(t.antecedent_held, 0u);
  auto c = linear_sum_counterexample();
  EXPECT_EQ(sum_of_shifted(c.f, c.g), sum_of_shifted(c.f, c.g_tilde));
  EXPECT_NE(c.g, c.g_tilde);
}

TEST(PropertySuites, ShiftUniquenessAndPeriodicity) {
  EXPECT_TRUE(check_shift_uniqueness(4, 200).ok());
  EXPECT_TRUE(check_periodicity(5, 200).ok());
}

TEST(PropertySuites, SumOfShiftedByHand) {
  // x0 + y0 squared plus x1 + 2 y0 squared
  const Poly sq = Poly::monomial(1, 2);
  const MPoly y = MPoly::variable({100, 1});
  const MPoly s = sum_of_shifted({sq, sq}, {y, y * Rational(2)});
  const MPoly x0 = MPoly::variable({0, 1}), x1 = MPoly::variable({1, 1});
  EXPECT_EQ(s, x0 * x0 + x0 * y * Rational(2) + x1 * x1 + x1 * y * Rational(4) + y * y * Rational(5));
}

#include "netident/counterexamples.hpp"
#include "netident/error.hpp"
#include "netident/generators.hpp"
#include "netident/identify.hpp"
#include "netident/response.hpp"

#include "oracle_sim.hpp"

#include <gtest/gtest.h>

using namespace netident;

namespace {

std::map<NodeId, ResponseOracle> oracles_for(const std::shared_ptr<const Network>& net, const std::set<NodeId>& nodes,
                                             unsigned bound) {
  std::map<NodeId, ResponseOracle> out;
  for (NodeId m : nodes) out.emplace(m, ResponseOracle::from_network(net, m, bound));
  return out;
}

std::shared_ptr<const Network> bridge(const Poly& f) { return std::make_shared<const Network>(bridge_network(f, f, f, f)); }

} // namespace

TEST(Plan, Examples) {
  const Graph p = path_graph(3);
  auto plan = measurement_plan(p, FunctionClass::General);
  EXPECT_EQ(plan.required, (std::set<NodeId>{1, 2}));
  EXPECT_EQ(plan.sufficient, Sufficiency::Yes);
  plan = measurement_plan(p, FunctionClass::FZ);
  EXPECT_EQ(plan.required, std::set<NodeId>{2});
  EXPECT_EQ(plan.sufficient, Sufficiency::Yes);
  plan = measurement_plan(bridge_graph(), FunctionClass::FZNL);
  EXPECT_EQ(plan.required, std::set<NodeId>{3});
  EXPECT_EQ(plan.sufficient, Sufficiency::Yes);
  EXPECT_EQ(measurement_plan(bridge_graph(), FunctionClass::FZ).sufficient, Sufficiency::Unknown);
  EXPECT_EQ(measurement_plan(bridge_graph(), FunctionClass::General).sufficient, Sufficiency::Unknown);
}

TEST(Identify, IncomingTriangle) {
  auto net = std::make_shared<const Network>(
      Graph(3, {{0, 1}, {1, 2}, {0, 2}}),
      std::map<Edge, Poly>{{{0, 1}, Poly::monomial(1, 2)}, {{1, 2}, Poly{0, 1}}, {{0, 2}, Poly{0, 1}}});
  auto o = ResponseOracle::from_network(net, 2, 3);
  auto got = identify_incoming(o, net->graph(), 2);
  EXPECT_EQ(got.at(0), (Poly{0, 1}));
  EXPECT_EQ(got.at(1), (Poly{0, 1}));
  EXPECT_EQ(o.queries(), 2 * incoming_sample_count(3));
  EXPECT_THROW(identify_incoming(o, net->graph(), 1), InvalidInput);
}

TEST(Identify, IncomingBoundTooSmall) {
  auto net = std::make_shared<const Network>(path_graph(2), std::map<Edge, Poly>{{{0, 1}, Poly{0, 1, 0, 1}}});
  EXPECT_THROW(identify_incoming(ResponseOracle::from_network(net, 1, 2), net->graph(), 1), InconsistentSamples);
  EXPECT_EQ(identify_incoming(ResponseOracle::from_network(net, 1, 3), net->graph(), 1).at(0), (Poly{0, 1, 0, 1}));
}

TEST(Identify, PeelPath) {
  auto net = std::make_shared<const Network>(
      path_graph(3), std::map<Edge, Poly>{{{0, 1}, Poly::monomial(1, 2)}, {{1, 2}, Poly{0, 1, 0, 1}}});
  auto o = ResponseOracle::from_network(net, 2, 3);
  auto v = peel_upstream(o, net->graph(), 2, 1, Poly{0, 1, 0, 1}, PeelMode::Tree);
  EXPECT_EQ(v.target(), 1);
  EXPECT_EQ(v({{{0, 2}, 2}}), 4);
  EXPECT_EQ(v({{{0, 2}, 2}}), build_response(*net, 1).terms().empty() ? 0 : eval_response(build_response(*net, 1), {{{0, 2}, 2}}));
}

TEST(Identify, PeelBridgeIgnoresOtherBranch) {
  auto net = bridge(Poly::monomial(1, 2));
  auto o = ResponseOracle::from_network(net, 3, 2);
  auto v = peel_upstream(o, net->graph(), 3, 1, Poly::monomial(1, 2), PeelMode::DAG);
  EXPECT_EQ(v({{{0, 2}, 1}}), 1);
  // Tree mode assumes the other branch is silent, which it is not here.
  auto t = peel_upstream(o, net->graph(), 3, 1, Poly::monomial(1, 2), PeelMode::Tree);
  EXPECT_THROW(t({{{0, 2}, 1}}), NotAShift);
}

TEST(Identify, PeelLinearInDagMode) {
  auto net = std::make_shared<const Network>(
      bridge_network(Poly::monomial(1, 2), Poly::monomial(1, 2), Poly{0, 3}, Poly::monomial(1, 2)));
  auto o = ResponseOracle::from_network(net, 3, 2);
  EXPECT_THROW(peel_upstream(o, net->graph(), 3, 1, Poly{0, 3}, PeelMode::DAG), DegreeTooLow);
}

TEST(Identify, BridgeRoundTrip) {
  auto net = bridge(Poly{0, 1, 1});
  auto r = identify_network(oracles_for(net, {3}, 2), net->graph(), FunctionClass::FZNL, 2);
  EXPECT_EQ(r.network, *net);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.edges.size(), 4u);
  EXPECT_GT(r.oracle_queries, 0u);
}

TEST(Identify, CanonicalCrossCheck) {
  auto net = bridge(Poly{0, 1, 1});
  std::map<NodeId, ResponseOracle> oracles;
  oracles.emplace(3, ResponseOracle::from_mpoly(3, build_response(*net, 3), 2));
  auto r = identify_network(oracles, net->graph(), FunctionClass::FZNL, 2);
  EXPECT_EQ(r.network, *net);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_TRUE(r.checks[0].canonical);
  EXPECT_TRUE(r.checks[0].ok);
}

TEST(Identify, LinearBridgeIsAmbiguous) {
  auto net = bridge(Poly{0, 1});
  EXPECT_THROW(identify_network(oracles_for(net, {3}, 1), net->graph(), FunctionClass::FZ, 1), AmbiguityError);
}

TEST(Identify, TreeWithLinearEdges) {
  // 0 -> 2 <- 1, 2 -> 3 with linear and nonlinear edges
  auto net = std::make_shared<const Network>(
      Graph(4, {{0, 2}, {1, 2}, {2, 3}}),
      std::map<Edge, Poly>{{{0, 2}, Poly{0, 2}}, {{1, 2}, Poly{0, 0, -1}}, {{2, 3}, Poly{0, Rational(1, 2)}}});
  auto r = identify_network(oracles_for(net, {3}, 2), net->graph(), FunctionClass::FZ, 2);
  EXPECT_EQ(r.network, *net);
}

TEST(Identify, GeneralPathNeedsInteriorNodes) {
  Network base(path_graph(3), {{{0, 1}, Poly::monomial(1, 2)}, {{1, 2}, Poly::monomial(1, 3)}});
  auto w = gauge_pair(base, 1, 1);
  auto a = std::make_shared<const Network>(w.net_a), b = std::make_shared<const Network>(w.net_b);
  EXPECT_THROW(identify_network(oracles_for(b, {2}, 3), b->graph(), FunctionClass::General, 3), AmbiguityError);
  // Both truths answer every sink query identically.
  auto oa = ResponseOracle::from_network(a, 2, 3), ob = ResponseOracle::from_network(b, 2, 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto x = testing_oracle::random_assignment(a->graph(), 2, rng);
    EXPECT_EQ(oa(x), ob(x));
  }
  // With every non-source measured the gauged network is recovered.
  auto r = identify_network(oracles_for(b, {1, 2}, 3), b->graph(), FunctionClass::General, 3);
  EXPECT_EQ(r.network, *b);
}

TEST(Identify, UnmeasuredSink) {
  auto net = std::make_shared<const Network>(Graph(3, {{0, 1}, {0, 2}}),
                                             std::map<Edge, Poly>{{{0, 1}, Poly{0, 0, 1}}, {{0, 2}, Poly{0, 0, 1}}});
  EXPECT_THROW(identify_network(oracles_for(net, {1}, 2), net->graph(), FunctionClass::FZNL, 2), AmbiguityError);
  auto w = unmeasured_sink_pair(*net, 2);
  EXPECT_TRUE(verify_witness(w));
}

TEST(Identify, VirtualOracleAgreesWithResponse) {
  std::mt19937_64 rng(41);
  PolySpec spec{2, 3, 2, true, true};
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_dag(rng, 6, 9);
    auto net = std::make_shared<const Network>(random_network(rng, g, spec));
    for (const auto& e : g.edges()) {
      if (g.in_neighbors(e.from).empty()) continue;
      auto o = ResponseOracle::from_network(net, e.to, 3);
      auto v = peel_upstream(o, g, e.to, e.from, net->edge_function(e.from, e.to), PeelMode::DAG);
      const MPoly F = build_response(*net, e.from);
      for (int s = 0; s < 50; ++s) {
        const auto a = testing_oracle::random_assignment(g, e.from, rng);
        ASSERT_EQ(v(a), eval_response(F, a));
      }
    }
  }
}

TEST(IdentifyProperty, RandomFznlDags) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> size(2, 8);
    const Graph g = random_dag(rng, size(rng), 12);
    auto net = std::make_shared<const Network>(random_network(rng, g, PolySpec{2, 3, 2, true, true}));
    auto r = identify_network(oracles_for(net, g.sinks(), 3), g, FunctionClass::FZNL, 3, 7);
    EXPECT_EQ(r.network, *net);
    EXPECT_TRUE(r.verified);
  }
}

#ifndef NETIDENT_IDENTIFY_HPP
#define NETIDENT_IDENTIFY_HPP

#include "netident/mpoly.hpp"
#include "netident/network.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace netident {

// Black-box access to the response function F_target of one node: a real
// measurement (perfectly identified input/output relation) or a virtual one
// synthesized by peeling identified edges off another oracle.
class ResponseOracle {
public:
  using Evaluator = std::function<Rational(const Assignment&)>;

  ResponseOracle(NodeId target, Evaluator evaluate, unsigned degree_bound);

  NodeId target() const { return target_; }
  unsigned degree_bound() const { return degree_bound_; }

  Rational operator()(const Assignment& a) const;

  // Evaluations answered by this oracle so far (copies share the counter).
  std::size_t queries() const { return *queries_; }

  // Canonical form backing the oracle, when it was built from one.
  const std::optional<MPoly>& expanded() const { return expanded_; }

  static ResponseOracle from_mpoly(NodeId target, MPoly F, unsigned degree_bound);
  // Hidden ground truth evaluated through the network recursion; nothing is
  // expanded, so deep nonlinear networks stay cheap.
  static ResponseOracle from_network(std::shared_ptr<const Network> net, NodeId target, unsigned degree_bound);

private:
  NodeId target_;
  Evaluator evaluate_;
  unsigned degree_bound_;
  std::shared_ptr<std::size_t> queries_;
  std::optional<MPoly> expanded_;
};

// Sufficiency of a measured set for network identifiability.
// Renders node ids in error messages; decimal ids when empty.
using NodeNamer = std::function<std::string(NodeId)>;

enum class Sufficiency { Yes, Unknown };

struct MeasurementPlan {
  std::set<NodeId> required;
  Sufficiency sufficient = Sufficiency::Unknown;
  // Which result the plan rests on, e.g. "sinks-necessary+dag-nonlinear".
  std::string rationale;
};

// Always contains every sink. Throws CycleError via Graph construction only.
MeasurementPlan measurement_plan(const Graph& g, FunctionClass cls);

// Sample points used when sweeping u_j[k-2] (degree_bound + 2 of them, the
// extra one checks consistency with the bound).
std::size_t incoming_sample_count(unsigned degree_bound);

// Recovers f_{i,j} for every in-neighbor j of i by sweeping u_j[k-2] with
// every other input at zero and interpolating. Requires F_Z edges.
std::map<NodeId, Poly> identify_incoming(const ResponseOracle& oracle, const Graph& g, NodeId i,
                                         const NodeNamer& name = {});

enum class PeelMode { Tree, DAG };

// Virtual oracle for F_j given the oracle for its out-neighbor i and the
// identified f_{i,j}. At an assignment y of j's inputs the slice
//   x -> oracle_i(y delayed by 1, u_j[k-2] = x) = f_{i,j}(x + F_j(y)) + K
// is interpolated and F_j(y) read off as the argument shift. Tree mode
// assumes K = 0 (other branches carry zero inputs) and handles linear
// f_{i,j}; DAG mode tolerates any K and needs degree(f_{i,j}) >= 2, throwing
// DegreeTooLow otherwise. Evaluations are memoized per oracle.
ResponseOracle peel_upstream(const ResponseOracle& oracle, const Graph& g, NodeId i, NodeId j, const Poly& f_ij,
                             PeelMode mode);

struct EdgeReport {
  Edge edge;
  Poly recovered;
  // Node whose (real or virtual) oracle identified the edge.
  NodeId identified_at = 0;
  // Mode used to build that oracle, nullopt for measured nodes.
  std::optional<PeelMode> oracle_mode;
};

// Agreement between the recovered network and one measured oracle: exact
// canonical comparison when the oracle carries its expansion, otherwise
// black-box probes at random assignments.
struct MeasurementCheck {
  NodeId node = 0;
  bool canonical = false;
  std::size_t probes = 0;
  std::size_t agreeing = 0;
  bool ok = false;
};

struct IdentificationResult {
  Network network;
  std::vector<EdgeReport> edges;
  std::size_t oracle_queries = 0;
  std::vector<MeasurementCheck> checks;
  // Recovered network reproduces every measured oracle.
  bool verified = false;
};

// Recovers every edge function from the given measured oracles.
//   FZNL: any DAG, sinks suffice; peeling in DAG mode.
//   FZ:   trees/paths in Tree mode; on other DAGs nonlinear edges peel in
//         DAG mode and linear ones in Tree mode where the branches feeding
//         the node are disjoint, otherwise AmbiguityError.
//   General: each non-source node must be measured and have a single
//         in-neighbor, otherwise AmbiguityError.
// The result is cross-checked against each oracle before returning.
IdentificationResult identify_network(const std::map<NodeId, ResponseOracle>& oracles, const Graph& g,
                                      FunctionClass cls, unsigned degree_bound, std::uint64_t seed = 0,
                                      const NodeNamer& name = {});

} // namespace netident

#endif

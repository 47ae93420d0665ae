#include "netident/response.hpp"

#include "netident/error.hpp"

#include <cstdlib>
#include <string>

namespace netident {

namespace {

// Responses of the nodes flagged in `wanted` (which must be closed under
// taking ancestors), in topological order.
std::vector<MPoly> build_responses(const Network& net, const std::vector<bool>& wanted, std::size_t term_cap) {
  const Graph& g = net.graph();
  std::vector<MPoly> F(g.node_count());
  for (NodeId i : g.topological_order()) {
    if (!wanted[i]) continue;
    MPoly sum;
    for (NodeId l : g.in_neighbors(i)) {
      MPoly arg = MPoly::variable({l, 2}) + delay_shift(F[l], 1);
      sum += compose(net.edge_function(l, i), arg, term_cap);
      if (sum.term_count() > term_cap)
        throw SizeLimitExceeded("expanded response exceeds " + std::to_string(term_cap) + " terms");
    }
    F[i] = std::move(sum);
  }
  return F;
}

} // namespace

std::vector<MPoly> build_all_responses(const Network& net, std::size_t term_cap) {
  return build_responses(net, std::vector<bool>(net.graph().node_count(), true), term_cap);
}

MPoly build_response(const Network& net, NodeId i, std::size_t term_cap) {
  const Graph& g = net.graph();
  if (!g.valid(i)) throw UnknownNode(i);
  std::vector<bool> wanted(g.node_count(), false);
  wanted[i] = true;
  for (NodeId a : g.ancestors(i)) wanted[a] = true;
  return std::move(build_responses(net, wanted, term_cap)[i]);
}

namespace {

// F_node read in a frame delayed by `offset` relative to the assignment.
class DirectEvaluator {
public:
  DirectEvaluator(const Network& net, const Assignment& a) : net_(net), a_(a) {}

  Rational response(NodeId node, int offset) {
    auto key = std::make_pair(node, offset);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational sum = 0;
    for (NodeId l : net_.graph().in_neighbors(node)) {
      Rational arg = input(l, 2 + offset) + response(l, offset + 1);
      sum += eval(net_.edge_function(l, node), arg);
    }
    memo_.emplace(key, sum);
    return sum;
  }

private:
  Rational input(NodeId node, int delay) const {
    auto it = a_.find({node, delay});
    return it == a_.end() ? Rational(0) : it->second;
  }

  const Network& net_;
  const Assignment& a_;
  std::map<std::pair<NodeId, int>, Rational> memo_;
};

} // namespace

Rational evaluate_response(const Network& net, NodeId i, const Assignment& assignment) {
  if (!net.graph().valid(i)) throw UnknownNode(i);
  return DirectEvaluator(net, assignment).response(i, 0);
}

bool verify_lemma1_shape(const Network& net, NodeId i, NodeId j, std::mt19937_64& rng, int trials) {
  if (!net.graph().in_neighbors(i).count(j))
    throw InvalidInput(std::to_string(j) + " is not an in-neighbor of " + std::to_string(i));
  const MPoly F = build_response(net, i);
  const Poly& f = net.edge_function(j, i);
  const DelayedInput probe{j, 2};
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  for (int t = 0; t < trials; ++t) {
    Assignment others;
    for (const auto& v : F.variables())
      if (v != probe) others[v] = Rational(num(rng), den(rng));
    for (auto& [v, x] : others) x.canonicalize();
    Poly h = slice(F, probe, others);
    unsigned d = *f.degree();
    if (d >= 2) {
      try {
        recover_shift_modulo_constant(f, h);
      } catch (const NotAShift&) {
        return false;
      }
    } else if (d == 1) {
      // f(x + beta) + alpha = a1 x + (a1 beta + a0 + alpha): only the slope is pinned.
      if (h.degree().value_or(0) > 1 || h.coeff(1) != f.coeff(1)) return false;
    } else if (h.degree().value_or(0) > 0) {
      return false;
    }
  }
  return true;
}

std::size_t term_cap_from_env() {
  const char* text = std::getenv("NETIDENT_TERM_CAP");
  if (!text || !*text) return kDefaultTermCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(text, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidInput(std::string("NETIDENT_TERM_CAP is not a positive integer: ") + text);
  return static_cast<std::size_t>(v);
}

} // namespace netident

#include "netident/simulate.hpp"

#include "netident/error.hpp"
#include "netident/response.hpp"

#include <ostream>

namespace netident {

namespace {

Rational excitation_at(const Excitation& u, NodeId i, int t) {
  if (t < 0 || static_cast<std::size_t>(i) >= u.size()) return 0;
  const auto& row = u[i];
  return static_cast<std::size_t>(t) < row.size() ? row[t] : Rational(0);
}

} // namespace

Trajectory run(const Network& net, const Excitation& u, int horizon) {
  if (horizon < 1) throw InvalidInput("horizon must be at least 1");
  const Graph& g = net.graph();
  const std::size_t n = g.node_count();
  Trajectory traj;
  traj.horizon = horizon;
  traj.u.assign(n, std::vector<Rational>(horizon));
  traj.y.assign(n, std::vector<Rational>(horizon + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (int t = 0; t < horizon; ++t) traj.u[i][t] = excitation_at(u, static_cast<NodeId>(i), t);
  for (int k = 1; k <= horizon; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational y = traj.u[i][k - 1];
      for (NodeId j : g.in_neighbors(static_cast<NodeId>(i)))
        y += eval(net.edge_function(j, static_cast<NodeId>(i)), traj.y[j][k - 1]);
      traj.y[i][k] = std::move(y);
    }
  }
  return traj;
}

Excitation impulse(std::size_t node_count, NodeId node, int horizon, const Rational& amplitude) {
  Excitation u(node_count, std::vector<Rational>(static_cast<std::size_t>(horizon)));
  if (static_cast<std::size_t>(node) >= node_count) throw UnknownNode(node);
  if (horizon > 0) u[node][0] = amplitude;
  return u;
}

bool consistency_check(const Network& net, NodeId i, const Excitation& u, int horizon) {
  const int depth = static_cast<int>(net.graph().max_depth_to(i));
  if (horizon < depth + 2)
    throw InvalidInput("horizon " + std::to_string(horizon) + " is shorter than the warm-up " +
                       std::to_string(depth + 2) + " for node " + std::to_string(i));
  const MPoly F = build_response(net, i);
  const auto vars = F.variables();
  const Trajectory traj = run(net, u, horizon);
  for (int k = depth + 1; k <= horizon; ++k) {
    Assignment a;
    for (const auto& v : vars) a[v] = excitation_at(traj.u, v.node, k - v.delay);
    if (traj.y[i][k] != traj.u[i][k - 1] + eval_response(F, a)) return false;
  }
  return true;
}

std::vector<std::vector<double>> run_double(const Network& net, const Excitation& u, int horizon) {
  if (horizon < 1) throw InvalidInput("horizon must be at least 1");
  const Graph& g = net.graph();
  const std::size_t n = g.node_count();
  std::map<Edge, std::vector<double>> coeffs;
  for (const auto& [e, f] : net.edge_functions()) {
    auto& c = coeffs[e];
    for (const auto& a : f.coeffs()) c.push_back(a.get_d());
  }
  std::vector<std::vector<double>> y(n, std::vector<double>(horizon + 1, 0.0));
  for (int k = 1; k <= horizon; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = excitation_at(u, static_cast<NodeId>(i), k - 1).get_d();
      for (NodeId j : g.in_neighbors(static_cast<NodeId>(i))) {
        const auto& c = coeffs.at(Edge{j, static_cast<NodeId>(i)});
        double v = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y[j][k - 1] + *it;
        acc += v;
      }
      y[i][k] = acc;
    }
  }
  return y;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const std::vector<std::string>& labels) {
  out << "t,node,u,y\n";
  for (int t = 0; t <= traj.horizon; ++t)
    for (std::size_t i = 0; i < traj.y.size(); ++i) {
      Rational u = t < traj.horizon ? traj.u[i][t] : Rational(0);
      out << t << ',' << (i < labels.size() ? labels[i] : std::to_string(i)) << ',' << format_rational(u) << ','
          << format_rational(traj.y[i][t]) << '\n';
    }
}

} // namespace netident

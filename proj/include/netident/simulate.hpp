#ifndef NETIDENT_SIMULATE_HPP
#define NETIDENT_SIMULATE_HPP

#include "netident/network.hpp"
#include "netident/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace netident {

// u[i][t] is the excitation of node i at time t (t = 0..horizon-1);
// y[i][k] the output at time k (k = 0..horizon, y[i][0] = 0).
struct Trajectory {
  int horizon = 0;
  std::vector<std::vector<Rational>> u;
  std::vector<std::vector<Rational>> y;
};

using Excitation = std::vector<std::vector<Rational>>;

// y_i^k = sum_{j in N_i} f_{i,j}(y_j^{k-1}) + u_i^{k-1} for k = 1..horizon,
// with y^0 = 0. Missing excitation samples count as 0.
Trajectory run(const Network& net, const Excitation& u, int horizon);

// Unit impulse on `node` at t = 0.
Excitation impulse(std::size_t node_count, NodeId node, int horizon, const Rational& amplitude = 1);

// Compares the simulated y_i^k against u_i^{k-1} + F_i evaluated on the
// delayed excitations, for every k past the warm-up (k > max_depth_to(i)).
// Requires horizon >= max_depth_to(i) + 2 (InvalidInput otherwise).
bool consistency_check(const Network& net, NodeId i, const Excitation& u, int horizon);

// Non-oracle floating point simulation, for quick looks at long horizons.
std::vector<std::vector<double>> run_double(const Network& net, const Excitation& u, int horizon);

// CSV with header "t,node,u,y"; one row per (t, node), t = 0..horizon.
// u at t = horizon is reported as 0. `labels` names the nodes.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, const std::vector<std::string>& labels);

} // namespace netident

#endif

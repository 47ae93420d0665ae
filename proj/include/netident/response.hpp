#ifndef NETIDENT_RESPONSE_HPP
#define NETIDENT_RESPONSE_HPP

#include "netident/mpoly.hpp"
#include "netident/network.hpp"

#include <random>

namespace netident {

// Term cap from NETIDENT_TERM_CAP when set, otherwise kDefaultTermCap.
std::size_t term_cap_from_env();

// Response function of node i: y_i^k - u_i^{k-1} as a canonical polynomial
// in the delayed excitations of i's ancestors. Built by structural recursion
// in topological order,
//   F_source = 0,
//   F_i = sum over in-neighbors l of f_{i,l}(u_l[k-2] + F_l delayed by 1).
// Throws SizeLimitExceeded when an intermediate result passes term_cap.
MPoly build_response(const Network& net, NodeId i, std::size_t term_cap = term_cap_from_env());

// Responses of every node at once (shares the intermediate results).
std::vector<MPoly> build_all_responses(const Network& net, std::size_t term_cap = term_cap_from_env());

// Evaluates F_i at an assignment directly through the network recursion,
// without expanding anything. Agrees with eval_response(build_response(...)).
Rational evaluate_response(const Network& net, NodeId i, const Assignment& assignment);

// Checks that, with every variable except u_j[k-2] frozen at random values,
// F_i equals f_{i,j}(u_j[k-2] + beta) + alpha for some constants. `trials`
// random freezes are tried; all must match.
bool verify_lemma1_shape(const Network& net, NodeId i, NodeId j, std::mt19937_64& rng, int trials = 3);

} // namespace netident

#endif

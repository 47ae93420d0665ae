#ifndef NETIDENT_NETWORK_IO_HPP
#define NETIDENT_NETWORK_IO_HPP

#include "netident/network.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace netident {

// Network file layout:
//   { "nodes": ["a", "b", ...],
//     "edges": [ { "from": "a", "to": "b", "coeffs": ["1", "-1/2"], "a0": "3" } ] }
// coeffs[n-1] is the coefficient of x^n; "a0" (optional) the constant term.
Network network_from_json(const nlohmann::json& doc);
nlohmann::json network_to_json(const Network& net);

// Throws InvalidInput on unreadable files, bad JSON or invalid networks
// (CycleError for cycles).
Network load_network(const std::filesystem::path& path);
void save_network(const Network& net, const std::filesystem::path& path);

// Graphviz digraph; edge labels show each polynomial.
std::string to_dot(const Network& net);

} // namespace netident

#endif

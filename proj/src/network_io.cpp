#include "netident/network_io.hpp"

#include "netident/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace netident {

using nlohmann::json;

namespace {

Rational coefficient_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  throw InvalidInput(where + ": coefficient must be a \"p/q\" string or an integer");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + ": missing \"" + key + "\"");
  return *it;
}

} // namespace

Network network_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("network file must hold a JSON object");
  const json& nodes = field(doc, "nodes", "network");
  if (!nodes.is_array() || nodes.empty()) throw InvalidInput("\"nodes\" must be a non-empty array of labels");
  std::vector<std::string> labels;
  std::map<std::string, NodeId> id_of;
  for (const auto& n : nodes) {
    if (!n.is_string()) throw InvalidInput("node labels must be strings");
    auto label = n.get<std::string>();
    if (!id_of.emplace(label, static_cast<NodeId>(labels.size())).second)
      throw InvalidInput("duplicate node label '" + label + "'");
    labels.push_back(std::move(label));
  }
  const json& edges = field(doc, "edges", "network");
  if (!edges.is_array()) throw InvalidInput("\"edges\" must be an array");

  auto node = [&](const json& e, const char* key, const std::string& where) {
    const json& v = field(e, key, where);
    if (!v.is_string()) throw InvalidInput(where + ": \"" + key + "\" must be a node label");
    auto it = id_of.find(v.get<std::string>());
    if (it == id_of.end()) throw InvalidInput(where + ": unknown node '" + v.get<std::string>() + "'");
    return it->second;
  };

  std::vector<Edge> edge_list;
  std::map<Edge, Poly> fns;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const json& e = edges[k];
    std::string where = "edge #" + std::to_string(k);
    if (!e.is_object()) throw InvalidInput(where + " must be an object");
    Edge edge{node(e, "from", where), node(e, "to", where)};
    where = "edge " + labels[edge.from] + "->" + labels[edge.to];
    const json& coeffs = field(e, "coeffs", where);
    if (!coeffs.is_array()) throw InvalidInput(where + ": \"coeffs\" must be an array");
    std::vector<Rational> c{e.contains("a0") ? coefficient_from_json(e["a0"], where) : Rational(0)};
    for (const auto& v : coeffs) c.push_back(coefficient_from_json(v, where));
    Poly f(std::move(c));
    if (f.is_zero()) throw InvalidInput(where + ": edge function is zero");
    if (!fns.emplace(edge, std::move(f)).second) throw InvalidInput("duplicate " + where);
    edge_list.push_back(edge);
  }
  Graph g(labels.size(), std::move(edge_list));
  return Network(std::move(g), std::move(fns), std::move(labels));
}

json network_to_json(const Network& net) {
  json doc;
  doc["nodes"] = net.labels();
  doc["edges"] = json::array();
  for (const auto& e : net.graph().edges()) {
    const Poly& f = net.edge_function(e.from, e.to);
    json edge;
    edge["from"] = net.label(e.from);
    edge["to"] = net.label(e.to);
    json coeffs = json::array();
    for (std::size_t n = 1; n < f.coeffs().size(); ++n) coeffs.push_back(format_rational(f.coeffs()[n]));
    edge["coeffs"] = std::move(coeffs);
    if (f.coeff(0) != 0) edge["a0"] = format_rational(f.coeff(0));
    doc["edges"].push_back(std::move(edge));
  }
  return doc;
}

Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return network_from_json(doc);
}

void save_network(const Network& net, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << network_to_json(net).dump(2) << '\n';
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string to_dot(const Network& net) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < net.graph().node_count(); ++v)
    os << "  " << quoted(net.label(static_cast<NodeId>(v))) << ";\n";
  for (const auto& e : net.graph().edges())
    os << "  " << quoted(net.label(e.from)) << " -> " << quoted(net.label(e.to))
       << " [label=" << quoted(net.edge_function(e.from, e.to).to_string()) << "];\n";
  os << "}\n";
  return os.str();
}

} // namespace netident

#include "commands.hpp"

#include "netident/counterexamples.hpp"
#include "netident/error.hpp"
#include "netident/generators.hpp"
#include "netident/identify.hpp"
#include "netident/lemma_checks.hpp"
#include "netident/network_io.hpp"
#include "netident/response.hpp"
#include "netident/simulate.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

namespace netident::cli {

namespace {

std::string join_labels(const Network& net, const std::set<NodeId>& nodes) {
  std::string out = "{";
  bool first = true;
  for (NodeId v : nodes) {
    out += (first ? "" : ", ") + net.label(v);
    first = false;
  }
  return out + "}";
}

NodeId node_by_label(const Network& net, const std::string& label) {
  for (std::size_t v = 0; v < net.labels().size(); ++v)
    if (net.labels()[v] == label) return static_cast<NodeId>(v);
  throw InvalidInput("unknown node label '" + label + "'");
}

FunctionClass class_from_text(const std::string& text) {
  auto cls = parse_function_class(text);
  if (!cls) throw InvalidInput("unknown function class '" + text + "' (expected general, fz or fznl)");
  return *cls;
}

std::string coefficient_list(const Poly& f) {
  std::string out = "[";
  for (std::size_t n = 0; n < f.coeffs().size(); ++n)
    out += (n ? ", " : "") + format_rational(f.coeffs()[n]);
  return out + "]";
}

// Runs `body`, mapping library errors onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const AmbiguityError& e) {
    err << "ambiguity: " << e.what() << '\n';
    return kExitAmbiguity;
  } catch (const DegreeTooLow& e) {
    err << "ambiguity: " << e.what() << '\n';
    return kExitAmbiguity;
  } catch (const SizeLimitExceeded& e) {
    err << "limit: " << e.what() << " (raise NETIDENT_TERM_CAP to allow more)\n";
    return kExitLimit;
  } catch (const CycleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UnknownNode& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailure;
  }
}

} // namespace

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FunctionClass cls = class_from_text(opt.cls);
    const Network net = load_network(opt.file);
    const Graph& g = net.graph();
    const MeasurementPlan plan = measurement_plan(g, cls);
    out << "nodes: " << g.node_count() << ", edges: " << g.edges().size() << '\n';
    out << "shape: " << (g.is_path() ? "path" : g.is_forest() ? "tree" : "dag") << '\n';
    out << "edge functions lie in class: " << to_string(net.function_class()) << '\n';
    out << "sources: " << join_labels(net, g.sources()) << '\n';
    out << "sinks: " << join_labels(net, g.sinks()) << '\n';
    out << "class: " << to_string(cls) << '\n';
    out << "measure: " << join_labels(net, plan.required) << '\n';
    out << "sufficient: " << (plan.sufficient == Sufficiency::Yes ? "yes" : "unknown") << '\n';
    out << "rationale: " << plan.rationale << '\n';
    return kExitOk;
  });
}

int cmd_identify(const IdentifyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto truth = std::make_shared<const Network>(load_network(opt.file));
    const Graph& g = truth->graph();
    const FunctionClass cls = opt.cls ? class_from_text(*opt.cls) : truth->function_class();

    std::set<NodeId> measured;
    if (opt.measure == "auto") {
      measured = measurement_plan(g, cls).required;
    } else {
      std::stringstream ss(opt.measure);
      for (std::string label; std::getline(ss, label, ',');)
        if (!label.empty()) measured.insert(node_by_label(*truth, label));
    }
    if (measured.empty()) throw InvalidInput("no nodes to measure");

    std::map<NodeId, ResponseOracle> oracles;
    for (NodeId m : measured) oracles.emplace(m, ResponseOracle::from_network(truth, m, opt.degree_bound));

    out << "class: " << to_string(cls) << ", degree bound: " << opt.degree_bound << ", seed: " << opt.seed << '\n';
    out << "measured: " << join_labels(*truth, measured) << '\n';
    const IdentificationResult r = identify_network(oracles, g, cls, opt.degree_bound, opt.seed,
                                                       [&](NodeId v) { return truth->label(v); });

    bool all_match = true;
    for (const auto& e : g.edges()) {
      const Poly& want = truth->edge_function(e.from, e.to);
      const Poly& got = r.network.edge_function(e.from, e.to);
      const bool match = want == got;
      all_match = all_match && match;
      out << "edge " << truth->label(e.from) << "->" << truth->label(e.to) << ": true " << coefficient_list(want)
          << " recovered " << coefficient_list(got) << ' ' << (match ? "PASS" : "FAIL") << '\n';
    }
    out << "oracle queries: " << r.oracle_queries << '\n';
    for (const auto& c : r.checks) {
      out << "check " << truth->label(c.node) << ": ";
      if (c.canonical)
        out << "canonical response " << (c.ok ? "equal" : "DIFFERENT") << '\n';
      else
        out << c.agreeing << "/" << c.probes << " probe assignments agree\n";
    }
    out << "verification: " << (r.verified ? "ok" : "FAILED") << '\n';
    out << "result: " << (all_match && r.verified ? "PASS" : "FAIL") << '\n';
    return all_match && r.verified ? kExitOk : kExitFailure;
  });
}

namespace {

Excitation read_excitation_csv(const std::string& path, const Network& net, int horizon) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Excitation u(net.graph().node_count(), std::vector<Rational>(static_cast<std::size_t>(horizon)));
  std::string line;
  std::getline(in, line);
  if (line.rfind("t,node,u", 0) != 0) throw InvalidInput(path + ": expected header \"t,node,u\"");
  for (int row = 2; std::getline(in, line); ++row) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string t, node, value;
    if (!std::getline(ss, t, ',') || !std::getline(ss, node, ',') || !std::getline(ss, value, ','))
      throw InvalidInput(path + ":" + std::to_string(row) + ": expected t,node,u");
    int time = 0;
    try {
      time = std::stoi(t);
    } catch (const std::exception&) {
      throw InvalidInput(path + ":" + std::to_string(row) + ": bad time '" + t + "'");
    }
    if (time < 0 || time >= horizon) continue;
    u[node_by_label(net, node)][time] = parse_rational(value);
  }
  return u;
}

} // namespace

int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Network net = load_network(opt.file);
    if (opt.horizon < 1) throw InvalidInput("--horizon must be at least 1");
    if (opt.impulse.has_value() == opt.input_csv.has_value())
      throw InvalidInput("give exactly one of --impulse or --input");
    const Excitation u = opt.impulse ? impulse(net.graph().node_count(), node_by_label(net, *opt.impulse), opt.horizon)
                                     : read_excitation_csv(*opt.input_csv, net, opt.horizon);
    write_trajectory_csv(out, run(net, u, opt.horizon), net.labels());
    if (!opt.check) return kExitOk;
    bool all = true;
    for (std::size_t v = 0; v < net.graph().node_count(); ++v) {
      const auto node = static_cast<NodeId>(v);
      const int needed = static_cast<int>(net.graph().max_depth_to(node)) + 2;
      if (opt.horizon < needed) {
        err << "check " << net.label(node) << ": skipped (horizon < " << needed << ")\n";
        continue;
      }
      const bool ok = consistency_check(net, node, u, opt.horizon);
      all = all && ok;
      err << "check " << net.label(node) << ": " << (ok ? "consistent" : "INCONSISTENT") << '\n';
    }
    return all ? kExitOk : kExitFailure;
  });
}

int cmd_witness(const WitnessOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    AmbiguityWitness w = [&] {
      if (opt.kind == "gauge") {
        Network net = opt.file ? load_network(*opt.file)
                               : Network(path_graph(3),
                                         {{{0, 1}, Poly::monomial(1, 2)}, {{1, 2}, Poly::monomial(1, 3)}},
                                         {"1", "2", "3"});
        NodeId node = opt.node ? node_by_label(net, *opt.node) : 1;
        return gauge_pair(net, node, parse_rational(opt.gamma));
      }
      if (opt.kind == "linear-bridge")
        return linear_bridge_pair(parse_rational(opt.alpha), parse_rational(opt.beta), parse_rational(opt.gamma_c),
                                  parse_rational(opt.delta));
      throw InvalidInput("unknown witness kind '" + opt.kind + "' (expected gauge or linear-bridge)");
    }();

    const std::filesystem::path dir(opt.out_dir);
    std::filesystem::create_directories(dir);
    const auto path_a = dir / (opt.kind + "_a.json");
    const auto path_b = dir / (opt.kind + "_b.json");
    save_network(w.net_a, path_a);
    save_network(w.net_b, path_b);

    const bool ok = verify_witness(w);
    out << "kind: " << opt.kind << '\n';
    out << "network a: " << path_a.string() << '\n';
    out << "network b: " << path_b.string() << '\n';
    out << "measured: " << join_labels(w.net_a, w.measured) << '\n';
    out << describe_difference(w.net_a, w.net_b);
    for (NodeId m : w.measured) {
      const auto label = [&](NodeId v) { return w.net_a.label(v); };
      out << "F_" << w.net_a.label(m) << " = " << build_response(w.net_a, m).to_string(label) << '\n';
    }
    out << "verified: " << (ok ? "yes (responses equal at every measured node, edges differ)" : "NO") << '\n';
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_check_lemmas(const CheckLemmasOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << "seed: " << opt.seed << ", instances: " << opt.instances << '\n';
    bool all = true;
    // Each suite draws from its own stream so adding one does not perturb the others.
    const CheckTally tallies[] = {check_periodicity(opt.seed, opt.instances),
                                  check_shift_uniqueness(opt.seed + 1, opt.instances),
                                  check_sum_decomposition(opt.seed + 2, opt.instances)};
    for (const auto& t : tallies) {
      out << t.name << ": " << t.passed << "/" << t.instances << " passed";
      if (t.name != "periodicity") out << " (" << t.antecedent_held << " with equal compositions)";
      out << '\n';
      all = all && t.ok();
    }
    const auto c = linear_sum_counterexample();
    const auto y = [](const MPoly& p) {
      // Upstream variables are nodes 100 + l at delay 1.
      std::string s = p.to_string([](NodeId v) { return std::to_string(v - 100); });
      for (std::size_t at; (at = s.find("[k-1]")) != std::string::npos;) s.erase(at, 5);
      for (std::size_t at; (at = s.find('u')) != std::string::npos;) s[at] = 'y';
      return s;
    };
    out << "linear counterexample: f = (" << c.f[0].to_string() << ", " << c.f[1].to_string() << "), g = ("
        << y(c.g[0]) << ", " << y(c.g[1]) << "), g~ = (" << y(c.g_tilde[0]) << ", " << y(c.g_tilde[1])
        << ") give equal sums with g != g~\n";
    out << "result: " << (all ? "PASS" : "FAIL") << '\n';
    return all ? kExitOk : kExitFailure;
  });
}

int cmd_export_dot(const std::string& file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << to_dot(load_network(file));
    return kExitOk;
  });
}

} // namespace netident::cli

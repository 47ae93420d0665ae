// netident: identifiability analysis for static nonlinear networks on DAGs.

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace netident::cli;

int main(int argc, char** argv) {
  CLI::App app{"Identifiability of static nonlinear networks on directed acyclic graphs"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Sources, sinks and the nodes that must be measured");
  a->add_option("file", analyze.file, "Network JSON file")->required();
  a->add_option("--class", analyze.cls, "Function class: general, fz or fznl")
      ->check(CLI::IsMember({"general", "fz", "fznl"}, CLI::ignore_case));

  IdentifyOptions identify;
  std::string identify_class;
  auto* id = app.add_subcommand("identify", "Recover every edge function from measured responses and self-score");
  id->add_option("file", identify.file, "Network JSON file (hidden ground truth)")->required();
  id->add_option("--measure", identify.measure, "Comma-separated node labels, or auto");
  id->add_option("--degree-bound", identify.degree_bound, "Maximum edge polynomial degree")->check(CLI::Range(1u, 64u));
  id->add_option("--seed", identify.seed, "Seed for the verification probes");
  id->add_option("--class", identify_class, "Function class (default: tightest class of the file)")
      ->check(CLI::IsMember({"general", "fz", "fznl"}, CLI::ignore_case));

  SimulateOptions simulate;
  auto* s = app.add_subcommand("simulate", "Run the network model and print the trajectory as CSV");
  s->add_option("file", simulate.file, "Network JSON file")->required();
  s->add_option("--horizon", simulate.horizon, "Number of time steps");
  auto* imp = s->add_option("--impulse", simulate.impulse, "Unit impulse on this node at t = 0");
  auto* inp = s->add_option("--input", simulate.input_csv, "Excitation CSV with header t,node,u");
  imp->excludes(inp);
  s->add_flag("--check", simulate.check, "Compare against the symbolic responses");

  WitnessOptions witness;
  auto* w = app.add_subcommand("witness", "Emit a verified pair of indistinguishable networks");
  w->add_option("--kind", witness.kind, "gauge or linear-bridge")
      ->check(CLI::IsMember({"gauge", "linear-bridge"}));
  w->add_option("--out-dir", witness.out_dir, "Directory for the two network files");
  w->add_option("--file", witness.file, "gauge: path network (default 1->2->3 with x^2, x^3)");
  w->add_option("--node", witness.node, "gauge: interior node label");
  w->add_option("--gamma", witness.gamma, "gauge: offset gamma");
  w->add_option("--alpha", witness.alpha, "linear-bridge: f_{4,2} slope");
  w->add_option("--beta", witness.beta, "linear-bridge: f_{2,1} slope");
  w->add_option("--gamma-c", witness.gamma_c, "linear-bridge: f_{4,3} slope");
  w->add_option("--delta", witness.delta, "linear-bridge: f_{3,1} slope");

  CheckLemmasOptions lemmas;
  auto* l = app.add_subcommand("check-lemmas", "Brute-force polynomial property suites");
  l->add_option("--instances", lemmas.instances, "Instances per suite");
  l->add_option("--seed", lemmas.seed, "Random seed");

  std::string dot_file;
  auto* d = app.add_subcommand("export-dot", "Graphviz rendering with edge polynomials");
  d->add_option("file", dot_file, "Network JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInputError;
  }

  if (a->parsed()) return cmd_analyze(analyze, std::cout, std::cerr);
  if (id->parsed()) {
    if (!identify_class.empty()) identify.cls = identify_class;
    return cmd_identify(identify, std::cout, std::cerr);
  }
  if (s->parsed()) return cmd_simulate(simulate, std::cout, std::cerr);
  if (w->parsed()) return cmd_witness(witness, std::cout, std::cerr);
  if (l->parsed()) return cmd_check_lemmas(lemmas, std::cout, std::cerr);
  if (d->parsed()) return cmd_export_dot(dot_file, std::cout, std::cerr);
  return kExitInputError;
}

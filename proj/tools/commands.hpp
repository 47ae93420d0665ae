#ifndef NETIDENT_TOOLS_COMMANDS_HPP
#define NETIDENT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace netident::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitAmbiguity = 3;
inline constexpr int kExitLimit = 4;

struct AnalyzeOptions {
  std::string file;
  std::string cls = "fznl";
};

struct IdentifyOptions {
  std::string file;
  // Comma-separated labels, or "auto" for the measurement plan.
  std::string measure = "auto";
  unsigned degree_bound = 4;
  std::uint64_t seed = 0;
  // Defaults to the tightest class containing every edge of the file.
  std::optional<std::string> cls;
};

struct SimulateOptions {
  std::string file;
  int horizon = 10;
  std::optional<std::string> impulse;
  std::optional<std::string> input_csv;
  bool check = false;
};

struct WitnessOptions {
  std::string kind = "gauge";
  std::string out_dir = ".";
  // gauge: path network file (defaults to 1 -> 2 -> 3 with x^2, x^3),
  // interior node label and gamma.
  std::optional<std::string> file;
  std::optional<std::string> node;
  std::string gamma = "1";
  // linear-bridge parameters
  std::string alpha = "1", beta = "1", gamma_c = "1", delta = "1";
};

struct CheckLemmasOptions {
  std::size_t instances = 500;
  std::uint64_t seed = 0;
};

// Each command writes its report to `out`, diagnostics to `err`, and
// returns the process exit code. Errors never escape as exceptions.
int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_identify(const IdentifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_witness(const WitnessOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check_lemmas(const CheckLemmasOptions& opt, std::ostream& out, std::ostream& err);
int cmd_export_dot(const std::string& file, std::ostream& out, std::ostream& err);

} // namespace netident::cli

#endif

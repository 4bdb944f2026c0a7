#pragma once

// Command dispatch behind the `genmult` executable, kept in the library so
// tests can drive it without spawning processes.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace genmult {

enum class InputKind { Auto, Hypergraph, Ideal };
enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;                  // j, epsilon, spread, profile, report, fixtures
  std::optional<std::string> document;  // input text, already read
  InputKind kind = InputKind::Auto;
  OutputFormat format = OutputFormat::Text;
  bool oracle = false;
  std::size_t tulgeity_cap = 14;
  bool explain = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitCrossCheck = 2;

/// Runs one command. Results go to `out`; errors go to `err` (as a JSON
/// object when the format is JSON). Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace genmult

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace charprod::cli {

enum class Command { table, decompose, eta, chain, verify, corpus, pmax };

/// Command names as typed on the command line.
std::optional<Command> parse_command(const std::string& name);

/// `row=<i>` or `deg=<d>`.
struct ChiSelector {
  enum class Kind { row, degree } kind = Kind::row;
  std::size_t value = 0;
};

/// Throws ParseError on malformed text.
ChiSelector parse_chi_selector(const std::string& text);

struct RunConfig {
  Command command = Command::table;
  std::optional<std::string> zoo;
  std::optional<std::string> file;
  std::optional<ChiSelector> chi;  ///< every row when absent
  bool corpus = false;
  bool exhaustive_chains = false;
  std::size_t max_order = 128;
  unsigned pmax_n = 0;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification_failed = 2;
inline constexpr int exit_internal = 3;

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace charprod::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "config.hpp"
#include "render.hpp"

namespace liouville::app {

struct Flags {
  bool json = false;
  std::optional<double> tol_critical;
  std::optional<double> tol_merge;
  std::optional<double> cap;
  std::optional<std::size_t> resolution;
  std::optional<std::string> out;    // binary field dump (solve)
  std::optional<std::string> csv;    // CSV field dump (solve)
  std::optional<std::string> field;  // field to check (verify)
};

// Builds the report for one command. Throws on any failure; a report may be
// returned together with a nonzero status (check-matrix on a violating matrix).
struct CommandResult {
  Report report;
  int status = 0;
  std::string message;  // diagnostic for a nonzero status
};

CommandResult execute(const std::string& command, const InstanceConfig& config, const Flags& flags);

// Exit status for an error name: 2 hypothesis violation, 3 critical surface,
// 4 solver failure, 1 otherwise.
int exit_code_for(const std::string& error_name);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace liouville::app

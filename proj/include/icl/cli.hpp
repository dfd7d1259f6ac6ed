#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "icl/coloring.hpp"

namespace icl::cli {

enum class Command { Analyze, Code, Verify, Family, Universal, Sweep };
enum class Scheme { Scalar, Binary, Fractional };
enum class OutputFormat { Json, Csv, Text };

/// Exit statuses shared by every command.
enum ExitCode : int { kOk = 0, kInvalidInput = 2, kCapExceeded = 3, kCheckFailed = 4 };

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "a:b" (inclusive) or a single number.
Range parse_range(const std::string& text);

struct RunConfig {
  Command command = Command::Analyze;
  std::vector<std::string> inputs;
  std::string code_path;  // verify
  Scheme scheme = Scheme::Scalar;
  std::optional<std::uint64_t> seed;
  SolverCaps caps;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::Json;
  std::string family;  // "oddeven" or "universal"
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t r = 1;
  std::optional<Range> m_range;
  std::optional<Range> k_range;

  /// Throws InvalidInput when the combination of fields is inconsistent.
  void validate() const;
};

/// What a command produced: the primary document and a human summary.
struct CommandResult {
  int exit_code = kOk;
  std::string document;
  std::string summary;
};

CommandResult cmd_analyze(const RunConfig& config);
CommandResult cmd_code(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_family(const RunConfig& config);
CommandResult cmd_universal(const RunConfig& config);
CommandResult cmd_sweep(const RunConfig& config);

/// Dispatches, maps exceptions to exit codes, and writes the document to config.output
/// (atomically) or to `out`. Diagnostics and summaries go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes via a temporary file in the same directory followed by rename.
void write_file_atomic(const std::string& path, const std::string& content);

/// Solver caps from ICL_CAP_N when set, else the defaults.
SolverCaps caps_from_environment();

}  // namespace icl::cli

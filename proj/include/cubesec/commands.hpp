#pragma once

// Subcommands of the cube_sections tool. Each returns an OutputRecord plus the
// text renderings; the executable only parses flags and prints.

#include "cubesec/output_record.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubesec {

enum class ExitCode : int { Ok = 0, Usage = 1, Domain = 2, VerificationFailure = 3, PatternViolation = 4 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// File could not be written; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Pretty, Csv, Json };
/// Throws UsageError on anything but pretty, csv or json.
Format parse_format(const std::string& name);

struct CommandResult {
  OutputRecord record;
  ExitCode code = ExitCode::Ok;
  std::string pretty;
  /// Command-specific CSV; empty when the command has no tabular form.
  std::string csv;
};

/// The chosen rendering, newline-terminated.
std::string render(const CommandResult& result, Format format);

struct VolumeArgs {
  std::optional<long> d;
  std::optional<long> n;
  std::optional<std::string> t;
  std::optional<std::string> z;
  std::string method = "sum";
  /// Replaces the sub-diagonal direction.
  std::optional<std::vector<double>> a;
};

struct ClassifyArgs {
  long d = 0;
  std::optional<long> n;
  std::optional<std::string> t;
  std::optional<std::string> z;
  std::optional<std::string> eps;
};

struct RootsArgs {
  long n = 0;
  std::optional<std::string> eps;
  std::string method = "descartes";
};

struct TableArgs {
  long dmin = 8;
  long dmax = 35;
  std::optional<std::string> eps;
};

struct SweepArgs {
  long d = 0;
  std::optional<long> n;
  long samples = 100;
  std::optional<std::string> out;
};

struct VerifyArgs {
  std::string suite = "all";
  long dmax = 35;
};

CommandResult cmd_volume(const VolumeArgs& args);
CommandResult cmd_classify(const ClassifyArgs& args);
CommandResult cmd_roots(const RootsArgs& args);
CommandResult cmd_table(const TableArgs& args);
CommandResult cmd_sweep(const SweepArgs& args);
CommandResult cmd_verify(const VerifyArgs& args);

}  // namespace cubesec

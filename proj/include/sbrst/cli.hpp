#ifndef SBRST_CLI_HPP
#define SBRST_CLI_HPP

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbrst/brst.hpp"
#include "sbrst/catalog.hpp"
#include "sbrst/grading.hpp"

namespace sbrst::cli {

/// Malformed or inconsistent configuration. The message names the offending key or position.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { kValidate, kCohomology, kCeCompare, kKacWitness, kCompletionDemo };

std::string task_name(Task t);
std::optional<Task> parse_task(const std::string& name);

struct RunConfig {
  std::string source;
  /// Canonical compact JSON of the parsed file.
  std::string echo;

  AlgebraPtr algebra;
  /// Set for the gl preset with a parabolic variant; `algebra` is then u.
  std::optional<Nilradical> nilradical;
  std::optional<GLmnSpec> gl;
  std::string algebra_name;

  Representation module;
  std::string module_name;
  int kac_dim = 0;  // > 0 for Kac coefficients

  MixingSet mixing;
  std::string mixing_name;

  GradingScheme grading;
  int pmin = -6;
  int pmax = 6;
  int order = 4;

  std::vector<Task> tasks;
};

RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
/// Throws ConfigError for unreadable files, syntax errors (with line:column) and semantic errors.
RunConfig parse_config(const std::string& path);

enum class Format { kTable, kRecords };

struct RunOptions {
  Format format = Format::kTable;
  /// Overrides the config's completion-demo order.
  std::optional<int> order;
  int threads = 1;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitInconsistent = 2;

/// Runs the tasks in order, writing tables or line-delimited JSON records to `out`.
/// Returns kExitOk, kExitConfig (a task does not apply to the config) or kExitInconsistent
/// (a failed check or a ConsistencyError).
int run(const RunConfig& config, const std::vector<Task>& tasks, const RunOptions& options, std::ostream& out);

}  // namespace sbrst::cli

#endif  // SBRST_CLI_HPP

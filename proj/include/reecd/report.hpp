#pragma once

// Verification runs over (f, d) ranges and their JSON / markdown renderings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "reecd/elimination.hpp"
#include "reecd/ree.hpp"

namespace reecd {

enum class Command { Degrees, Maximals, Eliminate, Lemmas, All };
enum class OutputFormat { Json, Markdown };

std::string_view command_name(Command c);

struct RunConfig {
  std::vector<int> f_values;
  std::optional<std::vector<int>> d_values;  // nullopt: every divisor of f
  Command command = Command::All;
  OutputFormat format = OutputFormat::Json;
  bool strict = false;
  bool header = true;
  std::optional<std::string> fixture;  // path, echoed in the config block
  DegreeFormulas formulas = canonical_degree_formulas();
};

/// "3,5,7", "3-15" (odd values in the range) or a mix such as "3-9,13".
/// Throws ParameterError on malformed input, even values or an empty result.
std::vector<int> parse_f_list(std::string_view text);

/// "all" gives nullopt; otherwise a comma list of positive integers.
std::optional<std::vector<int>> parse_d_policy(std::string_view text);

/// Throws ParameterError unless every f is odd >= 3 and every listed d
/// divides every f.
void validate(const RunConfig& config);

/// The d values a run visits for one f.
std::vector<int> d_values_for(const RunConfig& config, int f);

/// Applies {"overrides": [{"line", "scalar"?, "divisor"?, "factors"?}]} to
/// the canonical formulas. Throws ParameterError on unreadable input.
DegreeFormulas load_table_fixture(const std::string& path);

struct Report {
  std::optional<std::string> timestamp;
  nlohmann::ordered_json config;
  std::vector<CheckReport> checks;

  std::size_t failures() const;
};

/// Runs the checks selected by config.command, in fixed order: f ascending,
/// per-f checks first, then each d ascending.
Report run(const RunConfig& config);

nlohmann::ordered_json report_to_json(const Report& report);
std::string render_json(const Report& report);
std::string render_markdown(const Report& report);

/// "FAIL <check_id> f=<f> d=<d>: lhs=<...> rhs=<...>" for each failure.
std::vector<std::string> failure_lines(const Report& report);

}  // namespace reecd

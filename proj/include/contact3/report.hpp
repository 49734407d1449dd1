#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contact3/model_spaces.hpp"
#include "contact3/soliton_solver.hpp"
#include "contact3/verifier.hpp"

namespace contact3 {

/// Output of one CLI invocation.
struct RunReport {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::optional<SolitonParams> soliton;
  std::optional<GroupTag> group;
  std::optional<PotentialField> field;
  std::vector<ResidualReport> residuals;
  /// Command-specific payload (curvature tables, chart residual field, ...).
  nlohmann::json data = nlohmann::json::object();
  long long wall_time_ms{0};

  /// Conjunction of all residual passes; true when there are none.
  [[nodiscard]] bool pass() const;
};

nlohmann::json to_json(const SolitonParams& p);
nlohmann::json to_json(const PotentialField& pf);
nlohmann::json to_json(const ResidualReport& r);
nlohmann::json to_json(const RunReport& r);
nlohmann::json matrix_json(const Eigen::Matrix3d& m);

/// Doubles with 17 significant digits.
std::string format_double(double x);

/// Deterministic serialization: keys in lexicographic order, two-space
/// indentation, floats via format_double, non-finite floats as null.
/// Parsing the output and dumping again reproduces it byte for byte.
std::string canonical_dump(const nlohmann::json& j);

/// f1 and f2 as readable closed-form expressions.
std::array<std::string, 2> describe(const PotentialField& pf);

}  // namespace contact3

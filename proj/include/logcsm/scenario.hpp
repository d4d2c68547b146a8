#pragma once

// Scenario files, reports and the randomized identity suite behind the
// command-line tool. The JSON schemas are documented in docs/formats.md.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcsm/characteristic_class.hpp"
#include "logcsm/motivic_measure.hpp"

namespace logcsm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineName = "logcsm";
inline constexpr const char* kEngineVersion = "1.0.0";

inline const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> outputs = {"csm_open",   "csm_zero",         "silred_rhs", "char_class",
                                                   "verify_main", "verify_induction", "additivity", "chi",
                                                   "chi_quadratic", "compat"};
  return outputs;
}

struct DiagramSpec {
  CompactificationDiagram diagram;
  bool expect_compatible = true;
};

struct Scenario {
  std::string name;
  std::string description;
  std::optional<DivisorArrangement> arrangement;
  std::vector<std::string> outputs;
  std::optional<SpaceExpression> scissor;
  std::optional<DiagramSpec> diagram;
  Json source;
};

/// Throws Error with ParseError (message carries line and column) or SchemaViolation.
Scenario parse_scenario(const std::string& text);
Scenario parse_scenario(const Json& document);

Ambient parse_ambient(const Json& node);
SpaceExpression parse_expression(const Json& node);

struct Report {
  Json document;
  bool pass = true;
};

struct RunOptions {
  bool timing = false;
};

/// Evaluates the requested outputs in declaration order. Arithmetic errors
/// propagate as Error (Overflow and friends).
Report run_scenario(const Scenario& scenario, const RunOptions& options = {});

/// Aligned plain-text rendering of a scenario or suite report.
std::string render_text(const Json& report);
/// Two-space indented JSON with a trailing newline.
std::string render_json(const Json& report);

Json class_table(const ChowClass& c);

struct SuiteBounds {
  std::uint64_t seed = 0;
  int max_dim = 3;
  int max_components = 4;
  int max_multidegree = 3;
  int count = 100;
};

/// Deterministic arrangement generator used by the suite.
class ArrangementGenerator {
 public:
  explicit ArrangementGenerator(const SuiteBounds& bounds);
  DivisorArrangement next();
  /// All products of projective spaces with total dimension <= max_dim,
  /// ordered by total dimension and then lexicographically.
  const std::vector<std::vector<int>>& ambient_shapes() const noexcept { return shapes_; }

 private:
  std::uint64_t draw(std::uint64_t bound);

  SuiteBounds bounds_;
  std::uint64_t state_;
  std::vector<std::vector<int>> shapes_;
  std::vector<Ambient> ambients_;
};

/// Throws InvalidBounds.
void validate_bounds(const SuiteBounds& bounds);

/// Runs verify_main_identity, verify_silclaim_induction and additivity_check
/// on `count` generated arrangements.
Report verify_suite(const SuiteBounds& bounds, const RunOptions& options = {});

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string scenario_json;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(const std::string& name);

/// The command-line front end; returns the process exit code
/// (0 all pass, 1 verification failure, 2 input error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logcsm

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace chernratio {

/// One pinned formula recomputed by the library.
struct CheckResult {
  std::string id;
  std::string description;
  /// The formula as printed, and its canonical rendering.
  std::string expected;
  std::string expected_value;
  std::string actual;
  bool match = false;
  /// Id of the printed line this one is derived from, if any.
  std::string previous;
  /// Mismatch whose preceding printed line matched: the printed
  /// simplification does not follow from the line before it.
  bool printed_step_inconsistent = false;
};

/// "n2", "n3", "n4", "n5", "schubert", "lemmas".
const std::vector<std::string>& verify_sections();

/// Throws std::invalid_argument for an unknown section.
std::vector<CheckResult> verify_section(std::string_view section);

}  // namespace chernratio

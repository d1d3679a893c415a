#pragma once

#include <string>
#include <vector>

#include "asx/scheme/params.hpp"

namespace asx {

struct Witness {
  std::string where;  // e.g. "p^1_11"
  std::string value;  // exact string
};

struct FeasibilityCheck {
  std::string name;
  bool pass = true;
  std::vector<Witness> witnesses;
};

struct FeasibilityReport {
  std::vector<FeasibilityCheck> checks;

  bool passed() const;
  /// Null when every check passed.
  const FeasibilityCheck* first_failure() const;
  const FeasibilityCheck* find(const std::string& name) const;
};

/// Runs every check, in a fixed order, without short-circuiting:
/// krein nonnegativity, multiplicity integrality, valency integrality,
/// intersection integrality, krein column sums, intersection column sums.
FeasibilityReport feasibility_report(SchemeParams& params);

std::string index_label(char symbol, int i, int j, int k);

}  // namespace asx

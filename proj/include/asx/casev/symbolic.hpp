#pragma once

#include <string>
#include <vector>

#include "asx/algebra/ratfunc.hpp"

namespace asx::casev {

struct TranscriptStep {
  int number = 0;
  std::string claim;     // what the step asserts
  std::string identity;  // the rational-function identity that was checked
  bool verified = false;
  std::vector<std::string> notes;  // computed values, diagnostics
};

struct DerivationTranscript {
  std::vector<TranscriptStep> steps;
  std::string conclusion;

  bool complete() const;
  /// Null when every step verified.
  const TranscriptStep* first_failure() const;
};

/// Runs the seven-step symbolic chain in the unknowns a2, a3, a4, b2, b3, b4,
/// c2, c3, c4, m with the staged substitutions b4 -> 1, a3 -> 0. Every step
/// is evaluated; failures are recorded, not thrown.
DerivationTranscript build_symbolic_transcript();

/// build_symbolic_transcript(), throwing StepFailure at the first step that
/// does not verify.
DerivationTranscript derive_symbolic_branch();

}  // namespace asx::casev

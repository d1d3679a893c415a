#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asx/casev/casev.hpp"
#include "asx/casev/symbolic.hpp"
#include "asx/scheme/feasibility.hpp"

namespace asx::casev {

struct SurvivorVerdict {
  std::uint64_t m = 0;
  bool rejected = false;
  std::string reason;  // e.g. "DegenerateParameter: ..." or "intersection integrality"
  std::optional<FeasibilityReport> report;
  std::optional<SchemeParams> params;
};

/// Agreement of the m = 5 computation with the reference tables.
struct ReferenceAgreement {
  std::vector<int> q_rows;               // reference row for each computed Q row (matched on column 1)
  std::vector<EntryComparison> q_mismatches;
  bool q_matches = false;                // printed Q, up to row order
  bool q_matches_corrected = false;      // with the misprinted rows repaired
  bool b1_matches = false;               // printed B_1 in the reference relation order
  std::vector<EntryComparison> b1_mismatches;
  bool witness_found = false;            // 72/7 among the integrality witnesses
};

struct BranchA {
  std::vector<std::uint64_t> survivors;
  std::vector<SurvivorVerdict> verdicts;
  std::optional<ReferenceAgreement> reference;
  bool verified = false;
  std::string failure;
};

struct BranchB {
  DerivationTranscript transcript;
  bool verified = false;
  std::string failure;
};

struct TheoremVerdict {
  std::optional<BranchA> branch_a;
  std::optional<BranchB> branch_b;
  bool verified = false;
  std::string summary;
};

ReferenceAgreement compare_with_reference(SchemeParams& params, const FeasibilityReport& report);
BranchA run_branch_a(std::uint64_t search_max, unsigned jobs = 1);
BranchB run_branch_b();

/// Runs the selected branches; the verdict is "nonexistence verified" only
/// when every selected branch verified.
TheoremVerdict reject_case_v(std::uint64_t search_max, bool branch_a = true, bool branch_b = true, unsigned jobs = 1);

/// Throws VerificationFailure naming the branch and step if !v.verified.
void require_verified(const TheoremVerdict& v);

}  // namespace asx::casev

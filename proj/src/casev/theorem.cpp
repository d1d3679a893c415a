#include "asx/casev/theorem.hpp"

#include <algorithm>

#include "asx/casev/reference.hpp"
#include "asx/casev/search.hpp"

namespace asx::casev {

ReferenceAgreement compare_with_reference(SchemeParams& params, const FeasibilityReport& report) {
  ReferenceAgreement out;
  const auto printed_q = reference::q_m5();
  out.q_rows = match_rows_by_column(params.Q, printed_q, 1);
  const bool all_rows = std::find(out.q_rows.begin(), out.q_rows.end(), -1) == out.q_rows.end();
  out.q_matches = all_rows;
  out.q_matches_corrected = all_rows;
  if (all_rows) {
    const auto corrected = reference::q_m5_corrected();
    for (std::size_t u = 0; u < params.Q.rows(); ++u) {
      for (std::size_t i = 0; i < params.Q.cols(); ++i) {
        const auto& printed = printed_q(out.q_rows[u], i);
        if (params.Q(u, i) != printed) {
          out.q_matches = false;
          out.q_mismatches.push_back({static_cast<std::size_t>(out.q_rows[u]), i, params.Q(u, i).to_string(),
                                      printed.to_string(), false});
        }
        if (params.Q(u, i) != corrected(out.q_rows[u], i)) out.q_matches_corrected = false;
      }
    }
    // relations relabeled into the reference order
    Ordering to_reference(out.q_rows.size());
    for (std::size_t u = 0; u < out.q_rows.size(); ++u) to_reference[out.q_rows[u]] = static_cast<int>(u);
    const auto& p = ensure_intersections(params);
    const auto moved = relabel_tensor(p, to_reference);
    const auto printed_b1 = reference::b1_m5().map([](const Rational& v) { return QuadraticNumber(v); });
    out.b1_matches = true;
    for (const auto& e : compare_entries(moved.B[1], printed_b1)) {
      if (!e.equal) {
        out.b1_matches = false;
        out.b1_mismatches.push_back(e);
      }
    }
  }
  if (const auto* c = report.find("intersection integrality")) {
    for (const auto& w : c->witnesses) out.witness_found = out.witness_found || w.value == "72/7";
  }
  return out;
}

BranchA run_branch_a(std::uint64_t search_max, unsigned jobs) {
  BranchA a;
  a.survivors = search_m(search_max, jobs);
  bool all_rejected = true;
  for (std::uint64_t m : a.survivors) {
    SurvivorVerdict v;
    v.m = m;
    try {
      const auto spec = casev_spec(Rational(m));
      auto params = params_from_spec(spec);
      auto report = feasibility_report(params);
      v.rejected = !report.passed();
      v.reason = v.rejected ? report.first_failure()->name : "all feasibility checks pass";
      if (m == 5) a.reference = compare_with_reference(params, report);
      v.report = std::move(report);
      v.params = std::move(params);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateParameter) throw;
      v.rejected = true;
      v.reason = e.what();
    }
    all_rejected = all_rejected && v.rejected;
    a.verdicts.push_back(std::move(v));
  }
  if (!all_rejected) {
    a.failure = "a surviving m passes every feasibility check";
  } else if (!a.reference) {
    a.failure = "m = 5 did not survive the search";
  } else if (!a.reference->witness_found) {
    a.failure = "m = 5 rejected without the 72/7 witness";
  } else if (!a.reference->b1_matches) {
    a.failure = "B_1 at m = 5 differs from the reference";
  } else if (!a.reference->q_matches) {
    a.failure = "Q at m = 5 differs from the reference in " + std::to_string(a.reference->q_mismatches.size()) +
                " entries" + (a.reference->q_matches_corrected ? " (all inside the misprinted rows)" : "");
  }
  a.verified = a.failure.empty();
  return a;
}

BranchB run_branch_b() {
  BranchB b;
  b.transcript = build_symbolic_transcript();
  if (const auto* bad = b.transcript.first_failure()) {
    b.failure = "step " + std::to_string(bad->number) + ": " + bad->claim;
  }
  b.verified = b.failure.empty();
  return b;
}

TheoremVerdict reject_case_v(std::uint64_t search_max, bool branch_a, bool branch_b, unsigned jobs) {
  TheoremVerdict v;
  if (branch_a) v.branch_a = run_branch_a(search_max, jobs);
  if (branch_b) v.branch_b = run_branch_b();
  v.verified = (branch_a || branch_b) && (!v.branch_a || v.branch_a->verified) && (!v.branch_b || v.branch_b->verified);
  if (v.verified) {
    v.summary = "nonexistence verified";
  } else {
    v.summary = "verification failed:";
    if (v.branch_a && !v.branch_a->verified) v.summary += " branch A (" + v.branch_a->failure + ");";
    if (v.branch_b && !v.branch_b->verified) v.summary += " branch B (" + v.branch_b->failure + ");";
    if (v.summary.back() == ';') v.summary.pop_back();
  }
  return v;
}

void require_verified(const TheoremVerdict& v) {
  if (!v.verified) throw Error(ErrorKind::VerificationFailure, v.summary);
}

}  // namespace asx::casev

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "asx/casev/casev.hpp"
#include "asx/casev/reference.hpp"
#include "asx/casev/search.hpp"
#include "asx/casev/symbolic.hpp"
#include "asx/casev/theorem.hpp"
#include "asx/oracle/relations.hpp"
#include "asx/scheme/feasibility.hpp"
#include "asx/scheme/ordering.hpp"

using namespace asx;
using QN = QuadraticNumber;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[x] " << what << "; ";
    }
  }
  void note(const std::string& what) { detail << what << "; "; }
};

// Schemes criterion 8 re-checks.
std::vector<std::pair<std::string, SchemeParams>> g_params;

int g_failures = 0;

void criterion(int number, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("threw ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream timing;
  timing.precision(3);
  timing << std::fixed << s << " s";
  o.expect(s < limit_s, "runtime " + timing.str() + " over the limit");
  if (!o.pass) ++g_failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << " (" << timing.str() << "): " << o.detail.str()
            << std::endl;
}

template <class F>
std::string kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(to_string(e.kind()));
  }
  return "no error";
}

void keep(const std::string& name, SchemeParams p) {
  g_params.emplace_back(name, std::move(p));
}

}  // namespace

int main() {
  criterion(1, 5, [](Outcome& o) {
    const auto v = casev::reject_case_v(5, true, false);
    const auto& a = *v.branch_a;
    o.expect(a.survivors == std::vector<std::uint64_t>{1, 5}, "survivors up to 5 are 1 and 5");
    const auto* m5 = a.verdicts.size() == 2 ? &a.verdicts[1] : nullptr;
    o.expect(m5 && m5->rejected && m5->reason == "intersection integrality", "m = 5 rejected by integrality");
    if (!m5 || !a.reference) return;
    const auto& ref = *a.reference;
    o.expect(ref.witness_found, "witness 72/7");
    o.expect(ref.b1_matches, "B_1 equals the displayed matrix");
    if (ref.b1_matches) o.note("B_1 matches entrywise after reordering relations");
    o.expect(m5->params->Q.row(0) == std::vector<QN>{1, 5, 10, 10, 25, 5}, "first row of Q");
    o.expect(ref.q_matches, "Q equals the displayed Q up to row order");
    if (!ref.q_matches) {
      std::string cells;
      for (const auto& e : ref.q_mismatches) cells += " Q" + std::to_string(e.row) + std::to_string(e.col) + ": " + e.computed + " vs " + e.reference;
      o.note(std::to_string(ref.q_mismatches.size()) + " entries differ:" + cells);
      o.note(ref.q_matches_corrected ? "Q matches once 2 sqrt(21) is read as sqrt(21) in those entries"
                                     : "Q differs beyond the misprinted entries");
    }
    keep("case V m=5", *m5->params);
  });

  criterion(2, 60, [](Outcome& o) {
    const auto found = casev::search_m(1'000'000);
    o.expect(found == std::vector<std::uint64_t>{1, 5}, "search up to 10^6 gives {1, 5}");
    const auto k = kind_of([] { casev::casev_spec(1); });
    o.expect(k == "DegenerateParameter", "m = 1 raises DegenerateParameter, got " + k);
    o.note("survivors 1 5");
  });

  criterion(3, 5, [](Outcome& o) {
    const auto r = casev::fusion_pipeline(5);
    o.expect(r.delta == QN(72), "delta = 72, got " + r.delta.to_string());
    o.expect(r.valencies == std::vector<QN>{1, 25, 20, 10}, "fused valencies 1 25 20 10");
    QN sum;
    for (const auto& v : r.valencies) sum += v;
    o.expect(sum == QN(56), "valencies sum to 56");
    o.expect(r.integral, "valencies integral");
    o.note("delta " + r.delta.to_string() + ", valencies 1 25 20 10, sum " + sum.to_string());
  });

  criterion(4, 30, [](Outcome& o) {
    const auto tr = casev::build_symbolic_transcript();
    for (const auto& s : tr.steps) {
      o.expect(s.verified, "step " + std::to_string(s.number) + " (" + s.claim + ")");
      if (!s.verified)
        for (const auto& n : s.notes) o.note(n);
    }
    o.note(tr.conclusion);
  });

  criterion(5, 60, [](Outcome& o) {
    const auto r = casev::verify_dual_consistency(casev::casev_spec_symbolic());
    o.expect(r.identities_checked == 216, "216 identities");
    bool nonzero = false, zero = false;
    for (const auto& line : r.lemma) {
      nonzero = nonzero || line.rfind("q^5_35 = ", 0) == 0;
      zero = zero || line == "q^5_34 = 0";
    }
    o.expect(nonzero, "q^5_35 != 0");
    o.expect(zero, "q^5_34 = 0");
    o.note(std::to_string(r.identities_checked) + " identities");
  });

  criterion(6, 5, [](Outcome& o) {
    const auto t = krein_ladder(casev::casev_spec(5));
    const auto found = enumerate_q_orderings(t);
    o.expect(found.size() == 2, "exactly two orderings, got " + std::to_string(found.size()));
    if (found.size() != 2) return;
    o.expect(cycle_string(found[0]) == "id", "identity first");
    o.expect(cycle_string(found[1]) == "(1 5)(2 3)", "(1 5)(2 3), got " + cycle_string(found[1]));
    o.expect(classify_structure_pair(found[1], 5) == StructureType::V, "type V");
    o.note("id, " + cycle_string(found[1]) + " type " + to_string(classify_structure_pair(found[1], 5)));
  });

  criterion(7, 10, [](Outcome& o) {
    const std::vector<std::pair<std::string, int>> names{{"complete", 4}, {"cycle", 5}, {"petersen", 0}, {"hypercube", 3}};
    for (const auto& [name, param] : names) {
      auto p = oracle::scheme_from_relations(oracle::named_scheme(name, param));
      o.expect(p.P * p.Q == Matrix<QN>::identity(p.d + 1) * p.n, name + ": PQ = nI");
      const auto orders = enumerate_q_orderings(p.kreins);
      o.expect(!orders.empty(), name + ": Q-polynomial");
      if (orders.empty()) continue;
      const auto moved = relabel_tensor(p.kreins, orders.front());
      o.expect(krein_ladder(tridiagonal_from_tensor(moved)) == moved, name + ": ladder equals relation tensor");
      o.expect(feasibility_report(p).passed(), name + ": feasible");
      if (name == "cycle") o.note("cycle(5) over Q(sqrt " + p.Q(1, 1).radicand().get_str() + ")");
      keep(name, std::move(p));
    }
  });

  criterion(8, 30, [](Outcome& o) {
    std::size_t checked = 0;
    // bare ladders at other m: their eigenvalues leave quadratic fields, so only the Krein side
    for (int m : {2, 3, 7, 11}) {
      const auto t = krein_ladder(casev::casev_spec(m));
      std::vector<Rational> mult;
      for (int i = 0; i <= 5; ++i) mult.push_back(t(i, i, 0));
      const std::string name = "case V ladder m=" + std::to_string(m);
      for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) {
          o.expect(commute(t.B[i], t.B[j]), name + ": B*_i B*_j commute");
          o.expect(t.column_sum(i, j) == mult[i], name + ": Krein column sum");
          for (int k = 0; k <= 5; ++k) {
            const Rational x = mult[k] * t(i, j, k);
            o.expect(x == mult[j] * t(i, k, j) && x == mult[i] * t(k, j, i), name + ": m_k q^k_ij symmetric");
          }
        }
      ++checked;
    }
    for (auto& [name, p] : g_params) {
      const auto& t = p.kreins;
      const int d = t.d();
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) o.expect(commute(t.B[i], t.B[j]), name + ": B*_i B*_j commute");
      for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= d; ++k) o.expect(t.column_sum(i, k) == p.multiplicities[i], name + ": Krein column sum");
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
          for (int k = 0; k <= d; ++k) {
            const QN x = p.multiplicities[k] * t(i, j, k);
            o.expect(x == p.multiplicities[j] * t(i, k, j) && x == p.multiplicities[i] * t(k, j, i),
                     name + ": m_k q^k_ij symmetric");
          }
      const auto x = intersection_tensor(p);  // throws if the two formulas disagree
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d; ++j) o.expect(commute(x.B[i], x.B[j]), name + ": B_i B_j commute");
        for (int k = 0; k <= d; ++k) o.expect(x.column_sum(i, k) == p.valencies[i], name + ": intersection column sum");
      }
      if (p.intersections) o.expect(*p.intersections == x, name + ": stored intersections agree");
      ++checked;
    }
    o.note(std::to_string(checked) + " tensor families");
  });

  criterion(9, 10, [](Outcome& o) {
    const auto c1 = casev::fused_first_krein_symbolic();
    const RatFunc two_m = RatFunc(2) * RatFunc::variable("m");
    for (std::size_t k = 0; k < c1.cols(); ++k) {
      RatFunc s;
      for (std::size_t j = 0; j < c1.rows(); ++j) s += c1(j, k);
      o.expect(s == two_m, "column " + std::to_string(k) + " sums to 2m");
    }
    std::size_t differ = 0;
    for (const auto& e : casev::compare_entries(c1, casev::reference::fused_c1())) {
      if (e.equal) continue;
      ++differ;
      o.note("C1*(" + std::to_string(e.row) + "," + std::to_string(e.col) + ") computed " + e.computed + ", printed " +
             e.reference);
    }
    o.note(differ ? std::to_string(differ) + " printed entries differ (reported, not enforced)" : "printed C1* matches");
  });

  std::cout << (g_failures ? std::to_string(g_failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return g_failures ? 1 : 0;
}

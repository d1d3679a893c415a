#pragma once

#include <string>
#include <vector>

#include "asx/algebra/linalg.hpp"
#include "asx/algebra/ratfunc.hpp"
#include "asx/scheme/fusion.hpp"
#include "asx/scheme/ordering.hpp"
#include "asx/scheme/params.hpp"
#include "asx/scheme/tridiagonal.hpp"

namespace asx::casev {

/// E_0, E_5, E_3, E_2, E_4, E_1: the second ordering, as sigma(0..5).
inline const Ordering kSigma{0, 5, 3, 2, 4, 1};
/// Galois orbits on the idempotents.
inline const char* kPartition = "0|1,5|2,3|4";

/// c = (1, (m-1)/2, 2m/(m+1), 2(m-1)/(m+1), m),
/// a = (0, (m-1)^2/(2(m+1)), 0, (m-1)^2/(m+1), 0),
/// b = (m, m-1, 2m/(m+1), m(m-1)/(m+1), 1).
/// Throws DegenerateParameter for m <= 1.
KreinTridiagonal<Rational> casev_spec(const Rational& m);
/// Same arrays over Q(m).
KreinTridiagonal<RatFunc> casev_spec_symbolic();

/// Column sums, b3 = c2 c3, a4 = 2 a2 = c2 c4 and m c4 = c3 (m-1).
/// Throws InvariantViolation naming the first relation that fails.
template <class T>
void check_casev_relations(const KreinTridiagonal<T>& s, const T& m) {
  s.validate();
  if (!(s.rank() == m)) throw Error(ErrorKind::InvariantViolation, "b_0* != m");
  if (!(s.b_at(3) == s.c_at(2) * s.c_at(3))) throw Error(ErrorKind::InvariantViolation, "b_3* != c_2* c_3*");
  if (!(s.a_at(4) == T(2) * s.a_at(2))) throw Error(ErrorKind::InvariantViolation, "a_4* != 2 a_2*");
  if (!(s.a_at(4) == s.c_at(2) * s.c_at(4))) throw Error(ErrorKind::InvariantViolation, "a_4* != c_2* c_4*");
  if (!(m * s.c_at(4) == s.c_at(3) * (m - T(1)))) throw Error(ErrorKind::InvariantViolation, "m c_4* != c_3* (m-1)");
}

struct ConsistencyReport {
  std::size_t identities_checked = 0;  // hat q^r_st = q^r_st
  std::vector<std::string> lemma;      // zero pattern at index 5, one line each
  bool relabeled_q_polynomial = false;
};

/// Zero pattern q^5_15 = q^5_25 = q^5_45 = q^5_55 = 0 != q^5_35, q^5_34 = 0,
/// then hat q^r_st = q^r_st for all 216 triples under kSigma, then (Q1)/(Q2)
/// for the relabeled tensor. Throws ConsistencyFailure at the first violation.
template <class T>
ConsistencyReport verify_dual_consistency(const KreinTridiagonal<T>& spec) {
  if (spec.d != 5) throw Error(ErrorKind::InvalidArgument, "case V needs d = 5");
  ConsistencyReport report;
  const auto t = krein_ladder(spec);
  auto lemma = [&](int i, int j, int k, bool want_zero) {
    const T& v = t(i, j, k);
    const std::string label = "q^" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j);
    if (is_zero(v) != want_zero) {
      throw Error(ErrorKind::ConsistencyFailure,
                  label + (want_zero ? " = " + to_string(v) + " != 0" : " vanishes but must not"));
    }
    report.lemma.push_back(label + (want_zero ? " = 0" : " = " + to_string(v) + " != 0"));
  };
  lemma(1, 5, 5, true);
  lemma(2, 5, 5, true);
  lemma(4, 5, 5, true);
  lemma(5, 5, 5, true);
  lemma(3, 5, 5, false);
  lemma(3, 4, 5, true);

  const auto hat = relabel_tensor(t, kSigma);
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s)
      for (int u = 0; u <= 5; ++u) {
        if (!(hat(s, u, r) == t(s, u, r))) {
          throw Error(ErrorKind::ConsistencyFailure, "hat q^" + std::to_string(r) + "_" + std::to_string(s) +
                                                         std::to_string(u) + " = " + to_string(hat(s, u, r)) +
                                                         " but q = " + to_string(t(s, u, r)));
        }
        ++report.identities_checked;
      }

  std::vector<std::vector<std::vector<bool>>> zero(6, std::vector<std::vector<bool>>(6, std::vector<bool>(6)));
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j)
      for (int k = 0; k <= 5; ++k) zero[i][j][k] = is_zero(t(i, j, k));
  if (!satisfies_q_conditions(zero, kSigma)) {
    throw Error(ErrorKind::ConsistencyFailure, "relabeled tensor violates (Q1)/(Q2)");
  }
  report.relabeled_q_polynomial = true;
  return report;
}

/// First Krein matrix of the fusion by kPartition, over Q(m).
Matrix<RatFunc> fused_first_krein_symbolic();

struct EntryComparison {
  std::size_t row = 0;
  std::size_t col = 0;
  std::string computed;
  std::string reference;
  bool equal = true;
};

template <class T>
std::vector<EntryComparison> compare_entries(const Matrix<T>& computed, const Matrix<T>& reference) {
  std::vector<EntryComparison> out;
  for (std::size_t i = 0; i < computed.rows(); ++i)
    for (std::size_t j = 0; j < computed.cols(); ++j)
      out.push_back({i, j, to_string(computed(i, j)), to_string(reference(i, j)), computed(i, j) == reference(i, j)});
  return out;
}

struct FusionResult {
  Rational m;
  Rational delta_squared;
  QuadraticNumber delta;
  Matrix<Rational> c1;          // fused first Krein matrix, computed
  Matrix<QuadraticNumber> S;    // second eigenmatrix of the fusion, rows by descending valency
  Matrix<QuadraticNumber> P;    // (m^2+6m+1) S^{-1}
  std::vector<QuadraticNumber> valencies;
  bool integral = false;
  bool reference_s_matches = false;  // up to row order
  std::vector<int> reference_s_rows;  // reference row for each computed row, -1 if none
  QuadraticNumber ratio;              // m(7m^2-22m+7)/delta
  std::vector<std::string> valency_formula;  // relation between printed and computed valencies
};

/// Throws DegenerateParameter for m <= 1.
FusionResult fusion_pipeline(const Rational& m);

/// For each row of `computed`, the row of `reference` whose entry in column
/// `key` is equal, or -1.
std::vector<int> match_rows_by_column(const Matrix<QuadraticNumber>& computed,
                                      const Matrix<QuadraticNumber>& reference, std::size_t key);

}  // namespace asx::casev

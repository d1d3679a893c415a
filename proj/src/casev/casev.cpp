#include "asx/casev/casev.hpp"

#include <algorithm>
#include <numeric>

#include "asx/casev/reference.hpp"
#include "asx/scheme/eigen.hpp"

namespace asx::casev {

namespace {

template <class T>
KreinTridiagonal<T> build(const T& m) {
  const T one(1);
  const T two(2);
  KreinTridiagonal<T> s;
  s.d = 5;
  s.c = {one, (m - one) / two, two * m / (m + one), two * (m - one) / (m + one), m};
  s.a = {T(0), (m - one) * (m - one) / (two * (m + one)), T(0), (m - one) * (m - one) / (m + one), T(0)};
  s.b = {m, m - one, two * m / (m + one), m * (m - one) / (m + one), one};
  return s;
}

}  // namespace

KreinTridiagonal<Rational> casev_spec(const Rational& m) {
  if (m <= Rational(1)) {
    throw Error(ErrorKind::DegenerateParameter, "m = " + m.to_string() + " gives c_2* = (m-1)/2 <= 0");
  }
  auto s = build(m);
  check_casev_relations(s, m);
  return s;
}

KreinTridiagonal<RatFunc> casev_spec_symbolic() {
  const RatFunc m = RatFunc::variable("m");
  auto s = build(m);
  check_casev_relations(s, m);
  return s;
}

Matrix<RatFunc> fused_first_krein_symbolic() {
  const auto t = krein_ladder(casev_spec_symbolic());
  std::vector<RatFunc> mult;
  for (int i = 0; i <= 5; ++i) mult.push_back(t.column_sum(i, 0));
  return fuse(t, mult, FusionPartition::parse(kPartition)).tensor.B[1];
}

std::vector<int> match_rows_by_column(const Matrix<QuadraticNumber>& computed,
                                      const Matrix<QuadraticNumber>& reference, std::size_t key) {
  std::vector<int> out(computed.rows(), -1);
  std::vector<bool> taken(reference.rows(), false);
  for (std::size_t i = 0; i < computed.rows(); ++i) {
    for (std::size_t j = 0; j < reference.rows(); ++j) {
      if (!taken[j] && computed(i, key) == reference(j, key)) {
        out[i] = static_cast<int>(j);
        taken[j] = true;
        break;
      }
    }
  }
  return out;
}

FusionResult fusion_pipeline(const Rational& m) {
  const auto spec = casev_spec(m);
  const auto t = krein_ladder(spec);
  std::vector<Rational> mult;
  for (int i = 0; i <= 5; ++i) mult.push_back(t.column_sum(i, 0));
  const auto fused = fuse(t, mult, FusionPartition::parse(kPartition));

  FusionResult r;
  r.m = m;
  r.c1 = fused.tensor.B[1];
  r.delta_squared = (m * m - Rational(2) * m + Rational(9)) * (Rational(9) * m * m - Rational(2) * m + Rational(1));
  r.delta = QuadraticNumber::sqrt_of(r.delta_squared);
  const QuadraticNumber n(m * m + Rational(6) * m + Rational(1));

  Matrix<QuadraticNumber> S = common_eigenmatrix(fused.tensor);
  const mpz_class radicand = common_radicand(S);
  if (radicand != r.delta.radicand()) {
    throw Error(ErrorKind::VerificationFailure, "fused eigenvalues live outside Q(delta)");
  }
  Matrix<QuadraticNumber> P = inverse(S) * n;
  // trivial row first, then by descending valency
  std::vector<std::size_t> order(S.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + 1, order.end(), [&](std::size_t x, std::size_t y) {
    return P(0, x).approximate() > P(0, y).approximate();
  });
  r.S = Matrix<QuadraticNumber>(S.rows(), S.cols());
  for (std::size_t u = 0; u < S.rows(); ++u)
    for (std::size_t i = 0; i < S.cols(); ++i) r.S(u, i) = S(order[u], i);
  r.P = inverse(r.S) * n;
  r.valencies = r.P.row(0);
  if (!(r.P * r.S == Matrix<QuadraticNumber>::identity(4) * n)) {
    throw Error(ErrorKind::VerificationFailure, "fused P*S != n*I");
  }
  r.integral = std::all_of(r.valencies.begin(), r.valencies.end(), [](const QuadraticNumber& v) {
    return v.is_rational() && v.as_rational().is_integer() && v.sign() > 0;
  });

  const auto printed = reference::fused_s(m, r.delta);
  r.reference_s_rows = match_rows_by_column(r.S, printed, 1);
  r.reference_s_matches = std::find(r.reference_s_rows.begin(), r.reference_s_rows.end(), -1) ==
                          r.reference_s_rows.end();
  for (std::size_t u = 0; u < 4 && r.reference_s_matches; ++u) {
    r.reference_s_matches = r.S.row(u) == printed.row(r.reference_s_rows[u]);
  }

  const QuadraticNumber mq(m);
  r.ratio = mq * (QuadraticNumber(7) * mq * mq - QuadraticNumber(22) * mq + QuadraticNumber(7)) / r.delta;
  auto present = [&](const QuadraticNumber& v) {
    return std::find(r.valencies.begin(), r.valencies.end(), v) != r.valencies.end();
  };
  const QuadraticNumber three_m = QuadraticNumber(3) * mq;
  for (int sign : {1, -1}) {
    const std::string pm = sign > 0 ? "+" : "-";
    const QuadraticNumber read_as_printed = r.ratio + QuadraticNumber(sign) * three_m;
    const QuadraticNumber consistent = three_m + QuadraticNumber(sign) * r.ratio;
    r.valency_formula.push_back("ratio " + pm + " 3m = " + read_as_printed.to_string() +
                                (present(read_as_printed) ? " (a valency)" : " (not a valency)"));
    r.valency_formula.push_back("3m " + pm + " ratio = " + consistent.to_string() +
                                (present(consistent) ? " (a valency)" : " (not a valency)"));
  }
  return r;
}

}  // namespace asx::casev

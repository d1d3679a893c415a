#include "asx/casev/reference.hpp"

namespace asx::casev::reference {

namespace {

QuadraticNumber q(const char* text) { return QuadraticNumber::parse(text); }
Rational r(const char* text) { return Rational::parse(text); }

}  // namespace

Matrix<QuadraticNumber> q_m5() {
  // rows 4 and 5, columns 2 and 3 read 2(4 +- 2 sqrt 21)/3
  return {
      {1, 5, 10, 10, 25, 5},
      {1, 1, -2, -2, 1, 1},
      {1, q("-2+1/3*sqrt(21)"), q("2/3-2/3*sqrt(21)"), q("2/3+2/3*sqrt(21)"), q("5/3"), q("-2-1/3*sqrt(21)")},
      {1, q("-2-1/3*sqrt(21)"), q("2/3+2/3*sqrt(21)"), q("2/3-2/3*sqrt(21)"), q("5/3"), q("-2+1/3*sqrt(21)")},
      {1, q("1+2/3*sqrt(21)"), q("8/3+4/3*sqrt(21)"), q("8/3-4/3*sqrt(21)"), q("-25/3"), q("1-2/3*sqrt(21)")},
      {1, q("1-2/3*sqrt(21)"), q("8/3-4/3*sqrt(21)"), q("8/3+4/3*sqrt(21)"), q("-25/3"), q("1+2/3*sqrt(21)")},
  };
}

Matrix<QuadraticNumber> q_m5_corrected() {
  auto m = q_m5();
  m(4, 2) = q("8/3+2/3*sqrt(21)");
  m(4, 3) = q("8/3-2/3*sqrt(21)");
  m(5, 2) = q("8/3-2/3*sqrt(21)");
  m(5, 3) = q("8/3+2/3*sqrt(21)");
  return m;
}

Matrix<Rational> b1_m5() {
  return {
      {0, 1, 0, 0, 0, 0},
      {25, r("72/7"), 10, 10, r("100/7"), r("100/7")},
      {0, 4, 5, r("20/3"), r("20/3"), 0},
      {0, 4, r("20/3"), 5, 0, r("20/3")},
      {0, r("20/7"), r("10/3"), 0, r("20/7"), r("25/21")},
      {0, r("20/7"), 0, r("10/3"), r("25/21"), r("20/7")},
  };
}

Matrix<RatFunc> fused_c1() {
  const RatFunc m = RatFunc::variable("m");
  const RatFunc one(1);
  return {
      {0, 1, 0, 0},
      {RatFunc(2) * m, 0, (m - one) / RatFunc(2), 2},
      {0, m - one, (m * m + RatFunc(6) * m + one) / (RatFunc(2) * (m + one)), (m - one) / (RatFunc(4) * (m + one))},
      {0, m, (m - one) * m / (m + one), (m - one) * (m - one) / (RatFunc(2) * (m + one))},
  };
}

Matrix<QuadraticNumber> fused_s(const Rational& mr, const QuadraticNumber& delta) {
  using QN = QuadraticNumber;
  const QN m(mr);
  const QN one(1);
  const QN mp1 = m + one;
  const QN mm1 = m - one;
  auto row = [&](const QN& sd) {
    return std::vector<QN>{
        one,
        (m * m - QN(10) * m + one + sd) / (QN(4) * mp1),
        (QN(5) * m * m - QN(2) * m + QN(5) + sd) * mm1 / (QN(4) * mp1 * mp1),
        -(QN(3) * m * m - QN(6) * m + QN(3) + sd) * m / (QN(2) * mp1 * mp1),
    };
  };
  const auto plus = row(delta);
  const auto minus = row(-delta);
  return {
      {one, QN(2) * m, QN(4) * m, m * m},
      {one, QN(2), QN(-4), one},
      {plus[0], plus[1], plus[2], plus[3]},
      {minus[0], minus[1], minus[2], minus[3]},
  };
}

}  // namespace asx::casev::reference

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asx/algebra/errors.hpp"
#include "asx/algebra/factor.hpp"
#include "asx/algebra/linalg.hpp"
#include "asx/algebra/multipoly.hpp"
#include "asx/algebra/quadratic.hpp"
#include "asx/algebra/ratfunc.hpp"
#include "asx/algebra/rational.hpp"

using namespace asx;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
QuadraticNumber Qn(const char* s) { return QuadraticNumber::parse(s); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

Rational random_rational(std::mt19937& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(R("-6/4").to_string() == "-3/2");
  CHECK(R("-6/4") == Rational(mpz_class(-3), mpz_class(2)));
  CHECK((R("1/6") + R("1/3")).to_string() == "1/2");
  CHECK(R("0/5").to_string() == "0");
  CHECK(kind_of([] { R("1/0"); }) == ErrorKind::ZeroDenominator);
  CHECK(kind_of([] { R("1.5"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { R("1").inverse() / Rational(0); }) == ErrorKind::DivisionByZero);
  CHECK(simplest_between(R("1/3"), R("1/2")) == R("1/2"));
  CHECK(simplest_between(R("32/100"), R("34/100")) == R("1/3"));
}

TEST_CASE("quadratic sign") {
  CHECK(QuadraticNumber().sign() == 0);
  CHECK(Qn("-2+1/3*sqrt(21)").sign() < 0);
  CHECK(Qn("1+2/3*sqrt(21)").sign() > 0);
  CHECK(Qn("5-sqrt(25)").is_rational());
  CHECK(QuadraticNumber::make(Rational(0), Rational(1), mpz_class(12)).to_string() == "2*sqrt(3)");
  CHECK(QuadraticNumber::sqrt_of(R("5184")) == QuadraticNumber(72));
  CHECK(kind_of([] { Qn("sqrt(2)") + Qn("sqrt(3)"); }) == ErrorKind::MixedScalars);
  const auto x = Qn("-2+1/3*sqrt(21)");
  CHECK(x * x.inverse() == QuadraticNumber(1));
  CHECK(QuadraticNumber::parse(x.to_string()) == x);
}

TEST_CASE("quadratic sign agrees with high-precision approximation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> rad(2, 40);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto x = QuadraticNumber::make(random_rational(rng, 30), random_rational(rng), mpz_class(rad(rng)));
    const mpf_class approx = x.approximate(512);
    const int s = sgn(approx);
    if (abs(approx) < mpf_class("1e-100")) {
      CHECK(x.sign() == 0);
    } else {
      CHECK(x.sign() == s);
    }
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("matrix inverse") {
  const Matrix<Rational> id = Matrix<Rational>::identity(4);
  CHECK(inverse(id) == id);
  const Matrix<Rational> m{{1, 2}, {3, 4}};
  const Matrix<Rational> expect{{-2, 1}, {R("3/2"), R("-1/2")}};
  CHECK(inverse(m) == expect);
  CHECK(determinant(m) == Rational(-2));
  const Matrix<Rational> singular{{1, 2}, {2, 4}};
  CHECK(kind_of([&] { inverse(singular); }) == ErrorKind::SingularMatrix);
  CHECK(determinant(singular).is_zero());
  Matrix<QuadraticNumber> mixed{{Qn("sqrt(2)"), 0}, {0, Qn("sqrt(3)")}};
  CHECK(kind_of([&] { inverse(mixed); }) == ErrorKind::MixedScalars);
}

TEST_CASE("random inverses are two-sided") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 60) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
    if (determinant(m).is_zero()) continue;
    const auto inv = inverse(m);
    CHECK(inv * m == Matrix<Rational>::identity(n));
    CHECK(m * inv == Matrix<Rational>::identity(n));
    Matrix<QuadraticNumber> mq = m.map([](const Rational& v) { return QuadraticNumber(v); });
    CHECK(determinant(mq) == QuadraticNumber(determinant(m)));
    ++done;
  }
}

TEST_CASE("charpoly and factorization") {
  const UPoly x = UPoly::x();
  auto f = factor_low_degree(x * x - UPoly(Rational(1)));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.expand() == x * x - UPoly(Rational(1)));

  CHECK(kind_of([&] { factor_low_degree(x * x * x - UPoly(Rational(2))); }) ==
        ErrorKind::UnsupportedAlgebraicDegree);

  const Matrix<Rational> m{{0, 1}, {3, 2}};
  CHECK(charpoly(m) == x * x - UPoly(Rational(2)) * x - UPoly(Rational(3)));

  auto roots = real_roots(x * x - x - UPoly(Rational(1)));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Qn("1/2+1/2*sqrt(5)"));
  CHECK(roots[1] == Qn("1/2-1/2*sqrt(5)"));
  CHECK(kind_of([&] { real_roots(x * x + UPoly(Rational(1))); }) == ErrorKind::UnsupportedAlgebraicDegree);
}

TEST_CASE("factorization re-expands for random products") {
  std::mt19937 rng(3);
  const UPoly x = UPoly::x();
  for (int t = 0; t < 100; ++t) {
    UPoly p(random_rational(rng) + Rational(10));
    const int pieces = 1 + rng() % 4;
    for (int k = 0; k < pieces; ++k) {
      if (rng() % 2) {
        p = p * (x - UPoly(random_rational(rng)));
      } else {
        p = p * (x * x + UPoly(random_rational(rng)) * x + UPoly(random_rational(rng)));
      }
    }
    const auto f = factor_low_degree(p);
    CHECK(f.expand() == p);
    for (const auto& pf : f.factors) {
      CHECK(pf.poly.degree() <= 2);
      CHECK(pf.poly.leading() == Rational(1));
      if (pf.poly.degree() == 2) {
        const Rational b = pf.poly.coefficient(1);
        const Rational c = pf.poly.coefficient(0);
        const auto disc = b * b - Rational(4) * c;
        bool square = disc.sign() >= 0 && QuadraticNumber::sqrt_of(disc).is_rational();
        CHECK_FALSE(square);
      }
    }
  }
}

TEST_CASE("multivariate polynomials") {
  const auto m = MultiPoly::variable("m");
  const auto a = MultiPoly::variable("a");
  const auto p = (m + a) * (m - a);
  CHECK(p == m * m - a * a);
  CHECK(gcd(p, (m + a) * (m + a)) == m + a);
  CHECK(divide_exact(p, m - a).value() == m + a);
  CHECK_FALSE(divide_exact(p, m * m).has_value());
  CHECK(p.substitute("a", MultiPoly(Rational(1))) == m * m - MultiPoly(Rational(1)));
}

TEST_CASE("rational function normalization") {
  const auto m = RatFunc::variable("m");
  const auto one = RatFunc(1);
  const auto f = (m * m - one) / (m - one);
  CHECK(f == m + one);
  CHECK(f.denominator() == MultiPoly(Rational(1)));
  CHECK(((m - one) / (m + one)).evaluate({{"m", Rational(5)}}) == R("2/3"));
  CHECK(kind_of([&] { (one / (m - one)).evaluate({{"m", Rational(1)}}); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { one / RatFunc(); }) == ErrorKind::DivisionByZero);
  const auto g = (Rational(2) * m) / (Rational(4) * m + Rational(2) * one);
  CHECK(equal_by_cross_multiplication(g, m / (Rational(2) * m + one)));
  CHECK(g == m / (Rational(2) * m + one));
}

TEST_CASE("rational function distributivity on random triples") {
  std::mt19937 rng(5);
  const char* names[] = {"x", "y", "z"};
  auto random_poly = [&] {
    MultiPoly p(random_rational(rng, 3));
    for (int k = 0; k < 2; ++k) {
      MultiPoly term(random_rational(rng, 3));
      for (const char* v : names) {
        if (rng() % 2) term = term * MultiPoly::variable(v);
      }
      p = p + term;
    }
    return p;
  };
  auto random_ratfunc = [&] {
    MultiPoly den = random_poly();
    while (den.is_zero()) den = random_poly();
    return RatFunc(random_poly(), den);
  };
  for (int t = 0; t < 40; ++t) {
    const auto f = random_ratfunc();
    const auto g = random_ratfunc();
    const auto h = random_ratfunc();
    const auto lhs = (f + g) * h;
    const auto rhs = f * h + g * h;
    CHECK(lhs == rhs);
    CHECK(equal_by_cross_multiplication(lhs, rhs));
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
  }
}

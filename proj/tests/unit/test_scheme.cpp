#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "asx/algebra/errors.hpp"
#include "asx/oracle/relations.hpp"
#include "asx/scheme/eigen.hpp"
#include "asx/scheme/feasibility.hpp"
#include "asx/scheme/fusion.hpp"
#include "asx/scheme/ordering.hpp"
#include "asx/scheme/params.hpp"

using namespace asx;

namespace {

using QN = QuadraticNumber;

QN Qn(const char* s) { return QN::parse(s); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

KreinTridiagonal<Rational> spec_of(std::vector<int> c, std::vector<int> a, std::vector<int> b) {
  KreinTridiagonal<Rational> s;
  s.d = static_cast<int>(c.size());
  for (int v : c) s.c.emplace_back(v);
  for (int v : a) s.a.emplace_back(v);
  for (int v : b) s.b.emplace_back(v);
  return s;
}

/// Oracle Krein tensor moved into a Q-polynomial order, plus that order's
/// multiplicities.
std::pair<KreinTensor<QN>, std::vector<QN>> q_polynomial_view(const SchemeParams& p) {
  const auto orders = enumerate_q_orderings(p.kreins);
  REQUIRE_FALSE(orders.empty());
  const auto& sigma = orders.front();
  std::vector<QN> m;
  for (int i : sigma) m.push_back(p.multiplicities[i]);
  return {relabel_tensor(p.kreins, sigma), m};
}

}  // namespace

TEST_CASE("krein ladder basics") {
  const auto cube = spec_of({1, 2, 3}, {0, 0, 0}, {3, 2, 1});
  cube.validate();
  const auto t = krein_ladder(cube);
  CHECK(t.B[0] == Matrix<Rational>::identity(4));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) CHECK(commute(t.B[i], t.B[j]));
  for (int i = 0; i <= 3; ++i)
    for (int k = 0; k <= 3; ++k) CHECK(t.column_sum(i, k) == t.column_sum(i, 0));
  CHECK(t.column_sum(3, 0) == Rational(1));

  auto bad = cube;
  bad.c[1] = Rational(0);
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvariantViolation);
  CHECK(kind_of([&] { krein_ladder(bad); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("dual eigensystem of small specs") {
  const auto k4 = spec_of({1}, {2}, {3});
  const auto sys = dual_eigensystem(k4);
  const Matrix<QN> expect{{1, 3}, {1, -1}};
  CHECK(sys.Q == expect);
  const auto P = first_eigenmatrix(sys.Q, QN(4));
  CHECK(P == expect);

  const auto c5 = spec_of({1, 1}, {0, 1}, {2, 1});
  const auto s5 = dual_eigensystem(c5);
  REQUIRE(s5.theta.size() == 3);
  CHECK(s5.theta[0] == QN(2));
  CHECK(s5.theta[1] == Qn("-1/2+1/2*sqrt(5)"));
  CHECK(s5.theta[2] == Qn("-1/2-1/2*sqrt(5)"));
  CHECK(s5.Q.row(0) == std::vector<QN>{1, 2, 2});

  const auto repeated = spec_of({1, 1}, {0, 1}, {1, 0});
  CHECK(kind_of([&] { dual_eigensystem(repeated); }) == ErrorKind::RepeatedEigenvalue);
}

TEST_CASE("params, intersections and feasibility for the 3-cube") {
  auto p = params_from_spec(spec_of({1, 2, 3}, {0, 0, 0}, {3, 2, 1}));
  CHECK(p.n == QN(8));
  CHECK(p.P * p.Q == Matrix<QN>::identity(4) * QN(8));
  const auto& inter = ensure_intersections(p);
  CHECK(inter(1, 1, 2) == QN(2));
  const auto report = feasibility_report(p);
  CHECK(report.passed());
  CHECK(report.checks.size() == 6);
  CHECK(report.checks[0].name == "krein nonnegativity");
  CHECK(report.checks[3].name == "intersection integrality");
}

TEST_CASE("injected negative Krein parameter fails nonnegativity") {
  auto spec = spec_of({1, 2, 3}, {0, 0, 0}, {3, 2, 1});
  spec.b[1] = Rational(-1);
  spec.a[0] = Rational(3);
  auto p = params_from_spec(spec);
  const auto report = feasibility_report(p);
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->name == "krein nonnegativity");
  CHECK_FALSE(report.checks[0].witnesses.empty());
}

TEST_CASE("orderings and classification") {
  const auto c5 = krein_ladder(spec_of({1, 1}, {0, 1}, {2, 1}));
  const auto orders = enumerate_q_orderings(c5);
  REQUIRE(orders.size() == 2);
  CHECK(orders[0] == Ordering{0, 1, 2});
  CHECK(orders[1] == Ordering{0, 2, 1});

  CHECK(classify_structure_pair({0, 5, 3, 2, 4, 1}, 5) == StructureType::V);
  CHECK(classify_structure_pair({0, 5, 1, 4, 2, 3}, 5) == StructureType::II);
  CHECK(classify_structure_pair({0, 1, 2, 3, 4, 5}, 5) == StructureType::None);
  CHECK(classify_structure_pair({0, 2, 4, 5, 3, 1}, 5) == StructureType::I);
  CHECK(classify_structure_pair({0, 5, 2, 3, 4, 1}, 5) == StructureType::III);
  CHECK(classify_structure_pair({0, 3, 2, 1, 4}, 4) == StructureType::IV);
  CHECK(cycle_string({0, 5, 3, 2, 4, 1}) == "(1 5)(2 3)");

  StructureTensor<Rational> big;
  big.B.assign(10, Matrix<Rational>::identity(10));
  CHECK(kind_of([&] { enumerate_q_orderings(big); }) == ErrorKind::TooManyClasses);

  // a d=2 tensor whose q^2_11 vanishes admits no ordering
  auto k = krein_ladder(spec_of({1, 1}, {0, 1}, {2, 1}));
  k(1, 1, 2) = Rational(0);
  k(2, 1, 1) = Rational(0);
  CHECK(enumerate_q_orderings(k).size() == 1);
}

TEST_CASE("relabel is an involution for random permutations") {
  const auto t = krein_ladder(spec_of({1, 2, 3}, {0, 0, 0}, {3, 2, 1}));
  std::mt19937 rng(1);
  for (int r = 0; r < 20; ++r) {
    Ordering sigma{0, 1, 2, 3};
    std::shuffle(sigma.begin() + 1, sigma.end(), rng);
    CHECK(relabel_tensor(relabel_tensor(t, sigma), inverse_ordering(sigma)) == t);
  }
}

TEST_CASE("fusion") {
  const auto t = krein_ladder(spec_of({1, 2, 3}, {0, 0, 0}, {3, 2, 1}));
  const std::vector<Rational> m{1, 3, 3, 1};
  const auto same = fuse(t, m, FusionPartition::singletons(3));
  CHECK(same.tensor == t);
  CHECK(same.multiplicities == m);
  const auto halved = fuse(t, m, FusionPartition::parse("0|2|1,3"));
  CHECK(halved.multiplicities == std::vector<Rational>{1, 3, 4});
  CHECK(kind_of([&] { fuse(t, m, FusionPartition::parse("0,1|2|3")); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([&] { fuse(t, m, FusionPartition::parse("0|1|2")); }) == ErrorKind::InvalidPartition);
  CHECK(kind_of([&] { fuse(t, m, FusionPartition::parse("0|1|2,3")); }) == ErrorKind::WellDefinednessViolation);
  CHECK(kind_of([] { FusionPartition::parse("0|1,"); }) == ErrorKind::InvalidPartition);
  CHECK(FusionPartition::parse(" 0 | 1,5 | 2,3 | 4").to_string() == "0|1,5|2,3|4");
}

TEST_CASE("oracle named schemes") {
  CHECK(kind_of([] { oracle::named_scheme("dodecahedron", 1); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { oracle::named_scheme("cycle", 2); }) == ErrorKind::InvalidParameter);
  CHECK(oracle::named_scheme("complete", 4).d() == 1);
  CHECK(oracle::named_scheme("cycle", 5).d() == 2);
  const auto cube = oracle::named_scheme("hypercube", 3);
  CHECK(cube.n == 8);
  CHECK(cube.d() == 3);

  const auto k4 = oracle::scheme_from_relations(oracle::named_scheme("complete", 4));
  const Matrix<QN> expect{{1, 3}, {1, -1}};
  CHECK(k4.P == expect);
  CHECK(k4.Q == expect);
  CHECK((*k4.intersections)(1, 1, 1) == QN(2));
  const auto c5 = oracle::scheme_from_relations(oracle::named_scheme("cycle", 5));
  CHECK((*c5.intersections)(1, 1, 2) == QN(1));

  oracle::RelationSet broken;
  broken.n = 4;
  broken.relations.assign(3, oracle::IntMatrix(4, std::vector<long long>(4, 0)));
  for (int x = 0; x < 4; ++x) broken.relations[0][x][x] = 1;
  broken.relations[1][0][1] = broken.relations[1][1][0] = 1;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (x != y && !broken.relations[1][x][y]) broken.relations[2][x][y] = 1;
  CHECK(kind_of([&] { oracle::scheme_from_relations(broken); }) == ErrorKind::NotAScheme);
}

TEST_CASE("oracle equivalence with the Krein ladder") {
  const std::vector<std::pair<std::string, int>> names{{"complete", 4}, {"cycle", 5}, {"petersen", 0}, {"hypercube", 3}};
  for (const auto& [name, param] : names) {
    CAPTURE(name);
    auto params = oracle::scheme_from_relations(oracle::named_scheme(name, param));
    CHECK(params.P * params.Q == Matrix<QN>::identity(params.d + 1) * params.n);
    const auto [tensor, mults] = q_polynomial_view(params);
    CHECK(krein_ladder(tridiagonal_from_tensor(tensor)) == tensor);
    const int d = params.d;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; j <= d; ++j)
        for (int k = 0; k <= d; ++k) {
          CHECK(mults[k] * tensor(i, j, k) == mults[j] * tensor(i, k, j));
          CHECK(mults[k] * tensor(i, j, k) == mults[i] * tensor(k, j, i));
        }
    CHECK(feasibility_report(params).passed());
  }
}

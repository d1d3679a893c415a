#include "asx/scheme/eigen.hpp"

#include <algorithm>

#include "asx/algebra/errors.hpp"
#include "asx/algebra/factor.hpp"

namespace asx {

std::vector<QuadraticNumber> order_roots(std::vector<QuadraticNumber> roots, const QuadraticNumber& first) {
  std::vector<QuadraticNumber> out;
  auto it = std::find(roots.begin(), roots.end(), first);
  if (it != roots.end()) {
    out.push_back(*it);
    roots.erase(it);
  }
  std::vector<std::vector<QuadraticNumber>> groups;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<QuadraticNumber> g{roots[i]};
    if (!roots[i].is_rational()) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        if (!used[j] && roots[j] == roots[i].conjugate()) {
          used[j] = true;
          g.push_back(roots[j]);
          break;
        }
      }
    }
    std::sort(g.begin(), g.end(), [](const auto& x, const auto& y) { return x.approximate() > y.approximate(); });
    groups.push_back(std::move(g));
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) {
    return x.front().approximate() > y.front().approximate();
  });
  for (auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::vector<QuadraticNumber> dual_polynomials_at(const KreinTridiagonal<Rational>& spec, const QuadraticNumber& x) {
  std::vector<QuadraticNumber> v{QuadraticNumber(1), x};
  for (int i = 1; i < spec.d; ++i) {
    const QuadraticNumber next =
        ((x - QuadraticNumber(spec.a_at(i))) * v[i] - QuadraticNumber(spec.b_at(i - 1)) * v[i - 1]) /
        QuadraticNumber(spec.c_at(i + 1));
    v.push_back(next);
  }
  v.resize(spec.d + 1);
  return v;
}

DualEigensystem dual_eigensystem(const KreinTridiagonal<Rational>& spec) {
  DualEigensystem out;
  out.annihilator = charpoly(spec.first_matrix());
  for (const auto& f : factor_low_degree(out.annihilator).factors) {
    if (f.multiplicity > 1) {
      throw Error(ErrorKind::RepeatedEigenvalue, "repeated root of " + f.poly.to_string());
    }
  }
  out.theta = order_roots(real_roots(out.annihilator), QuadraticNumber(spec.rank()));
  if (out.theta.front() != QuadraticNumber(spec.rank())) {
    throw Error(ErrorKind::InconsistentEigenmatrices, "b_0* is not an eigenvalue of B1*");
  }
  const int d = spec.d;
  out.Q = Matrix<QuadraticNumber>(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    const auto v = dual_polynomials_at(spec, out.theta[j]);
    for (int i = 0; i <= d; ++i) out.Q(j, i) = v[i];
  }
  common_radicand(out.Q);
  return out;
}

Matrix<QuadraticNumber> first_eigenmatrix(const Matrix<QuadraticNumber>& Q, const QuadraticNumber& n) {
  return inverse(Q) * n;
}

Matrix<QuadraticNumber> common_eigenmatrix(const StructureTensor<Rational>& t) {
  const int d = t.d();
  const std::size_t size = d + 1;
  Matrix<Rational> generic;
  UPoly poly;
  bool found = false;
  for (int s = 1; s <= 40 && !found; ++s) {
    generic = Matrix<Rational>(size, size);
    Rational weight(1);
    for (int i = 1; i <= d; ++i) {
      generic += t.B[i] * weight;
      weight *= Rational(s);
    }
    poly = charpoly(generic);
    found = gcd(poly, poly.derivative()).degree() == 0;
  }
  if (!found) throw Error(ErrorKind::RepeatedEigenvalue, "no separating combination of the B_i");

  std::vector<std::vector<QuadraticNumber>> rows;
  const auto roots = real_roots(poly);
  for (const auto& root : roots) {
    Matrix<QuadraticNumber> shifted = generic.map([](const Rational& v) { return QuadraticNumber(v); });
    for (std::size_t i = 0; i < size; ++i) shifted(i, i) -= root;
    auto w = null_vector(shifted);
    if (!w) throw Error(ErrorKind::InconsistentEigenmatrices, "eigenvector with vanishing first coordinate");
    for (int i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        QuadraticNumber acc;
        for (std::size_t k = 0; k < size; ++k) acc += QuadraticNumber(t.B[i](j, k)) * (*w)[k];
        if (acc != (*w)[i] * (*w)[j]) {
          throw Error(ErrorKind::InconsistentEigenmatrices, "eigenvector is not common to all B_i");
        }
      }
    }
    rows.push_back(std::move(*w));
  }

  // principal row: w_i equals the column sums of B_i
  QuadraticNumber principal_root = roots.front();
  for (std::size_t u = 0; u < rows.size(); ++u) {
    bool principal = true;
    for (int i = 0; i <= d; ++i) principal = principal && rows[u][i] == QuadraticNumber(t.column_sum(i, 0));
    if (principal) principal_root = roots[u];
  }
  const auto order = order_roots(roots, principal_root);
  Matrix<QuadraticNumber> out(size, size);
  for (std::size_t u = 0; u < size; ++u) {
    const auto idx = std::find(roots.begin(), roots.end(), order[u]) - roots.begin();
    for (std::size_t i = 0; i < size; ++i) out(u, i) = rows[idx][i];
  }
  return out;
}

}  // namespace asx

#include "asx/oracle/relations.hpp"

#include <algorithm>
#include <deque>

#include "asx/algebra/errors.hpp"
#include "asx/algebra/factor.hpp"
#include "asx/algebra/linalg.hpp"
#include "asx/scheme/eigen.hpp"

namespace asx::oracle {

namespace {

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

int popcount(unsigned v) { return __builtin_popcount(v); }

}  // namespace

RelationSet distance_relations(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  int diameter = 0;
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : adjacency[x]) {
        if (dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          diameter = std::max(diameter, dist[s][y]);
          queue.push_back(y);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[s][t] < 0) throw Error(ErrorKind::InvalidParameter, "graph is disconnected");
    }
  }
  RelationSet rels;
  rels.n = n;
  rels.relations.assign(diameter + 1, IntMatrix(n, std::vector<long long>(n, 0)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rels.relations[dist[x][y]][x][y] = 1;
  return rels;
}

RelationSet named_scheme(const std::string& name, int parameter) {
  std::vector<std::vector<int>> adj;
  if (name == "complete") {
    if (parameter < 2) throw Error(ErrorKind::InvalidParameter, "complete(n) needs n >= 2");
    adj.resize(parameter);
    for (int x = 0; x < parameter; ++x)
      for (int y = 0; y < parameter; ++y)
        if (x != y) adj[x].push_back(y);
  } else if (name == "cycle") {
    if (parameter < 3) throw Error(ErrorKind::InvalidParameter, "cycle(n) needs n >= 3");
    adj.resize(parameter);
    for (int x = 0; x < parameter; ++x) {
      adj[x].push_back((x + 1) % parameter);
      adj[x].push_back((x + parameter - 1) % parameter);
    }
  } else if (name == "hypercube") {
    if (parameter < 1 || parameter > 9) throw Error(ErrorKind::InvalidParameter, "hypercube(d) needs 1 <= d <= 9");
    const int n = 1 << parameter;
    adj.resize(n);
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < parameter; ++b) adj[x].push_back(x ^ (1 << b));
  } else if (name == "petersen") {
    if (parameter != 0) throw Error(ErrorKind::InvalidParameter, "petersen takes no parameter");
    std::vector<unsigned> pairs;
    for (unsigned s = 0; s < 32; ++s)
      if (popcount(s) == 2) pairs.push_back(s);
    adj.resize(pairs.size());
    for (std::size_t x = 0; x < pairs.size(); ++x)
      for (std::size_t y = 0; y < pairs.size(); ++y)
        if ((pairs[x] & pairs[y]) == 0) adj[x].push_back(static_cast<int>(y));
  } else {
    throw Error(ErrorKind::UnknownName, "unknown scheme '" + name + "'");
  }
  return distance_relations(adj);
}

void validate_relations(const RelationSet& rels) {
  const int n = rels.n;
  if (rels.relations.empty()) throw Error(ErrorKind::NotAScheme, "no relations");
  for (const auto& a : rels.relations) {
    if (static_cast<int>(a.size()) != n) throw Error(ErrorKind::NotAScheme, "relation has wrong size");
    for (const auto& row : a)
      if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::NotAScheme, "relation has wrong size");
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      long long total = 0;
      for (int i = 0; i <= rels.d(); ++i) {
        const long long v = rels.relations[i][x][y];
        if (v != 0 && v != 1) throw Error(ErrorKind::NotAScheme, "entries must be 0 or 1");
        if (v != rels.relations[i][y][x]) throw Error(ErrorKind::NotAScheme, "relation " + std::to_string(i) + " is not symmetric");
        total += v;
      }
      if (total != 1) throw Error(ErrorKind::NotAScheme, "relations do not sum to the all-ones matrix");
      if ((x == y) != (rels.relations[0][x][y] == 1)) throw Error(ErrorKind::NotAScheme, "A_0 is not the identity");
    }
  }
  count_intersections(rels);
}

IntersectionTensor<Rational> count_intersections(const RelationSet& rels) {
  const int d = rels.d();
  const int n = rels.n;
  std::vector<std::pair<int, int>> witness(d + 1, {-1, -1});
  for (int k = 0; k <= d; ++k) {
    for (int x = 0; x < n && witness[k].first < 0; ++x)
      for (int y = 0; y < n; ++y)
        if (rels.relations[k][x][y]) {
          witness[k] = {x, y};
          break;
        }
    if (witness[k].first < 0) throw Error(ErrorKind::NotAScheme, "relation " + std::to_string(k) + " is empty");
  }
  IntersectionTensor<Rational> t;
  t.B.assign(d + 1, Matrix<Rational>(d + 1, d + 1));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      const IntMatrix prod = multiply(rels.relations[i], rels.relations[j]);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int k = 0;
          while (!rels.relations[k][x][y]) ++k;
          const auto [wx, wy] = witness[k];
          if (prod[x][y] != prod[wx][wy]) {
            throw Error(ErrorKind::NotAScheme, "A_" + std::to_string(i) + "A_" + std::to_string(j) +
                                                   " is not in the span of the relations");
          }
        }
      for (int k = 0; k <= d; ++k) t(i, j, k) = Rational(prod[witness[k].first][witness[k].second]);
    }
  }
  return t;
}

SchemeParams scheme_from_relations(const RelationSet& rels) {
  validate_relations(rels);
  const auto p = count_intersections(rels);
  const int d = rels.d();
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k) {
      const int gap = std::abs(j - k);
      if ((gap > 1 && !p(1, j, k).is_zero()) || (gap == 1 && p(1, j, k).is_zero())) {
        throw Error(ErrorKind::NotPPolynomial, "B_1 is not irreducible tridiagonal in the given order");
      }
    }
  const auto spec = tridiagonal_from_tensor(p);
  const auto poly = charpoly(spec.first_matrix());
  for (const auto& f : factor_low_degree(poly).factors) {
    if (f.multiplicity > 1) throw Error(ErrorKind::NotPPolynomial, "annihilator of B_1 has degree < d+1");
  }
  const auto theta = order_roots(real_roots(poly), QuadraticNumber(spec.rank()));
  Matrix<QuadraticNumber> P(d + 1, d + 1);
  for (int u = 0; u <= d; ++u) {
    const auto v = dual_polynomials_at(spec, theta[u]);
    for (int i = 0; i <= d; ++i) P(u, i) = v[i];
  }
  const QuadraticNumber n(rels.n);
  SchemeParams params = params_from_eigenmatrix(first_eigenmatrix(P, n));
  if (params.P != P) throw Error(ErrorKind::InconsistentEigenmatrices, "n*(n*P^{-1})^{-1} != P");
  params.kreins = krein_from_eigenmatrices(params);
  params.intersections = p.map([](const Rational& v) { return QuadraticNumber(v); });
  return params;
}

}  // namespace asx::oracle

#pragma once

#include <string>
#include <vector>

#include "asx/scheme/params.hpp"

namespace asx::oracle {

using IntMatrix = std::vector<std::vector<long long>>;

/// 0/1 relation matrices A_0..A_d on n points.
struct RelationSet {
  int n = 0;
  std::vector<IntMatrix> relations;

  int d() const { return static_cast<int>(relations.size()) - 1; }
};

/// Distance relations of complete(n), cycle(n), hypercube(d) or petersen.
/// Throws UnknownName or InvalidParameter.
RelationSet named_scheme(const std::string& name, int parameter = 0);

/// Distance relations of a connected graph given by adjacency lists.
RelationSet distance_relations(const std::vector<std::vector<int>>& adjacency);

/// Throws NotAScheme when the axioms or closure fail.
void validate_relations(const RelationSet& rels);

/// p^k_ij counted from products A_i A_j.
IntersectionTensor<Rational> count_intersections(const RelationSet& rels);

/// Parameters by direct counting and exact diagonalization of B_1.
/// Eigenvalues follow order_roots with the valency first. Throws NotAScheme,
/// NotPPolynomial or UnsupportedAlgebraicDegree.
SchemeParams scheme_from_relations(const RelationSet& rels);

}  // namespace asx::oracle

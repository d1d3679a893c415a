#pragma once

#include <vector>

#include "asx/algebra/quadratic.hpp"
#include "asx/algebra/upoly.hpp"

namespace asx {

struct PolyFactor {
  UPoly poly;  // monic, irreducible over Q, degree 1 or 2
  unsigned multiplicity = 1;
};

/// p = leading * prod(poly^multiplicity).
struct Factorization {
  Rational leading;
  std::vector<PolyFactor> factors;

  UPoly expand() const;
};

/// Splits p into monic irreducible factors of degree at most two.
///
/// Candidate factors come from high-precision floating root approximations;
/// every candidate is accepted only after exact polynomial division, so the
/// numerics can cost completeness but never correctness. Throws
/// UnsupportedAlgebraicDegree when an irreducible factor of degree >= 3 is left.
Factorization factor_low_degree(const UPoly& p);

/// Distinct real roots of p in decreasing order. Throws
/// UnsupportedAlgebraicDegree for non-real roots or high-degree factors.
std::vector<QuadraticNumber> real_roots(const UPoly& p);

}  // namespace asx

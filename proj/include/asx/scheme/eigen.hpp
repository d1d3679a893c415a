#pragma once

#include <vector>

#include "asx/algebra/linalg.hpp"
#include "asx/algebra/quadratic.hpp"
#include "asx/algebra/upoly.hpp"
#include "asx/scheme/tridiagonal.hpp"

namespace asx {

struct DualEigensystem {
  UPoly annihilator;                  // det(xI - B1*)
  std::vector<QuadraticNumber> theta;  // dual eigenvalues, theta[0] = b_0*
  Matrix<QuadraticNumber> Q;          // Q(j,i) = v_i*(theta_j)
};

/// Order used for dual eigenvalues: `first` leads; the rest are grouped into
/// rational roots and conjugate pairs, groups sorted by their larger member
/// descending, the larger conjugate first within a pair.
std::vector<QuadraticNumber> order_roots(std::vector<QuadraticNumber> roots, const QuadraticNumber& first);

/// v_0*(x) .. v_d*(x) evaluated at x.
std::vector<QuadraticNumber> dual_polynomials_at(const KreinTridiagonal<Rational>& spec, const QuadraticNumber& x);

DualEigensystem dual_eigensystem(const KreinTridiagonal<Rational>& spec);

/// P = n * Q^{-1}.
Matrix<QuadraticNumber> first_eigenmatrix(const Matrix<QuadraticNumber>& Q, const QuadraticNumber& n);

/// Common right eigenvectors of the B_i of a tensor, normalized so that
/// coordinate 0 is one; row u of the result is the u-th eigenvector, so for a
/// Krein tensor this is the second eigenmatrix and for an intersection
/// tensor the first. The row with all entries equal to the column sums
/// comes first, the rest follow the order_roots order of their B_1
/// eigenvalue.
Matrix<QuadraticNumber> common_eigenmatrix(const StructureTensor<Rational>& t);

}  // namespace asx

#pragma once

#include <optional>
#include <vector>

#include "asx/algebra/quadratic.hpp"
#include "asx/scheme/eigen.hpp"
#include "asx/scheme/tridiagonal.hpp"

namespace asx {

/// Eigenmatrices and parameters of a symmetric scheme. Q(j,i) = q_i(j),
/// P(j,i) = p_i(j); top rows carry the multiplicities and valencies.
struct SchemeParams {
  int d = 0;
  QuadraticNumber n;
  std::vector<QuadraticNumber> multiplicities;
  std::vector<QuadraticNumber> valencies;
  Matrix<QuadraticNumber> Q;
  Matrix<QuadraticNumber> P;
  KreinTensor<QuadraticNumber> kreins;
  std::optional<IntersectionTensor<QuadraticNumber>> intersections;
};

/// n, multiplicities, valencies and P from a second eigenmatrix.
SchemeParams params_from_eigenmatrix(const Matrix<QuadraticNumber>& Q);

/// Ladder, dual eigensystem and first eigenmatrix for a rational B1*.
SchemeParams params_from_spec(const KreinTridiagonal<Rational>& spec);

/// p^k_ij = (1/(n k_k)) sum_u m_u p_i(u) p_j(u) p_k(u), checked against
/// p^k_ij = (k_i k_j / n) sum_u q_u(i) q_u(j) q_u(k) / m_u^2.
/// Throws InconsistentEigenmatrices when the two disagree.
IntersectionTensor<QuadraticNumber> intersection_tensor(const SchemeParams& params);

/// q^k_ij = (1/(n m_k)) sum_u k_u q_i(u) q_j(u) q_k(u).
KreinTensor<QuadraticNumber> krein_from_eigenmatrices(const SchemeParams& params);

/// Fills params.intersections if empty and returns it.
const IntersectionTensor<QuadraticNumber>& ensure_intersections(SchemeParams& params);

}  // namespace asx

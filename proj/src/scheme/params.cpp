#include "asx/scheme/params.hpp"

#include "asx/algebra/errors.hpp"
#include "asx/scheme/eigen.hpp"

namespace asx {

SchemeParams params_from_eigenmatrix(const Matrix<QuadraticNumber>& Q) {
  SchemeParams p;
  p.d = static_cast<int>(Q.rows()) - 1;
  p.Q = Q;
  p.multiplicities = Q.row(0);
  for (const auto& m : p.multiplicities) p.n += m;
  p.P = first_eigenmatrix(Q, p.n);
  p.valencies = p.P.row(0);
  if (!(p.P * p.Q == Matrix<QuadraticNumber>::identity(p.d + 1) * p.n)) {
    throw Error(ErrorKind::InconsistentEigenmatrices, "P*Q != n*I");
  }
  return p;
}

SchemeParams params_from_spec(const KreinTridiagonal<Rational>& spec) {
  const auto sys = dual_eigensystem(spec);
  SchemeParams p = params_from_eigenmatrix(sys.Q);
  p.kreins = krein_ladder(spec).map([](const Rational& v) { return QuadraticNumber(v); });
  return p;
}

IntersectionTensor<QuadraticNumber> intersection_tensor(const SchemeParams& params) {
  const int d = params.d;
  const auto& P = params.P;
  const auto& Q = params.Q;
  const auto& m = params.multiplicities;
  const auto& k = params.valencies;
  for (const auto& v : k) {
    if (v.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero valency");
  }
  IntersectionTensor<QuadraticNumber> t;
  t.B.assign(d + 1, Matrix<QuadraticNumber>(d + 1, d + 1));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int c = 0; c <= d; ++c) {
        QuadraticNumber primal;
        QuadraticNumber dual;
        for (int u = 0; u <= d; ++u) {
          primal += m[u] * P(u, i) * P(u, j) * P(u, c);
          dual += Q(i, u) * Q(j, u) * Q(c, u) / (m[u] * m[u]);
        }
        primal /= params.n * k[c];
        dual *= k[i] * k[j] / params.n;
        if (primal != dual) {
          throw Error(ErrorKind::InconsistentEigenmatrices,
                      "p^" + std::to_string(c) + "_" + std::to_string(i) + std::to_string(j) + ": " +
                          primal.to_string() + " vs " + dual.to_string());
        }
        t(i, j, c) = primal;
      }
    }
  }
  return t;
}

KreinTensor<QuadraticNumber> krein_from_eigenmatrices(const SchemeParams& params) {
  const int d = params.d;
  const auto& Q = params.Q;
  KreinTensor<QuadraticNumber> t;
  t.B.assign(d + 1, Matrix<QuadraticNumber>(d + 1, d + 1));
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      for (int c = 0; c <= d; ++c) {
        QuadraticNumber s;
        for (int u = 0; u <= d; ++u) s += params.valencies[u] * Q(u, i) * Q(u, j) * Q(u, c);
        t(i, j, c) = s / (params.n * params.multiplicities[c]);
      }
    }
  }
  return t;
}

const IntersectionTensor<QuadraticNumber>& ensure_intersections(SchemeParams& params) {
  if (!params.intersections) params.intersections = intersection_tensor(params);
  return *params.intersections;
}

}  // namespace asx

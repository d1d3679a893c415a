#pragma once

#include <string>
#include <utility>
#include <vector>

#include "asx/algebra/errors.hpp"
#include "asx/algebra/matrix.hpp"

namespace asx {

/// The three diagonals of a first Krein matrix B1*.
///
/// c holds c_1..c_d, a holds a_1..a_d and b holds b_0..b_{d-1}. Column k of
/// B1* reads (c_k, a_k, b_k) top to bottom, so B1*(k-1,k) = c_k,
/// B1*(k,k) = a_k, B1*(k+1,k) = b_k.
template <class T>
struct KreinTridiagonal {
  int d = 0;
  std::vector<T> c;
  std::vector<T> a;
  std::vector<T> b;

  T c_at(int i) const { return (i >= 1 && i <= d) ? c[i - 1] : T(0); }
  T a_at(int i) const { return (i >= 1 && i <= d) ? a[i - 1] : T(0); }
  T b_at(int i) const { return (i >= 0 && i < d) ? b[i] : T(0); }
  const T& rank() const { return b.at(0); }

  Matrix<T> first_matrix() const {
    Matrix<T> m(d + 1, d + 1);
    for (int k = 0; k <= d; ++k) {
      if (k >= 1) {
        m(k - 1, k) = c_at(k);
        m(k, k) = a_at(k);
      }
      if (k < d) m(k + 1, k) = b_at(k);
    }
    return m;
  }

  /// Throws InvariantViolation on a zero off-diagonal entry, c_1 != 1 or a
  /// column sum other than b_0.
  void validate() const {
    if (d < 1) throw Error(ErrorKind::InvariantViolation, "class count must be at least 1");
    if (static_cast<int>(c.size()) != d || static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d) {
      throw Error(ErrorKind::InvariantViolation, "expected " + std::to_string(d) + " values in each of c, a, b");
    }
    for (int i = 1; i <= d; ++i) {
      if (is_zero(c_at(i))) {
        throw Error(ErrorKind::InvariantViolation, "(Q2) requires c_" + std::to_string(i) + "* != 0");
      }
    }
    for (int i = 0; i < d; ++i) {
      if (is_zero(b_at(i))) {
        throw Error(ErrorKind::InvariantViolation, "(Q2) requires b_" + std::to_string(i) + "* != 0");
      }
    }
    if (!(c_at(1) == T(1))) throw Error(ErrorKind::InvariantViolation, "c_1* must equal 1");
    for (int k = 1; k <= d; ++k) {
      const T sum = c_at(k) + a_at(k) + b_at(k);
      if (!(sum == rank())) {
        throw Error(ErrorKind::InvariantViolation, "column " + std::to_string(k) + " sums to " + to_string(sum) +
                                                       ", expected b_0* = " + to_string(rank()));
      }
    }
  }

  template <class F>
  auto map(F&& f) const -> KreinTridiagonal<decltype(f(std::declval<const T&>()))> {
    KreinTridiagonal<decltype(f(std::declval<const T&>()))> out;
    out.d = d;
    for (const auto& v : c) out.c.push_back(f(v));
    for (const auto& v : a) out.a.push_back(f(v));
    for (const auto& v : b) out.b.push_back(f(v));
    return out;
  }

  friend bool operator==(const KreinTridiagonal&, const KreinTridiagonal&) = default;
};

/// Structure constants x^k_ij held as the matrices B_i with (j,k) entry x^k_ij.
/// Used for both Krein parameters and intersection numbers.
template <class T>
struct StructureTensor {
  std::vector<Matrix<T>> B;

  int d() const { return static_cast<int>(B.size()) - 1; }
  /// x^k_ij
  const T& operator()(int i, int j, int k) const { return B[i](j, k); }
  T& operator()(int i, int j, int k) { return B[i](j, k); }

  /// Column sum of B_i, read from column 0 (equals x^0_ii for a scheme).
  T column_sum(int i, int k) const {
    T s(0);
    for (int j = 0; j <= d(); ++j) s += B[i](j, k);
    return s;
  }

  template <class F>
  auto map(F&& f) const -> StructureTensor<decltype(f(std::declval<const T&>()))> {
    StructureTensor<decltype(f(std::declval<const T&>()))> out;
    for (const auto& m : B) out.B.push_back(m.map(f));
    return out;
  }

  friend bool operator==(const StructureTensor& x, const StructureTensor& y) { return x.B == y.B; }
};

template <class T>
using KreinTensor = StructureTensor<T>;
template <class T>
using IntersectionTensor = StructureTensor<T>;

/// B_0* = I, B_1* from the diagonals, then the three-term recurrence.
template <class T>
KreinTensor<T> krein_ladder(const KreinTridiagonal<T>& spec) {
  const int d = spec.d;
  KreinTensor<T> t;
  t.B.push_back(Matrix<T>::identity(d + 1));
  if (d == 0) return t;
  const Matrix<T> b1 = spec.first_matrix();
  t.B.push_back(b1);
  for (int i = 2; i <= d; ++i) {
    const T ci = spec.c_at(i);
    if (is_zero(ci)) throw Error(ErrorKind::DivisionByZero, "c_" + std::to_string(i) + "* is zero");
    Matrix<T> next = b1 * t.B[i - 1];
    next -= t.B[i - 1] * spec.a_at(i - 1);
    next -= t.B[i - 2] * spec.b_at(i - 2);
    next *= T(1) / ci;
    t.B.push_back(std::move(next));
  }
  return t;
}

/// x^k_ij computed from B with row/column labels moved by sigma:
/// result(i,j,k) = t(sigma[i], sigma[j], sigma[k]).
template <class T>
StructureTensor<T> relabel_tensor(const StructureTensor<T>& t, const std::vector<int>& sigma) {
  const int d = t.d();
  if (static_cast<int>(sigma.size()) != d + 1) {
    throw Error(ErrorKind::InvalidArgument, "permutation length does not match the tensor");
  }
  StructureTensor<T> out;
  for (int i = 0; i <= d; ++i) {
    Matrix<T> m(d + 1, d + 1);
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) m(j, k) = t(sigma[i], sigma[j], sigma[k]);
    out.B.push_back(std::move(m));
  }
  return out;
}

}  // namespace asx

namespace asx {

/// Reads the diagonals back from B_1 of a tensor (B_1 tridiagonal assumed).
template <class T>
KreinTridiagonal<T> tridiagonal_from_tensor(const StructureTensor<T>& t) {
  KreinTridiagonal<T> spec;
  spec.d = t.d();
  for (int k = 1; k <= spec.d; ++k) {
    spec.c.push_back(t(1, k - 1, k));
    spec.a.push_back(t(1, k, k));
  }
  for (int k = 0; k < spec.d; ++k) spec.b.push_back(t(1, k + 1, k));
  return spec;
}

}  // namespace asx

#include "asx/algebra/linalg.hpp"

#include <type_traits>

#include "asx/algebra/errors.hpp"

namespace asx {

namespace {

void require_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw Error(ErrorKind::InvalidArgument, "square matrix required");
}

/// Plain Gauss-Jordan over a field; returns the determinant and, when asked,
/// the inverse.
template <class T>
T gauss_jordan(const Matrix<T>& m, Matrix<T>* inv) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> b = Matrix<T>::identity(n);
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && is_zero(a(piv, k))) ++piv;
    if (piv == n) {
      if (inv) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
      return T(0);
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(b(k, j), b(piv, j));
      }
      det = -det;
    }
    const T p = a(k, k);
    det *= p;
    const T pinv = T(1) / p;
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= pinv;
      b(k, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      const T f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        b(i, j) -= f * b(k, j);
      }
    }
  }
  if (inv) *inv = std::move(b);
  return det;
}

/// Integer-preserving Bareiss elimination on [A | I] after clearing
/// denominators row by row.
Rational bareiss(const Matrix<Rational>& m, Matrix<Rational>* inv) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) {
    if (inv) *inv = Matrix<Rational>();
    return Rational(1);
  }
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(2 * n, 0));
  Rational scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < n; ++j) den = lcm(den, m(i, j).denominator());
    scale *= Rational(den);
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = (m(i, j) * Rational(den)).numerator();
    }
    a[i][n + i] = den;
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) {
      if (inv) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
      return Rational(0);
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        mpz_class v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  // Every diagonal entry now equals det of the scaled matrix.
  const Rational det = Rational(prev) * Rational(sign) / scale;
  if (inv) {
    Matrix<Rational> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(a[i][n + j], a[i][i]);
    *inv = std::move(out);
  }
  return det;
}

}  // namespace

mpz_class common_radicand(const Matrix<QuadraticNumber>& m) {
  mpz_class d = 0;
  for (const auto& v : m.entries()) {
    if (v.is_rational()) continue;
    if (d == 0) {
      d = v.radicand();
    } else if (d != v.radicand()) {
      throw Error(ErrorKind::MixedScalars, "matrix mixes sqrt(" + d.get_str() + ") and sqrt(" +
                                               v.radicand().get_str() + ")");
    }
  }
  return d;
}

Rational determinant(const Matrix<Rational>& m) { return bareiss(m, nullptr); }

Matrix<Rational> inverse(const Matrix<Rational>& m) {
  Matrix<Rational> out;
  bareiss(m, &out);
  return out;
}

QuadraticNumber determinant(const Matrix<QuadraticNumber>& m) {
  common_radicand(m);
  return gauss_jordan<std::decay_t<decltype(m(0, 0))>>(m, nullptr);
}

Matrix<QuadraticNumber> inverse(const Matrix<QuadraticNumber>& m) {
  common_radicand(m);
  Matrix<QuadraticNumber> out;
  gauss_jordan(m, &out);
  return out;
}

RatFunc determinant(const Matrix<RatFunc>& m) { return gauss_jordan<std::decay_t<decltype(m(0, 0))>>(m, nullptr); }

Matrix<RatFunc> inverse(const Matrix<RatFunc>& m) {
  Matrix<RatFunc> out;
  gauss_jordan(m, &out);
  return out;
}

std::optional<std::vector<QuadraticNumber>> null_vector(const Matrix<QuadraticNumber>& m) {
  common_radicand(m);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix<QuadraticNumber> a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    const QuadraticNumber inv = a(r, c).inverse();
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const QuadraticNumber f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QuadraticNumber> v(cols);
    v[free] = QuadraticNumber(1);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a(k, free);
    if (v[0].is_zero()) continue;
    const QuadraticNumber inv = v[0].inverse();
    for (auto& x : v) x *= inv;
    return v;
  }
  return std::nullopt;
}

UPoly charpoly(const Matrix<Rational>& m) {
  require_square(m.rows(), m.cols());
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix<Rational> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> t = mk;
    for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
    mk = m * t;
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / Rational(k);
  }
  return UPoly(std::move(c));
}

}  // namespace asx

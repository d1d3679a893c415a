#pragma once

#include <optional>
#include <vector>

#include "asx/algebra/matrix.hpp"
#include "asx/algebra/quadratic.hpp"
#include "asx/algebra/ratfunc.hpp"
#include "asx/algebra/rational.hpp"
#include "asx/algebra/upoly.hpp"

namespace asx {

/// The common radicand of all irrational entries (0 if none).
/// Throws MixedScalars when two entries live in different quadratic fields.
mpz_class common_radicand(const Matrix<QuadraticNumber>& m);

/// Fraction-free (Bareiss) elimination.
Rational determinant(const Matrix<Rational>& m);
Matrix<Rational> inverse(const Matrix<Rational>& m);

QuadraticNumber determinant(const Matrix<QuadraticNumber>& m);
Matrix<QuadraticNumber> inverse(const Matrix<QuadraticNumber>& m);

RatFunc determinant(const Matrix<RatFunc>& m);
Matrix<RatFunc> inverse(const Matrix<RatFunc>& m);

/// Kernel vector normalized to have first nonzero-able coordinate 0 equal to one.
/// Returns nullopt when the kernel is trivial or every kernel vector has a zero
/// first coordinate.
std::optional<std::vector<QuadraticNumber>> null_vector(const Matrix<QuadraticNumber>& m);

/// det(xI - M), by Faddeev-LeVerrier.
UPoly charpoly(const Matrix<Rational>& m);

template <class T>
bool commute(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b == b * a;
}

template <class T>
std::vector<std::vector<std::string>> to_strings(const Matrix<T>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(to_string(m(i, j)));
  return out;
}

}  // namespace asx

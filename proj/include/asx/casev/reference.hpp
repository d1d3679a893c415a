#pragma once

#include "asx/algebra/matrix.hpp"
#include "asx/algebra/quadratic.hpp"
#include "asx/algebra/ratfunc.hpp"

// Reference tables, transcribed as printed (including misprints).
namespace asx::casev::reference {

/// Second eigenmatrix at m = 5 over Q(sqrt 21).
Matrix<QuadraticNumber> q_m5();
/// The same with the two misprinted rows corrected (2(4 +- sqrt 21)/3).
Matrix<QuadraticNumber> q_m5_corrected();
/// Intersection matrix B_1 at m = 5, relations in the row order of q_m5().
Matrix<Rational> b1_m5();
/// Fused first Krein matrix as printed, over Q(m).
Matrix<RatFunc> fused_c1();
/// Second eigenmatrix of the fusion as printed, at a given m and delta.
Matrix<QuadraticNumber> fused_s(const Rational& m, const QuadraticNumber& delta);

}  // namespace asx::casev::reference

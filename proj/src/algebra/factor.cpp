#include "asx/algebra/factor.hpp"

#include <algorithm>
#include <gmpxx.h>

#include "asx/algebra/errors.hpp"

namespace asx {

namespace {

constexpr unsigned kBits = 640;

struct Complex {
  mpf_class re{0, kBits};
  mpf_class im{0, kBits};
};

Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
Complex operator*(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Complex operator/(const Complex& x, const Complex& y) {
  mpf_class den(y.re * y.re + y.im * y.im, kBits);
  return {(x.re * y.re + x.im * y.im) / den, (x.im * y.re - x.re * y.im) / den};
}
mpf_class norm2(const Complex& x) { return mpf_class(x.re * x.re + x.im * x.im, kBits); }

/// Durand-Kerner on a monic polynomial given by floating coefficients.
std::vector<Complex> approximate_roots(const UPoly& p) {
  const int n = p.degree();
  std::vector<Complex> coef(n + 1);
  const Rational lead_inv = p.leading().inverse();
  for (int i = 0; i <= n; ++i) coef[i].re = mpf_class((p.coefficient(i) * lead_inv).raw(), kBits);

  mpf_class radius(1, kBits);
  for (int i = 0; i < n; ++i) {
    mpf_class c = abs(coef[i].re);
    if (c + 1 > radius) radius = c + 1;
  }
  std::vector<Complex> z(n);
  Complex seed;
  seed.re = mpf_class("0.4", kBits);
  seed.im = mpf_class("0.9", kBits);
  Complex power;
  power.re = radius;
  for (int i = 0; i < n; ++i) {
    z[i] = power;
    power = power * seed;
  }
  auto eval = [&](const Complex& x) {
    Complex acc;
    for (int i = n; i >= 0; --i) acc = acc * x + coef[i];
    return acc;
  };
  const mpf_class tol(mpf_class("1e-150", kBits));
  for (int iter = 0; iter < 5000; ++iter) {
    mpf_class shift(0, kBits);
    for (int i = 0; i < n; ++i) {
      Complex den;
      den.re = 1;
      for (int j = 0; j < n; ++j) {
        if (j != i) den = den * (z[i] - z[j]);
      }
      if (norm2(den) == 0) den.re = mpf_class("1e-100", kBits);
      Complex step = eval(z[i]) / den;
      z[i] = z[i] - step;
      mpf_class s = norm2(step);
      if (s > shift) shift = s;
    }
    if (shift < tol) break;
  }
  return z;
}

/// Nearest integer to x, as an mpz.
mpz_class nearest(const mpf_class& x) {
  mpf_class shifted(x + mpf_class(0.5, kBits), kBits);
  mpf_class fl(kBits);
  mpf_floor(fl.get_mpf_t(), shifted.get_mpf_t());
  return mpz_class(fl);
}

bool near_integer(const mpf_class& x, mpz_class& out) {
  out = nearest(x);
  mpf_class diff(x - mpf_class(out, kBits), kBits);
  return abs(diff) < mpf_class("1e-60", kBits);
}

/// Integer polynomial with content one and positive leading coefficient.
UPoly primitive(const UPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, c.denominator());
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) g = gcd(g, (c * Rational(den)).numerator());
  Rational scale(den, g);
  if (p.leading().sign() < 0) scale = -scale;
  std::vector<Rational> out;
  for (const auto& c : p.coefficients()) out.push_back(c * scale);
  return UPoly(std::move(out));
}

bool divides(const UPoly& divisor, const UPoly& p) { return p.divmod(divisor).second.is_zero(); }

std::string sort_key(const UPoly& f) {
  std::string key(1, static_cast<char>('0' + f.degree()));
  return key + f.to_string();
}

}  // namespace

UPoly Factorization::expand() const {
  UPoly out(leading);
  for (const auto& f : factors) {
    for (unsigned k = 0; k < f.multiplicity; ++k) out = out * f.poly;
  }
  return out;
}

Factorization factor_low_degree(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  Factorization result;
  result.leading = p.leading();
  if (p.degree() == 0) return result;

  UPoly rest = primitive(p.divmod(gcd(p, p.derivative())).first);
  const mpz_class lead = rest.leading().numerator();
  const mpf_class lead_f(lead, kBits);
  std::vector<UPoly> found;

  std::vector<Complex> roots = approximate_roots(rest);
  std::vector<bool> used(roots.size(), false);

  for (std::size_t i = 0; i < roots.size(); ++i) {
    mpz_class num;
    mpz_class zero_im;
    if (!near_integer(roots[i].im * lead_f, zero_im) || zero_im != 0) continue;
    if (!near_integer(roots[i].re * lead_f, num)) continue;
    UPoly lin({-Rational(num, lead), Rational(1)});
    if (divides(lin, rest)) {
      rest = rest.divmod(lin).first;
      found.push_back(lin);
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < roots.size() && !used[i]; ++j) {
      if (used[j]) continue;
      Complex s = roots[i] + roots[j];
      Complex q = roots[i] * roots[j];
      mpz_class s_num, q_num, s_im, q_im;
      if (!near_integer(s.im * lead_f, s_im) || s_im != 0) continue;
      if (!near_integer(q.im * lead_f, q_im) || q_im != 0) continue;
      if (!near_integer(s.re * lead_f, s_num) || !near_integer(q.re * lead_f, q_num)) continue;
      UPoly quad({Rational(q_num, lead), -Rational(s_num, lead), Rational(1)});
      if (divides(quad, rest)) {
        rest = rest.divmod(quad).first;
        found.push_back(quad);
        used[i] = used[j] = true;
      }
    }
  }
  if (rest.degree() > 0) {
    throw Error(ErrorKind::UnsupportedAlgebraicDegree,
                "irreducible factor of degree >= 3 in " + p.to_string());
  }

  std::sort(found.begin(), found.end(),
            [](const UPoly& x, const UPoly& y) { return sort_key(x) < sort_key(y); });
  for (const auto& f : found) {
    PolyFactor pf{f, 0};
    UPoly q = p;
    while (true) {
      auto [quot, rem] = q.divmod(f);
      if (!rem.is_zero()) break;
      ++pf.multiplicity;
      q = std::move(quot);
    }
    result.factors.push_back(std::move(pf));
  }
  return result;
}

std::vector<QuadraticNumber> real_roots(const UPoly& p) {
  std::vector<QuadraticNumber> out;
  for (const auto& f : factor_low_degree(p).factors) {
    if (f.poly.degree() == 1) {
      out.emplace_back(-f.poly.coefficient(0));
      continue;
    }
    const Rational b = f.poly.coefficient(1);
    const Rational c = f.poly.coefficient(0);
    const Rational disc = b * b - Rational(4) * c;
    if (disc.sign() < 0) {
      throw Error(ErrorKind::UnsupportedAlgebraicDegree, "non-real roots of " + f.poly.to_string());
    }
    const QuadraticNumber root = QuadraticNumber::sqrt_of(disc);
    const QuadraticNumber half(Rational(1, 2));
    out.push_back(half * (QuadraticNumber(-b) + root));
    out.push_back(half * (QuadraticNumber(-b) - root));
  }
  std::sort(out.begin(), out.end(), [](const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.approximate() > y.approximate();
  });
  return out;
}

}  // namespace asx

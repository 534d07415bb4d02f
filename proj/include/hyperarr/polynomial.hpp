#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "hyperarr/rational.hpp"

namespace hyperarr {

// Dense univariate polynomial over Q. c[k] is the coefficient of t^k;
// trailing zeros are trimmed, so the zero polynomial has degree() == -1.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);

  static Poly constant(const Rat& v);
  static Poly monomial(int k, const Rat& v = Rat(1));

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const Rat& coeff(int k) const;  // zero outside the stored range
  void trim();

  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, const Poly& q);
Poly operator*(const Rat& s, const Poly& p);
Poly poly_pow(const Poly& p, int k);
Rat poly_eval(const Poly& p, const Rat& x);

// Unique polynomial of degree <= degree through degree+1 points.
Poly poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points, int degree);

// All complex roots with multiplicity (companion-matrix eigenvalues plus
// Newton polish), sorted by (re, im).
std::vector<std::complex<double>> poly_roots_numeric(const Poly& p);

// Human form, e.g. "t^2 - 3t + 3"; non-integer coefficients are parenthesized.
std::string poly_str(const Poly& p, const std::string& var = "t");

}  // namespace hyperarr

#include "hyperarr/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "hyperarr/errors.hpp"

namespace hyperarr {

Poly::Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }

Poly Poly::monomial(int k, const Rat& v) {
  std::vector<Rat> c(k + 1);
  c[k] = v;
  return Poly(std::move(c));
}

const Rat& Poly::coeff(int k) const {
  static const Rat kZero;
  if (k < 0 || k >= static_cast<int>(c.size())) return kZero;
  return c[k];
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rat> c(std::max(p.c.size(), q.c.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) {
  std::vector<Rat> c(std::max(p.c.size(), q.c.size()));
  for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
  return Poly(std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Rat> c(p.c.size() + q.c.size() - 1);
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < q.c.size(); ++j) c[i + j] += p.c[i] * q.c[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  std::vector<Rat> c(p.c);
  for (Rat& v : c) v *= s;
  return Poly(std::move(c));
}

Poly poly_pow(const Poly& p, int k) {
  Poly r = Poly::constant(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat v;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) v = v * x + *it;
  return v;
}

Poly poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points, int degree) {
  if (static_cast<int>(points.size()) != degree + 1)
    throw InvalidSpec("poly_interpolate needs exactly degree+1 points");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw DuplicateAbscissa("repeated abscissa " + rat_str(points[i].first));
  Poly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::constant(1);
    Rat denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly(std::vector<Rat>{-points[j].first, Rat(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + (points[i].second / denom) * basis;
  }
  return acc;
}

namespace {

std::complex<double> ceval(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

std::complex<double> cderiv(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) v = v * z + c[k] * static_cast<double>(k);
  return v;
}

}  // namespace

std::vector<std::complex<double>> poly_roots_numeric(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cannot extract roots of the zero polynomial");
  int deg = p.degree();
  if (deg < 1) throw InvalidSpec("poly_roots_numeric needs degree >= 1");

  std::vector<double> c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = p.c[k].get_d();

  // Companion matrix of the monic normalization.
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -c[i] / c[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);

  std::vector<std::complex<double>> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()[i];

  for (auto& z : roots) {
    for (int it = 0; it < 12; ++it) {
      std::complex<double> f = ceval(c, z);
      std::complex<double> df = cderiv(c, z);
      if (std::abs(df) < 1e-300) break;
      std::complex<double> step = f / df;
      z -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
  }

  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

std::string poly_str(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& v = p.c[k];
    if (v == 0) continue;
    bool neg = rat_sgn(v) < 0;
    Rat mag = neg ? Rat(-v) : v;
    std::string body;
    if (k == 0) {
      body = rat_str(mag);
    } else {
      if (mag != 1) {
        std::string ms = rat_str(mag);
        body = mag.get_den() == 1 ? ms : "(" + ms + ")";
      }
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace hyperarr

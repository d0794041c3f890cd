#ifndef MACW_POLY_H_
#define MACW_POLY_H_

// Exact-coefficient polynomials in two variables x, y.
//
// HomoPoly is the dense homogeneous form used for weight enumerators:
// coeffs[j] is the coefficient of x^(n-j) y^j. BivariatePoly is a sparse
// general polynomial; partial derivatives land there because they drop the
// degree (and the zero polynomial has no well-defined degree).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "macw/rational.h"

namespace macw {

class HomoPoly {
 public:
  // The zero polynomial of the given degree.
  explicit HomoPoly(int degree);
  // coeffs.size() must be degree + 1.
  HomoPoly(int degree, std::vector<Rational> coeffs);

  // c * x^x_exp * y^y_exp.
  static HomoPoly monomial(int x_exp, int y_exp, const Rational& c = 1);
  // a*x + b*y.
  static HomoPoly linear(const Rational& a, const Rational& b);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Coefficient of x^(n-j) y^j.
  const Rational& coeff(int j) const { return coeffs_.at(j); }
  bool is_zero() const;

  // Both operands must have the same degree.
  friend HomoPoly operator+(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator-(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator-(const HomoPoly& a);
  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator*(const Rational& s, const HomoPoly& a);
  friend bool operator==(const HomoPoly& a, const HomoPoly& b) = default;

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

HomoPoly add(const HomoPoly& a, const HomoPoly& b);
HomoPoly scale(const HomoPoly& a, const Rational& s);
HomoPoly multiply(const HomoPoly& a, const HomoPoly& b);
HomoPoly pow(const HomoPoly& a, int e);

// x -> a*x + b*y, y -> c*x + d*y.
struct LinearSubstitution {
  Rational a = 1;
  Rational b = 0;
  Rational c = 0;
  Rational d = 1;
};

// x -> x + (q-1) y, y -> x - y.
LinearSubstitution macwilliams_substitution(int q);

// p(a*x + b*y, c*x + d*y), expanded.
HomoPoly substitute_linear(const HomoPoly& p, const LinearSubstitution& s);

Rational eval(const HomoPoly& p, const Rational& x, const Rational& y);

class BivariatePoly {
 public:
  // Keyed by (x exponent, y exponent); zero coefficients are never stored.
  using Terms = std::map<std::pair<int, int>, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(const HomoPoly& p);

  static BivariatePoly monomial(int x_exp, int y_exp, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  Rational coeff(int x_exp, int y_exp) const;
  bool is_zero() const { return terms_.empty(); }
  // Adds c * x^x_exp * y^y_exp.
  void add_term(int x_exp, int y_exp, const Rational& c);

  // The dense form of degree `degree`; throws std::invalid_argument if some
  // term has a different total degree. The zero polynomial converts to any
  // degree.
  HomoPoly to_homogeneous(int degree) const;

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const Rational& s, const BivariatePoly& a);
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) = default;

 private:
  Terms terms_;
};

BivariatePoly partial_x(const BivariatePoly& p);
BivariatePoly partial_y(const BivariatePoly& p);
BivariatePoly partial_x(const HomoPoly& p);
BivariatePoly partial_y(const HomoPoly& p);

// d^(dx+dy) p / dx^dx dy^dy.
BivariatePoly mixed_partial(const BivariatePoly& p, int dx, int dy);
BivariatePoly mixed_partial(const HomoPoly& p, int dx, int dy);

Rational eval(const BivariatePoly& p, const Rational& x, const Rational& y);

// Canonical rendering: terms by descending x power (then descending y power),
// every coefficient written out as num or num/den, e.g.
// "1/16*x^7 + 7/16*x^3*y^4". The zero polynomial renders as "0".
std::string to_string(const HomoPoly& p);
std::string to_string(const BivariatePoly& p);

}  // namespace macw

#endif  // MACW_POLY_H_

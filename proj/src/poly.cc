#include "macw/poly.h"

#include <sstream>
#include <stdexcept>

namespace macw {
namespace {

void require_same_degree(const HomoPoly& a, const HomoPoly& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("homogeneous polynomials of degree " +
                                std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()) +
                                " cannot be added");
  }
}

void append_term(std::ostringstream& out, bool first, const Rational& c,
                 int x_exp, int y_exp) {
  if (first) {
    if (sgn(c) < 0) out << '-';
  } else {
    out << (sgn(c) < 0 ? " - " : " + ");
  }
  out << to_string(Rational(abs(c)));
  if (x_exp > 0) {
    out << "*x";
    if (x_exp > 1) out << '^' << x_exp;
  }
  if (y_exp > 0) {
    out << "*y";
    if (y_exp > 1) out << '^' << y_exp;
  }
}

}  // namespace

HomoPoly::HomoPoly(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative polynomial degree");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
}

HomoPoly::HomoPoly(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw std::invalid_argument("negative polynomial degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("coefficient count must be degree + 1");
  }
}

HomoPoly HomoPoly::monomial(int x_exp, int y_exp, const Rational& c) {
  HomoPoly out(x_exp + y_exp);
  out.coeffs_[y_exp] = c;
  return out;
}

HomoPoly HomoPoly::linear(const Rational& a, const Rational& b) {
  return HomoPoly(1, {a, b});
}

bool HomoPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) {
  require_same_degree(a, b);
  HomoPoly out = a;
  for (std::size_t j = 0; j < out.coeffs_.size(); ++j) {
    out.coeffs_[j] += b.coeffs_[j];
  }
  return out;
}

HomoPoly operator-(const HomoPoly& a) { return Rational(-1) * a; }

HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) { return a + (-b); }

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) {
  HomoPoly out(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j <= b.degree_; ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

HomoPoly operator*(const Rational& s, const HomoPoly& a) {
  HomoPoly out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

HomoPoly add(const HomoPoly& a, const HomoPoly& b) { return a + b; }
HomoPoly scale(const HomoPoly& a, const Rational& s) { return s * a; }
HomoPoly multiply(const HomoPoly& a, const HomoPoly& b) { return a * b; }

HomoPoly pow(const HomoPoly& a, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  HomoPoly result = HomoPoly::monomial(0, 0);
  for (int i = 0; i < e; ++i) result = result * a;
  return result;
}

LinearSubstitution macwilliams_substitution(int q) {
  return LinearSubstitution{1, q - 1, 1, -1};
}

HomoPoly substitute_linear(const HomoPoly& p, const LinearSubstitution& s) {
  const int n = p.degree();
  const HomoPoly x_image = HomoPoly::linear(s.a, s.b);
  const HomoPoly y_image = HomoPoly::linear(s.c, s.d);
  std::vector<HomoPoly> x_pows{HomoPoly::monomial(0, 0)};
  std::vector<HomoPoly> y_pows{HomoPoly::monomial(0, 0)};
  for (int i = 1; i <= n; ++i) {
    x_pows.push_back(x_pows.back() * x_image);
    y_pows.push_back(y_pows.back() * y_image);
  }
  HomoPoly out(n);
  for (int j = 0; j <= n; ++j) {
    if (p.coeff(j) == 0) continue;
    out = out + p.coeff(j) * (x_pows[n - j] * y_pows[j]);
  }
  return out;
}

Rational eval(const HomoPoly& p, const Rational& x, const Rational& y) {
  const int n = p.degree();
  Rational acc = 0;
  for (int j = 0; j <= n; ++j) {
    if (p.coeff(j) == 0) continue;
    acc += p.coeff(j) * rpow(x, n - j) * rpow(y, j);
  }
  return acc;
}

BivariatePoly::BivariatePoly(const HomoPoly& p) {
  for (int j = 0; j <= p.degree(); ++j) add_term(p.degree() - j, j, p.coeff(j));
}

BivariatePoly BivariatePoly::monomial(int x_exp, int y_exp, const Rational& c) {
  BivariatePoly out;
  out.add_term(x_exp, y_exp, c);
  return out;
}

Rational BivariatePoly::coeff(int x_exp, int y_exp) const {
  const auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(int x_exp, int y_exp, const Rational& c) {
  if (x_exp < 0 || y_exp < 0) {
    throw std::invalid_argument("negative exponent in polynomial term");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_exp, y_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomoPoly BivariatePoly::to_homogeneous(int degree) const {
  if (degree < 0) throw std::invalid_argument("negative polynomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  for (const auto& [exps, c] : terms_) {
    if (exps.first + exps.second != degree) {
      throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                  std::to_string(degree));
    }
    coeffs[exps.second] = c;
  }
  return HomoPoly(degree, std::move(coeffs));
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out = a;
  for (const auto& [exps, c] : b.terms_) out.add_term(exps.first, exps.second, c);
  return out;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  return a + Rational(-1) * b;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

BivariatePoly operator*(const Rational& s, const BivariatePoly& a) {
  BivariatePoly out;
  if (s == 0) return out;
  out.terms_ = a.terms_;
  for (auto& [exps, c] : out.terms_) c *= s;
  return out;
}

BivariatePoly partial_x(const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [exps, c] : p.terms()) {
    if (exps.first == 0) continue;
    out.add_term(exps.first - 1, exps.second, c * exps.first);
  }
  return out;
}

BivariatePoly partial_y(const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [exps, c] : p.terms()) {
    if (exps.second == 0) continue;
    out.add_term(exps.first, exps.second - 1, c * exps.second);
  }
  return out;
}

BivariatePoly partial_x(const HomoPoly& p) { return partial_x(BivariatePoly(p)); }

BivariatePoly partial_y(const HomoPoly& p) { return partial_y(BivariatePoly(p)); }

BivariatePoly mixed_partial(const BivariatePoly& p, int dx, int dy) {
  if (dx < 0 || dy < 0) {
    throw std::invalid_argument("derivative orders must be nonnegative");
  }
  BivariatePoly out = p;
  for (int i = 0; i < dx; ++i) out = partial_x(out);
  for (int i = 0; i < dy; ++i) out = partial_y(out);
  return out;
}

BivariatePoly mixed_partial(const HomoPoly& p, int dx, int dy) {
  return mixed_partial(BivariatePoly(p), dx, dy);
}

Rational eval(const BivariatePoly& p, const Rational& x, const Rational& y) {
  Rational acc = 0;
  for (const auto& [exps, c] : p.terms()) {
    acc += c * rpow(x, exps.first) * rpow(y, exps.second);
  }
  return acc;
}

std::string to_string(const HomoPoly& p) { return to_string(BivariatePoly(p)); }

std::string to_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // The map is ascending in (x, y); walk it backwards.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_term(out, first, it->second, it->first.first, it->first.second);
    first = false;
  }
  return out.str();
}

}  // namespace macw

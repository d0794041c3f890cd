#include "macw/identities.h"

#include <sstream>
#include <stdexcept>
#include <string>

#include "macw/errors.h"

namespace macw {
namespace {

void require_shape(const WeightDistribution& w, int n, const char* what) {
  if (n < 0 || w.n != static_cast<std::size_t>(n) ||
      w.counts.size() != static_cast<std::size_t>(n) + 1) {
    throw InputError(std::string(what) + " must have n + 1 = " +
                     std::to_string(n + 1) + " counts");
  }
}

void require_params(int n, int k, int q) {
  if (n < 0 || k < 0 || k > n) {
    throw InputError("code parameters must satisfy 0 <= k <= n");
  }
  if (q < 2) throw InputError("field size q must be at least 2");
}

// Validates the dual side of a transform and returns q^(n-k).
Integer check_dual_total(const WeightDistribution& w_dual, int n, int k,
                         int q) {
  require_params(n, k, q);
  require_shape(w_dual, n, "dual distribution");
  const Integer expected = ipow(Integer(q), n - k);
  if (w_dual.total() != expected) {
    throw TransformError("dual distribution sums to " +
                         w_dual.total().get_str() + ", expected q^(n-k) = " +
                         expected.get_str());
  }
  return expected;
}

// Divides each coefficient by q^(n-k), insisting on exact nonnegative
// integers.
WeightDistribution divide_counts(const std::vector<Integer>& raw,
                                 const Integer& divisor, int n) {
  WeightDistribution out;
  out.n = static_cast<std::size_t>(n);
  out.counts.reserve(raw.size());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    if (raw[r] % divisor != 0) {
      throw TransformError("coefficient " + std::to_string(r) + " (" +
                           raw[r].get_str() + ") is not divisible by " +
                           divisor.get_str());
    }
    Integer count = raw[r] / divisor;
    if (count < 0) {
      throw TransformError("transform produced a negative count at weight " +
                           std::to_string(r));
    }
    out.counts.push_back(std::move(count));
  }
  return out;
}

HomoPoly raw_substitution(const WeightDistribution& w_dual, int q) {
  return substitute_linear(enumerator_poly(w_dual), macwilliams_substitution(q));
}

Integer sign(int i) { return (i % 2 == 0) ? Integer(1) : Integer(-1); }

Rational q_power(int q, int e) { return rpow(Rational(q), e); }

void check_inputs(const WeightDistribution& w, const WeightDistribution& w_dual,
                  int n, int k, int q) {
  require_params(n, k, q);
  require_shape(w, n, "distribution");
  require_shape(w_dual, n, "dual distribution");
}

bool same_row(const ReportRow& a, const ReportRow& b) {
  return a.r == b.r && a.lhs == b.lhs && a.rhs == b.rhs;
}

}  // namespace

Integer krawtchouk(int r, int j, int n, int q) {
  if (n < 0 || r < 0 || r > n || j < 0 || j > n || q < 2) {
    throw std::out_of_range("krawtchouk parameters out of range: r=" +
                            std::to_string(r) + " j=" + std::to_string(j) +
                            " n=" + std::to_string(n) +
                            " q=" + std::to_string(q));
  }
  Integer acc = 0;
  for (int i = 0; i <= r; ++i) {
    acc += sign(i) * ipow(Integer(q - 1), r - i) * binomial(j, i) *
           binomial(n - j, r - i);
  }
  return acc;
}

HomoPoly macwilliams_image(const WeightDistribution& w_dual, int n, int k,
                           int q) {
  require_params(n, k, q);
  require_shape(w_dual, n, "dual distribution");
  return q_power(q, -(n - k)) * raw_substitution(w_dual, q);
}

WeightDistribution transform_eq1(const WeightDistribution& w_dual, int n,
                                 int k, int q) {
  const Integer divisor = check_dual_total(w_dual, n, k, q);
  const HomoPoly expanded = raw_substitution(w_dual, q);
  std::vector<Integer> raw;
  raw.reserve(expanded.coeffs().size());
  for (const auto& c : expanded.coeffs()) {
    // Integer inputs under an integer substitution stay integral.
    raw.push_back(c.get_num());
  }
  return divide_counts(raw, divisor, n);
}

WeightDistribution transform_eq2(const WeightDistribution& w_dual, int n,
                                 int k, int q) {
  const Integer divisor = check_dual_total(w_dual, n, k, q);
  std::vector<Integer> raw(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 0; r <= n; ++r) {
    for (int j = 0; j <= n; ++j) {
      if (w_dual.counts[j] == 0) continue;
      raw[r] += w_dual.counts[j] * krawtchouk(r, j, n, q);
    }
  }
  return divide_counts(raw, divisor, n);
}

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::kEq1: return "eq1";
    case IdentityId::kEq2: return "eq2";
    case IdentityId::kEq3: return "eq3";
    case IdentityId::kEq4: return "eq4";
    case IdentityId::kEq5: return "eq5";
    case IdentityId::kEq2Prime: return "eq2'";
    case IdentityId::kEq3Prime: return "eq3'";
    case IdentityId::kEq4Prime: return "eq4'";
    case IdentityId::kEq5Prime: return "eq5'";
  }
  return "?";
}

bool IdentityReport::passed() const {
  for (const auto& row : rows) {
    if (!row.passed()) return false;
  }
  return true;
}

std::vector<Rational> IdentityReport::residuals() const {
  std::vector<Rational> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.residual());
  return out;
}

std::string render(const IdentityReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << identity_name(report.id) << " r=" << row.r;
    if (row.t) out << " t=" << *row.t;
    out << " lhs=" << to_string(row.lhs) << " rhs=" << to_string(row.rhs)
        << " residual=" << to_string(Rational(row.residual())) << ' '
        << (row.passed() ? "pass" : "FAIL") << '\n';
  }
  return out.str();
}

IdentityReport check_eq1(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k,
                         int q) {
  check_inputs(w, w_dual, n, k, q);
  const HomoPoly g = macwilliams_image(w_dual, n, k, q);
  IdentityReport report{IdentityId::kEq1, {}};
  for (int r = 0; r <= n; ++r) {
    report.rows.push_back({r, std::nullopt, Rational(w.counts[r]), g.coeff(r)});
  }
  return report;
}

IdentityReport check_eq2(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k,
                         int q) {
  check_inputs(w, w_dual, n, k, q);
  const Rational scale = q_power(q, -(n - k));
  IdentityReport report{IdentityId::kEq2, {}};
  for (int r = 0; r <= n; ++r) {
    Integer sum = 0;
    for (int j = 0; j <= n; ++j) sum += w_dual.counts[j] * krawtchouk(r, j, n, q);
    report.rows.push_back(
        {r, std::nullopt, Rational(w.counts[r]), scale * Rational(sum)});
  }
  return report;
}

IdentityReport check_eq3(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k,
                         int q) {
  check_inputs(w, w_dual, n, k, q);
  IdentityReport report{IdentityId::kEq3, {}};
  for (int r = 0; r <= n; ++r) {
    Integer lhs = 0;
    for (int j = 0; j <= n; ++j) lhs += binomial(j, r) * w.counts[j];
    // C(n-j, r-j) vanishes for j > r, which also keeps (q-1)^(r-j) integral.
    Integer sum = 0;
    for (int j = 0; j <= r; ++j) {
      sum += sign(j) * ipow(Integer(q - 1), r - j) * binomial(n - j, r - j) *
             w_dual.counts[j];
    }
    report.rows.push_back(
        {r, std::nullopt, Rational(lhs), q_power(q, k - r) * Rational(sum)});
  }
  return report;
}

IdentityReport check_eq4(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k,
                         int q) {
  check_inputs(w, w_dual, n, k, q);
  IdentityReport report{IdentityId::kEq4, {}};
  for (int r = 0; r <= n; ++r) {
    Integer lhs = 0;
    for (int j = 0; j <= n; ++j) lhs += binomial(n - j, r) * w.counts[j];
    Integer sum = 0;
    for (int j = 0; j <= r; ++j) sum += binomial(n - j, r - j) * w_dual.counts[j];
    report.rows.push_back(
        {r, std::nullopt, Rational(lhs), q_power(q, k - r) * Rational(sum)});
  }
  return report;
}

IdentityReport check_eq5(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k,
                         int q) {
  check_inputs(w, w_dual, n, k, q);
  IdentityReport report{IdentityId::kEq5, {}};
  for (int r = 0; r <= n; ++r) {
    for (int t = 0; t <= r; ++t) {
      Integer lhs = 0;
      for (int j = 0; j <= n; ++j) {
        lhs += binomial(j, t) * binomial(n - j, r - t) * w.counts[j];
      }
      Integer sum = 0;
      for (int i = 0; i <= t; ++i) {
        Integer inner = 0;
        for (int j = 0; j <= r; ++j) {
          inner += binomial(n - j, r - j) * binomial(j, i) *
                   binomial(r - j, t - i) * w_dual.counts[j];
        }
        sum += sign(i) * ipow(Integer(q - 1), t - i) * inner;
      }
      report.rows.push_back(
          {r, t, Rational(lhs), q_power(q, k - r) * Rational(sum)});
    }
  }
  return report;
}

ReductionCheck check_eq5_reductions(const IdentityReport& eq5,
                                    const IdentityReport& eq3,
                                    const IdentityReport& eq4) {
  ReductionCheck out;
  for (const auto& row : eq5.rows) {
    if (!row.t) continue;
    const int r = row.r;
    const int t = *row.t;
    auto compare = [&](const IdentityReport& other, const char* label) {
      if (r < 0 || static_cast<std::size_t>(r) >= other.rows.size() ||
          !same_row(row, other.rows[r])) {
        out.mismatches.push_back("eq5 r=" + std::to_string(r) +
                                 " t=" + std::to_string(t) + " differs from " +
                                 label + " r=" + std::to_string(r));
      }
    };
    if (t == 0) compare(eq4, "eq4");
    if (t == r) compare(eq3, "eq3");
  }
  return out;
}

void XYTermSum::add_term(int x_exp, int y_exp, const Rational& c) {
  if (x_exp < 0 || y_exp < 0) {
    throw std::invalid_argument("negative exponent in X/Y term");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({x_exp, y_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly XYTermSum::expand_to_xy() const {
  const auto sub = macwilliams_substitution(q_);
  BivariatePoly out;
  for (const auto& [exps, c] : terms_) {
    // X^a Y^b is x^a y^b under x -> x + (q-1)y, y -> x - y.
    const HomoPoly term =
        substitute_linear(HomoPoly::monomial(exps.first, exps.second, c), sub);
    out = out + BivariatePoly(term);
  }
  return out;
}

Rational XYTermSum::eval(const Rational& x, const Rational& y) const {
  const Rational big_x = x + (q_ - 1) * y;
  const Rational big_y = x - y;
  Rational acc = 0;
  for (const auto& [exps, c] : terms_) {
    acc += c * rpow(big_x, exps.first) * rpow(big_y, exps.second);
  }
  return acc;
}

XYTermSum lemma1_expand(int s, int t, int order, Variable wrt, int q) {
  if (s < 0 || t < 0 || order < 0) {
    throw std::invalid_argument("lemma1_expand needs s, t, order >= 0");
  }
  XYTermSum out(q);
  const Integer order_fact = factorial(order);
  for (int i = 0; i <= order; ++i) {
    const Integer b = binomial(s, order - i) * binomial(t, i);
    if (b == 0) continue;
    Integer c = order_fact * b;
    if (wrt == Variable::kY) c *= sign(i) * ipow(Integer(q - 1), order - i);
    out.add_term(s - order + i, t - i, Rational(c));
  }
  return out;
}

XYTermSum lemma1_apply(const XYTermSum& f, int order, Variable wrt) {
  XYTermSum out(f.q());
  for (const auto& [exps, c] : f.terms()) {
    const XYTermSum part = lemma1_expand(exps.first, exps.second, order, wrt, f.q());
    for (const auto& [pe, pc] : part.terms()) {
      out.add_term(pe.first, pe.second, c * pc);
    }
  }
  return out;
}

std::string_view anchor_name(Anchor anchor) {
  switch (anchor) {
    case Anchor::k10: return "(1,0)";
    case Anchor::k01: return "(0,1)";
    case Anchor::k11: return "(1,1)";
  }
  return "?";
}

Variable anchor_variable(Anchor anchor) {
  return anchor == Anchor::k01 ? Variable::kX : Variable::kY;
}

namespace {

std::pair<Rational, Rational> anchor_point(Anchor anchor) {
  switch (anchor) {
    case Anchor::k10: return {1, 0};
    case Anchor::k01: return {0, 1};
    case Anchor::k11: return {1, 1};
  }
  return {0, 0};
}

}  // namespace

std::vector<Rational> anchor_derivatives(const HomoPoly& p, Anchor anchor) {
  const auto [x0, y0] = anchor_point(anchor);
  const Variable v = anchor_variable(anchor);
  std::vector<Rational> out;
  BivariatePoly current(p);
  for (int r = 0; r <= p.degree(); ++r) {
    out.push_back(eval(current, x0, y0));
    current = v == Variable::kX ? partial_x(current) : partial_y(current);
  }
  return out;
}

HomoPoly lemma2_reconstruct(int n, Anchor anchor,
                            std::span<const Rational> values) {
  if (n < 0 || values.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("lemma2_reconstruct needs exactly n + 1 values");
  }
  // f = sum_i f_i x^(n-i) y^i.
  std::vector<Rational> f(values.size(), 0);
  switch (anchor) {
    case Anchor::k10:
      // d^r f/dy^r at (1,0) = r! f_r.
      for (int r = 0; r <= n; ++r) f[r] = values[r] / Rational(factorial(r));
      break;
    case Anchor::k01:
      // d^r f/dx^r at (0,1) = r! f_(n-r).
      for (int r = 0; r <= n; ++r) f[n - r] = values[r] / Rational(factorial(r));
      break;
    case Anchor::k11:
      // d^r f/dy^r at (1,1) = r! sum_{i>=r} C(i, r) f_i: upper triangular,
      // solved from r = n down.
      for (int r = n; r >= 0; --r) {
        Rational acc = values[r] / Rational(factorial(r));
        for (int i = r + 1; i <= n; ++i) acc -= Rational(binomial(i, r)) * f[i];
        f[r] = acc;
      }
      break;
  }
  return HomoPoly(n, std::move(f));
}

IdentityId identity_of(DerivativeForm form) {
  switch (form) {
    case DerivativeForm::k2: return IdentityId::kEq2Prime;
    case DerivativeForm::k3: return IdentityId::kEq3Prime;
    case DerivativeForm::k4: return IdentityId::kEq4Prime;
    case DerivativeForm::k5: return IdentityId::kEq5Prime;
  }
  return IdentityId::kEq2Prime;
}

IdentityReport check_derivative_forms(const WeightDistribution& w,
                                      const WeightDistribution& w_dual, int n,
                                      int k, int q, DerivativeForm form) {
  check_inputs(w, w_dual, n, k, q);
  const BivariatePoly f(enumerator_poly(w));
  const BivariatePoly g(macwilliams_image(w_dual, n, k, q));
  IdentityReport report{identity_of(form), {}};

  auto add_row = [&](int r, std::optional<int> t, int dx, int dy,
                     const Rational& x0, const Rational& y0) {
    report.rows.push_back({r, t, eval(mixed_partial(f, dx, dy), x0, y0),
                           eval(mixed_partial(g, dx, dy), x0, y0)});
  };
  for (int r = 0; r <= n; ++r) {
    switch (form) {
      case DerivativeForm::k2: add_row(r, std::nullopt, 0, r, 1, 0); break;
      case DerivativeForm::k3: add_row(r, std::nullopt, 0, r, 1, 1); break;
      case DerivativeForm::k4: add_row(r, std::nullopt, r, 0, 1, 1); break;
      case DerivativeForm::k5:
        for (int t = 0; t <= r; ++t) add_row(r, t, r - t, t, 1, 1);
        break;
    }
  }
  return report;
}

}  // namespace macw

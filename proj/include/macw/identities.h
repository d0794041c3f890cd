#ifndef MACW_IDENTITIES_H_
#define MACW_IDENTITIES_H_

// The MacWilliams identity W_C(x, y) = q^-(n-k) W_{C^perp}(x + (q-1)y, x - y)
// for an [n, k] code C over GF(q), its coefficient-level equivalent forms,
// and the derivative machinery that ties them together.
//
// Enumerators follow the convention W(x, y) = sum_j W^j x^(n-j) y^j: the
// power of y tracks the weight.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macw/codes.h"
#include "macw/poly.h"
#include "macw/rational.h"

namespace macw {

// K_r(j) = sum_{i=0}^{r} (-1)^i (q-1)^(r-i) C(j, i) C(n-j, r-i).
// Throws std::out_of_range unless 0 <= r, j <= n and q >= 2.
Integer krawtchouk(int r, int j, int n, int q);

// W_C from W_{C^perp} by expanding q^-(n-k) W_{C^perp}(x + (q-1)y, x - y).
// Throws TransformError if sum(w_dual) != q^(n-k), if some coefficient is not
// divisible by q^(n-k), or if a resulting count is negative.
WeightDistribution transform_eq1(const WeightDistribution& w_dual, int n,
                                 int k, int q);
// Same map computed coefficient-wise through Krawtchouk numbers.
WeightDistribution transform_eq2(const WeightDistribution& w_dual, int n,
                                 int k, int q);

// q^-(n-k) W_{C^perp}(x + (q-1)y, x - y) with no integrality checks; this is
// the g(x, y) the identity compares against W_C.
HomoPoly macwilliams_image(const WeightDistribution& w_dual, int n, int k,
                           int q);

enum class IdentityId {
  kEq1,
  kEq2,
  kEq3,
  kEq4,
  kEq5,
  kEq2Prime,
  kEq3Prime,
  kEq4Prime,
  kEq5Prime,
};

// "eq1" .. "eq5", "eq2'" .. "eq5'".
std::string_view identity_name(IdentityId id);

struct ReportRow {
  int r = 0;
  std::optional<int> t;
  Rational lhs;
  Rational rhs;

  Rational residual() const { return lhs - rhs; }
  bool passed() const { return lhs == rhs; }
};

struct IdentityReport {
  IdentityId id;
  std::vector<ReportRow> rows;

  // True iff every residual is exactly zero.
  bool passed() const;
  // Residuals in row order.
  std::vector<Rational> residuals() const;
};

// One line per row: "<id> r=<r> [t=<t>] lhs=<v> rhs=<v> residual=<v> <pass|FAIL>".
std::string render(const IdentityReport& report);

// Row r of eq1/eq2 compares W_C^r with the r-th coefficient of the transform
// of w_dual (as an exact rational, so corrupted inputs report rather than
// throw).
IdentityReport check_eq1(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k, int q);
IdentityReport check_eq2(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k, int q);

// sum_j C(j, r) W^j = q^(k-r) sum_{j<=r} (-1)^j (q-1)^(r-j) C(n-j, r-j) W'^j.
IdentityReport check_eq3(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k, int q);
// sum_j C(n-j, r) W^j = q^(k-r) sum_{j<=r} C(n-j, r-j) W'^j.
IdentityReport check_eq4(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k, int q);
// sum_j C(j, t) C(n-j, r-t) W^j
//   = q^(k-r) sum_{i<=t} (-1)^i (q-1)^(t-i)
//       sum_{j<=r} C(n-j, r-j) C(j, i) C(r-j, t-i) W'^j,
// over the whole triangle 0 <= t <= r <= n, rows ordered by r then t.
IdentityReport check_eq5(const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k, int q);

// The t = 0 rows of eq5 must equal eq4 row for row and the t = r rows must
// equal eq3, both sides value for value.
struct ReductionCheck {
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};
ReductionCheck check_eq5_reductions(const IdentityReport& eq5,
                                    const IdentityReport& eq3,
                                    const IdentityReport& eq4);

enum class Variable { kX, kY };

// A formal sum of c * X^a * Y^b with X = x + (q-1)y and Y = x - y.
class XYTermSum {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  explicit XYTermSum(int q) : q_(q) {}

  int q() const { return q_; }
  // Keyed by (X exponent, Y exponent); no zero coefficients.
  const Terms& terms() const { return terms_; }
  void add_term(int x_exp, int y_exp, const Rational& c);

  // The polynomial in x and y.
  BivariatePoly expand_to_xy() const;
  // Value at (x, y), through X(x, y) and Y(x, y).
  Rational eval(const Rational& x, const Rational& y) const;

  friend bool operator==(const XYTermSum& a, const XYTermSum& b) = default;

 private:
  int q_;
  Terms terms_;
};

// Closed-form order-th derivative of X^s Y^t:
//   d^l/dx^l = sum_i l! C(s, l-i) C(t, i) X^(s-l+i) Y^(t-i)
//   d^m/dy^m = sum_i (-1)^i (q-1)^(m-i) m! C(s, m-i) C(t, i) X^(s-m+i) Y^(t-i)
// Terms whose binomials vanish are omitted.
XYTermSum lemma1_expand(int s, int t, int order, Variable wrt, int q);

// The closed form applied term by term, so mixed derivatives compose.
XYTermSum lemma1_apply(const XYTermSum& f, int order, Variable wrt);

enum class Anchor { k10, k01, k11 };

std::string_view anchor_name(Anchor anchor);

// The variable whose derivatives pin down a degree-n homogeneous polynomial
// at the anchor: y at (1,0) and (1,1), x at (0,1). At (0,1) every
// y-derivative only sees the y^n coefficient, so x takes its place.
Variable anchor_variable(Anchor anchor);

// values[r] = r-th derivative (in anchor_variable) at the anchor, r = 0..n.
std::vector<Rational> anchor_derivatives(const HomoPoly& p, Anchor anchor);

// The unique degree-n homogeneous polynomial with the given anchor
// derivatives. Throws std::invalid_argument unless values.size() == n + 1.
HomoPoly lemma2_reconstruct(int n, Anchor anchor,
                            std::span<const Rational> values);

enum class DerivativeForm { k2, k3, k4, k5 };

IdentityId identity_of(DerivativeForm form);

// Compares derivatives of f = W_C(x, y) and g = macwilliams_image(w_dual):
//   2': d^r/dy^r at (1,0);  3': d^r/dy^r at (1,1);  4': d^r/dx^r at (1,1);
//   5': d^r/dx^(r-t) dy^t at (1,1) for 0 <= t <= r.
IdentityReport check_derivative_forms(const WeightDistribution& w,
                                     const WeightDistribution& w_dual, int n,
                                     int k, int q, DerivativeForm form);

}  // namespace macw

#endif  // MACW_IDENTITIES_H_

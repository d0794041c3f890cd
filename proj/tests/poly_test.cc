#include "macw/poly.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "testing/generators.h"

namespace macw {
namespace {

HomoPoly homo(std::vector<Rational> coeffs) {
  const int degree = static_cast<int>(coeffs.size()) - 1;
  return HomoPoly(degree, std::move(coeffs));
}

// Coefficients c_0..c_n of the polynomial in h through (h_i, v_i), h_i = i,
// by Gaussian elimination on the Vandermonde system.
std::vector<Rational> interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rational power = 1;
    for (std::size_t c = 0; c < n; ++c) {
      a[i][c] = power;
      power *= static_cast<long>(i);
    }
    a[i][n] = values[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
  return out;
}

// d^r/dy^r p at (x0, y0) from values only: p(x0, y0 + h) = sum_r h^r/r! D_r.
std::vector<Rational> taylor_y_derivatives(const HomoPoly& p, const Rational& x0,
                                           const Rational& y0) {
  std::vector<Rational> values;
  for (int h = 0; h <= p.degree(); ++h) values.push_back(eval(p, x0, y0 + h));
  auto coeffs = interpolate(values);
  for (std::size_t r = 0; r < coeffs.size(); ++r) coeffs[r] *= Rational(factorial(r));
  return coeffs;
}

TEST(HomoPolyTest, ConstructionAndAccessors) {
  const auto p = homo({1, 2, 3});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(1), 2);
  EXPECT_FALSE(p.is_zero());
  EXPECT_TRUE(HomoPoly(4).is_zero());
  EXPECT_THROW(HomoPoly(2, {1, 2}), std::invalid_argument);
  EXPECT_EQ(HomoPoly::monomial(1, 2, 5), homo({0, 0, 5, 0}));
  EXPECT_EQ(HomoPoly::linear(3, -1), homo({3, -1}));
}

TEST(HomoPolyTest, Arithmetic) {
  const auto x_plus_y = HomoPoly::linear(1, 1);
  EXPECT_EQ(x_plus_y * x_plus_y, homo({1, 2, 1}));
  EXPECT_EQ(pow(x_plus_y, 3), homo({1, 3, 3, 1}));
  EXPECT_EQ(pow(x_plus_y, 0), homo({1}));
  EXPECT_EQ(homo({1, 2}) - homo({1, 2}), HomoPoly(1));
  EXPECT_EQ(Rational(1, 2) * homo({2, 4}), homo({1, 2}));
  EXPECT_EQ(-homo({1, -1}), homo({-1, 1}));
  EXPECT_THROW(homo({1}) + homo({1, 1}), std::invalid_argument);
  EXPECT_EQ(add(homo({1, 0}), homo({0, 1})), x_plus_y);
  EXPECT_EQ(scale(x_plus_y, 2), homo({2, 2}));
  EXPECT_EQ(multiply(HomoPoly::linear(1, 0), HomoPoly::linear(0, 1)), homo({0, 1, 0}));
}

TEST(HomoPolyTest, EvalMatchesExpansion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_homo_poly(trial % 8, rng);
    const Rational x = testing::random_rational(rng);
    const Rational y = testing::random_rational(rng);
    Rational expected = 0;
    for (int j = 0; j <= p.degree(); ++j) {
      expected += p.coeff(j) * rpow(x, p.degree() - j) * rpow(y, j);
    }
    EXPECT_EQ(eval(p, x, y), expected);
  }
}

TEST(SubstitutionTest, Examples) {
  // x^2 + xy - 2y^2 under x -> x + 2y, y -> x - y is 9xy.
  const auto p = homo({1, 1, -2});
  EXPECT_EQ(substitute_linear(p, macwilliams_substitution(3)), homo({0, 9, 0}));
  EXPECT_EQ(substitute_linear(p, LinearSubstitution{}), p);
  EXPECT_EQ(substitute_linear(homo({1, 0}), macwilliams_substitution(2)), homo({1, 1}));
  EXPECT_EQ(substitute_linear(homo({0, 1}), macwilliams_substitution(2)), homo({1, -1}));
}

TEST(SubstitutionTest, MacWilliamsSquaredIsScalar) {
  // The substitution matrix M satisfies M^2 = q I.
  std::mt19937_64 rng(9);
  for (int q : {2, 3, 4, 5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = testing::random_homo_poly(trial, rng);
      const auto s = macwilliams_substitution(q);
      const auto twice = substitute_linear(substitute_linear(p, s), s);
      EXPECT_EQ(twice, Rational(ipow(q, p.degree())) * p);

      const Rational inv_q(1, q);
      const LinearSubstitution inverse{inv_q, inv_q * (q - 1), inv_q, -inv_q};
      EXPECT_EQ(substitute_linear(substitute_linear(p, s), inverse), p);
    }
  }
}

TEST(SubstitutionTest, EvaluationCommutes) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_homo_poly(trial % 9, rng);
    const LinearSubstitution s{testing::random_rational(rng), testing::random_rational(rng),
                               testing::random_rational(rng), testing::random_rational(rng)};
    const Rational x = testing::random_rational(rng);
    const Rational y = testing::random_rational(rng);
    EXPECT_EQ(eval(substitute_linear(p, s), x, y),
              eval(p, s.a * x + s.b * y, s.c * x + s.d * y));
  }
}

TEST(BivariatePolyTest, TermsAndConversion) {
  BivariatePoly p;
  p.add_term(2, 0, 3);
  p.add_term(1, 1, 1);
  p.add_term(1, 1, -1);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coeff(2, 0), 3);
  EXPECT_EQ(p.coeff(0, 2), 0);
  EXPECT_EQ(p.to_homogeneous(2), homo({3, 0, 0}));
  EXPECT_THROW(p.to_homogeneous(3), std::invalid_argument);
  EXPECT_EQ(BivariatePoly().to_homogeneous(5), HomoPoly(5));
  EXPECT_EQ(BivariatePoly(homo({1, 2, 3})).to_homogeneous(2), homo({1, 2, 3}));
}

TEST(DerivativeTest, Examples) {
  const auto p = homo({1, 0, 0, 0, 5});  // x^4 + 5y^4
  EXPECT_EQ(partial_x(p), BivariatePoly::monomial(3, 0, 4));
  EXPECT_EQ(partial_y(p), BivariatePoly::monomial(0, 3, 20));
  EXPECT_EQ(mixed_partial(homo({0, 1, 0}), 1, 1), BivariatePoly::monomial(0, 0, 1));
  EXPECT_TRUE(mixed_partial(homo({1, 1}), 2, 0).is_zero());
  EXPECT_EQ(mixed_partial(p, 0, 0), BivariatePoly(p));
}

TEST(DerivativeTest, EulerHomogeneity) {
  std::mt19937_64 rng(17);
  const auto x = BivariatePoly::monomial(1, 0);
  const auto y = BivariatePoly::monomial(0, 1);
  for (int n = 0; n <= 10; ++n) {
    const auto p = testing::random_homo_poly(n, rng);
    EXPECT_EQ(x * partial_x(p) + y * partial_y(p), Rational(n) * BivariatePoly(p));
  }
}

TEST(DerivativeTest, MixedPartialsCommute) {
  std::mt19937_64 rng(19);
  for (int n = 0; n <= 8; ++n) {
    const auto p = testing::random_homo_poly(n, rng);
    const auto xyy = partial_y(partial_y(partial_x(p)));
    const auto yxy = partial_y(partial_x(partial_y(p)));
    EXPECT_EQ(xyy, yxy);
    EXPECT_EQ(mixed_partial(p, 1, 2), xyy);
  }
}

TEST(DerivativeTest, AgreesWithTaylorInterpolation) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = trial % 9;
    const auto p = testing::random_homo_poly(n, rng);
    const Rational x0 = testing::random_rational(rng);
    const Rational y0 = testing::random_rational(rng);
    const auto expected = taylor_y_derivatives(p, x0, y0);
    for (int r = 0; r <= n; ++r) {
      EXPECT_EQ(eval(mixed_partial(p, 0, r), x0, y0), expected[r]) << "r=" << r;
    }
  }
}

TEST(RenderTest, Canonical) {
  EXPECT_EQ(to_string(homo({Rational(1, 16), 0, 0, 0, Rational(7, 16), 0, 0, 0})),
            "1/16*x^7 + 7/16*x^3*y^4");
  EXPECT_EQ(to_string(homo({1, -2, 1})), "1*x^2 - 2*x*y + 1*y^2");
  EXPECT_EQ(to_string(HomoPoly(3)), "0");
  EXPECT_EQ(to_string(homo({-3})), "-3");
  EXPECT_EQ(to_string(BivariatePoly::monomial(0, 0, Rational(-1, 2))), "-1/2");
  EXPECT_EQ(to_string(BivariatePoly::monomial(1, 3, 2) + BivariatePoly::monomial(2, 0, 1)),
            "1*x^2 + 2*x*y^3");
}

}  // namespace
}  // namespace macw

#ifndef MACW_RATIONAL_H_
#define MACW_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace macw {

using Integer = mpz_class;
using Rational = mpq_class;

// C(a, b) with the convention C(a, b) = 0 whenever b < 0, b > a or a < 0.
Integer binomial(std::int64_t a, std::int64_t b);

Integer factorial(std::int64_t n);

// base^exp for exp >= 0.
Integer ipow(const Integer& base, std::int64_t exp);

// base^exp for any integer exp; base must be nonzero when exp < 0.
Rational rpow(const Rational& base, std::int64_t exp);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

}  // namespace macw

#endif  // MACW_RATIONAL_H_

#include "macw/rational.h"

#include <stdexcept>

namespace macw {

Integer binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer ipow(const Integer& base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("negative exponent in integer power");
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exp));
  return result;
}

Rational rpow(const Rational& base, std::int64_t exp) {
  if (exp >= 0) {
    Rational result(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
    result.canonicalize();
    return result;
  }
  if (base == 0) throw std::domain_error("zero raised to a negative power");
  Rational result(ipow(base.get_den(), -exp), ipow(base.get_num(), -exp));
  result.canonicalize();
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace macw

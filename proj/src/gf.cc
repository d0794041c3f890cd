#include "macw/gf.h"

#include <map>
#include <stdexcept>
#include <string>

#include "macw/errors.h"

namespace macw {
namespace {

// Fields up to this size get dense add/mul tables.
constexpr std::uint32_t kTableLimit = 256;

// One fixed modulus per small composite q so runs are reproducible without a
// user-supplied modulus.
const std::map<std::uint32_t, std::vector<int>>& builtin_moduli() {
  static const auto* table = new std::map<std::uint32_t, std::vector<int>>{
      {4, {1, 1, 1}},           // t^2 + t + 1
      {8, {1, 1, 0, 1}},        // t^3 + t + 1
      {9, {2, 2, 1}},           // t^2 + 2t + 2
      {16, {1, 1, 0, 0, 1}},    // t^4 + t + 1
      {25, {2, 4, 1}},          // t^2 + 4t + 2
      {27, {1, 2, 0, 1}},       // t^3 + 2t + 1
      {32, {1, 0, 1, 0, 0, 1}}, // t^5 + t^2 + 1
  };
  return *table;
}

std::vector<int> digits(Symbol a, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

Symbol encode(std::span<const int> d, int p) {
  Symbol out = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    out = out * p + static_cast<Symbol>(*it);
  }
  return out;
}

// Remainder of `num` modulo the monic polynomial `den`, coefficients mod p.
std::vector<int> poly_mod(std::vector<int> num, std::span<const int> den,
                          int p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dd;) {
    const int c = num[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      num[i - dd + j] = ((num[i - dd + j] - c * den[j]) % p + p) % p;
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> factor_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<int>(p), m};
}

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
  const int m = static_cast<int>(poly.size()) - 1;
  if (m < 1) return false;
  for (int deg = 1; deg <= m / 2; ++deg) {
    // Every monic divisor candidate of degree `deg`: p^deg lower-coefficient
    // choices, enumerated as base-p counters.
    std::int64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    std::vector<int> divisor(deg + 1);
    divisor[deg] = 1;
    for (std::int64_t c = 0; c < count; ++c) {
      std::int64_t v = c;
      for (int i = 0; i < deg; ++i) {
        divisor[i] = static_cast<int>(v % p);
        v /= p;
      }
      const auto rem =
          poly_mod(std::vector<int>(poly.begin(), poly.end()), divisor, p);
      bool zero = true;
      for (int r : rem) zero = zero && (r == 0);
      if (zero) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(int p, int m,
                              std::optional<std::vector<int>> modulus) {
  if (!is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not prime");
  }
  if (m < 1) throw InputError("field degree m must be at least 1");
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldSize) {
      throw InputError("field size exceeds the supported maximum of 65536");
    }
  }

  auto data = std::make_shared<Data>();
  data->p = p;
  data->m = m;
  data->q = static_cast<std::uint32_t>(q);

  if (modulus) {
    const auto& mod = *modulus;
    if (mod.size() != static_cast<std::size_t>(m) + 1) {
      throw InputError("modulus must have m + 1 = " + std::to_string(m + 1) +
                       " coefficients");
    }
    for (int c : mod) {
      if (c < 0 || c >= p) {
        throw InputError("modulus coefficient " + std::to_string(c) +
                         " is outside [0, p)");
      }
    }
    if (mod.back() != 1) throw InputError("modulus is not monic");
    if (!is_irreducible_mod_p(mod, p)) {
      throw InputError("modulus is reducible over GF(" + std::to_string(p) +
                       ")");
    }
    data->modulus = mod;
  } else if (m == 1) {
    data->modulus = {0, 1};
  } else {
    const auto& table = builtin_moduli();
    const auto it = table.find(data->q);
    if (it == table.end()) {
      throw InputError("no built-in modulus for q = " + std::to_string(q) +
                       "; supply one explicitly");
    }
    data->modulus = it->second;
  }

  const std::uint32_t qq = data->q;
  if (qq <= kTableLimit) {
    data->add_table.resize(static_cast<std::size_t>(qq) * qq);
    data->mul_table.resize(static_cast<std::size_t>(qq) * qq);
    for (Symbol a = 0; a < qq; ++a) {
      for (Symbol b = 0; b < qq; ++b) {
        data->add_table[a * qq + b] =
            static_cast<std::uint16_t>(add_slow(*data, a, b));
        data->mul_table[a * qq + b] =
            static_cast<std::uint16_t>(mul_slow(*data, a, b));
      }
    }
  }
  data->neg_table.resize(qq);
  for (Symbol a = 0; a < qq; ++a) {
    auto d = digits(a, p, m);
    for (int& x : d) x = (p - x) % p;
    data->neg_table[a] = encode(d, p);
  }
  // a^(q-2) by square-and-multiply.
  data->inv_table.assign(qq, 0);
  for (Symbol a = 1; a < qq; ++a) {
    Symbol result = 1;
    Symbol base = a;
    for (std::uint64_t e = qq - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul_slow(*data, result, base);
      base = mul_slow(*data, base, base);
    }
    data->inv_table[a] = result;
  }
  return FiniteField(std::move(data));
}

FiniteField make_field(int p, int m, std::optional<std::vector<int>> modulus) {
  return FiniteField::make(p, m, std::move(modulus));
}

Symbol FiniteField::add_slow(const Data& d, Symbol a, Symbol b) {
  if (d.m == 1) return (a + b) % d.p;
  auto da = digits(a, d.p, d.m);
  const auto db = digits(b, d.p, d.m);
  for (int i = 0; i < d.m; ++i) da[i] = (da[i] + db[i]) % d.p;
  return encode(da, d.p);
}

Symbol FiniteField::mul_slow(const Data& d, Symbol a, Symbol b) {
  if (d.m == 1) {
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % d.p);
  }
  const auto da = digits(a, d.p, d.m);
  const auto db = digits(b, d.p, d.m);
  std::vector<int> prod(2 * d.m - 1, 0);
  for (int i = 0; i < d.m; ++i) {
    for (int j = 0; j < d.m; ++j) {
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % d.p;
    }
  }
  auto rem = poly_mod(std::move(prod), d.modulus, d.p);
  rem.resize(d.m, 0);
  return encode(rem, d.p);
}

Symbol FiniteField::add(Symbol a, Symbol b) const {
  const Data& d = *data_;
  if (!d.add_table.empty()) return d.add_table[a * d.q + b];
  return add_slow(d, a, b);
}

Symbol FiniteField::neg(Symbol a) const { return data_->neg_table[a]; }

Symbol FiniteField::sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

Symbol FiniteField::mul(Symbol a, Symbol b) const {
  const Data& d = *data_;
  if (!d.mul_table.empty()) return d.mul_table[a * d.q + b];
  return mul_slow(d, a, b);
}

Symbol FiniteField::inv(Symbol a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  return data_->inv_table[a];
}

Symbol FiniteField::pow(Symbol a, std::uint64_t e) const {
  Symbol result = 1;
  Symbol base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldElement FiniteField::element(std::int64_t rep) const {
  if (!contains(rep)) {
    throw InputError("element " + std::to_string(rep) + " is outside [0, " +
                     std::to_string(q()) + ")");
  }
  return FieldElement(*this, static_cast<Symbol>(rep));
}

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }

FieldElement FiniteField::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (Symbol a = 0; a < q(); ++a) out.emplace_back(*this, a);
  return out;
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  return a.data_ == b.data_ ||
         (a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus());
}

namespace {

const FiniteField& common_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("operands belong to different fields");
  }
  return a.field();
}

}  // namespace

FieldElement FieldElement::inv() const {
  return FieldElement(field_, field_.inv(rep_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return FieldElement(field_, field_.pow(rep_, e));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.add(a.rep(), b.rep()));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.sub(a.rep(), b.rep()));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.mul(a.rep(), b.rep()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_field(a, b);
  return FieldElement(f, f.mul(a.rep(), f.inv(b.rep())));
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field(), a.field().neg(a.rep()));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.rep() == b.rep() && a.field() == b.field();
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return a.inv(); }
std::vector<FieldElement> elements(const FiniteField& field) {
  return field.elements();
}

}  // namespace macw

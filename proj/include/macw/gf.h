#ifndef MACW_GF_H_
#define MACW_GF_H_

// Finite fields GF(q), q = p^m, with elements encoded as base-p digit
// integers: the polynomial d_0 + d_1 t + ... + d_{m-1} t^{m-1} is stored as
// d_0 + d_1 p + ... + d_{m-1} p^{m-1}.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace macw {

using Symbol = std::uint32_t;

class FieldElement;

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

class FiniteField {
 public:
  // Validates p, m and the modulus (monic, degree m, irreducible over GF(p)).
  // When m > 1 and no modulus is given, a built-in one is used for
  // q in {4, 8, 9, 16, 25, 27, 32}. Throws InputError otherwise.
  static FiniteField make(int p, int m,
                          std::optional<std::vector<int>> modulus = {});

  int p() const { return data_->p; }
  int m() const { return data_->m; }
  std::uint32_t q() const { return data_->q; }
  // Ascending coefficients, length m + 1, leading coefficient 1.
  const std::vector<int>& modulus() const { return data_->modulus; }

  bool contains(std::int64_t rep) const { return rep >= 0 && rep < q(); }

  Symbol add(Symbol a, Symbol b) const;
  Symbol sub(Symbol a, Symbol b) const;
  Symbol neg(Symbol a) const;
  Symbol mul(Symbol a, Symbol b) const;
  // Throws std::domain_error for a == 0.
  Symbol inv(Symbol a) const;
  Symbol pow(Symbol a, std::uint64_t e) const;

  FieldElement element(std::int64_t rep) const;
  FieldElement zero() const;
  FieldElement one() const;
  // All q elements, ascending by encoding.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  struct Data {
    int p = 0;
    int m = 0;
    std::uint32_t q = 0;
    std::vector<int> modulus;
    // Dense q*q tables, filled only for small fields.
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    std::vector<Symbol> neg_table;
    std::vector<Symbol> inv_table;
  };

  explicit FiniteField(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  static Symbol add_slow(const Data& d, Symbol a, Symbol b);
  static Symbol mul_slow(const Data& d, Symbol a, Symbol b);

  std::shared_ptr<const Data> data_;
};

FiniteField make_field(int p, int m,
                       std::optional<std::vector<int>> modulus = {});

class FieldElement {
 public:
  FieldElement(FiniteField field, Symbol rep)
      : field_(std::move(field)), rep_(rep) {}

  const FiniteField& field() const { return field_; }
  Symbol rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FiniteField field_;
  Symbol rep_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
std::vector<FieldElement> elements(const FiniteField& field);

// Monic-polynomial helpers over GF(p), ascending coefficients. Exposed for
// modulus validation and tests.
bool is_prime(std::int64_t n);
bool is_irreducible_mod_p(std::span<const int> poly, int p);

// q = p^m for prime p and m >= 1, or nullopt.
struct PrimePower {
  int p;
  int m;
};
std::optional<PrimePower> factor_prime_power(std::int64_t q);

}  // namespace macw

#endif  // MACW_GF_H_

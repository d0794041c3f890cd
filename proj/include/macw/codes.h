#ifndef MACW_CODES_H_
#define MACW_CODES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "macw/gf.h"
#include "macw/linalg.h"
#include "macw/poly.h"
#include "macw/rational.h"

namespace macw {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

// An [n, k] linear code over GF(q), given by a full-rank k x n generator.
class LinearCode {
 public:
  // Throws InputError if the generator is rank-deficient.
  explicit LinearCode(MatrixGF generator);

  const FiniteField& field() const { return generator_.field(); }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const MatrixGF& generator() const { return generator_; }
  // q^k.
  Integer size() const;

  // The code generated by dual_generator(generator()).
  LinearCode dual() const;

 private:
  MatrixGF generator_;
};

// Throws InputError on rank-deficient rows or entries outside the field.
LinearCode make_code(const FiniteField& field, std::size_t n,
                     const std::vector<std::vector<std::int64_t>>& rows);

struct WeightDistribution {
  std::size_t n = 0;
  // counts[i] = number of codewords of weight i; size n + 1.
  std::vector<Integer> counts;

  Integer total() const;
  friend bool operator==(const WeightDistribution& a,
                         const WeightDistribution& b) = default;
};

using CodewordVisitor = std::function<void(std::span<const Symbol>)>;

// Calls `visit` on all q^k codewords sum_i m_i * row_i, messages m taken in
// lexicographic order (m_0 most significant, symbols ascending). The first
// codeword is all-zero. Throws EnumerationCapExceeded when q^k > cap.
void enumerate_codewords(const LinearCode& code, const CodewordVisitor& visit,
                         std::uint64_t cap = kDefaultEnumerationCap);

std::vector<std::vector<Symbol>> codewords(
    const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

std::size_t hamming_weight(std::span<const Symbol> word);

WeightDistribution weight_distribution(
    const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

// sum_j counts[j] x^(n-j) y^j.
HomoPoly enumerator_poly(const WeightDistribution& w);

}  // namespace macw

#endif  // MACW_CODES_H_

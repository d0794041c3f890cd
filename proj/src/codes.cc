#include "macw/codes.h"

#include <string>
#include <utility>

#include "macw/errors.h"

namespace macw {

LinearCode::LinearCode(MatrixGF generator) : generator_(std::move(generator)) {
  const std::size_t rk = rank(generator_);
  if (rk != generator_.rows()) {
    throw InputError("generator rows are rank-deficient: " +
                     std::to_string(generator_.rows()) + " rows, rank " +
                     std::to_string(rk));
  }
}

Integer LinearCode::size() const {
  return ipow(Integer(field().q()), static_cast<std::int64_t>(k()));
}

LinearCode LinearCode::dual() const {
  return LinearCode(dual_generator(generator_));
}

LinearCode make_code(const FiniteField& field, std::size_t n,
                     const std::vector<std::vector<std::int64_t>>& rows) {
  return LinearCode(MatrixGF::from_rows(field, n, rows));
}

Integer WeightDistribution::total() const {
  Integer sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

void enumerate_codewords(const LinearCode& code, const CodewordVisitor& visit,
                         std::uint64_t cap) {
  const Integer total = code.size();
  if (total > Integer(static_cast<unsigned long>(cap))) {
    throw EnumerationCapExceeded(total,
                                 Integer(static_cast<unsigned long>(cap)));
  }
  const FiniteField& f = code.field();
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const Symbol q = f.q();

  // partial[i] = sum_{j < i} m_j * row_j, so partial[k] is the codeword.
  // Changing digit i only invalidates partial[i + 1 ..].
  std::vector<Symbol> message(k, 0);
  std::vector<std::vector<Symbol>> partial(k + 1, std::vector<Symbol>(n, 0));
  auto refresh_from = [&](std::size_t i) {
    for (std::size_t level = i; level < k; ++level) {
      const auto row = code.generator().row(level);
      const Symbol m = message[level];
      auto& dst = partial[level + 1];
      const auto& src = partial[level];
      for (std::size_t c = 0; c < n; ++c) {
        dst[c] = m == 0 ? src[c] : f.add(src[c], f.mul(m, row[c]));
      }
    }
  };

  visit(partial[k]);
  while (true) {
    // Increment the message as a base-q counter, last digit fastest.
    std::size_t digit = k;
    while (digit > 0) {
      --digit;
      if (++message[digit] < q) break;
      message[digit] = 0;
      if (digit == 0) return;
    }
    if (k == 0) return;
    refresh_from(digit);
    visit(partial[k]);
  }
}

std::vector<std::vector<Symbol>> codewords(const LinearCode& code,
                                           std::uint64_t cap) {
  std::vector<std::vector<Symbol>> out;
  enumerate_codewords(
      code,
      [&out](std::span<const Symbol> word) {
        out.emplace_back(word.begin(), word.end());
      },
      cap);
  return out;
}

std::size_t hamming_weight(std::span<const Symbol> word) {
  std::size_t w = 0;
  for (Symbol s : word) w += (s != 0);
  return w;
}

WeightDistribution weight_distribution(const LinearCode& code,
                                       std::uint64_t cap) {
  std::vector<std::uint64_t> tally(code.n() + 1, 0);
  enumerate_codewords(
      code, [&tally](std::span<const Symbol> word) { ++tally[hamming_weight(word)]; },
      cap);
  WeightDistribution out;
  out.n = code.n();
  out.counts.reserve(tally.size());
  for (auto c : tally) out.counts.emplace_back(static_cast<unsigned long>(c));
  return out;
}

HomoPoly enumerator_poly(const WeightDistribution& w) {
  std::vector<Rational> coeffs;
  coeffs.reserve(w.counts.size());
  for (const auto& c : w.counts) coeffs.emplace_back(c);
  return HomoPoly(static_cast<int>(w.n), std::move(coeffs));
}

}  // namespace macw

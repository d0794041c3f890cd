#ifndef MACW_LINALG_H_
#define MACW_LINALG_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "macw/gf.h"

namespace macw {

class MatrixGF;
struct RrefResult;
RrefResult rref(const MatrixGF& m);

// Dense row-major matrix over GF(q). Zero-row matrices are allowed (they
// represent the zero code); zero columns are not.
class MatrixGF {
 public:
  MatrixGF(FiniteField field, std::size_t rows, std::size_t cols);
  // Throws InputError if a row has the wrong length or an entry is outside
  // the field.
  static MatrixGF from_rows(FiniteField field, std::size_t cols,
                            const std::vector<std::vector<std::int64_t>>& rows);
  static MatrixGF identity(FiniteField field, std::size_t n);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Symbol v);
  std::span<const Symbol> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<std::vector<Symbol>> to_rows() const;

  friend bool operator==(const MatrixGF& a, const MatrixGF& b);

 private:
  std::span<Symbol> mutable_row(std::size_t r) {
    return {entries_.data() + r * cols_, cols_};
  }

  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> entries_;

  friend RrefResult rref(const MatrixGF& m);
};

struct RrefResult {
  MatrixGF reduced;  // same shape as the input; zero rows at the bottom
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const MatrixGF& m);

std::size_t rank(const MatrixGF& m);

// Rows form a basis of { v : m * v^T = 0 }; cols - rank rows.
MatrixGF nullspace_basis(const MatrixGF& m);

// (n - k) x n generator of the dual code. Throws InputError when `g` is not
// of full row rank. No column permutations are applied.
MatrixGF dual_generator(const MatrixGF& g);

// Standard inner product over the field.
Symbol dot(const FiniteField& field, std::span<const Symbol> a,
           std::span<const Symbol> b);

// True when every row of `a` is orthogonal to every row of `b`.
bool rows_orthogonal(const MatrixGF& a, const MatrixGF& b);

// Nonzero rows of rref(m): a canonical basis of the row space.
MatrixGF row_space_basis(const MatrixGF& m);

bool same_row_space(const MatrixGF& a, const MatrixGF& b);

}  // namespace macw

#endif  // MACW_LINALG_H_

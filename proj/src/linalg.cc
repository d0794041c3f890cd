#include "macw/linalg.h"

#include <string>
#include <utility>

#include "macw/errors.h"

namespace macw {

MatrixGF::MatrixGF(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, 0) {
  if (cols == 0) throw InputError("matrix must have at least one column");
}

MatrixGF MatrixGF::from_rows(
    FiniteField field, std::size_t cols,
    const std::vector<std::vector<std::int64_t>>& rows) {
  MatrixGF out(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw InputError("row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out.set(r, c, out.field_.element(rows[r][c]).rep());
    }
  }
  return out;
}

MatrixGF MatrixGF::identity(FiniteField field, std::size_t n) {
  MatrixGF out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
  return out;
}

void MatrixGF::set(std::size_t r, std::size_t c, Symbol v) {
  if (!field_.contains(v)) {
    throw InputError("entry " + std::to_string(v) + " is outside the field");
  }
  entries_[r * cols_ + c] = v;
}

std::vector<std::vector<Symbol>> MatrixGF::to_rows() const {
  std::vector<std::vector<Symbol>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto row_view = row(r);
    out.emplace_back(row_view.begin(), row_view.end());
  }
  return out;
}

bool operator==(const MatrixGF& a, const MatrixGF& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

RrefResult rref(const MatrixGF& m) {
  MatrixGF out = m;
  const FiniteField& f = out.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < out.cols() && lead < out.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < out.rows() && out.at(pivot, col) == 0) ++pivot;
    if (pivot == out.rows()) continue;
    if (pivot != lead) {
      auto a = out.mutable_row(pivot);
      auto b = out.mutable_row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Symbol scale = f.inv(out.at(lead, col));
    auto lead_row = out.mutable_row(lead);
    for (auto& v : lead_row) v = f.mul(v, scale);
    for (std::size_t r = 0; r < out.rows(); ++r) {
      if (r == lead) continue;
      const Symbol factor = out.at(r, col);
      if (factor == 0) continue;
      auto row = out.mutable_row(r);
      for (std::size_t c = 0; c < out.cols(); ++c) {
        row[c] = f.sub(row[c], f.mul(factor, lead_row[c]));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return RrefResult{std::move(out), pivots.size(), std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

MatrixGF nullspace_basis(const MatrixGF& m) {
  const auto [reduced, rk, pivots] = rref(m);
  const FiniteField& f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  // One basis vector per free column: set it to 1 and solve the pivot
  // coordinates from the reduced rows.
  MatrixGF basis(f, n - rk, n);
  std::size_t out_row = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(out_row, free, 1);
    for (std::size_t i = 0; i < rk; ++i) {
      basis.set(out_row, pivots[i], f.neg(reduced.at(i, free)));
    }
    ++out_row;
  }
  return basis;
}

MatrixGF dual_generator(const MatrixGF& g) {
  const std::size_t rk = rank(g);
  if (rk != g.rows()) {
    throw InputError("generator matrix has rank " + std::to_string(rk) +
                     " but " + std::to_string(g.rows()) + " rows");
  }
  return nullspace_basis(g);
}

Symbol dot(const FiniteField& field, std::span<const Symbol> a,
           std::span<const Symbol> b) {
  Symbol acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc = field.add(acc, field.mul(a[i], b[i]));
  }
  return acc;
}

bool rows_orthogonal(const MatrixGF& a, const MatrixGF& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("matrices belong to different fields");
  }
  if (a.cols() != b.cols()) throw InputError("column counts differ");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      if (dot(a.field(), a.row(i), b.row(j)) != 0) return false;
    }
  }
  return true;
}

MatrixGF row_space_basis(const MatrixGF& m) {
  const auto result = rref(m);
  MatrixGF out(m.field(), result.rank, m.cols());
  for (std::size_t r = 0; r < result.rank; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out.set(r, c, result.reduced.at(r, c));
    }
  }
  return out;
}

bool same_row_space(const MatrixGF& a, const MatrixGF& b) {
  return row_space_basis(a) == row_space_basis(b);
}

}  // namespace macw

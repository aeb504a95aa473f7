#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace msk {

using RationalVector = std::vector<mpq_class>;

/// Row echelon form over ℚ built incrementally by fraction-free
/// elimination on integer rows.
///
/// Each row is scaled to a primitive integer vector; reducing row r by a
/// pivot row p is r ← p[c]·r − r[c]·p followed by division by the content.
/// Pivots are taken in fixed column order, so the result depends only on
/// the span of the inserted rows and the column order.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  /// Adds a row; returns true when it increased the rank.
  bool add_row(const RationalVector& row);
  bool add_row(std::vector<mpz_class> row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }
  /// Reduces without inserting; true when the row lies in the span.
  bool in_span(const RationalVector& row) const;

  /// Basis of the right kernel: one vector per non-pivot column c, with a 1
  /// in column c and zeros in the other free columns.
  std::vector<RationalVector> nullspace() const;
  /// Reduced row echelon form rows, pivot entries equal to 1.
  std::map<std::size_t, RationalVector> reduced() const;

 private:
  std::vector<mpz_class> reduce(std::vector<mpz_class> row) const;

  std::size_t cols_;
  std::map<std::size_t, std::vector<mpz_class>> rows_;  // keyed by pivot column
};

/// Integer-scaled copy of a rational row (primitive, leading sign kept).
std::vector<mpz_class> to_primitive(const RationalVector& row);

/// Solves A x = b for x when solvable (columns of A given as vectors).
/// Returns false when b is outside the column span. The solution uses the
/// free variables set to zero.
bool solve_columns(const std::vector<RationalVector>& columns, const RationalVector& rhs,
                   RationalVector& solution);

}  // namespace msk

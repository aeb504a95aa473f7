#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "msk/ratfun.hpp"

namespace msk {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<RatFun>;

/// N×N matrix viewed as an l×l grid of blocks of sizes (n, k_2, ..., k_l).
class BlockMatrix {
 public:
  BlockMatrix(RatMatrix m, std::vector<int> block_sizes);

  const RatMatrix& matrix() const { return m_; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  std::size_t block_count() const { return sizes_.size(); }
  /// Copy of block (i, j).
  RatMatrix block(std::size_t i, std::size_t j) const;
  /// Diagonal blocks are identities and blocks above the diagonal vanish.
  bool is_block_unitriangular() const;

 private:
  RatMatrix m_;
  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
};

RatMatrix identity_matrix(const VarTable::Ptr& table, std::size_t n);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
/// Entrywise ratfun_equal.
bool matrices_equal(const RatMatrix& a, const RatMatrix& b);
int max_entry_degree(const RatMatrix& m);

RatFun determinant(const RatMatrix& m);

struct AdjugateInverse {
  RatMatrix inverse;  // entries cofactor/det
  RatFun det;
};

/// Inverse through the adjugate. Rows with rational entries are first
/// cleared of denominators, so the cofactors are polynomial determinants.
/// Throws std::domain_error("degenerate pushforward frame") when det ≡ 0.
AdjugateInverse adjugate_inverse(const RatMatrix& m);

}  // namespace msk

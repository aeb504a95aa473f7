#include "msk/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace msk {

BlockMatrix::BlockMatrix(RatMatrix m, std::vector<int> block_sizes)
    : m_(std::move(m)), sizes_(std::move(block_sizes)) {
  std::size_t off = 0;
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("block sizes must be positive");
    offsets_.push_back(off);
    off += static_cast<std::size_t>(s);
  }
  if (off != m_.rows() || off != m_.cols())
    throw std::invalid_argument("block sizes do not sum to the matrix size");
}

RatMatrix BlockMatrix::block(std::size_t i, std::size_t j) const {
  const auto r = static_cast<std::size_t>(sizes_.at(i));
  const auto c = static_cast<std::size_t>(sizes_.at(j));
  RatMatrix out(r, c);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < c; ++b) out(a, b) = m_(offsets_[i] + a, offsets_[j] + b);
  return out;
}

bool BlockMatrix::is_block_unitriangular() const {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    for (std::size_t j = i; j < sizes_.size(); ++j) {
      const RatMatrix b = block(i, j);
      for (std::size_t a = 0; a < b.rows(); ++a)
        for (std::size_t c = 0; c < b.cols(); ++c) {
          const bool diag = (i == j && a == c);
          const RatFun& x = b(a, c);
          if (diag ? !(x.is_polynomial() && x.num().is_constant() &&
                       x.num().constant_term().is_one())
                   : !x.is_zero())
            return false;
        }
    }
  }
  return true;
}

RatMatrix identity_matrix(const VarTable::Ptr& table, std::size_t n) {
  RatMatrix m(n, n, RatFun(Poly(table)));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFun(Poly::constant(table, 1));
  return m;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RatFun acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

bool matrices_equal(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ratfun_equal(a(i, j), b(i, j))) return false;
  return true;
}

int max_entry_degree(const RatMatrix& m) {
  int d = kMinusInfinity;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d = std::max(d, m(i, j).degree());
  return d;
}

namespace {

using PolyMatrix = Matrix<Poly>;

// Laplace expansion along rows, memoized on the set of remaining columns.
class PolyDeterminant {
 public:
  PolyDeterminant(const PolyMatrix& m, VarTable::Ptr table) : m_(m), table_(std::move(table)) {}

  Poly det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    rows_ = rows;
    cols_ = cols;
    memo_.clear();
    const std::uint64_t all = cols.empty() ? 0 : ((std::uint64_t{1} << cols.size()) - 1);
    return expand(0, all);
  }

 private:
  Poly expand(std::size_t r, std::uint64_t mask) {
    if (r == rows_.size()) return Poly::constant(table_, 1);
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Poly acc(table_);
    int sign = 1;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!(mask & (std::uint64_t{1} << c))) continue;
      const Poly& entry = m_(rows_[r], cols_[c]);
      if (!entry.is_zero()) {
        Poly minor = expand(r + 1, mask & ~(std::uint64_t{1} << c));
        if (!minor.is_zero()) {
          if (sign > 0) acc += entry * minor;
          else acc -= entry * minor;
        }
      }
      sign = -sign;
    }
    memo_.emplace(mask, acc);
    return acc;
  }

  const PolyMatrix& m_;
  VarTable::Ptr table_;
  std::vector<std::size_t> rows_, cols_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

VarTable::Ptr table_of(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).table()) return m(i, j).table();
  throw std::invalid_argument("matrix has no variable table");
}

// Clears denominators row by row: m = diag(scale)^-1 * poly.
struct Cleared {
  PolyMatrix poly;
  std::vector<Poly> scale;
};

Cleared clear_rows(const RatMatrix& m, const VarTable::Ptr& table) {
  Cleared out{PolyMatrix(m.rows(), m.cols()), {}};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Poly> dens;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFun& x = m(i, j);
      if (x.is_zero() || x.is_polynomial()) continue;
      if (std::find(dens.begin(), dens.end(), x.den()) == dens.end()) dens.push_back(x.den());
    }
    Poly scale = Poly::constant(table, 1);
    for (const auto& d : dens) scale *= d;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFun& x = m(i, j);
      if (x.is_zero()) {
        out.poly(i, j) = Poly(table);
        continue;
      }
      Poly entry = x.num().table() ? x.num() : Poly(table);
      for (const auto& d : dens)
        if (x.is_polynomial() || !(d == x.den())) entry *= d;
      out.poly(i, j) = entry;
    }
    out.scale.push_back(std::move(scale));
  }
  return out;
}

}  // namespace

RatFun determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() > 62) throw std::invalid_argument("matrix too large for cofactor expansion");
  const auto table = table_of(m);
  const Cleared c = clear_rows(m, table);
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  PolyDeterminant pd(c.poly, table);
  Poly den = Poly::constant(table, 1);
  for (const auto& s : c.scale) den *= s;
  return RatFun(pd.det(idx, idx), den);
}

AdjugateInverse adjugate_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto table = table_of(m);
  const Cleared c = clear_rows(m, table);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  PolyDeterminant pd(c.poly, table);
  const Poly det_b = pd.det(idx, idx);
  if (det_b.is_zero()) throw std::domain_error("degenerate pushforward frame");

  Poly scale_all = Poly::constant(table, 1);
  for (const auto& s : c.scale) scale_all *= s;

  AdjugateInverse out{RatMatrix(n, n), RatFun(det_b, scale_all)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj(B)_{ij} = (-1)^{i+j} minor with row j and column i removed.
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Poly cof = n == 1 ? Poly::constant(table, 1) : pd.det(rows, cols);
      if ((i + j) % 2 == 1) cof = -cof;
      out.inverse(i, j) = RatFun(cof * c.scale[j], det_b);
    }
  }
  return out;
}

}  // namespace msk

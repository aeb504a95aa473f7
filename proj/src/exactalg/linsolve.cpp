#include "msk/linsolve.hpp"

#include <stdexcept>

namespace msk {

namespace {

void make_primitive(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (sgn(x) != 0) g = gcd(g, x);
  if (g > 1)
    for (auto& x : row) x /= g;
}

std::size_t leading(const std::vector<mpz_class>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    if (sgn(row[i]) != 0) return i;
  return row.size();
}

}  // namespace

std::vector<mpz_class> to_primitive(const RationalVector& row) {
  mpz_class l = 1;
  for (const auto& x : row) l = lcm(l, x.get_den());
  std::vector<mpz_class> out;
  out.reserve(row.size());
  for (const auto& x : row) out.emplace_back(x.get_num() * (l / x.get_den()));
  make_primitive(out);
  return out;
}

std::vector<mpz_class> RowEchelon::reduce(std::vector<mpz_class> row) const {
  for (const auto& [c, pivot] : rows_) {
    if (sgn(row[c]) == 0) continue;
    const mpz_class a = pivot[c];
    const mpz_class b = row[c];
    for (std::size_t k = 0; k < cols_; ++k) row[k] = a * row[k] - b * pivot[k];
    make_primitive(row);
  }
  return row;
}

bool RowEchelon::add_row(const RationalVector& row) { return add_row(to_primitive(row)); }

bool RowEchelon::add_row(std::vector<mpz_class> row) {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  if (full()) return false;
  row = reduce(std::move(row));
  const std::size_t lead = leading(row);
  if (lead == cols_) return false;
  if (sgn(row[lead]) < 0)
    for (auto& x : row) x = -x;
  rows_.emplace(lead, std::move(row));
  return true;
}

bool RowEchelon::in_span(const RationalVector& row) const {
  return leading(reduce(to_primitive(row))) == cols_;
}

std::map<std::size_t, RationalVector> RowEchelon::reduced() const {
  std::map<std::size_t, RationalVector> out;
  for (const auto& [c, row] : rows_) {
    RationalVector r(cols_);
    for (std::size_t k = 0; k < cols_; ++k) r[k] = mpq_class(row[k], row[c]);
    for (auto& x : r) x.canonicalize();
    out.emplace(c, std::move(r));
  }
  // Back-substitute from the last pivot upward.
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    const std::size_t c = it->first;
    const RationalVector& p = it->second;
    for (auto& [c2, r] : out) {
      if (c2 >= c || sgn(r[c]) == 0) continue;
      const mpq_class f = r[c];
      for (std::size_t k = c; k < cols_; ++k) r[k] -= f * p[k];
    }
  }
  return out;
}

std::vector<RationalVector> RowEchelon::nullspace() const {
  const auto rref = reduced();
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (rref.count(free)) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (const auto& [c, r] : rref) v[c] = -r[free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve_columns(const std::vector<RationalVector>& columns, const RationalVector& rhs,
                   RationalVector& solution) {
  const std::size_t m = rhs.size();
  const std::size_t n = columns.size();
  // Augmented rows [A | b].
  RowEchelon ech(n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = columns[j].at(i);
    row[n] = rhs[i];
    ech.add_row(row);
  }
  const auto rref = ech.reduced();
  if (rref.count(n)) return false;
  solution.assign(n, 0);
  for (const auto& [c, r] : rref) solution[c] = r[n];
  return true;
}

}  // namespace msk

#pragma once

#include <span>
#include <string>
#include <vector>

#include "msk/poly.hpp"

namespace msk {

/// Quotient num/den of polynomials, kept unreduced.
///
/// Only constant denominators are normalized away (den becomes 1).
/// Equality is decided by cross-multiplication. Degrees are therefore
/// upper bounds for the degree of the reduced fraction.
class RatFun {
 public:
  RatFun() = default;
  RatFun(Poly num);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is the zero polynomial.
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarTable::Ptr& table() const { return num_.table() ? num_.table() : den_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// max(deg num, deg den).
  int degree() const;
  int weighted_degree() const;

  RatFun conj() const { return RatFun(num_.conj(), den_.conj()); }
  RatFun real_part() const;
  RatFun imag_part() const;
  RatFun derivative(std::size_t var) const;

  RatFun operator-() const { return RatFun(-num_, den_); }
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  /// Throws std::domain_error when b is zero.
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

/// a ≡ b as rational functions (num_a·den_b = num_b·den_a).
bool ratfun_equal(const RatFun& a, const RatFun& b);

/// p with variable i replaced by images[i]; common denominators are built
/// per variable from the largest exponent occurring in p.
RatFun substitute(const Poly& p, std::span<const RatFun> images);
RatFun substitute(const RatFun& r, std::span<const RatFun> images);

/// Weighted Taylor expansion at the origin, truncated at max_weight.
/// Requires the denominator not to vanish at 0 (std::domain_error).
Poly taylor_truncate(const RatFun& r, int max_weight);

}  // namespace msk

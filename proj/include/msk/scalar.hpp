#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace msk {

/// Gaussian rational re + i*im with arbitrary-precision parts.
///
/// Both parts are kept canonical (coprime, positive denominator), so
/// equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  static Scalar imaginary_unit() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |x|^2, always real.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Grammar-compatible text: "3", "-1/2", "i", "(1+2*i)", "-3/4*i".
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Canonical rational from numerator/denominator.
mpq_class make_rational(long num, long den = 1);

}  // namespace msk

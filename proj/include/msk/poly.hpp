#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "msk/scalar.hpp"
#include "msk/vartable.hpp"

namespace msk {

using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order: total degree first, then the exponent of
/// the earliest variable in the table.
struct GrLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Sparse polynomial over Gaussian rationals in the variables of a
/// VarTable. Zero coefficients are never stored.
///
/// A default-constructed Poly is the zero polynomial without a table; it
/// adopts the table of whatever it is combined with.
class Poly {
 public:
  using Terms = std::map<Exponents, Scalar, GrLex>;

  Poly() = default;
  explicit Poly(VarTable::Ptr table) : table_(std::move(table)) {}

  static Poly constant(VarTable::Ptr table, const Scalar& c);
  static Poly variable(VarTable::Ptr table, std::size_t var);
  static Poly monomial(VarTable::Ptr table, Exponents e, const Scalar& c = 1);

  const VarTable::Ptr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coeff(const Exponents& e) const;

  /// Total degree over non-parameter variables; kMinusInfinity for zero.
  int degree() const;
  /// Max over monomials of Σ exponent·weight; kMinusInfinity for zero.
  int weighted_degree() const;
  /// Min over monomials of the weight; kMinusInfinity for zero.
  int min_weight() const;
  bool is_weighted_homogeneous(int weight) const;
  /// Terms of exactly the given weight.
  Poly weight_part(int weight) const;
  /// Terms of weight <= max_weight.
  Poly truncate_weight(int max_weight) const;
  bool depends_on(std::size_t var) const;

  /// Conjugates coefficients and swaps each variable with its conjugate.
  Poly conj() const;
  Poly real_part() const;
  Poly imag_part() const;
  Poly derivative(std::size_t var) const;
  Poly pow(unsigned k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Expression string in the input grammar, highest monomial first.
  std::string str() const;

  /// Adds c·x^e in place.
  void add_term(const Exponents& e, const Scalar& c);

 private:
  void adopt(const Poly& o);
  Exponents unit(std::size_t var) const;

  VarTable::Ptr table_;
  Terms terms_;
};

/// Image of p under the ring homomorphism sending variable i to images[i]
/// (scalars pass through unchanged). images.size() must equal the table size.
Poly substitute(const Poly& p, std::span<const Poly> images);

/// Value of p at a point assigning a scalar to every variable.
Scalar evaluate(const Poly& p, std::span<const Scalar> point);

/// Identity images for every variable of a table, as a starting point for
/// partial substitutions.
std::vector<Poly> identity_images(const VarTable::Ptr& table);

}  // namespace msk

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msk/ratfun.hpp"

namespace msk {

/// Holomorphic vector field X = 2 Re(Σ f_a ∂/∂z_a + Σ g_{j,b} ∂/∂w_{j,b}).
///
/// coeffs holds the N holomorphic coefficients in ambient order (all f
/// first, then the w blocks by increasing weight). A field written as
/// Re(·) elsewhere is stored here as 2 Re(·/2).
struct VectorField {
  VarTable::Ptr table;
  std::vector<Poly> coeffs;
  std::optional<int> declared_weight;

  static VectorField zero(const VarTable::Ptr& table);

  const Poly& f(int a) const { return coeffs.at(static_cast<std::size_t>(a)); }
  const Poly& g(int block, int b) const {
    return coeffs.at(static_cast<std::size_t>(table->block_offset(block) + b));
  }

  bool is_zero() const;
  /// Coefficients use only z and w (and parameters).
  bool is_holomorphic() const;
  /// Weight ν if every term c·∂/∂x has weight [c] - [x] = ν, nullopt
  /// otherwise (including the zero field).
  std::optional<int> homogeneous_weight() const;
  /// Largest term weight [c] - [x]; kMinusInfinity for the zero field.
  int max_term_weight() const;
  int degree() const;

  /// The derivation Σ coeff_i ∂/∂x_i applied to p.
  Poly apply(const Poly& p) const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator*=(const Scalar& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a += -b; }
  friend VectorField operator*(const Scalar& c, VectorField a) { return a *= c; }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.coeffs == b.coeffs;
  }

  /// "2Re(f1 d/dz1 + ...)" style rendering for diagnostics.
  std::string str() const;
};

}  // namespace msk

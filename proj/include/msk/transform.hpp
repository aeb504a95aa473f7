#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msk/autalgebra.hpp"
#include "msk/matrix.hpp"

namespace msk {

/// Self-map of the ambient space: comps[i] is the image of holomorphic
/// coordinate i (all F first, then the G blocks by increasing weight).
struct RationalMap {
  VarTable::Ptr table;
  std::vector<RatFun> comps;

  static RationalMap identity(const VarTable::Ptr& table);

  const RatFun& F(int a) const { return comps.at(static_cast<std::size_t>(a)); }
  const RatFun& G(int block, int b) const {
    return comps.at(static_cast<std::size_t>(table->block_offset(block) + b));
  }
  bool is_polynomial() const;
  /// Value at the origin, nullopt when some denominator vanishes there.
  std::optional<std::vector<Scalar>> origin_image() const;
  std::string str() const;
};

/// Max over components of max(deg num, deg den).
int map_degree(const RationalMap& m);

/// a ∘ b. Throws std::domain_error("composition undefined on dense set")
/// when a denominator of a vanishes identically along b.
RationalMap compose(const RationalMap& a, const RationalMap& b);

/// Entrywise ratfun_equal.
bool maps_equal(const RationalMap& a, const RationalMap& b);

/// J(i,k) = ∂m_i/∂x_k over the holomorphic coordinates.
RatMatrix jacobian(const RationalMap& m);

/// Columns of coefficients of a field evaluated along m: A(m)(i,k) = X_k,i ∘ m.
RatMatrix fields_along(const std::vector<VectorField>& fields, const RationalMap& m);

struct AutomorphismCheck {
  /// restrict(Im G^j - Φ_j(F, F̄, Re G)) per w coordinate.
  std::vector<RatFun> residuals;
  bool maps_into = false;
  bool jacobian_nonzero = false;
  bool holds() const { return maps_into && jacobian_nonzero; }
};

/// Throws SurfaceError when a component's denominator vanishes on Q.
AutomorphismCheck check_automorphism(const RationalMap& m, const ModelSurface& s);
bool verify_automorphism(const RationalMap& m, const ModelSurface& s);

/// Time-one flow of a field whose terms all have negative weight, as the
/// Lie series Σ X^k(x_i)/k!. Throws std::domain_error("not nilpotent under
/// grading") for any term of weight >= 0 and std::invalid_argument when X
/// is not tangent to Q.
RationalMap exp_negative(const VectorField& x, const ModelSurface& s);

/// z -> t z, w_j -> t^j w_j. Throws std::invalid_argument for t <= 0.
RationalMap dilation(const ModelSurface& s, const mpq_class& t);
/// Same with t a parameter of the surface's table.
RationalMap dilation(const ModelSurface& s, const std::string& param);

/// Inverse of a map whose component i is weighted homogeneous of weight
/// [x_i] (an element of the quasi-linear group). Throws std::domain_error
/// when the linear part is singular.
RationalMap quasi_linear_inverse(const RationalMap& m);

/// Element of exp(g_-) sending 0 to ξ, as the product
/// exp(X_{-1}) ∘ exp(X_{-2}) ∘ ... ∘ exp(X_{-l}).
struct Shift {
  RationalMap map;
  RationalMap inverse;
  std::vector<VectorField> factors;  // nonzero X_{-j} in increasing j
};

/// Throws std::domain_error for ξ off Q or for a non-homogeneous surface.
Shift transitive_shift(const ModelSurface& s, const std::vector<Scalar>& xi);

struct Decomposition {
  Shift tau;
  RationalMap sigma;
  RationalMap L;
  RationalMap Nplus;
};

/// χ = τ ∘ σ with τ ∈ exp(g_-) and σ(0) = 0, then σ = L ∘ N with L the
/// weight-preserving part of σ and N = identity + higher weight.
Decomposition decompose_aut(const RationalMap& chi, const ModelSurface& s);

/// Component i of m minus x_i has only terms of weight > [x_i] at the origin.
bool is_identity_plus_higher(const RationalMap& m);
/// Every component i is weighted homogeneous of weight [x_i].
bool is_quasi_linear(const RationalMap& m);
/// Polynomial, and component i is x_i plus terms of weight < [x_i].
bool is_triangular_shift(const RationalMap& m);

}  // namespace msk

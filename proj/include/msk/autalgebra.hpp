#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "msk/linsolve.hpp"
#include "msk/surface.hpp"
#include "msk/vector_field.hpp"

namespace msk {

/// Thrown when a graded component needs more unknowns than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  /// Cap on the number of coefficient monomials per graded component.
  std::size_t monomial_cap = 20000;
};

/// Graded pieces g_ν of aut Q from ν = -l up to max_weight.
struct GradedAlgebra {
  VarTable::Ptr table;
  std::map<int, std::vector<VectorField>> components;
  int max_weight = 0;
  /// Highest weight with a nonzero component.
  int delta = 0;
  /// Largest ordinary degree among basis coefficients.
  int max_degree = 0;
  bool partial = false;
  std::string partial_reason;

  std::map<int, int> dims() const;
  int total_dim() const;
  const std::vector<VectorField>& component(int weight) const;
};

/// Tangency defects, one per w coordinate in ambient order:
///   restrict(Im g_j) - restrict(dΦ_j(f, f̄, Re g_2, ..., Re g_{j-1})).
/// X is tangent to Q iff every entry is zero.
std::vector<Poly> tangency_residual(const VectorField& x, const ModelSurface& s);

/// Deterministic basis of the real space of weight-ν fields tangent to Q.
std::vector<VectorField> graded_component(const ModelSurface& s, int weight,
                                          const SolveOptions& opts = {});

/// All components from -l to max_weight (default l·n·(κ+1)). A budget
/// overrun stops the scan and flags the result as partial.
GradedAlgebra compute_aut(const ModelSurface& s, std::optional<int> max_weight = std::nullopt,
                          const SolveOptions& opts = {});

/// Default truncation weight l·n·(κ+1).
int default_max_weight(const ModelSurface& s);

/// Commutator of the holomorphic parts: [X,Y]_i = X(Y_i) - Y(X_i).
VectorField bracket(const VectorField& x, const VectorField& y);

/// X_0 = 2 Re(Σ z ∂/∂z + Σ j w_j ∂/∂w_j).
VectorField euler_field(const ModelSurface& s);

/// Σ dim g_{-j} = 2n + κ.
bool is_homogeneous(const ModelSurface& s, const SolveOptions& opts = {});
bool is_homogeneous(const GradedAlgebra& alg, const ModelSurface& s);

/// Real coordinates of a field: (Re, Im) of every coefficient, over a
/// shared monomial index built from all fields passed together.
std::vector<RationalVector> real_coordinates(const std::vector<VectorField>& fields);

/// True when x is a real linear combination of basis.
bool in_span(const VectorField& x, const std::vector<VectorField>& basis);

/// Real parameters of a negative-weight field: (Re p_a, Im p_a) of the
/// constant f for weight -1, Re of the constant g_j for weight -j.
RationalVector negative_parameters(const VectorField& x, int j);

/// The element of g_{-j} with the given parameters (see
/// negative_parameters). Throws std::domain_error when the component does
/// not realize them, which happens exactly when Q is not homogeneous.
VectorField parameter_field(const std::vector<VectorField>& component, int j,
                            const RationalVector& params);

}  // namespace msk

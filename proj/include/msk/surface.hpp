#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "msk/ratfun.hpp"

namespace msk {

class SurfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model surface v_j = Φ_j(z, z̄, u_2, ..., u_{j-1}) in ℂ^n × ℂ^{k_2} × ... .
struct ModelSurface {
  VarTable::Ptr table;
  /// forms[block][b] is the component defining Im w_{j,b}, blocks ordered
  /// as in table->blocks().
  std::vector<std::vector<Poly>> forms;
  /// Weight set declared in the input, when given explicitly.
  std::vector<int> declared_weights;

  int n() const { return table->n(); }
  int top_weight() const { return table->top_weight(); }
  int codim() const { return table->codim(); }
  int ambient_dim() const { return table->ambient_dim(); }
  int real_dim() const { return 2 * n() + codim(); }
  std::vector<int> weights() const;
  const Poly& form(int block, int b) const {
    return forms.at(static_cast<std::size_t>(block)).at(static_cast<std::size_t>(b));
  }
};

struct SurfaceReport {
  bool valid = true;
  std::vector<std::string> reasons;
  std::vector<std::string> warnings;
  int real_dim = 0;
  std::vector<int> weights;
};

/// Reads the surface JSON document without checking the surface invariants.
/// Throws SurfaceError on malformed JSON or schema violations and
/// ParseError (wrapped with the form location) on bad expressions.
ModelSurface read_surface(std::string_view document);

/// read_surface followed by validate; throws SurfaceError listing every
/// violated invariant when the surface is invalid.
ModelSurface parse_surface(std::string_view document);

/// Programmatic construction from expression strings keyed by weight.
ModelSurface make_surface(int n, const std::vector<std::pair<int, std::vector<std::string>>>& forms,
                          std::vector<std::string> params = {});

SurfaceReport validate(const ModelSurface& s);

/// Replaces w_j by u_j + iΦ_j and conj(w_j) by u_j - iΦ_j.
Poly restrict_to_surface(const Poly& p, const ModelSurface& s);
RatFun restrict_to_surface(const RatFun& r, const ModelSurface& s);

/// Point of Q given by its free real coordinates: z ∈ ℂ^n and u ∈ ℝ^κ;
/// v is computed from the forms.
struct SurfacePoint {
  std::vector<Scalar> z;
  std::vector<mpq_class> u;  // ambient order of the w coordinates
};

/// Holomorphic coordinates (z, w) of a surface point.
std::vector<Scalar> ambient_point(const ModelSurface& s, const SurfacePoint& p);
/// Inverse of ambient_point; throws SurfaceError when the point is off Q.
SurfacePoint surface_point(const ModelSurface& s, const std::vector<Scalar>& ambient);
bool on_surface(const ModelSurface& s, const std::vector<Scalar>& ambient);

/// Evaluation point for a polynomial over s.table at ambient coordinates:
/// conjugates filled in, u = Re w, parameters set to zero.
std::vector<Scalar> full_point(const ModelSurface& s, const std::vector<Scalar>& ambient);

}  // namespace msk

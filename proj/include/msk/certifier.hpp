#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "msk/transform.hpp"

namespace msk {

/// Degree-bound chain for a Blum-Graham type.
struct BoundsReport {
  int n = 0;
  int kappa = 0;
  int l = 0;
  int N = 0;
  std::optional<int> d;      // observed max coefficient degree of aut Q
  std::optional<int> delta;  // observed top weight of aut Q
  mpz_class lnk;             // l·n·(κ+1)
  mpz_class nkk;             // n·κ·(κ+1)
  mpz_class n_cubed;         // N³
  /// Only for type ((2,k),(3,K)): 42n(k+K+1)(n+k+K+1) and 21/2·(N²-1)(N+3).
  std::optional<mpz_class> statement3;
  std::optional<mpq_class> statement3_alt;
  std::vector<mpz_class> sigma_chain;  // σ_1 = 2N², σ_{j+1} = l((lσ_j + N)l + 1)
  bool sigma_recursion_ok = false;     // σ_{j+1} <= 2N³σ_j throughout
  mpz_class map_bound;                 // N³(2N³)^N
  mpz_class theorem4;                  // N⁴·2^N·N^{3N}
};

BoundsReport bounds(int n, const std::vector<WeightBlock>& blocks);
BoundsReport bounds(const ModelSurface& s);

/// g_- basis with standard unit parameters: p = e_a for a = 1..n, then
/// β_j = e_b for every w coordinate, in ambient order. Throws
/// std::domain_error("surface is not holomorphically homogeneous").
std::vector<VectorField> standard_negative_basis(const ModelSurface& s);

std::vector<int> block_sizes(const VarTable& t);

/// Coefficient columns of the standard g_- basis evaluated along χ.
BlockMatrix build_T(const ModelSurface& s, const RationalMap& chi);

/// J⁻¹·A(χ) through the adjugate of the Jacobian, one column per field.
RatMatrix pushforward_frame(const RationalMap& chi, const ModelSurface& s,
                            const std::vector<VectorField>& basis);

/// Real combination Y of the algebra basis with J·Y ≡ target, if any.
std::optional<VectorField> pullback_in_algebra(const RatMatrix& jac, const std::vector<RatFun>& target,
                                               const GradedAlgebra& alg);

struct Certificate {
  bool automorphism = false;
  bool fixes_origin = false;
  RatMatrix T, P, M;
  RatFun det_P;
  /// Pullbacks of the frame lie in aut Q and agree with J⁻¹·A(χ).
  bool frame_in_algebra = false;
  bool t_unitriangular = false;
  bool identity28 = false;
  bool identity30 = false;
  /// First block row of J equals the first block row of M.
  bool gradient_consistent = false;
  /// det P · det J ≡ det T = 1.
  bool determinant_identity = false;
  int observed_degree = 0;
  int p_degree = 0;
  int m_degree = 0;
  BoundsReport bounds;
  std::string failure;

  bool valid() const { return automorphism && identity28 && identity30; }
};

/// Throws std::domain_error for non-homogeneous surfaces.
Certificate certify(const RationalMap& chi, const ModelSurface& s);
Certificate certify(const RationalMap& chi, const ModelSurface& s, const GradedAlgebra& alg);

}  // namespace msk

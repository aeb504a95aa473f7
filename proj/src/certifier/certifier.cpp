#include "msk/certifier.hpp"

#include <algorithm>

namespace msk {

namespace {

mpz_class power(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

void require_homogeneous(bool ok) {
  if (!ok) throw std::domain_error("surface is not holomorphically homogeneous");
}

}  // namespace

BoundsReport bounds(int n, const std::vector<WeightBlock>& blocks) {
  if (n < 1 || blocks.empty()) throw std::invalid_argument("bounds need n >= 1 and at least one block");
  BoundsReport r;
  r.n = n;
  for (const auto& b : blocks) {
    if (b.weight < 2 || b.count < 1) throw std::invalid_argument("invalid weight block");
    r.kappa += b.count;
    r.l = std::max(r.l, b.weight);
  }
  r.N = n + r.kappa;
  const mpz_class N = r.N, l = r.l, nn = n, k = r.kappa;
  r.lnk = l * nn * (k + 1);
  r.nkk = nn * k * (k + 1);
  r.n_cubed = N * N * N;

  std::vector<WeightBlock> sorted = blocks;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.weight < b.weight; });
  if (sorted.size() == 2 && sorted[0].weight == 2 && sorted[1].weight == 3) {
    const mpz_class kk = sorted[0].count, KK = sorted[1].count;
    r.statement3 = 42 * nn * (kk + KK + 1) * (nn + kk + KK + 1);
    r.statement3_alt = mpq_class(21, 2) * mpq_class(N * N - 1) * mpq_class(N + 3);
  }

  r.sigma_chain.push_back(2 * N * N);
  r.sigma_recursion_ok = true;
  for (int j = 1; j < r.l; ++j) {
    const mpz_class& s = r.sigma_chain.back();
    mpz_class next = l * ((l * s + N) * l + 1);
    r.sigma_recursion_ok = r.sigma_recursion_ok && next <= 2 * r.n_cubed * s;
    r.sigma_chain.push_back(next);
  }
  const auto Nu = static_cast<unsigned long>(r.N);
  r.map_bound = r.n_cubed * power(2 * r.n_cubed, Nu);
  r.theorem4 = power(N, 4) * power(2, Nu) * power(N, 3 * Nu);
  return r;
}

BoundsReport bounds(const ModelSurface& s) { return bounds(s.n(), s.table->blocks()); }

std::vector<int> block_sizes(const VarTable& t) {
  std::vector<int> sizes{t.n()};
  for (const auto& b : t.blocks()) sizes.push_back(b.count);
  return sizes;
}

std::vector<VectorField> standard_negative_basis(const ModelSurface& s) {
  const VarTable& t = *s.table;
  std::vector<VectorField> out;
  const auto g1 = graded_component(s, -1);
  require_homogeneous(g1.size() == static_cast<std::size_t>(2 * t.n()));
  for (int a = 0; a < t.n(); ++a) {
    RationalVector p(static_cast<std::size_t>(2 * t.n()));
    p[static_cast<std::size_t>(2 * a)] = 1;
    out.push_back(parameter_field(g1, 1, p));
  }
  for (const auto& blk : t.blocks()) {
    const auto comp = graded_component(s, -blk.weight);
    require_homogeneous(comp.size() == static_cast<std::size_t>(blk.count));
    for (int b = 0; b < blk.count; ++b) {
      RationalVector beta(static_cast<std::size_t>(blk.count));
      beta[static_cast<std::size_t>(b)] = 1;
      out.push_back(parameter_field(comp, blk.weight, beta));
    }
  }
  return out;
}

BlockMatrix build_T(const ModelSurface& s, const RationalMap& chi) {
  return BlockMatrix(fields_along(standard_negative_basis(s), chi), block_sizes(*s.table));
}

RatMatrix pushforward_frame(const RationalMap& chi, const ModelSurface& s,
                            const std::vector<VectorField>& basis) {
  if (!same_table(chi.table, s.table)) throw std::invalid_argument("variable-table mismatch");
  return multiply(adjugate_inverse(jacobian(chi)).inverse, fields_along(basis, chi));
}

std::optional<VectorField> pullback_in_algebra(const RatMatrix& jac, const std::vector<RatFun>& target,
                                               const GradedAlgebra& alg) {
  std::vector<const VectorField*> basis;
  for (const auto& [w, comp] : alg.components)
    for (const auto& x : comp) basis.push_back(&x);
  const std::size_t rows = jac.rows();

  // Row i: Σ_m c_m (J·B_m)_i = target_i, cleared by the product of the
  // distinct denominators occurring in the row.
  std::vector<std::vector<Poly>> cols(basis.size(), std::vector<Poly>(rows));
  std::vector<Poly> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<RatFun> terms;
    for (const auto* b : basis) {
      RatFun acc(Poly(alg.table));
      for (std::size_t k = 0; k < jac.cols(); ++k)
        if (!b->coeffs[k].is_zero()) acc += jac(i, k) * RatFun(b->coeffs[k]);
      terms.push_back(std::move(acc));
    }
    terms.push_back(target[i]);
    std::vector<Poly> dens;
    for (const auto& t : terms)
      if (std::find(dens.begin(), dens.end(), t.den()) == dens.end()) dens.push_back(t.den());
    for (std::size_t m = 0; m < terms.size(); ++m) {
      Poly p = terms[m].num();
      for (const auto& d : dens)
        if (!(d == terms[m].den())) p *= d;
      if (m < basis.size()) cols[m][i] = std::move(p);
      else rhs[i] = std::move(p);
    }
  }

  std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
  auto note = [&](std::size_t i, const Poly& p) {
    for (const auto& [e, c] : p.terms()) index.emplace(std::make_pair(i, e), 0);
  };
  for (std::size_t i = 0; i < rows; ++i) {
    note(i, rhs[i]);
    for (const auto& c : cols) note(i, c[i]);
  }
  std::size_t next = 0;
  for (auto& [key, idx] : index) idx = next++;
  auto flatten = [&](const std::vector<Poly>& v) {
    RationalVector out(2 * index.size());
    for (std::size_t i = 0; i < rows; ++i)
      for (const auto& [e, c] : v[i].terms()) {
        const std::size_t k = index.at({i, e});
        out[2 * k] = c.re();
        out[2 * k + 1] = c.im();
      }
    return out;
  };
  std::vector<RationalVector> columns;
  for (const auto& c : cols) columns.push_back(flatten(c));
  RationalVector coef;
  if (!solve_columns(columns, flatten(rhs), coef)) return std::nullopt;
  VectorField y = VectorField::zero(alg.table);
  for (std::size_t m = 0; m < basis.size(); ++m)
    if (sgn(coef[m]) != 0) y += Scalar(coef[m]) * *basis[m];
  return y;
}

Certificate certify(const RationalMap& chi, const ModelSurface& s) {
  return certify(chi, s, compute_aut(s));
}

Certificate certify(const RationalMap& chi, const ModelSurface& s, const GradedAlgebra& alg) {
  if (!same_table(chi.table, s.table)) throw std::invalid_argument("variable-table mismatch");
  Certificate cert;
  cert.bounds = bounds(s);
  cert.bounds.d = alg.max_degree;
  cert.bounds.delta = alg.delta;
  cert.observed_degree = map_degree(chi);
  const auto basis = standard_negative_basis(s);

  cert.automorphism = verify_automorphism(chi, s);
  if (!cert.automorphism) {
    cert.failure = "map is not an automorphism of the surface";
    return cert;
  }
  const auto origin = chi.origin_image();
  cert.fixes_origin = origin && std::all_of(origin->begin(), origin->end(),
                                            [](const Scalar& c) { return c.is_zero(); });

  const VarTable& t = *s.table;
  const std::size_t n = static_cast<std::size_t>(t.ambient_dim());
  cert.T = fields_along(basis, chi);
  cert.t_unitriangular = BlockMatrix(cert.T, block_sizes(t)).is_block_unitriangular();
  const RatMatrix jac = jacobian(chi);
  const RatMatrix frame = pushforward_frame(chi, s, basis);

  RatMatrix p_alg(n, n);
  bool found = true;
  for (std::size_t k = 0; k < n && found; ++k) {
    std::vector<RatFun> column;
    for (std::size_t i = 0; i < n; ++i) column.push_back(cert.T(i, k));
    const auto y = pullback_in_algebra(jac, column, alg);
    found = y.has_value();
    if (found)
      for (std::size_t i = 0; i < n; ++i) p_alg(i, k) = RatFun(y->coeffs[i]);
  }
  cert.frame_in_algebra = found && matrices_equal(p_alg, frame);
  cert.P = cert.frame_in_algebra ? p_alg : frame;
  if (!cert.frame_in_algebra) cert.failure = "pushforward frame is not in aut Q";

  const AdjugateInverse inv = adjugate_inverse(cert.P);
  cert.M = inv.inverse;
  cert.det_P = inv.det;
  const RatMatrix tm = multiply(cert.T, cert.M);
  cert.identity28 = cert.frame_in_algebra && matrices_equal(jac, tm);

  std::vector<RatFun> euler;
  for (std::size_t i = 0; i < n; ++i)
    euler.push_back(chi.comps[i] * RatFun(Poly::constant(s.table, Scalar(t.weight(i)))));
  if (const auto rs = pullback_in_algebra(jac, euler, alg)) {
    cert.identity30 = true;
    for (std::size_t i = 0; i < n && cert.identity30; ++i) {
      RatFun acc(Poly(s.table));
      for (std::size_t k = 0; k < n; ++k)
        if (!rs->coeffs[k].is_zero()) acc += tm(i, k) * RatFun(rs->coeffs[k]);
      cert.identity30 = ratfun_equal(acc, euler[i]);
    }
  } else if (cert.failure.empty()) {
    cert.failure = "pullback of the Euler field is not in aut Q";
  }

  cert.gradient_consistent = true;
  for (std::size_t i = 0; i < static_cast<std::size_t>(t.n()); ++i)
    for (std::size_t k = 0; k < n; ++k)
      cert.gradient_consistent = cert.gradient_consistent && ratfun_equal(jac(i, k), cert.M(i, k));
  const RatFun one(Poly::constant(s.table, 1));
  cert.determinant_identity =
      ratfun_equal(determinant(cert.T), one) && ratfun_equal(cert.det_P * determinant(jac), one);

  cert.p_degree = max_entry_degree(cert.P);
  cert.m_degree = max_entry_degree(cert.M);
  if (cert.failure.empty() && !(cert.identity28 && cert.identity30))
    cert.failure = "matrix identities do not hold";
  return cert;
}

}  // namespace msk

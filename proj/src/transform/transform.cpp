#include "msk/transform.hpp"

#include <algorithm>

namespace msk {

namespace {

std::vector<Scalar> zero_point(const VarTable& t) { return std::vector<Scalar>(t.size(), Scalar(0)); }

// Images for substituting m into expressions over the full table: ambient
// coordinates and their conjugates go to m, everything else is fixed.
std::vector<RatFun> map_images(const RationalMap& m) {
  const VarTable& t = *m.table;
  std::vector<RatFun> images;
  images.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) images.emplace_back(Poly::variable(m.table, i));
  for (int i = 0; i < t.ambient_dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    images[k] = m.comps[k];
    images[t.conj_of(k)] = m.comps[k].conj();
  }
  return images;
}

void require_same(const RationalMap& a, const RationalMap& b) {
  if (!same_table(a.table, b.table)) throw std::invalid_argument("variable-table mismatch");
}

// Inverse of a square constant matrix by Gauss-Jordan elimination.
std::vector<std::vector<Scalar>> invert_constant(std::vector<std::vector<Scalar>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw std::domain_error("linear part is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Scalar piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] = a[c][k] / piv;
      inv[c][k] = inv[c][k] / piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Scalar f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] = a[r][k] - f * a[c][k];
        inv[r][k] = inv[r][k] - f * inv[c][k];
      }
    }
  }
  return inv;
}

// Ambient positions grouped by weight: the z block, then each w block.
std::vector<std::vector<int>> weight_groups(const VarTable& t) {
  std::vector<std::vector<int>> groups(1);
  for (int a = 0; a < t.n(); ++a) groups[0].push_back(a);
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk) {
    std::vector<int> g;
    for (int b = 0; b < t.blocks()[blk].count; ++b)
      g.push_back(t.block_offset(static_cast<int>(blk)) + b);
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace

RationalMap RationalMap::identity(const VarTable::Ptr& table) {
  RationalMap m;
  m.table = table;
  for (int i = 0; i < table->ambient_dim(); ++i)
    m.comps.emplace_back(Poly::variable(table, static_cast<std::size_t>(i)));
  return m;
}

bool RationalMap::is_polynomial() const {
  return std::all_of(comps.begin(), comps.end(), [](const RatFun& r) { return r.is_polynomial(); });
}

std::optional<std::vector<Scalar>> RationalMap::origin_image() const {
  const auto zero = zero_point(*table);
  std::vector<Scalar> out;
  for (const auto& c : comps) {
    const Scalar den = evaluate(c.den(), zero);
    if (den.is_zero()) return std::nullopt;
    out.push_back(evaluate(c.num(), zero) / den);
  }
  return out;
}

std::string RationalMap::str() const {
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += "; ";
    out += table->var(i).name + " -> " + comps[i].str();
  }
  return out;
}

int map_degree(const RationalMap& m) {
  int d = kMinusInfinity;
  for (const auto& c : m.comps) d = std::max(d, c.degree());
  return d;
}

RationalMap compose(const RationalMap& a, const RationalMap& b) {
  require_same(a, b);
  const auto images = map_images(b);
  RationalMap out;
  out.table = a.table;
  for (const auto& c : a.comps) {
    try {
      out.comps.push_back(substitute(c, images));
    } catch (const std::domain_error&) {
      throw std::domain_error("composition undefined on dense set");
    }
  }
  return out;
}

bool maps_equal(const RationalMap& a, const RationalMap& b) {
  if (!same_table(a.table, b.table) || a.comps.size() != b.comps.size()) return false;
  for (std::size_t i = 0; i < a.comps.size(); ++i)
    if (!ratfun_equal(a.comps[i], b.comps[i])) return false;
  return true;
}

RatMatrix jacobian(const RationalMap& m) {
  const std::size_t n = m.comps.size();
  RatMatrix j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) j(r, c) = m.comps[r].derivative(c);
  return j;
}

RatMatrix fields_along(const std::vector<VectorField>& fields, const RationalMap& m) {
  const auto images = map_images(m);
  const std::size_t n = m.comps.size();
  RatMatrix a(n, fields.size());
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (!same_table(fields[k].table, m.table)) throw std::invalid_argument("variable-table mismatch");
    for (std::size_t i = 0; i < n; ++i) a(i, k) = substitute(fields[k].coeffs[i], images);
  }
  return a;
}

AutomorphismCheck check_automorphism(const RationalMap& m, const ModelSurface& s) {
  if (!same_table(m.table, s.table)) throw std::invalid_argument("variable-table mismatch");
  const VarTable& t = *s.table;
  std::vector<RatFun> images;
  for (std::size_t i = 0; i < t.size(); ++i) images.emplace_back(Poly::variable(s.table, i));
  for (int a = 0; a < t.n(); ++a) {
    images[t.z(a)] = m.F(a);
    images[t.zbar(a)] = m.F(a).conj();
  }
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk)
    for (int b = 0; b < t.blocks()[blk].count; ++b)
      images[t.u(static_cast<int>(blk), b)] = m.G(static_cast<int>(blk), b).real_part();

  AutomorphismCheck out;
  out.maps_into = true;
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk)
    for (int b = 0; b < t.blocks()[blk].count; ++b) {
      const int bi = static_cast<int>(blk);
      const RatFun lhs = m.G(bi, b).imag_part() - substitute(s.form(bi, b), images);
      RatFun r = restrict_to_surface(lhs, s);
      out.maps_into = out.maps_into && r.is_zero();
      out.residuals.push_back(std::move(r));
    }
  out.jacobian_nonzero = !determinant(jacobian(m)).is_zero();
  return out;
}

bool verify_automorphism(const RationalMap& m, const ModelSurface& s) {
  return check_automorphism(m, s).holds();
}

RationalMap exp_negative(const VectorField& x, const ModelSurface& s) {
  if (!same_table(x.table, s.table)) throw std::invalid_argument("variable-table mismatch");
  if (!x.is_zero() && x.max_term_weight() >= 0) throw std::domain_error("not nilpotent under grading");
  for (const auto& r : tangency_residual(x, s))
    if (!r.is_zero()) throw std::invalid_argument("field is not tangent to the surface");
  RationalMap m;
  m.table = s.table;
  for (int i = 0; i < s.ambient_dim(); ++i) {
    Poly term = Poly::variable(s.table, static_cast<std::size_t>(i));
    Poly sum = term;
    for (long k = 1; !term.is_zero(); ++k) {
      term = x.apply(term) * Scalar(mpq_class(1, k));
      sum += term;
    }
    m.comps.emplace_back(std::move(sum));
  }
  return m;
}

RationalMap dilation(const ModelSurface& s, const mpq_class& t) {
  if (sgn(t) <= 0) throw std::invalid_argument("dilation factor must be positive");
  RationalMap m = RationalMap::identity(s.table);
  for (std::size_t i = 0; i < m.comps.size(); ++i) {
    mpq_class f = 1;
    for (int k = 0; k < s.table->weight(i); ++k) f *= t;
    m.comps[i] = RatFun(m.comps[i].num() * Scalar(f));
  }
  return m;
}

RationalMap dilation(const ModelSurface& s, const std::string& param) {
  const auto idx = s.table->find(param);
  if (!idx || !s.table->is_param(*idx)) throw std::invalid_argument("unknown parameter '" + param + "'");
  const Poly t = Poly::variable(s.table, *idx);
  RationalMap m = RationalMap::identity(s.table);
  for (std::size_t i = 0; i < m.comps.size(); ++i)
    m.comps[i] = RatFun(m.comps[i].num() * t.pow(static_cast<unsigned>(s.table->weight(i))));
  return m;
}

RationalMap quasi_linear_inverse(const RationalMap& m) {
  if (!m.is_polynomial()) throw std::invalid_argument("quasi-linear map must be polynomial");
  const VarTable& t = *m.table;
  std::vector<Poly> images = identity_images(m.table);
  std::vector<Poly> inv(m.comps.size());
  for (const auto& group : weight_groups(t)) {
    const std::size_t g = group.size();
    std::vector<std::vector<Scalar>> lin(g, std::vector<Scalar>(g, Scalar(0)));
    std::vector<Poly> rest;
    for (std::size_t r = 0; r < g; ++r) {
      Poly p = m.comps[static_cast<std::size_t>(group[r])].num() *
               (Scalar(1) / m.comps[static_cast<std::size_t>(group[r])].den().constant_term());
      for (std::size_t c = 0; c < g; ++c) {
        const auto var = static_cast<std::size_t>(group[c]);
        Exponents e(t.size(), 0);
        e[var] = 1;
        lin[r][c] = p.coeff(e);
        p -= Poly::monomial(m.table, e, lin[r][c]);
      }
      rest.push_back(substitute(p, images));
    }
    const auto a_inv = invert_constant(std::move(lin));
    for (std::size_t r = 0; r < g; ++r) {
      Poly acc(m.table);
      for (std::size_t c = 0; c < g; ++c) {
        if (a_inv[r][c].is_zero()) continue;
        acc += (Poly::variable(m.table, static_cast<std::size_t>(group[c])) - rest[c]) * a_inv[r][c];
      }
      inv[static_cast<std::size_t>(group[r])] = acc;
    }
    // Later groups see the inverse on this group's coordinates.
    for (int pos : group) {
      const auto k = static_cast<std::size_t>(pos);
      images[k] = inv[k];
      images[t.conj_of(k)] = inv[k].conj();
    }
  }
  RationalMap out;
  out.table = m.table;
  for (auto& p : inv) out.comps.emplace_back(std::move(p));
  return out;
}

Shift transitive_shift(const ModelSurface& s, const std::vector<Scalar>& xi) {
  const VarTable& t = *s.table;
  if (xi.size() != static_cast<std::size_t>(t.ambient_dim()))
    throw std::invalid_argument("point has the wrong dimension");
  if (!on_surface(s, xi)) throw std::domain_error("point is not on the surface");

  std::vector<std::vector<VectorField>> components;
  components.push_back(graded_component(s, -1));
  bool homogeneous = components[0].size() == static_cast<std::size_t>(2 * t.n());
  for (int j = 2; j <= t.top_weight(); ++j) {
    const int blk = t.block_of_weight(j);
    const std::size_t k = blk < 0 ? 0 : static_cast<std::size_t>(t.blocks()[static_cast<std::size_t>(blk)].count);
    components.push_back(graded_component(s, -j));
    homogeneous = homogeneous && components.back().size() == k;
  }
  if (!homogeneous) throw std::domain_error("surface is not holomorphically homogeneous");

  Shift out;
  out.map = RationalMap::identity(s.table);
  out.inverse = out.map;
  auto apply_factor = [&](VectorField x) {
    if (x.is_zero()) return;
    out.map = compose(out.map, exp_negative(x, s));
    out.inverse = compose(exp_negative(-x, s), out.inverse);
    out.factors.push_back(std::move(x));
  };

  RationalVector p;
  for (int a = 0; a < t.n(); ++a) {
    p.push_back(xi[static_cast<std::size_t>(a)].re());
    p.push_back(xi[static_cast<std::size_t>(a)].im());
  }
  apply_factor(parameter_field(components[0], 1, p));
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk) {
    const int j = t.blocks()[blk].weight;
    const auto origin = *out.map.origin_image();
    RationalVector beta;
    for (int b = 0; b < t.blocks()[blk].count; ++b) {
      const auto pos = static_cast<std::size_t>(t.block_offset(static_cast<int>(blk)) + b);
      beta.push_back((xi[pos] - origin[pos]).re());
    }
    apply_factor(parameter_field(components[static_cast<std::size_t>(j - 1)], j, beta));
  }
  if (*out.map.origin_image() != xi) throw std::logic_error("shift does not reach the target point");
  return out;
}

Decomposition decompose_aut(const RationalMap& chi, const ModelSurface& s) {
  if (!verify_automorphism(chi, s)) throw std::invalid_argument("map is not an automorphism of the surface");
  const auto xi = chi.origin_image();
  if (!xi) throw std::domain_error("image of the origin is undefined");
  Decomposition d;
  d.tau = transitive_shift(s, *xi);
  d.sigma = compose(d.tau.inverse, chi);

  const VarTable& t = *s.table;
  d.L.table = s.table;
  for (std::size_t i = 0; i < d.sigma.comps.size(); ++i) {
    const int w = t.weight(i);
    const Poly jet = taylor_truncate(d.sigma.comps[i], w);
    if (!jet.truncate_weight(w - 1).is_zero())
      throw std::domain_error("stabilizer component has terms below its weight");
    d.L.comps.emplace_back(jet.weight_part(w));
  }
  try {
    d.Nplus = compose(quasi_linear_inverse(d.L), d.sigma);
  } catch (const std::domain_error&) {
    throw std::domain_error("linear part of the stabilizer is singular");
  }
  if (!is_identity_plus_higher(d.Nplus))
    throw std::logic_error("higher-order factor is not identity plus higher weight");
  return d;
}

bool is_identity_plus_higher(const RationalMap& m) {
  for (std::size_t i = 0; i < m.comps.size(); ++i) {
    if (evaluate(m.comps[i].den(), zero_point(*m.table)).is_zero()) return false;
    if (taylor_truncate(m.comps[i], m.table->weight(i)) != Poly::variable(m.table, i)) return false;
  }
  return true;
}

bool is_quasi_linear(const RationalMap& m) {
  for (std::size_t i = 0; i < m.comps.size(); ++i) {
    const RatFun& c = m.comps[i];
    if (!c.is_polynomial() || c.is_zero() || !c.num().is_weighted_homogeneous(m.table->weight(i)))
      return false;
  }
  return true;
}

bool is_triangular_shift(const RationalMap& m) {
  for (std::size_t i = 0; i < m.comps.size(); ++i) {
    const RatFun& c = m.comps[i];
    if (!c.is_polynomial()) return false;
    const Poly rest = c.num() - Poly::variable(m.table, i);
    if (!rest.is_zero() && rest.weighted_degree() >= m.table->weight(i)) return false;
  }
  return true;
}

}  // namespace msk

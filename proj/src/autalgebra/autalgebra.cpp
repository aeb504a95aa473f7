#include "msk/autalgebra.hpp"

#include <algorithm>
#include <functional>

namespace msk {

std::map<int, int> GradedAlgebra::dims() const {
  std::map<int, int> out;
  for (const auto& [w, basis] : components) out[w] = static_cast<int>(basis.size());
  return out;
}

int GradedAlgebra::total_dim() const {
  int d = 0;
  for (const auto& [w, basis] : components) d += static_cast<int>(basis.size());
  return d;
}

const std::vector<VectorField>& GradedAlgebra::component(int weight) const {
  static const std::vector<VectorField> empty;
  auto it = components.find(weight);
  return it == components.end() ? empty : it->second;
}

namespace {

// Block index and in-block position of ambient w coordinate `pos`.
std::pair<int, int> w_location(const VarTable& t, int pos) {
  const Variable& v = t.var(static_cast<std::size_t>(pos));
  return {t.block_of_weight(v.block_weight), v.index - 1};
}

// Partial derivatives of every form component with respect to z, z̄ and u.
struct FormJet {
  std::vector<std::vector<Poly>> dz, dzbar;  // [component][a]
  std::vector<std::vector<Poly>> du;         // [component][w position - n]
};

FormJet form_jet(const ModelSurface& s) {
  const VarTable& t = *s.table;
  FormJet jet;
  for (int r = 0; r < t.codim(); ++r) {
    const auto [blk, b] = w_location(t, t.n() + r);
    const Poly& phi = s.form(blk, b);
    std::vector<Poly> dz, dzbar, du;
    for (int a = 0; a < t.n(); ++a) {
      dz.push_back(phi.derivative(t.z(a)));
      dzbar.push_back(phi.derivative(t.zbar(a)));
    }
    for (int q = 0; q < t.codim(); ++q) {
      const auto [qb, qi] = w_location(t, t.n() + q);
      du.push_back(phi.derivative(t.u(qb, qi)));
    }
    jet.dz.push_back(std::move(dz));
    jet.dzbar.push_back(std::move(dzbar));
    jet.du.push_back(std::move(du));
  }
  return jet;
}

// Adds the contribution of a coefficient `rc` (already restricted to Q) on
// ambient component `comp` to the residual vector.
void accumulate_residual(const VarTable& t, const FormJet& jet, int comp, const Poly& rc,
                         std::vector<Poly>& res) {
  const Poly rc_bar = rc.conj();
  if (comp < t.n()) {
    for (int r = 0; r < t.codim(); ++r) {
      const auto rr = static_cast<std::size_t>(r);
      const auto a = static_cast<std::size_t>(comp);
      if (!jet.dz[rr][a].is_zero()) res[rr] -= jet.dz[rr][a] * rc;
      if (!jet.dzbar[rr][a].is_zero()) res[rr] -= jet.dzbar[rr][a] * rc_bar;
    }
    return;
  }
  const auto q = static_cast<std::size_t>(comp - t.n());
  res[q] += (rc - rc_bar) * Scalar(0, make_rational(-1, 2));
  bool need_re = false;
  for (std::size_t r = 0; r < res.size(); ++r) need_re = need_re || !jet.du[r][q].is_zero();
  if (!need_re) return;
  const Poly re = (rc + rc_bar) * Scalar(make_rational(1, 2));
  for (std::size_t r = 0; r < res.size(); ++r)
    if (!jet.du[r][q].is_zero()) res[r] -= jet.du[r][q] * re;
}

std::vector<Exponents> monomials_of_weight(const VarTable& t, int weight) {
  std::vector<Exponents> out;
  if (weight < 0) return out;
  const int amb = t.ambient_dim();
  Exponents e(t.size(), 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == amb) {
      if (left == 0) out.push_back(e);
      return;
    }
    const int w = t.weight(static_cast<std::size_t>(var));
    for (int k = 0; k * w <= left; ++k) {
      e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(k);
      rec(var + 1, left - k * w);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, weight);
  std::sort(out.begin(), out.end(), GrLex());
  return out;
}

}  // namespace

std::vector<Poly> tangency_residual(const VectorField& x, const ModelSurface& s) {
  if (!same_table(x.table, s.table)) throw std::invalid_argument("variable-table mismatch");
  const VarTable& t = *s.table;
  const FormJet jet = form_jet(s);
  std::vector<Poly> res(static_cast<std::size_t>(t.codim()), Poly(s.table));
  for (int i = 0; i < t.ambient_dim(); ++i) {
    const Poly& c = x.coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    accumulate_residual(t, jet, i, restrict_to_surface(c, s), res);
  }
  return res;
}

std::vector<VectorField> graded_component(const ModelSurface& s, int weight,
                                          const SolveOptions& opts) {
  const VarTable& t = *s.table;
  const int amb = t.ambient_dim();

  // Unknown columns: highest w block first, f last, so that the free
  // variables of the echelon form are the lowest-weight coefficients.
  struct Unknown {
    int comp;
    Exponents mono;
  };
  std::vector<Unknown> unknowns;
  for (int i = amb - 1; i >= 0; --i)
    for (auto& m : monomials_of_weight(t, weight + t.weight(static_cast<std::size_t>(i))))
      unknowns.push_back({i, std::move(m)});
  if (unknowns.size() > opts.monomial_cap)
    throw BudgetExceeded("graded component of weight " + std::to_string(weight) + " needs " +
                         std::to_string(unknowns.size()) + " monomials, cap is " +
                         std::to_string(opts.monomial_cap));
  if (unknowns.empty()) return {};

  const FormJet jet = form_jet(s);
  std::map<Exponents, Poly, GrLex> restricted;
  auto restrict_mono = [&](const Exponents& m) -> const Poly& {
    auto it = restricted.find(m);
    if (it == restricted.end())
      it = restricted.emplace(m, restrict_to_surface(Poly::monomial(s.table, m), s)).first;
    return it->second;
  };

  // (residual index, monomial) -> sparse coefficients over real columns.
  std::map<std::pair<int, Exponents>, std::vector<std::pair<std::size_t, Scalar>>> equations;
  const Scalar units[2] = {Scalar(1), Scalar::imaginary_unit()};
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const Poly& rm = restrict_mono(unknowns[k].mono);
    for (std::size_t part = 0; part < 2; ++part) {
      std::vector<Poly> res(static_cast<std::size_t>(t.codim()), Poly(s.table));
      accumulate_residual(t, jet, unknowns[k].comp, rm * units[part], res);
      for (std::size_t r = 0; r < res.size(); ++r)
        for (const auto& [e, c] : res[r].terms())
          equations[{static_cast<int>(r), e}].emplace_back(2 * k + part, c);
    }
  }

  const std::size_t cols = 2 * unknowns.size();
  RowEchelon ech(cols);
  for (const auto& [key, entries] : equations) {
    if (ech.full()) break;
    RationalVector re(cols), im(cols);
    for (const auto& [col, c] : entries) {
      re[col] = c.re();
      im[col] = c.im();
    }
    ech.add_row(re);
    ech.add_row(im);
  }

  std::vector<VectorField> basis;
  for (const auto& v : ech.nullspace()) {
    VectorField x = VectorField::zero(s.table);
    x.declared_weight = weight;
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const Scalar c(v[2 * k], v[2 * k + 1]);
      if (!c.is_zero())
        x.coeffs[static_cast<std::size_t>(unknowns[k].comp)].add_term(unknowns[k].mono, c);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int default_max_weight(const ModelSurface& s) {
  return s.top_weight() * s.n() * (s.codim() + 1);
}

GradedAlgebra compute_aut(const ModelSurface& s, std::optional<int> max_weight,
                          const SolveOptions& opts) {
  GradedAlgebra alg;
  alg.table = s.table;
  alg.max_weight = max_weight.value_or(default_max_weight(s));
  alg.delta = -s.top_weight();
  for (int w = -s.top_weight(); w <= alg.max_weight; ++w) {
    try {
      auto basis = graded_component(s, w, opts);
      if (!basis.empty()) alg.delta = w;
      for (const auto& x : basis) alg.max_degree = std::max(alg.max_degree, x.degree());
      alg.components.emplace(w, std::move(basis));
    } catch (const BudgetExceeded& e) {
      alg.partial = true;
      alg.partial_reason = e.what();
      break;
    }
  }
  return alg;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (!same_table(x.table, y.table)) throw std::invalid_argument("variable-table mismatch");
  VectorField out = VectorField::zero(x.table);
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = x.apply(y.coeffs[i]) - y.apply(x.coeffs[i]);
  if (x.declared_weight && y.declared_weight)
    out.declared_weight = *x.declared_weight + *y.declared_weight;
  return out;
}

VectorField euler_field(const ModelSurface& s) {
  VectorField x = VectorField::zero(s.table);
  for (int i = 0; i < s.ambient_dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    x.coeffs[k] = Poly::variable(s.table, k) * Scalar(s.table->weight(k));
  }
  x.declared_weight = 0;
  return x;
}

bool is_homogeneous(const GradedAlgebra& alg, const ModelSurface& s) {
  const VarTable& t = *s.table;
  if (alg.component(-1).size() != static_cast<std::size_t>(2 * t.n())) return false;
  for (int j = 2; j <= t.top_weight(); ++j) {
    const int blk = t.block_of_weight(j);
    const std::size_t k = blk < 0 ? 0 : static_cast<std::size_t>(t.blocks()[blk].count);
    if (alg.component(-j).size() != k) return false;
  }
  return true;
}

bool is_homogeneous(const ModelSurface& s, const SolveOptions& opts) {
  return is_homogeneous(compute_aut(s, -1, opts), s);
}

std::vector<RationalVector> real_coordinates(const std::vector<VectorField>& fields) {
  std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
  for (const auto& x : fields)
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      for (const auto& [e, c] : x.coeffs[i].terms()) index.emplace(std::make_pair(i, e), 0);
  std::size_t col = 0;
  for (auto& [key, idx] : index) idx = col++;
  std::vector<RationalVector> out;
  for (const auto& x : fields) {
    RationalVector v(2 * index.size());
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
      for (const auto& [e, c] : x.coeffs[i].terms()) {
        const std::size_t k = index.at({i, e});
        v[2 * k] = c.re();
        v[2 * k + 1] = c.im();
      }
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const VectorField& x, const std::vector<VectorField>& basis) {
  std::vector<VectorField> all = basis;
  all.push_back(x);
  const auto coords = real_coordinates(all);
  if (coords.back().empty()) return true;
  RowEchelon ech(coords.back().size());
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) ech.add_row(coords[i]);
  return ech.in_span(coords.back());
}

RationalVector negative_parameters(const VectorField& x, int j) {
  const VarTable& t = *x.table;
  RationalVector out;
  if (j == 1) {
    for (int a = 0; a < t.n(); ++a) {
      const Scalar c = x.f(a).constant_term();
      out.push_back(c.re());
      out.push_back(c.im());
    }
    return out;
  }
  const int blk = t.block_of_weight(j);
  if (blk < 0) return out;
  for (int b = 0; b < t.blocks()[blk].count; ++b) out.push_back(x.g(blk, b).constant_term().re());
  return out;
}

VectorField parameter_field(const std::vector<VectorField>& component, int j,
                            const RationalVector& params) {
  if (component.empty()) throw std::domain_error("empty graded component");
  std::vector<RationalVector> cols;
  for (const auto& x : component) cols.push_back(negative_parameters(x, j));
  if (cols.front().size() != params.size())
    throw std::invalid_argument("parameter vector has the wrong length");
  RationalVector coef;
  if (!solve_columns(cols, params, coef))
    throw std::domain_error("parameters not realized by g_-" + std::to_string(j));
  VectorField out = VectorField::zero(component.front().table);
  for (std::size_t i = 0; i < component.size(); ++i)
    if (sgn(coef[i]) != 0) out += Scalar(coef[i]) * component[i];
  out.declared_weight = -j;
  // Parameters must determine the field uniquely.
  RowEchelon ech(cols.size());
  for (std::size_t r = 0; r < params.size(); ++r) {
    RationalVector row;
    for (const auto& c : cols) row.push_back(c[r]);
    ech.add_row(row);
  }
  if (ech.rank() != cols.size())
    throw std::domain_error("parameters do not determine the g_-" + std::to_string(j) + " field");
  return out;
}

}  // namespace msk

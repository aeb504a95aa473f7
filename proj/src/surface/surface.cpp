#include "msk/surface.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "msk/expr.hpp"
#include "msk/linsolve.hpp"

namespace msk {

using nlohmann::json;

std::vector<int> ModelSurface::weights() const {
  std::vector<int> out;
  for (const auto& b : table->blocks()) out.push_back(b.weight);
  return out;
}

namespace {

std::string component_name(const ModelSurface& s, int block, int b) {
  const auto& blk = s.table->blocks()[static_cast<std::size_t>(block)];
  return "Phi" + std::to_string(blk.weight) + "_" + std::to_string(b + 1);
}

ModelSurface build(int n, const std::map<int, std::vector<std::string>>& texts,
                   std::vector<std::string> params, std::vector<int> declared) {
  std::vector<WeightBlock> blocks;
  for (const auto& [w, list] : texts) {
    if (w < 2) throw SurfaceError("form weight " + std::to_string(w) + " must be >= 2");
    if (list.empty()) continue;
    blocks.push_back({w, static_cast<int>(list.size())});
  }
  if (blocks.empty()) throw SurfaceError("surface has no defining forms");
  ModelSurface s;
  try {
    s.table = VarTable::make(n, blocks, std::move(params));
  } catch (const std::invalid_argument& e) {
    throw SurfaceError(e.what());
  }
  s.declared_weights = std::move(declared);
  for (const auto& b : s.table->blocks()) {
    std::vector<Poly> comps;
    const auto& list = texts.at(b.weight);
    for (std::size_t k = 0; k < list.size(); ++k) {
      try {
        comps.push_back(parse_poly(list[k], s.table));
      } catch (const ParseError& e) {
        throw SurfaceError("form \"" + std::to_string(b.weight) + "\"[" + std::to_string(k) +
                           "]: " + e.what());
      }
    }
    s.forms.push_back(std::move(comps));
  }
  return s;
}

}  // namespace

ModelSurface read_surface(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SurfaceError(std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw SurfaceError("surface document must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "forms" && key != "weights" && key != "params")
      throw SurfaceError("unknown key '" + key + "'");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw SurfaceError("'n' must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1) throw SurfaceError("'n' must be positive");
  if (!doc.contains("forms") || !doc["forms"].is_object())
    throw SurfaceError("'forms' must be an object keyed by weight");

  std::map<int, std::vector<std::string>> texts;
  for (const auto& [key, value] : doc["forms"].items()) {
    int w = 0;
    try {
      std::size_t used = 0;
      w = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw SurfaceError("form key '" + key + "' is not an integer weight");
    }
    if (!value.is_array()) throw SurfaceError("forms[\"" + key + "\"] must be an array");
    for (const auto& e : value) {
      if (!e.is_string()) throw SurfaceError("forms[\"" + key + "\"] entries must be strings");
      texts[w].push_back(e.get<std::string>());
    }
  }
  std::vector<int> declared;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array()) throw SurfaceError("'weights' must be an array");
    for (const auto& w : doc["weights"]) {
      if (!w.is_number_integer()) throw SurfaceError("'weights' entries must be integers");
      declared.push_back(w.get<int>());
    }
    std::sort(declared.begin(), declared.end());
  }
  std::vector<std::string> params;
  if (doc.contains("params")) {
    if (!doc["params"].is_array()) throw SurfaceError("'params' must be an array");
    for (const auto& p : doc["params"]) {
      if (!p.is_string()) throw SurfaceError("'params' entries must be strings");
      params.push_back(p.get<std::string>());
    }
  }
  return build(n, texts, std::move(params), std::move(declared));
}

ModelSurface parse_surface(std::string_view document) {
  ModelSurface s = read_surface(document);
  const SurfaceReport r = validate(s);
  if (!r.valid) {
    std::string msg = "invalid surface:";
    for (const auto& reason : r.reasons) msg += " " + reason + ";";
    msg.pop_back();
    throw SurfaceError(msg);
  }
  return s;
}

ModelSurface make_surface(int n, const std::vector<std::pair<int, std::vector<std::string>>>& forms,
                          std::vector<std::string> params) {
  std::map<int, std::vector<std::string>> texts;
  for (const auto& [w, list] : forms)
    for (const auto& t : list) texts[w].push_back(t);
  return build(n, texts, std::move(params), {});
}

SurfaceReport validate(const ModelSurface& s) {
  SurfaceReport rep;
  rep.real_dim = s.real_dim();
  rep.weights = s.weights();
  const VarTable& t = *s.table;

  auto fail = [&](std::string reason) {
    rep.valid = false;
    rep.reasons.push_back(std::move(reason));
  };

  if (!s.declared_weights.empty() && s.declared_weights != rep.weights) {
    for (int w : s.declared_weights)
      if (std::find(rep.weights.begin(), rep.weights.end(), w) == rep.weights.end())
        fail("declared weight " + std::to_string(w) + " has no forms (infinite type)");
    for (int w : rep.weights)
      if (std::find(s.declared_weights.begin(), s.declared_weights.end(), w) ==
          s.declared_weights.end())
        fail("forms of weight " + std::to_string(w) + " are not in the declared weight set");
  }

  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk) {
    const int j = t.blocks()[blk].weight;
    const auto& comps = s.forms[blk];
    for (std::size_t b = 0; b < comps.size(); ++b) {
      const Poly& phi = comps[b];
      const std::string name = component_name(s, static_cast<int>(blk), static_cast<int>(b));
      if (!(phi.conj() == phi)) fail(name + " is not real");
      if (!phi.is_weighted_homogeneous(j))
        fail(name + " is not weighted-homogeneous of weight " + std::to_string(j));
      for (std::size_t v = 0; v < t.size(); ++v) {
        if (!phi.depends_on(v)) continue;
        const Variable& var = t.var(v);
        const bool allowed = var.kind == VarKind::kZ || var.kind == VarKind::kZBar ||
                             (var.kind == VarKind::kU && var.weight < j);
        if (!allowed) fail(name + " depends on " + var.name);
      }
      // Reduced-form proxy: every monomial must mix z and z̄.
      for (const auto& [e, c] : phi.terms()) {
        int hol = 0, anti = 0;
        for (int a = 0; a < t.n(); ++a) {
          hol += e[t.z(a)];
          anti += e[t.zbar(a)];
        }
        if (hol == 0 || anti == 0) {
          fail(name + " has a pluriharmonic term " +
               Poly::monomial(s.table, e, c).str() + " (not in reduced form)");
          break;
        }
      }
    }
    // Linear independence of the components over ℝ.
    std::map<Exponents, std::size_t, GrLex> columns;
    for (const auto& phi : comps)
      for (const auto& [e, c] : phi.terms()) columns.emplace(e, 0);
    std::size_t col = 0;
    for (auto& [e, idx] : columns) idx = col++;
    RowEchelon ech(2 * columns.size());
    for (const auto& phi : comps) {
      RationalVector row(2 * columns.size());
      for (const auto& [e, c] : phi.terms()) {
        row[2 * columns[e]] = c.re();
        row[2 * columns[e] + 1] = c.im();
      }
      ech.add_row(row);
    }
    if (ech.rank() != comps.size())
      fail("components of weight " + std::to_string(j) + " are linearly dependent (infinite type)");
  }

  const auto& w = rep.weights;
  bool contiguous = !w.empty() && w.front() == 2;
  for (std::size_t i = 1; i < w.size(); ++i) contiguous = contiguous && w[i] == w[i - 1] + 1;
  if (!contiguous) rep.warnings.push_back("non-standard weight set");
  return rep;
}

namespace {

std::vector<Poly> restriction_images(const ModelSurface& s) {
  std::vector<Poly> img = identity_images(s.table);
  const VarTable& t = *s.table;
  const Poly i = Poly::constant(s.table, Scalar::imaginary_unit());
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk) {
    for (int b = 0; b < t.blocks()[blk].count; ++b) {
      const int bi = static_cast<int>(blk);
      const Poly u = Poly::variable(s.table, t.u(bi, b));
      const Poly iphi = i * s.form(bi, b);
      img[t.w(bi, b)] = u + iphi;
      img[t.wbar(bi, b)] = u - iphi;
    }
  }
  return img;
}

}  // namespace

Poly restrict_to_surface(const Poly& p, const ModelSurface& s) {
  if (p.is_zero()) return Poly(s.table);
  if (!same_table(p.table(), s.table)) throw std::invalid_argument("variable-table mismatch");
  const auto img = restriction_images(s);
  return substitute(p, std::span<const Poly>(img));
}

RatFun restrict_to_surface(const RatFun& r, const ModelSurface& s) {
  if (r.is_zero()) return RatFun(Poly(s.table));
  const auto img = restriction_images(s);
  Poly den = substitute(r.den(), std::span<const Poly>(img));
  if (den.is_zero()) throw std::domain_error("denominator vanishes identically on the surface");
  return RatFun(substitute(r.num(), std::span<const Poly>(img)), std::move(den));
}

std::vector<Scalar> full_point(const ModelSurface& s, const std::vector<Scalar>& ambient) {
  const VarTable& t = *s.table;
  if (ambient.size() != static_cast<std::size_t>(t.ambient_dim()))
    throw std::invalid_argument("point dimension mismatch");
  std::vector<Scalar> pt(t.size(), Scalar(0));
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    pt[i] = ambient[i];
    pt[t.conj_of(i)] = ambient[i].conj();
  }
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk)
    for (int b = 0; b < t.blocks()[blk].count; ++b) {
      const int bi = static_cast<int>(blk);
      pt[t.u(bi, b)] = Scalar(ambient[t.w(bi, b)].re());
    }
  return pt;
}

std::vector<Scalar> ambient_point(const ModelSurface& s, const SurfacePoint& p) {
  const VarTable& t = *s.table;
  if (p.z.size() != static_cast<std::size_t>(t.n()) ||
      p.u.size() != static_cast<std::size_t>(t.codim()))
    throw std::invalid_argument("surface point dimension mismatch");
  std::vector<Scalar> amb(static_cast<std::size_t>(t.ambient_dim()));
  for (int a = 0; a < t.n(); ++a) amb[t.z(a)] = p.z[static_cast<std::size_t>(a)];
  for (int k = 0; k < t.codim(); ++k) amb[static_cast<std::size_t>(t.n() + k)] = p.u[k];
  // v_j depends only on z and u of lower weight, already in place.
  const std::vector<Scalar> pt = full_point(s, amb);
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk)
    for (int b = 0; b < t.blocks()[blk].count; ++b) {
      const int bi = static_cast<int>(blk);
      const Scalar v = evaluate(s.form(bi, b), pt);
      amb[t.w(bi, b)] = Scalar(amb[t.w(bi, b)].re(), v.re());
    }
  return amb;
}

bool on_surface(const ModelSurface& s, const std::vector<Scalar>& ambient) {
  const VarTable& t = *s.table;
  const std::vector<Scalar> pt = full_point(s, ambient);
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk)
    for (int b = 0; b < t.blocks()[blk].count; ++b) {
      const int bi = static_cast<int>(blk);
      if (!(Scalar(ambient[t.w(bi, b)].im()) == evaluate(s.form(bi, b), pt))) return false;
    }
  return true;
}

SurfacePoint surface_point(const ModelSurface& s, const std::vector<Scalar>& ambient) {
  if (!on_surface(s, ambient)) throw SurfaceError("point is not on the surface");
  const VarTable& t = *s.table;
  SurfacePoint p;
  for (int a = 0; a < t.n(); ++a) p.z.push_back(ambient[t.z(a)]);
  for (int k = 0; k < t.codim(); ++k) p.u.push_back(ambient[static_cast<std::size_t>(t.n() + k)].re());
  return p;
}

}  // namespace msk

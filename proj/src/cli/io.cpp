#include <set>

#include "msk/cli.hpp"
#include "msk/expr.hpp"

namespace msk {

namespace {

Json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json rational_json(const mpq_class& v) {
  if (v.get_den() == 1) return integer_json(v.get_num());
  return Json(v.get_str());
}

std::vector<std::string> string_list(const Json& v, const std::string& key) {
  if (!v.is_array()) throw std::invalid_argument("'" + key + "' must be an array of expressions");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw std::invalid_argument("'" + key + "' entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// Reads {"<prefix_z>": [...], "<prefix_w>2": [...], ...} into ambient order.
std::vector<std::string> ambient_entries(const Json& doc, const VarTable& t, const std::string& zkey,
                                         const std::string& wprefix) {
  if (!doc.is_object()) throw std::invalid_argument("expected a JSON object");
  std::set<std::string> allowed{zkey};
  for (const auto& b : t.blocks()) allowed.insert(wprefix + std::to_string(b.weight));
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key)) throw std::invalid_argument("unknown key '" + key + "'");
  std::vector<std::string> out;
  auto take = [&](const std::string& key, int count) {
    if (!doc.contains(key)) throw std::invalid_argument("missing key '" + key + "'");
    auto list = string_list(doc.at(key), key);
    if (list.size() != static_cast<std::size_t>(count))
      throw std::invalid_argument("'" + key + "' must have " + std::to_string(count) + " entries");
    out.insert(out.end(), list.begin(), list.end());
  };
  take(zkey, t.n());
  for (const auto& b : t.blocks()) take(wprefix + std::to_string(b.weight), b.count);
  return out;
}

}  // namespace

Json field_to_json(const VectorField& x) {
  const VarTable& t = *x.table;
  Json out = Json::object();
  Json f = Json::array();
  for (int a = 0; a < t.n(); ++a) f.push_back(x.f(a).str());
  out["f"] = f;
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk) {
    Json g = Json::array();
    for (int b = 0; b < t.blocks()[blk].count; ++b) g.push_back(x.g(static_cast<int>(blk), b).str());
    out["g" + std::to_string(t.blocks()[blk].weight)] = g;
  }
  return out;
}

VectorField field_from_json(const Json& doc, const VarTable::Ptr& table) {
  const auto entries = ambient_entries(doc, *table, "f", "g");
  VectorField x = VectorField::zero(table);
  for (std::size_t i = 0; i < entries.size(); ++i) x.coeffs[i] = parse_poly(entries[i], table);
  if (!x.is_holomorphic()) throw std::invalid_argument("field coefficients must be holomorphic");
  return x;
}

Json map_to_json(const RationalMap& m) {
  const VarTable& t = *m.table;
  Json out = Json::object();
  Json f = Json::array();
  for (int a = 0; a < t.n(); ++a) f.push_back(m.F(a).str());
  out["F"] = f;
  for (std::size_t blk = 0; blk < t.blocks().size(); ++blk) {
    Json g = Json::array();
    for (int b = 0; b < t.blocks()[blk].count; ++b) g.push_back(m.G(static_cast<int>(blk), b).str());
    out["G" + std::to_string(t.blocks()[blk].weight)] = g;
  }
  return out;
}

RationalMap map_from_json(const Json& doc, const VarTable::Ptr& table) {
  const auto entries = ambient_entries(doc, *table, "F", "G");
  RationalMap m;
  m.table = table;
  for (const auto& e : entries) {
    RatFun r = parse_ratfun(e, table);
    for (const Poly* p : {&r.num(), &r.den()})
      for (const auto& [exps, c] : p->terms())
        for (std::size_t i = static_cast<std::size_t>(table->ambient_dim()); i < exps.size(); ++i)
          if (exps[i] != 0 && !table->is_param(i))
            throw std::invalid_argument("map components must be holomorphic");
    m.comps.push_back(std::move(r));
  }
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(row);
  }
  return out;
}

Json bounds_to_json(const BoundsReport& b) {
  Json out;
  out["n"] = b.n;
  out["kappa"] = b.kappa;
  out["l"] = b.l;
  out["N"] = b.N;
  out["d"] = b.d ? Json(*b.d) : Json();
  out["delta"] = b.delta ? Json(*b.delta) : Json();
  out["lemma2"] = {{"lnKappa1", integer_json(b.lnk)},
                   {"nKappaKappa1", integer_json(b.nkk)},
                   {"Ncubed", integer_json(b.n_cubed)}};
  if (b.statement3)
    out["statement3"] = {{"nkK", integer_json(*b.statement3)}, {"N", rational_json(*b.statement3_alt)}};
  else
    out["statement3"] = Json();
  Json chain = Json::array();
  for (const auto& s : b.sigma_chain) chain.push_back(integer_json(s));
  out["sigmaChain"] = chain;
  out["sigmaRecursionHolds"] = b.sigma_recursion_ok;
  out["mapBound"] = integer_json(b.map_bound);
  out["theorem4"] = integer_json(b.theorem4);
  return out;
}

Json certificate_to_json(const Certificate& c) {
  Json out;
  out["valid"] = c.valid();
  out["automorphism"] = c.automorphism;
  out["bounds"] = bounds_to_json(c.bounds);
  out["observedDegree"] = c.observed_degree;
  if (!c.failure.empty()) out["failure"] = c.failure;
  if (!c.automorphism) return out;
  out["fixesOrigin"] = c.fixes_origin;
  out["identity28"] = c.identity28;
  out["identity30"] = c.identity30;
  out["frameInAlgebra"] = c.frame_in_algebra;
  out["TUnitriangular"] = c.t_unitriangular;
  out["gradientConsistent"] = c.gradient_consistent;
  out["determinantIdentity"] = c.determinant_identity;
  out["T"] = matrix_to_json(c.T);
  out["P"] = matrix_to_json(c.P);
  out["M"] = matrix_to_json(c.M);
  out["detP"] = c.det_P.str();
  out["PDegree"] = c.p_degree;
  out["MDegree"] = c.m_degree;
  out["withinTheorem4"] = mpz_class(c.observed_degree) <= c.bounds.theorem4;
  if (c.bounds.statement3) out["withinStatement3"] = mpz_class(c.observed_degree) <= *c.bounds.statement3;
  return out;
}

}  // namespace msk

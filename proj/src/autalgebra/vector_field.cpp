#include "msk/vector_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace msk {

VectorField VectorField::zero(const VarTable::Ptr& table) {
  VectorField x;
  x.table = table;
  x.coeffs.assign(static_cast<std::size_t>(table->ambient_dim()), Poly(table));
  return x;
}

bool VectorField::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
}

bool VectorField::is_holomorphic() const {
  const auto amb = static_cast<std::size_t>(table->ambient_dim());
  for (const auto& c : coeffs)
    for (const auto& [e, v] : c.terms())
      for (std::size_t i = amb; i < e.size(); ++i)
        if (e[i] != 0 && !table->is_param(i)) return false;
  return true;
}

std::optional<int> VectorField::homogeneous_weight() const {
  std::optional<int> w;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Poly& c = coeffs[i];
    if (c.is_zero()) continue;
    const int lo = c.min_weight() - table->weight(i);
    const int hi = c.weighted_degree() - table->weight(i);
    if (lo != hi || (w && *w != lo)) return std::nullopt;
    w = lo;
  }
  return w;
}

int VectorField::max_term_weight() const {
  int best = kMinusInfinity;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero())
      best = std::max(best, coeffs[i].weighted_degree() - table->weight(i));
  return best;
}

int VectorField::degree() const {
  int d = kMinusInfinity;
  for (const auto& c : coeffs) d = std::max(d, c.degree());
  return d;
}

Poly VectorField::apply(const Poly& p) const {
  Poly out(table);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero() || !p.depends_on(i)) continue;
    out += coeffs[i] * p.derivative(i);
  }
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (!same_table(table, o.table)) throw std::invalid_argument("variable-table mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  if (declared_weight != o.declared_weight) declared_weight.reset();
  return *this;
}

VectorField& VectorField::operator*=(const Scalar& c) {
  for (auto& p : coeffs) p *= c;
  return *this;
}

std::string VectorField::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[i].str() + ")*d/d" + table->var(i).name;
  }
  return "2Re(" + (out.empty() ? std::string("0") : out) + ")";
}

}  // namespace msk

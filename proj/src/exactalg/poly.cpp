#include "msk/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msk {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void check_tables(const VarTable::Ptr& a, const VarTable::Ptr& b) {
  if (a && b && !same_table(a, b)) throw std::invalid_argument("variable-table mismatch");
}

}  // namespace

bool GrLex::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = total(a), db = total(b);
  if (da != db) return da < db;
  // Larger exponent on an earlier variable is the larger monomial.
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly Poly::constant(VarTable::Ptr table, const Scalar& c) {
  Poly p(std::move(table));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.table_->size(), 0), c);
  return p;
}

Poly Poly::variable(VarTable::Ptr table, std::size_t var) {
  Poly p(std::move(table));
  p.terms_.emplace(p.unit(var), Scalar(1));
  return p;
}

Poly Poly::monomial(VarTable::Ptr table, Exponents e, const Scalar& c) {
  Poly p(std::move(table));
  if (e.size() != p.table_->size()) throw std::invalid_argument("exponent vector size mismatch");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

Exponents Poly::unit(std::size_t var) const {
  Exponents e(table_->size(), 0);
  e.at(var) = 1;
  return e;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Scalar Poly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [e, c] = *terms_.begin();
  return total(e) == 0 ? c : Scalar(0);
}

Scalar Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::degree() const {
  int best = kMinusInfinity;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!table_->is_param(i)) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

namespace {

int monomial_weight(const VarTable& t, const Exponents& e) {
  int w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * t.weight(i);
  return w;
}

}  // namespace

int Poly::weighted_degree() const {
  int best = kMinusInfinity;
  for (const auto& [e, c] : terms_) best = std::max(best, monomial_weight(*table_, e));
  return best;
}

int Poly::min_weight() const {
  if (terms_.empty()) return kMinusInfinity;
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, monomial_weight(*table_, e));
  return best;
}

bool Poly::is_weighted_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return monomial_weight(*table_, t.first) == weight;
  });
}

Poly Poly::weight_part(int weight) const {
  Poly out(table_);
  for (const auto& [e, c] : terms_)
    if (monomial_weight(*table_, e) == weight) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

Poly Poly::truncate_weight(int max_weight) const {
  Poly out(table_);
  for (const auto& [e, c] : terms_)
    if (monomial_weight(*table_, e) <= max_weight) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

bool Poly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
}

Poly Poly::conj() const {
  Poly out(table_);
  for (const auto& [e, c] : terms_) {
    Exponents f(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[table_->conj_of(i)] = e[i];
    out.terms_.emplace(std::move(f), c.conj());
  }
  return out;
}

Poly Poly::real_part() const { return (*this + conj()) * Scalar(make_rational(1, 2)); }

Poly Poly::imag_part() const {
  // (p - conj p) / (2i) = -i/2 (p - conj p)
  return (*this - conj()) * Scalar(0, make_rational(-1, 2));
}

Poly Poly::derivative(std::size_t var) const {
  Poly out(table_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    const long k = f[var];
    --f[var];
    out.add_term(f, c * Scalar(k));
  }
  return out;
}

Poly Poly::pow(unsigned k) const {
  if (!table_) {
    if (k == 0) throw std::invalid_argument("pow of table-less zero polynomial");
    return *this;
  }
  Poly result = constant(table_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

void Poly::adopt(const Poly& o) {
  check_tables(table_, o.table_);
  if (!table_) table_ = o.table_;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_tables(a.table_, b.table_);
  Poly out(a.table_ ? a.table_ : b.table_);
  if (a.is_zero() || b.is_zero()) return out;
  Exponents e(out.table_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += table_->var(i).name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Scalar(-1)) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

Poly substitute(const Poly& p, std::span<const Poly> images) {
  if (p.is_zero()) {
    for (const auto& img : images)
      if (img.table()) return Poly(img.table());
    return p;
  }
  if (images.size() != p.table()->size())
    throw std::invalid_argument("substitution arity mismatch");
  VarTable::Ptr target;
  for (const auto& img : images)
    if (img.table()) {
      target = img.table();
      break;
    }
  if (!target) target = p.table();

  // powers[i][k] = images[i]^k, filled on demand.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Poly out(target);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term *= power(i, e[i]);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

Scalar evaluate(const Poly& p, std::span<const Scalar> point) {
  Scalar out = 0;
  for (const auto& [e, c] : p.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    out += term;
  }
  return out;
}

std::vector<Poly> identity_images(const VarTable::Ptr& table) {
  std::vector<Poly> out;
  out.reserve(table->size());
  for (std::size_t i = 0; i < table->size(); ++i) out.push_back(Poly::variable(table, i));
  return out;
}

}  // namespace msk

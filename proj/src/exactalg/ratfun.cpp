#include "msk/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace msk {

namespace {

Poly one_like(const VarTable::Ptr& t) { return t ? Poly::constant(t, 1) : Poly(); }

}  // namespace

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(one_like(num_.table())) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (!num_.table()) num_ = Poly(den_.table());
  if (num_.is_zero()) {
    den_ = one_like(num_.table());
  } else if (den_.is_constant() && !den_.constant_term().is_one()) {
    num_ *= Scalar(1) / den_.constant_term();
    den_ = one_like(num_.table());
  }
}

int RatFun::degree() const {
  if (num_.is_zero()) return kMinusInfinity;
  return std::max(num_.degree(), den_.is_zero() ? 0 : den_.degree());
}

int RatFun::weighted_degree() const {
  if (num_.is_zero()) return kMinusInfinity;
  return std::max(num_.weighted_degree(), den_.weighted_degree());
}

RatFun RatFun::real_part() const {
  return (*this + conj()) * RatFun(Poly::constant(table(), Scalar(make_rational(1, 2))));
}

RatFun RatFun::imag_part() const {
  return (*this - conj()) * RatFun(Poly::constant(table(), Scalar(0, make_rational(-1, 2))));
}

RatFun RatFun::derivative(std::size_t var) const {
  if (!table()) return *this;
  if (is_polynomial()) return RatFun(num_.derivative(var), den_);
  return RatFun(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return RatFun(Poly(a.table() ? a.table() : b.table()));
  if (b.is_zero()) return RatFun(Poly(b.table() ? b.table() : a.table()));
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  if (a.is_zero()) return a;
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool ratfun_equal(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

RatFun substitute(const Poly& p, std::span<const RatFun> images) {
  if (p.is_zero()) {
    for (const auto& img : images)
      if (img.table()) return RatFun(Poly(img.table()));
    return RatFun(p);
  }
  if (images.size() != p.table()->size())
    throw std::invalid_argument("substitution arity mismatch");

  // Largest exponent of each variable; x_i^e = num_i^e den_i^(E-e) / den_i^E.
  std::vector<unsigned> top(images.size(), 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i) top[i] = std::max<unsigned>(top[i], e[i]);

  std::vector<Poly> nums, dens;
  bool all_polynomial = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    nums.push_back(images[i].num());
    dens.push_back(images[i].den());
    if (top[i] > 0 && !images[i].is_polynomial()) all_polynomial = false;
  }
  if (all_polynomial) return RatFun(substitute(p, std::span<const Poly>(nums)));

  VarTable::Ptr target;
  for (const auto& img : images)
    if (img.table()) {
      target = img.table();
      break;
    }
  std::vector<std::vector<Poly>> num_pow(images.size()), den_pow(images.size());
  auto cached = [&](std::vector<std::vector<Poly>>& cache, const Poly& base, std::size_t i,
                    unsigned k) -> const Poly& {
    auto& c = cache[i];
    if (c.empty()) c.push_back(Poly::constant(target, 1));
    while (c.size() <= k) c.push_back(c.back() * base);
    return c[k];
  };

  Poly num(target);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (top[i] == 0) continue;
      if (e[i] > 0) term *= cached(num_pow, nums[i], i, e[i]);
      if (top[i] > e[i]) term *= cached(den_pow, dens[i], i, top[i] - e[i]);
    }
    num += term;
  }
  Poly den = Poly::constant(target, 1);
  for (std::size_t i = 0; i < images.size(); ++i)
    if (top[i] > 0) den *= cached(den_pow, dens[i], i, top[i]);
  return RatFun(std::move(num), std::move(den));
}

RatFun substitute(const RatFun& r, std::span<const RatFun> images) {
  RatFun den = substitute(r.den(), images);
  if (den.is_zero()) throw std::domain_error("denominator vanishes identically after substitution");
  return substitute(r.num(), images) / den;
}

Poly taylor_truncate(const RatFun& r, int max_weight) {
  if (r.is_polynomial()) return r.num().truncate_weight(max_weight);
  const Scalar c = r.den().constant_term();
  if (c.is_zero()) throw std::domain_error("denominator vanishes at the origin");
  // 1/den = (1/c) Σ_k (-e)^k with e = den/c - 1 of weight >= 1.
  const VarTable::Ptr& t = r.table();
  const Poly e = (r.den() * (Scalar(1) / c) - Poly::constant(t, 1)).truncate_weight(max_weight);
  if (e.min_weight() != kMinusInfinity && e.min_weight() < 1)
    throw std::domain_error("denominator has weight-zero parameter dependence");
  Poly inv = Poly::constant(t, Scalar(1) / c);
  Poly power = Poly::constant(t, 1);
  for (int k = 1; k <= max_weight; ++k) {
    power = (power * -e).truncate_weight(max_weight);
    if (power.is_zero()) break;
    inv += power * (Scalar(1) / c);
  }
  return (r.num() * inv).truncate_weight(max_weight);
}

}  // namespace msk

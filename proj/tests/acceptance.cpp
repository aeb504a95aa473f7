#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "oracle/oracle.hpp"
#include "test_util.hpp"

using namespace msk;
using msk::testing::field;
using msk::testing::map;
using msk::testing::Random;

namespace {

bool all_zero(const std::vector<Poly>& ps) {
  for (const auto& p : ps)
    if (!p.is_zero()) return false;
  return true;
}

std::string detail;

bool fail(const std::string& why) {
  detail = why;
  return false;
}

bool heisenberg_dims() {
  const auto start = std::chrono::steady_clock::now();
  const auto alg = compute_aut(testing::quadric());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::map<int, int> expected{{-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}};
  for (const auto& [w, d] : alg.dims())
    if (d != (expected.count(w) ? expected.at(w) : 0)) return fail("dim g_" + std::to_string(w));
  if (alg.total_dim() != 8) return fail("total");
  const auto ref = oracle::dims(oracle::heisenberg(), -2, alg.max_weight);
  for (const auto& [w, d] : ref)
    if (alg.dims().at(w) != d) return fail("oracle disagrees at weight " + std::to_string(w));
  if (oracle::dim_up_to_degree(oracle::heisenberg(), 3) != alg.total_dim()) return fail("oracle total");
  if (secs >= 10) return fail("runtime");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", secs);
  detail = buf;
  return true;
}

bool e5_example() {
  const auto s = make_surface(1, {{4, {"z1^2*conj(z1)^2"}}}, {"t"});
  if (!all_zero(tangency_residual(field(s, {"(1/2)*w4*z1", "w4^2"}), s))) return fail("residual");
  if (!graded_component(s, -1).empty()) return fail("dims(-1)");
  if (is_homogeneous(s)) return fail("homogeneous");
  const RatFun den = parse_ratfun("1 - 2*t*w4", s.table);
  const RatFun W = parse_ratfun("w4/(1 - 2*t*w4)", s.table);
  const RatFun Z2 = parse_ratfun("z1^2/(1 - 2*t*w4)", s.table);
  const RatFun v = parse_ratfun("(w4 - conj(w4))/(2*i)", s.table);
  if (!ratfun_equal(W.imag_part() * den * den.conj(), v)) return fail("Im W identity");
  if (!restrict_to_surface(W.imag_part() - Z2 * Z2.conj(), s).is_zero()) return fail("|z|^4 scaling");
  return true;
}

bool cubic_model() {
  const auto c = testing::cubic();
  const auto alg = compute_aut(c);
  const std::vector<int> neg{static_cast<int>(alg.component(-3).size()), static_cast<int>(alg.component(-2).size()),
                             static_cast<int>(alg.component(-1).size())};
  if (neg != std::vector<int>{1, 1, 2}) return fail("dims(g_-)");
  if (neg[0] + neg[1] + neg[2] != c.real_dim()) return fail("realDim");
  if (!is_homogeneous(alg, c)) return fail("homogeneous");
  const auto ref = oracle::dims(oracle::cubic(), -3, -1);
  for (const auto& [w, d] : ref)
    if (static_cast<int>(alg.component(w).size()) != d) return fail("oracle");
  // g_3 = 2i z² p̄ + β with β(w, p) = 4 Re(p) w_2.
  Random rnd(31);
  for (int k = 0; k < 5; ++k) {
    const mpq_class a = rnd.rational(), b = rnd.rational();
    const auto x = parameter_field(alg.component(-1), 1, {a, b});
    const Poly pbar = Poly::constant(c.table, Scalar(a, -b));
    const Poly beta = x.g(1, 0) - parse_poly("2*i*z1^2", c.table) * pbar;
    if (beta != parse_poly("4*w2", c.table) * Poly::constant(c.table, Scalar(a))) return fail("beta");
  }
  return true;
}

bool certifier_suite() {
  Random rnd(41);
  const auto q = testing::quadric(), c = testing::cubic();
  const auto qa = compute_aut(q), ca = compute_aut(c);
  int certified = 0;
  for (int k = 0; k < 24; ++k) {
    const bool cubic = k % 2 == 1;
    const auto& s = cubic ? c : q;
    const auto& alg = cubic ? ca : qa;
    const auto chi = rnd.automorphism(s, alg, !cubic);
    const auto cert = certify(chi, s, alg);
    if (!(cert.identity28 && cert.identity30 && cert.valid())) return fail("identities for " + chi.str());
    if (cert.observed_degree > 2 || cert.observed_degree > 504) return fail("degree");
    ++certified;
    RationalMap broken = chi;
    broken.comps[0] = broken.comps[0] + RatFun(parse_poly(k % 2 ? "z1^2" : "i*w2", s.table));
    if (certify(broken, s, alg).valid()) return fail("corrupted map certified");
    broken = chi;
    broken.comps.back() = broken.comps.back() * RatFun(parse_poly("3", s.table));
    if (certify(broken, s, alg).valid()) return fail("corrupted map certified");
  }
  detail = std::to_string(certified) + " certified";
  return certified >= 20;
}

bool bound_chain() {
  const auto b = bounds(1, {{2, 1}, {3, 1}});
  if (!b.statement3 || *b.statement3 != 504) return fail("type bound 42n(k+K+1)(n+k+K+1)");
  if (!b.statement3_alt || *b.statement3_alt != 504) return fail("type bound 21/2(N^2-1)(N+3)");
  if (b.theorem4 != 12754584) return fail("global bound N^4 2^N N^3N");
  Random rnd(43);
  for (const auto& s : {testing::quadric(), testing::cubic(), testing::indefinite()}) {
    const auto alg = compute_aut(s);
    for (int k = 0; k < 10; ++k)
      if (map_degree(exp_negative(rnd.negative_field(alg), s)) > s.top_weight() - 1) return fail("exp degree");
  }
  return true;
}

bool invariants() {
  for (const auto& s : {testing::quadric(), testing::cubic(), testing::e5(), testing::indefinite()}) {
    const auto alg = compute_aut(s);
    std::vector<VectorField> all;
    for (const auto& [w, basis] : alg.components) all.insert(all.end(), basis.begin(), basis.end());
    for (const auto& [i, bi] : alg.components)
      for (const auto& [j, bj] : alg.components)
        for (const auto& x : bi)
          for (const auto& y : bj) {
            const auto xy = bracket(x, y);
            if (!(xy + bracket(y, x)).is_zero()) return fail("antisymmetry");
            if (xy.is_zero()) continue;
            const auto it = alg.components.find(i + j);
            if (it == alg.components.end() || !in_span(xy, it->second)) return fail("grading closure");
          }
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : all)
          if (!(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero())
            return fail("Jacobi");
  }
  Random rnd(47);
  const auto t = testing::cubic().table;
  for (int k = 0; k < 1000; ++k) {
    const RatFun a = rnd.ratfun(t), b = rnd.ratfun(t);
    if (a.is_zero() || b.is_zero()) continue;
    const int bound = a.degree() + b.degree();
    const int wbound = a.weighted_degree() + b.weighted_degree();
    for (const RatFun& r : {a + b, a - b, a * b})
      if (r.degree() > bound || r.weighted_degree() > wbound) return fail("degree subadditivity");
    if (((a / b).degree() > bound || (a / b).weighted_degree() > wbound)) return fail("degree subadditivity");
  }
  const auto c = testing::cubic();
  const auto ca = compute_aut(c);
  for (int k = 0; k < 10; ++k) {
    const auto x = rnd.negative_field(ca);
    const mpq_class s1 = rnd.rational(), s2 = rnd.rational();
    if (!maps_equal(compose(exp_negative(Scalar(s1) * x, c), exp_negative(Scalar(s2) * x, c)),
                    exp_negative(Scalar(s1 + s2) * x, c)))
      return fail("group law");
  }
  return true;
}

bool decompositions() {
  Random rnd(53);
  const auto q = testing::quadric(), c = testing::cubic();
  const auto qa = compute_aut(q), ca = compute_aut(c);
  const auto plus = map(q, {"(z1 + w2)/(1 - 2*i*z1 - i*w2)", "w2/(1 - 2*i*z1 - i*w2)"});
  for (int k = 0; k < 10; ++k) {
    const bool cubic = k % 2 == 1;
    const auto& s = cubic ? c : q;
    RationalMap chi = rnd.automorphism(s, cubic ? ca : qa, !cubic);
    if (!cubic && k % 4 == 0) chi = compose(chi, plus);
    const auto d = decompose_aut(chi, s);
    if (!maps_equal(compose(d.tau.map, d.sigma), chi)) return fail("tau o sigma");
    if (!maps_equal(compose(d.L, d.Nplus), d.sigma)) return fail("L o N");
    if (!is_triangular_shift(d.tau.map) || !is_quasi_linear(d.L) || !is_identity_plus_higher(d.Nplus))
      return fail("subgroups");
  }
  return true;
}

bool swap_membership() {
  const auto ind = testing::indefinite();
  return verify_automorphism(map(ind, {"z2", "z1", "-w2"}), ind);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"1 Heisenberg quadric dims match oracle", heisenberg_dims},
      {"2 E5 field, non-homogeneity and flow identities", e5_example},
      {"3 cubic model homogeneous with beta = 4Re(p)u", cubic_model},
      {"4 certifier suite on composed automorphisms", certifier_suite},
      {"5 degree-bound chain", bound_chain},
      {"6 invariant suites", invariants},
      {"7 decomposition round trip", decompositions},
      {"8 swap automorphism of the indefinite quadric", swap_membership},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    detail.clear();
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

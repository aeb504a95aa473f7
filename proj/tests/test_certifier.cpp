#include "doctest.h"
#include "test_util.hpp"

using namespace msk;
using msk::testing::field;
using msk::testing::map;
using msk::testing::Random;

namespace {

RatMatrix matrix_of(const ModelSurface& s, const std::vector<std::vector<std::string>>& rows) {
  RatMatrix m(rows.size(), rows.size(), RatFun(Poly(s.table)));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = parse_ratfun(rows[r][c], s.table);
  return m;
}

RationalMap corrupt(RationalMap m, int k) {
  const auto& t = m.table;
  switch (k % 3) {
    case 0: m.comps[0] = m.comps[0] + RatFun(parse_poly("z1^2", t)); break;
    case 1: m.comps[1] = m.comps[1] * RatFun(parse_poly("2", t)); break;
    default: m.comps[0] = m.comps[0] + RatFun(parse_poly("i*w2", t)); break;
  }
  return m;
}

}  // namespace

TEST_CASE("build_T examples") {
  const auto q = testing::quadric();
  const auto tq = build_T(q, map(q, {"3*z1 + w2", "w2^2"}));
  CHECK(tq.is_block_unitriangular());
  CHECK(matrices_equal(tq.matrix(), matrix_of(q, {{"1", "0"}, {"2*i*(3*z1 + w2)", "1"}})));
  CHECK(matrices_equal(build_T(q, RationalMap::identity(q.table)).matrix(),
                       matrix_of(q, {{"1", "0"}, {"2*i*z1", "1"}})));

  const auto c = testing::cubic();
  const auto tc = build_T(c, map(c, {"2*z1 + 1", "4*w2", "w3"}));
  CHECK(tc.block_sizes() == std::vector<int>{1, 1, 1});
  CHECK(matrices_equal(tc.matrix(), matrix_of(c, {{"1", "0", "0"},
                                                  {"2*i*(2*z1 + 1)", "1", "0"},
                                                  {"2*i*(2*z1 + 1)^2 + 16*w2", "0", "1"}})));

  const auto ind = testing::indefinite();
  const auto ti = build_T(ind, RationalMap::identity(ind.table));
  CHECK(ti.block_sizes() == std::vector<int>{2, 1});
  CHECK(matrices_equal(ti.matrix(), matrix_of(ind, {{"1", "0", "0"}, {"0", "1", "0"}, {"2*i*z1", "-2*i*z2", "1"}})));

  CHECK_THROWS_AS(build_T(testing::e5(), RationalMap::identity(testing::e5().table)), std::domain_error);
}

TEST_CASE("standard_negative_basis") {
  const auto c = testing::cubic();
  const auto b = standard_negative_basis(c);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == field(c, {"1", "2*i*z1", "2*i*z1^2 + 4*w2"}));
  CHECK(b[1] == field(c, {"0", "1", "0"}));
  CHECK(b[2] == field(c, {"0", "0", "1"}));
  for (const auto& x : b)
    for (const auto& r : tangency_residual(x, c)) CHECK(r.is_zero());
}

TEST_CASE("pushforward_frame examples") {
  const auto q = testing::quadric();
  const auto basis = standard_negative_basis(q);
  const auto id = pushforward_frame(RationalMap::identity(q.table), q, basis);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < 2; ++i) CHECK(ratfun_equal(id(i, k), RatFun(basis[k].coeffs[i])));

  const auto dil = pushforward_frame(dilation(q, 3), q, {field(q, {"0", "1"})});
  CHECK(ratfun_equal(dil(0, 0), RatFun(Poly(q.table))));
  CHECK(ratfun_equal(dil(1, 0), parse_ratfun("1/9", q.table)));

  const auto tr = exp_negative(field(q, {"1", "2*i*z1"}), q);
  const auto pt = pushforward_frame(tr, q, basis);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(pt(i, k).is_polynomial());
      CHECK(pt(i, k).degree() <= 1);
    }
}

TEST_CASE("pullback_in_algebra recovers algebra elements") {
  const auto q = testing::quadric();
  const auto alg = compute_aut(q);
  const auto chi = compose(dilation(q, 2), exp_negative(field(q, {"1", "2*i*z1"}), q));
  const auto jac = jacobian(chi);
  const auto along = fields_along({euler_field(q)}, chi);
  const std::vector<RatFun> target{along(0, 0), along(1, 0)};
  const auto y = pullback_in_algebra(jac, target, alg);
  REQUIRE(y.has_value());
  for (const auto& r : tangency_residual(*y, q)) CHECK(r.is_zero());
  const std::vector<RatFun> junk{RatFun(parse_poly("w2^3", q.table)), RatFun(Poly(q.table))};
  CHECK_FALSE(pullback_in_algebra(jac, junk, alg).has_value());
}

TEST_CASE("certify examples") {
  const auto q = testing::quadric();
  const auto id = certify(RationalMap::identity(q.table), q);
  CHECK(id.valid());
  CHECK(id.identity28);
  CHECK(id.identity30);
  CHECK(id.observed_degree == 1);
  CHECK(id.fixes_origin);

  const auto rot = compose(dilation(q, 2), testing::rotation(q, Scalar(0, 1)));
  const auto cr = certify(rot, q);
  CHECK(cr.valid());
  CHECK(cr.observed_degree == 1);

  const auto bad = certify(map(q, {"2*z1", "2*w2"}), q);
  CHECK_FALSE(bad.automorphism);
  CHECK_FALSE(bad.valid());
  CHECK(bad.failure == "map is not an automorphism of the surface");

  const auto plus = certify(map(q, {"(z1 + w2)/(1 - 2*i*z1 - i*w2)", "w2/(1 - 2*i*z1 - i*w2)"}), q);
  CHECK(plus.valid());
  CHECK(plus.frame_in_algebra);
  CHECK(plus.observed_degree == 1);

  CHECK_THROWS_AS(certify(RationalMap::identity(testing::e5().table), testing::e5()), std::domain_error);
}

TEST_CASE("certificates of composed automorphisms") {
  Random rnd(23);
  const auto q = testing::quadric(), c = testing::cubic();
  const auto qa = compute_aut(q), ca = compute_aut(c);
  for (int k = 0; k < 12; ++k) {
    const bool cubic = k % 2 == 1;
    const auto& s = cubic ? c : q;
    const auto& alg = cubic ? ca : qa;
    const auto chi = rnd.automorphism(s, alg, !cubic);
    const auto cert = certify(chi, s, alg);
    CAPTURE(chi.str());
    CHECK(cert.automorphism);
    CHECK(cert.identity28);
    CHECK(cert.identity30);
    CHECK(cert.frame_in_algebra);
    CHECK(cert.t_unitriangular);
    CHECK(cert.gradient_consistent);
    CHECK(cert.determinant_identity);
    CHECK(cert.observed_degree <= s.top_weight() - 1);
    CHECK(cert.observed_degree <= cert.bounds.theorem4);
    CHECK(cert.m_degree <= s.ambient_dim() * cert.p_degree);
    CHECK(ratfun_equal(determinant(cert.T), RatFun(Poly::constant(s.table, 1))));
    CHECK(ratfun_equal(cert.det_P * determinant(jacobian(chi)), RatFun(Poly::constant(s.table, 1))));
    CHECK(matrices_equal(jacobian(chi), multiply(cert.T, cert.M)));

    const auto broken = certify(corrupt(chi, k), s, alg);
    CHECK_FALSE(broken.valid());
  }
}

TEST_CASE("bounds examples") {
  const auto b = bounds(1, {{2, 1}, {3, 1}});
  CHECK(b.N == 3);
  CHECK(b.l == 3);
  CHECK(b.kappa == 2);
  REQUIRE(b.statement3.has_value());
  CHECK(*b.statement3 == 504);
  REQUIRE(b.statement3_alt.has_value());
  CHECK(*b.statement3_alt == 504);
  CHECK(b.theorem4 == 12754584);
  CHECK(b.lnk == 9);
  CHECK(b.nkk == 6);
  CHECK(b.n_cubed == 27);

  const auto h = bounds(1, {{2, 1}});
  CHECK(h.N == 2);
  CHECK(h.theorem4 == 4096);
  CHECK(h.map_bound == 2048);
  CHECK_FALSE(h.statement3.has_value());

  const auto big = bounds(2, {{2, 3}, {3, 2}});
  CHECK(*big.statement3 == 42 * 2 * 6 * 8);
  CHECK(*big.statement3_alt == mpq_class(21, 2) * (49 - 1) * 10);
}

TEST_CASE("bounds invariants") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& blocks : std::vector<std::vector<WeightBlock>>{
             {{2, 1}}, {{2, 2}}, {{2, 1}, {3, 1}}, {{2, 1}, {3, 2}}, {{2, 1}, {3, 1}, {4, 1}}, {{4, 1}}}) {
      const auto b = bounds(n, blocks);
      CAPTURE(n);
      CAPTURE(b.l);
      REQUIRE_FALSE(b.sigma_chain.empty());
      CHECK(b.sigma_chain.size() == static_cast<std::size_t>(b.l));
      CHECK(b.sigma_chain[0] == 2 * b.N * b.N);
      bool ok = true;
      for (std::size_t j = 0; j + 1 < b.sigma_chain.size(); ++j)
        ok = ok && b.sigma_chain[j + 1] <= 2 * b.n_cubed * b.sigma_chain[j];
      CHECK(ok == b.sigma_recursion_ok);
      // The recursion inequality needs l <= N, which every gap-free weight set satisfies.
      if (b.l <= b.N) CHECK(b.sigma_recursion_ok);
      mpz_class t4;
      mpz_pow_ui(t4.get_mpz_t(), mpz_class(b.N).get_mpz_t(), static_cast<unsigned long>(4 + 3 * b.N));
      t4 <<= static_cast<mp_bitcnt_t>(b.N);
      CHECK(b.theorem4 == t4);
      CHECK(b.n_cubed == b.N * b.N * b.N);
      CHECK(b.lnk == b.l * n * (b.kappa + 1));
      CHECK(b.nkk == n * b.kappa * (b.kappa + 1));
      if (b.statement3) {
        const int k = blocks[0].count, K = blocks[1].count;
        CHECK(*b.statement3 == 42 * n * (k + K + 1) * (n + k + K + 1));
        CHECK(*b.statement3_alt == mpq_class(21, 2) * (b.N * b.N - 1) * (b.N + 3));
      }
    }
  CHECK_FALSE(bounds(1, {{4, 1}}).sigma_recursion_ok);

  const auto c = testing::cubic();
  const auto cert = certify(RationalMap::identity(c.table), c);
  REQUIRE(cert.bounds.d.has_value());
  REQUIRE(cert.bounds.delta.has_value());
  CHECK(*cert.bounds.delta == 0);
  CHECK(*cert.bounds.d == 2);
  CHECK(*cert.bounds.d <= *cert.bounds.delta + cert.bounds.l);
  CHECK(*cert.bounds.delta <= cert.bounds.lnk);
  CHECK(*cert.bounds.d <= cert.bounds.n_cubed);
}

#include "doctest.h"
#include "test_util.hpp"

using namespace msk;
using msk::testing::Random;

namespace {

VarTable::Ptr table() { return VarTable::make(1, {{2, 1}}); }
VarTable::Ptr table2() { return VarTable::make(2, {{2, 1}}); }

Poly P(const char* text, const VarTable::Ptr& t) { return parse_poly(text, t); }
RatFun R(const char* text, const VarTable::Ptr& t) { return parse_ratfun(text, t); }

RatMatrix matrix(const VarTable::Ptr& t, std::vector<std::vector<const char*>> rows) {
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = R(rows[r][c], t);
  return m;
}

}  // namespace

TEST_CASE("scalar canonical form and printing") {
  const Scalar a(mpq_class(6, 4), mpq_class(-2, 8));
  CHECK(a.re() == mpq_class(3, 2));
  CHECK(a.re().get_den() == 2);
  CHECK(a.im() == mpq_class(-1, 4));
  CHECK(Scalar(3).str() == "3");
  CHECK(Scalar(mpq_class(-1, 2)).str() == "-1/2");
  CHECK(Scalar::imaginary_unit().str() == "i");
  CHECK((-Scalar::imaginary_unit()).str() == "-i");
  CHECK(Scalar(0, mpq_class(3, 4)).str() == "3/4*i");
  CHECK(Scalar(1, 2).str() == "(1+2*i)");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK(Scalar(1, 2) * Scalar(1, -2) == Scalar(5));
  CHECK(Scalar(1, 1) / Scalar(1, 1) == Scalar(1));
}

TEST_CASE("variable table layout and weights") {
  const auto t = VarTable::make(2, {{3, 1}, {2, 2}});
  CHECK(t->codim() == 3);
  CHECK(t->ambient_dim() == 5);
  CHECK(t->top_weight() == 3);
  CHECK(t->blocks()[0].weight == 2);
  CHECK(t->var(t->w(0, 1)).name == "w2_2");
  CHECK(t->weight(t->w(1, 0)) == 3);
  CHECK(t->weight(t->u(1, 0)) == 3);
  CHECK(t->weight(t->zbar(1)) == 1);
  for (std::size_t i = 0; i < t->size(); ++i) {
    CHECK(t->conj_of(t->conj_of(i)) == i);
    CHECK(t->weight(t->conj_of(i)) == t->weight(i));
  }
  CHECK(t->conj_of(t->u(0, 0)) == t->u(0, 0));
  CHECK_THROWS(VarTable::make(1, {{1, 1}}));
  CHECK_THROWS(VarTable::make(1, {{2, 0}}));
  CHECK_THROWS(VarTable::make(1, {{2, 1}, {2, 1}}));
}

TEST_CASE("conjugate examples") {
  const auto t = table();
  CHECK(P("z1", t).conj() == P("conj(z1)", t));
  CHECK(P("i*z1*conj(z1)", t).conj() == P("-i*z1*conj(z1)", t));
  const Poly p = P("(2+i)*z1^2*u2", t);
  CHECK(p.conj().conj() == p);
  CHECK(p.conj() == P("(2-i)*conj(z1)^2*u2", t));
}

TEST_CASE("weighted degree examples") {
  const auto t = table();
  CHECK(P("z1^2", t).weighted_degree() == 2);
  CHECK(P("w2*z1", t).weighted_degree() == 3);
  CHECK(P("z1*conj(z1) + u2", t).weighted_degree() == 2);
  CHECK(Poly(t).weighted_degree() == kMinusInfinity);
  CHECK(Poly(t).degree() == kMinusInfinity);
}

TEST_CASE("ratfun_equal examples") {
  const auto t = table();
  CHECK(ratfun_equal(R("(z1^2 - conj(z1)^2)/(z1 - conj(z1))", t), R("z1 + conj(z1)", t)));
  CHECK_FALSE(ratfun_equal(R("z1/w2", t), R("z1/u2", t)));
  CHECK(ratfun_equal(RatFun(Poly(t), P("z1", t)), RatFun(Poly(t), P("w2 + 3", t))));
}

TEST_CASE("adjugate inverse examples") {
  const auto t = table();
  SUBCASE("identity") {
    const auto inv = adjugate_inverse(identity_matrix(t, 3));
    CHECK(matrices_equal(inv.inverse, identity_matrix(t, 3)));
    CHECK(ratfun_equal(inv.det, RatFun(Poly::constant(t, 1))));
  }
  SUBCASE("1x1") {
    const auto inv = adjugate_inverse(matrix(t, {{"w2"}}));
    CHECK(ratfun_equal(inv.inverse(0, 0), R("1/w2", t)));
    CHECK(ratfun_equal(inv.det, R("w2", t)));
  }
  SUBCASE("unitriangular 2x2") {
    const auto inv = adjugate_inverse(matrix(t, {{"1", "0"}, {"2*i*z1", "1"}}));
    CHECK(matrices_equal(inv.inverse, matrix(t, {{"1", "0"}, {"-2*i*z1", "1"}})));
    CHECK(ratfun_equal(inv.det, RatFun(Poly::constant(t, 1))));
  }
  SUBCASE("singular") {
    CHECK_THROWS_WITH_AS(adjugate_inverse(matrix(t, {{"z1", "w2"}, {"2*z1", "2*w2"}})),
                         "degenerate pushforward frame", std::domain_error);
  }
  SUBCASE("rational entries") {
    const RatMatrix m = matrix(t, {{"1/(1 - z1)", "w2"}, {"z1", "1/(1 + w2)"}});
    const auto inv = adjugate_inverse(m);
    CHECK(matrices_equal(multiply(m, inv.inverse), identity_matrix(t, 2)));
  }
}

TEST_CASE("block matrix views") {
  const auto t = table();
  const BlockMatrix b(matrix(t, {{"1", "0"}, {"2*i*z1", "1"}}), {1, 1});
  CHECK(b.is_block_unitriangular());
  CHECK(ratfun_equal(b.block(1, 0)(0, 0), R("2*i*z1", t)));
  CHECK_FALSE(BlockMatrix(matrix(t, {{"1", "z1"}, {"0", "1"}}), {1, 1}).is_block_unitriangular());
  CHECK_THROWS(BlockMatrix(matrix(t, {{"1", "0"}, {"0", "1"}}), {1, 2}));
}

TEST_CASE("ring axioms on random triples") {
  const auto t = table();
  Random rnd(11);
  for (int k = 0; k < 200; ++k) {
    const Poly a = rnd.poly(t, 4, 3), b = rnd.poly(t, 4, 3), c = rnd.poly(t, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a - a == Poly(t));
  }
}

TEST_CASE("conjugation is an involution and a homomorphism") {
  const auto t = table2();
  Random rnd(12);
  for (int k = 0; k < 200; ++k) {
    const Poly a = rnd.poly(t, 4, 3), b = rnd.poly(t, 4, 3);
    const Scalar c = rnd.scalar();
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * c).conj() == a.conj() * c.conj());
    CHECK(a.real_part() + a.imag_part() * Scalar::imaginary_unit() == a);
    CHECK(a.real_part().conj() == a.real_part());
  }
}

TEST_CASE("weighted degree is additive") {
  const auto t = table();
  Random rnd(13);
  for (int k = 0; k < 300; ++k) {
    const Poly a = rnd.poly(t, 3, 4), b = rnd.poly(t, 3, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).weighted_degree() == a.weighted_degree() + b.weighted_degree());
  }
}

TEST_CASE("degree of rational operations is subadditive") {
  const auto t = table();
  Random rnd(14);
  for (int k = 0; k < 1000; ++k) {
    const RatFun a = rnd.ratfun(t), b = rnd.ratfun(t);
    if (a.is_zero() || b.is_zero()) continue;
    const int bound = a.degree() + b.degree();
    CHECK((a + b).degree() <= bound);
    CHECK((a - b).degree() <= bound);
    CHECK((a * b).degree() <= bound);
    CHECK((a / b).degree() <= bound);
  }
}

TEST_CASE("adjugate inverse of random polynomial matrices") {
  const auto t = table();
  Random rnd(15);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = RatFun(rnd.poly(t, 2, 2));
    if (determinant(m).is_zero()) continue;
    const auto inv = adjugate_inverse(m);
    CHECK(matrices_equal(multiply(m, inv.inverse), identity_matrix(t, n)));
    CHECK(matrices_equal(multiply(inv.inverse, m), identity_matrix(t, n)));
    CHECK(max_entry_degree(inv.inverse) <= static_cast<int>(n) * max_entry_degree(m));
  }
}

TEST_CASE("substitution and derivatives") {
  const auto t = table();
  const Poly p = P("z1^2*w2 + 3*conj(z1)", t);
  std::vector<Poly> img = identity_images(t);
  img[t->z(0)] = P("z1 + 1", t);
  CHECK(substitute(p, img) == P("(z1 + 1)^2*w2 + 3*conj(z1)", t));
  CHECK(p.derivative(t->z(0)) == P("2*z1*w2", t));
  CHECK(p.derivative(t->zbar(0)) == P("3", t));
  const RatFun r = R("z1/(1 - w2)", t);
  CHECK(ratfun_equal(r.derivative(t->w(0, 0)), R("z1/(1 - w2)^2", t)));
  std::vector<RatFun> rimg;
  for (std::size_t i = 0; i < t->size(); ++i) rimg.emplace_back(Poly::variable(t, i));
  rimg[t->w(0, 0)] = RatFun(Poly::constant(t, 1));
  CHECK_THROWS_AS(substitute(r, rimg), std::domain_error);
}

TEST_CASE("weighted Taylor truncation") {
  const auto t = table();
  CHECK(taylor_truncate(R("1/(1 - z1)", t), 3) == P("1 + z1 + z1^2 + z1^3", t));
  CHECK(taylor_truncate(R("z1/(1 - w2)", t), 3) == P("z1 + z1*w2", t));
  CHECK_THROWS_AS(taylor_truncate(R("1/z1", t), 2), std::domain_error);
}

TEST_CASE("parser round trip and errors") {
  const auto t = VarTable::make(2, {{2, 1}, {3, 1}});
  Random rnd(16);
  for (int k = 0; k < 200; ++k) {
    const Poly p = rnd.poly(t, 5, 4);
    CHECK(parse_poly(p.str(), t) == p);
  }
  CHECK(parse_poly("w2", t) == parse_poly("w2_1", t));
  CHECK(parse_poly(" z1 *  ( 2 - i ) ", t) == parse_poly("(2-i)*z1", t));
  CHECK(parse_poly("z1^0", t) == Poly::constant(t, 1));
  CHECK_THROWS_AS(parse_poly("z3", t), ParseError);
  CHECK_THROWS_AS(parse_poly("z1 +", t), ParseError);
  CHECK_THROWS_AS(parse_poly("1/z1", t), ParseError);
  CHECK_THROWS_AS(parse_poly("z1/0", t), ParseError);
  CHECK_THROWS_AS(parse_poly("z1^-1", t), ParseError);
  try {
    parse_poly("z1 + q", t);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("row echelon nullspace and solving") {
  RowEchelon ech(3);
  CHECK(ech.add_row(RationalVector{1, 2, 3}));
  CHECK_FALSE(ech.add_row(RationalVector{2, 4, 6}));
  CHECK(ech.add_row(RationalVector{0, 1, 1}));
  CHECK(ech.rank() == 2);
  const auto ns = ech.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RationalVector{-1, -1, 1});
  CHECK(ech.in_span(RationalVector{1, 3, 4}));
  CHECK_FALSE(ech.in_span(RationalVector{0, 0, 1}));
  RationalVector x;
  CHECK(solve_columns({{1, 0}, {1, 1}}, {3, 1}, x));
  CHECK(x == RationalVector{2, 1});
  CHECK_FALSE(solve_columns({{1, 1}}, {1, 2}, x));
}

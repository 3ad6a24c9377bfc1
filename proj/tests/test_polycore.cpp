#include "doctest.h"

#include "poisson_ore/gcd.hpp"
#include "poisson_ore/groebner.hpp"
#include "poisson_ore/linalg.hpp"
#include "poisson_ore/solve.hpp"
#include "test_support.hpp"

using namespace poisson_ore;
using namespace poisson_ore::testing;

TEST_CASE("GaussRat field arithmetic is exact and canonical") {
  GaussRat a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.im() == mpq_class(-1, 2));
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  CHECK(GaussRat::rational(1, 3).to_string() == "1/3");
  CHECK(GaussRat(mpq_class(1), mpq_class(-2)).to_string() == "(1-2*i)");
  CHECK(GaussRat(mpq_class(0), mpq_class(-1)).to_string() == "-i");
  CHECK_THROWS_AS(GaussRat(0).inverse(), std::domain_error);
}

TEST_CASE("multiply examples") {
  CHECK(A("(x + i*y)") * A("(x - i*y)") == A("x^2 + y^2"));
  Poly p = A("3*x^2*y - 1/2*y + i");
  CHECK(p * A("1") == p);
  CHECK(A("x+y") * A("x+y") == A("x^2 + 2*x*y + y^2"));
  CHECK_THROWS_AS(A("x") * B("x"), RingMismatch);
}

TEST_CASE("exact_divide examples") {
  auto q = exact_divide(A("x^2+y^2"), A("x+i*y"));
  REQUIRE(q);
  CHECK(*q == A("x - i*y"));
  CHECK(*q * A("x+i*y") == A("x^2+y^2"));
  CHECK_FALSE(exact_divide(A("x^2+1"), A("x")));
  CHECK(exact_divide(A("0"), A("x"))->is_zero());
  CHECK_THROWS_AS(exact_divide(A("x"), A("0")), std::domain_error);
}

TEST_CASE("partial_derivative examples") {
  CHECK(partial_derivative(A("x^2+y^2"), "y") == A("2*y"));
  CHECK(partial_derivative(B("x*y"), "z").is_zero());
  CHECK(partial_derivative(A("x^3*y"), "x") == A("3*x^2*y"));
  CHECK_THROWS_AS(partial_derivative(A("x"), "z"), UnknownVariable);
}

TEST_CASE("gcd examples") {
  Poly p = A("x^2 - y^2"), q = A("x^2 + 2*x*y + y^2");
  Poly g = gcd(p, q);
  CHECK(g == A("x + y"));
  auto cp = exact_divide(p, g);
  auto cq = exact_divide(q, g);
  REQUIRE(cp);
  REQUIRE(cq);
  CHECK(*cp == A("x - y"));
  CHECK(gcd(*cp, *cq).is_constant());
  CHECK(gcd(A("3*x^2 + 6*y"), A("0")) == A("x^2 + 2*y"));
  CHECK(gcd(A("x"), A("y")) == A("1"));
  CHECK_THROWS_AS(gcd(A("0"), A("0")), PreconditionError);
}

TEST_CASE("gcd with z-dependence and Gaussian factors") {
  CHECK(gcd(B("(z+1)*x"), B("(z+1)*y")) == B("z+1"));
  CHECK(gcd(A("x^2+y^2"), A("x^2 + 2*i*x*y - y^2")) == A("x + i*y"));
  Poly u = B("x*z + y^2 - 1"), v = B("z^2 + x"), w = B("y*z - 3*x + 2");
  CHECK(gcd(u * v, v * w) == v.monic());
  CHECK(gcd(u * u * w, u * v) == u.monic());
}

TEST_CASE("groebner_basis examples") {
  IdealPres gwj(ring_a(), {A("2*y"), A("y^2+x")});
  auto gb = groebner_basis(gwj);
  REQUIRE(gb.generators().size() == 2);
  CHECK(gb.generators()[0] == A("x"));
  CHECK(gb.generators()[1] == A("y"));
  CHECK(groebner_basis(IdealPres(ring_a(), {A("1")})).generators() == std::vector<Poly>{A("1")});
  auto lin = groebner_basis(IdealPres(ring_a(), {A("x-1"), A("y")}));
  CHECK(lin.generators() == std::vector<Poly>{A("x-1"), A("y")});
  CHECK(gb.cached_basis().has_value());
}

TEST_CASE("normal_form examples") {
  IdealPres m(ring_a(), {A("y"), A("x")});
  CHECK(normal_form(A("y^2+x+1"), m) == A("1"));
  CHECK(normal_form(A("x"), IdealPres(ring_a(), {A("x-1"), A("y")})) == A("1"));
  IdealPres q(ring_a(), {A("y^2+x+1"), A("x*y - 2")});
  for (const auto& g : q.generators()) CHECK(normal_form(g, q).is_zero());
}

TEST_CASE("lex basis of a zero-dimensional ideal") {
  IdealPres i(ring_a(), {A("x^2 + y^2 - 5"), A("x - y - 1")});
  auto gb = i.basis(MonomialOrder::lex());
  REQUIRE(gb.polys.size() == 2);
  CHECK(gb.polys[0] == A("x - y - 1"));
  CHECK(gb.polys[1] == A("y^2 + y - 2"));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, ring_b(), 3), q = random_poly(rng, ring_b(), 3), r = random_poly(rng, ring_b(), 2);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q - q == p);
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
  }
}

TEST_CASE("partial derivatives are derivations") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    Poly p = random_poly(rng, ring_b(), 3), q = random_poly(rng, ring_b(), 3);
    for (std::size_t v = 0; v < 3; ++v)
      CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
  }
}

TEST_CASE("gcd divides and leaves coprime cofactors") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Poly common = random_poly(rng, ring_b(), 2, 3);
    if (common.is_zero()) continue;
    Poly p = common * random_poly(rng, ring_b(), 2, 3);
    Poly q = common * random_poly(rng, ring_b(), 2, 3);
    if (p.is_zero() || q.is_zero()) continue;
    Poly g = gcd(p, q);
    auto cp = exact_divide(p, g);
    auto cq = exact_divide(q, g);
    REQUIRE(cp);
    REQUIRE(cq);
    CHECK(gcd(*cp, *cq).is_constant());
    CHECK(exact_divide(g, common.monic()));
  }
}

TEST_CASE("normal form membership soundness and idempotence") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> gens{random_poly(rng, ring_a(), 2, 3), random_poly(rng, ring_a(), 2, 3)};
    IdealPres ideal = IdealPres(ring_a(), gens).with_basis();
    Poly combo = random_poly(rng, ring_a(), 2) * gens[0] + random_poly(rng, ring_a(), 2) * gens[1];
    CHECK(normal_form(combo, ideal).is_zero());
    Poly r = normal_form(random_poly(rng, ring_a(), 3, 5), ideal);
    CHECK(normal_form(r, ideal) == r);
    auto again = groebner_basis(IdealPres(ring_a(), gens));
    CHECK(again.generators() == ideal.cached_basis()->polys);
  }
}

TEST_CASE("linear solve") {
  Matrix a{{1, 2}, {2, 4}};
  auto s = solve_linear(a, {3, 6});
  REQUIRE(s);
  CHECK(s->nullspace.size() == 1);
  CHECK_FALSE(solve_linear(a, {3, 7}));
  CHECK(rank(a) == 1);
}

TEST_CASE("Gaussian rational roots") {
  Ring t{"t"};
  auto roots = gaussian_rational_roots(parse_poly("t^2 + 1", t), 0);
  REQUIRE(roots.roots.size() == 2);
  CHECK_FALSE(roots.has_other_roots);
  roots = gaussian_rational_roots(parse_poly("(2*t - 3)*(t^2 - 2)*(3*t + 2*i)^2", t), 0);
  REQUIRE(roots.roots.size() == 2);
  CHECK(roots.has_other_roots);
  roots = gaussian_rational_roots(parse_poly("t^3 - t", t), 0);
  CHECK(roots.roots.size() == 3);
}

TEST_CASE("polynomial system solving") {
  auto pts = solve_polynomial_system(ring_a(), {A("x^2 + y^2"), A("x - i*y - 2")});
  CHECK(pts.resolved);
  for (const auto& p : pts.points) {
    Poly e1 = A("x^2 + y^2").evaluate(0, p[0]).evaluate(1, p[1]);
    CHECK(e1.is_zero());
  }
  CHECK(pts.points.size() == 1);
  auto none = solve_polynomial_system(ring_a(), {A("x*y - 1"), A("x")});
  CHECK(none.points.empty());
  CHECK(none.resolved);
  auto curve = solve_polynomial_system(ring_a(), {A("x*y - 1")});
  CHECK_FALSE(curve.resolved);
}

TEST_CASE("parse and render") {
  CHECK(A("x^2 + y^2").to_string() == "x^2 + y^2");
  CHECK(B("2*y*z^2 - 1/3*x").to_string() == "2*y*z^2 - 1/3*x");
  CHECK(A("-(x+y)").to_string() == "-x - y");
  CHECK(A("(1+2*i)*x - i").to_string() == "(1+2*i)*x - i");
  CHECK_THROWS_AS(A("2x"), ParseError);
  CHECK_THROWS_AS(A("x + w"), UnknownVariable);
  CHECK_THROWS_AS(A("x^y"), ParseError);
  try {
    A("x + (y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  std::mt19937 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(rng, ring_t(), 4, 6);
    CHECK(parse_poly(p.to_string(), ring_t()) == p);
    CHECK(parse_poly(parse_poly(p.to_string(), ring_t()).to_string(), ring_t()).to_string() == p.to_string());
  }
}

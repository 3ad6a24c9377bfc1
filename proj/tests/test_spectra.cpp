#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "poisson_ore/ore.hpp"
#include "poisson_ore/spectra.hpp"
#include "test_support.hpp"

using namespace poisson_ore;
using namespace poisson_ore::testing;

namespace {

Derivation delta(std::string_view dx, std::string_view dy) { return Derivation(ring_a(), {A(dx), A(dy)}); }

bool same(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  return same_ideal(IdealPres(ring_b(), a), IdealPres(ring_b(), b));
}

struct Expected {
  EntryKind kind;
  std::vector<Poly> generators;
};

void check_points(const SpectrumDescription& s, const std::vector<Expected>& want) {
  auto pts = instantiate(s);
  REQUIRE(pts.size() == want.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    INFO(pts[k].label);
    CHECK(pts[k].kind == want[k].kind);
    CHECK(same(pts[k].generators, want[k].generators));
  }
}

std::vector<Expected> two_families(std::vector<Expected> head) {
  head.push_back({EntryKind::type1, {B("x"), B("y")}});
  for (const char* z : {"z", "z - 1", "z + 2"}) head.push_back({EntryKind::type1, {B("x"), B("y"), B(z)}});
  return head;
}

std::vector<Derivation> registry_sample() {
  return {delta("2*y", "y^2+x"), delta("y", "x*(1+x*y)"), delta("x", "1"), delta("1", "1+x*y"),
          delta("2*y", "-2*x"), delta("y^3", "1-x*y")};
}

}  // namespace

TEST_CASE("classify_delta_spectrum examples") {
  auto g = classify_delta_spectrum(DeltaBracket{delta("2*y", "y^2+x")}, 2);
  CHECK(g.side == Side::poisson);
  CHECK(g.completeness == "bounded-degree(2)");
  check_points(g, two_families({{EntryKind::type2, {}}, {EntryKind::type2, {B("y^2+x+1")}}}));
  REQUIRE(g.entries.size() == 4);
  CHECK(g.entries[1].certificates[1].check == "irreducible");
  CHECK(g.entries[3].is_family());
  CHECK(g.entries[3].generator_strings() == std::vector<std::string>{"x", "y", "z - alpha"});

  auto n = classify_delta_spectrum(DeltaBracket{delta("y", "x*(1+x*y)")}, 3);
  check_points(n, two_families({{EntryKind::type2, {}}}));

  auto l = classify_delta_spectrum(DeltaBracket{delta("x", "1")}, 2);
  check_points(l, {{EntryKind::type2, {}}, {EntryKind::type2, {B("x")}}});
}

TEST_CASE("classify_delta_spectrum edge cases") {
  auto zero = classify_delta_spectrum(DeltaBracket{Derivation::zero(ring_a())}, 1);
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].kind == EntryKind::type1);
  CHECK(zero.entries[0].parameters);

  // J = (x) is principal and contained in the invariant line x = 0
  auto line = classify_delta_spectrum(DeltaBracket{delta("x", "0")}, 1);
  for (const auto& e : line.entries)
    if (e.kind == EntryKind::type2) CHECK(e.generators != std::vector<Poly>{B("x")});
  CHECK(line.completeness.find("not finite") != std::string::npos);

  auto weyl = classify_delta_spectrum(DeltaBracket{delta("1", "0")}, 1);
  REQUIRE(weyl.entries.size() == 2);
  CHECK(weyl.entries[1].parameter_names == std::vector<std::string>{"t1"});
  CHECK(instantiate(weyl).size() == 4);
}

TEST_CASE("classify_exact_spectrum examples") {
  auto c = classify_exact_spectrum(A("x^2+y^2"), {GaussRat(0), GaussRat(1)}, 2);
  check_points(c, two_families({{EntryKind::type2, {}},
                                {EntryKind::type2, {B("x+i*y")}},
                                {EntryKind::type2, {B("x-i*y")}},
                                {EntryKind::type2, {B("x^2+y^2-1")}}}));
  CHECK(c.entries[3].certificates[1].check == "irreducible");
  Derivation ham = restrict(hamiltonian(exact_triple(A("x^2+y^2"), B("1")), B("z")), ring_a());
  CHECK(verify_cofactor(ham, A("x^2+y^2"))->is_zero());

  auto lin = classify_exact_spectrum(A("x"), {GaussRat(3)}, 1);
  check_points(lin, {{EntryKind::type2, {}}, {EntryKind::type2, {B("x-3")}}});

  auto k = classify_exact_spectrum(A("5"), {GaussRat(0), GaussRat(5)}, 1);
  for (const auto& e : k.entries) CHECK(e.generators.size() != 1);
  CHECK_THROWS_AS(classify_exact_spectrum(A("0"), {GaussRat(0)}, 1), PreconditionError);
}

TEST_CASE("classify output does not depend on the thread count") {
  auto one = classify_exact_spectrum(A("x^2+y^2"), {GaussRat(0), GaussRat(1), GaussRat(2)}, 2, 1);
  auto four = classify_exact_spectrum(A("x^2+y^2"), {GaussRat(0), GaussRat(1), GaussRat(2)}, 2, 4);
  REQUIRE(one.entries.size() == four.entries.size());
  for (std::size_t k = 0; k < one.entries.size(); ++k)
    CHECK(one.entries[k].generator_strings() == four.entries[k].generator_strings());
}

TEST_CASE("gamma_map examples") {
  Derivation gwj = delta("2*y", "y^2+x");
  auto s = classify_delta_spectrum(DeltaBracket{gwj}, 2);
  auto r = gamma_map(s, gwj);
  CHECK(r.side == Side::ore);
  REQUIRE(r.entries.size() == s.entries.size());
  for (std::size_t k = 0; k < r.entries.size(); ++k) {
    CHECK(r.entries[k].kind == s.entries[k].kind);
    CHECK(r.entries[k].generators == s.entries[k].generators);
  }
  CHECK(r.entries[1].certificates.back().check == "two-sided");
  auto back = gamma_map(r, gwj);
  CHECK(back.side == Side::poisson);

  SpectrumEntry bad;
  CHECK_THROWS_AS(gamma_map(bad, gwj), PreconditionError);
  SpectrumEntry unstable{Side::poisson, EntryKind::type2, {B("x")}, {}, std::nullopt, {}};
  CHECK_THROWS_AS(gamma_map(unstable, gwj), PreconditionError);
  SpectrumEntry no_j{Side::poisson, EntryKind::type1, {B("x")}, {}, std::nullopt, {}};
  CHECK_THROWS_AS(gamma_map(no_j, gwj), PreconditionError);
}

TEST_CASE("gamma preserves and reflects inclusions") {
  for (const auto& d : registry_sample()) {
    auto s = classify_delta_spectrum(DeltaBracket{d}, 2);
    auto r = gamma_map(s, d);
    auto ps = instantiate(s), rs = instantiate(r);
    REQUIRE(ps.size() == rs.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        INFO(ps[i].label << " in " << ps[j].label);
        CHECK(included(ps[i], ps[j], d) == included(rs[i], rs[j], d));
        if (i != j) CHECK_FALSE((included(ps[i], ps[j], d) && included(ps[j], ps[i], d)));
      }
  }
}

TEST_CASE("no type-1 point lies inside a type-2 point") {
  std::vector<SpectrumDescription> all;
  for (const auto& d : registry_sample()) all.push_back(classify_delta_spectrum(DeltaBracket{d}, 2));
  all.push_back(classify_exact_spectrum(A("x^2+y^2"), {GaussRat(0), GaussRat(1)}, 2));
  for (const auto& s : all) {
    auto pts = instantiate(s);
    for (const auto& small : pts)
      for (const auto& big : pts)
        if (small.kind == EntryKind::type1 && big.kind == EntryKind::type2)
          CHECK_FALSE(included(small, big, Derivation::zero(ring_a())));
  }
}

TEST_CASE("type-2 entries are stable and avoid the image of delta") {
  for (const auto& d : registry_sample()) {
    IdealPres j(ring_a(), {d.image(0), d.image(1)});
    for (const auto& e : classify_delta_spectrum(DeltaBracket{d}, 2).entries) {
      if (e.kind != EntryKind::type2 || e.is_family()) continue;
      std::vector<Poly> gens;
      for (const auto& g : e.generators) gens.push_back(g.embed(ring_a()));
      IdealPres q(ring_a(), gens);
      CHECK(is_delta_ideal(d, q).stable);
      CHECK_FALSE(contains(q, j));
    }
  }
}

TEST_CASE("type-1 entries contain the commutator ideal") {
  for (const auto& d : registry_sample()) {
    IdealPres j = commutator_ideal(DeltaBracket{d});
    for (const auto& p : instantiate(classify_delta_spectrum(DeltaBracket{d}, 2)))
      if (p.kind == EntryKind::type1) CHECK(contains(IdealPres(ring_b(), p.generators), j));
  }
}

TEST_CASE("darboux_search agrees with the joint oracle") {
  std::mt19937 rng(41);
  int compared = 0;
  for (int trial = 0; trial < 6; ++trial) {
    Derivation d(ring_a(), {random_poly(rng, ring_a(), 2, 3), random_poly(rng, ring_a(), 2, 3)});
    if (trial % 2 == 0) {
      // plant q: d(x) = a q + b q_y, d(y) = c q - b q_x gives d(q) = (a q_x + c q_y) q
      Poly q = random_poly(rng, ring_a(), 2, 3);
      if (q.total_degree() < 1) continue;
      GaussRat a = random_coef(rng), b = random_coef(rng), c = random_coef(rng);
      d = Derivation(ring_a(), {a * q + b * q.derivative(1), c * q - b * q.derivative(0)});
    }
    INFO(d.to_string());
    auto search = darboux_search(d, 2);
    auto oracle = darboux_oracle(d, 2);
    for (const auto& c : search.certificates) CHECK(verify_cofactor(d, c.q) == c.cofactor);
    if (!search.complete() || !oracle.skipped.empty() || search.irrational_omitted || oracle.irrational) continue;
    ++compared;
    std::vector<std::pair<std::string, std::string>> got, want;
    for (const auto& c : search.certificates) {
      REQUIRE(c.directions.empty());
      got.emplace_back(c.q.to_string(), c.cofactor.to_string());
    }
    for (const auto& [q, h] : oracle.pairs) want.emplace_back(q.to_string(), h.to_string());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
  CHECK(compared >= 3);
}

TEST_CASE("planted invariant curves are found") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 6; ++trial) {
    Poly q = random_poly(rng, ring_a(), 2, 3);
    if (q.total_degree() < 1) continue;
    Derivation d(ring_a(), {q + q.derivative(1), A("2") * q - q.derivative(0)});
    auto search = darboux_search(d, q.total_degree());
    Poly target = q.monic();
    bool found = false;
    for (const auto& c : search.certificates) found = found || c.q == target;
    CHECK(found);
  }
}

TEST_CASE("invariance_equations evaluate to the coefficients of d(q) - h q") {
  std::mt19937 rng(43);
  Derivation d = delta("y", "x*(1+x*y)");
  auto q_support = monomials_up_to(ring_a(), 1);
  auto h_support = monomials_up_to(ring_a(), 2);
  Poly fixed = A("x^2");
  auto sys = invariance_equations(d, q_support, h_support, fixed);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GaussRat> qv, hv;
    for (std::size_t k = 0; k < sys.num_q; ++k) qv.push_back(random_coef(rng));
    for (std::size_t k = 0; k < sys.num_h; ++k) hv.push_back(random_coef(rng));
    Poly q = sys.q_of(qv), h = sys.h_of(hv);
    Poly residual = d.apply(q) - h * q;
    std::vector<GaussRat> point = qv;
    point.insert(point.end(), hv.begin(), hv.end());
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
      Poly v = sys.equations[e];
      for (std::size_t k = 0; k < point.size(); ++k) v = v.evaluate(k, point[k]);
      CHECK(v.constant_term() == residual.coefficient(sys.equation_monomials[e]));
    }
    Poly rebuilt = Poly::constant(ring_a(), 0);
    for (std::size_t e = 0; e < sys.equations.size(); ++e) {
      Poly v = sys.equations[e];
      for (std::size_t k = 0; k < point.size(); ++k) v = v.evaluate(k, point[k]);
      rebuilt += Poly::term(ring_a(), sys.equation_monomials[e], v.constant_term());
    }
    CHECK(rebuilt == residual);
  }
}

TEST_CASE("cofactor degree bound") {
  for (const auto& d : registry_sample())
    for (const auto& c : darboux_search(d, 2).certificates)
      CHECK(c.cofactor.total_degree() <= std::max(d.max_image_degree() - 1, 0));
}

TEST_CASE("delta_core properties") {
  Derivation gwj = delta("2*y", "y^2+x");
  IdealPres m(ring_a(), {A("y^2+x+1"), A("x*y")});
  auto core = delta_core(gwj, m);
  CHECK(contains(m, core.ideal));
  CHECK(contains(core.ideal, A("y^2+x+1")));

  // (x) > (x^2) > ... never stabilizes under d/dx
  auto weyl = delta_core(delta("1", "0"), IdealPres(ring_a(), {A("x")}), 3);
  CHECK(weyl.status == CoreStatus::upper_bound);
  CHECK(same_ideal(weyl.ideal, IdealPres(ring_a(), {A("x^4")})));

  std::mt19937 rng(44);
  for (const auto& d : registry_sample()) {
    Poly q = random_poly(rng, ring_a(), 1, 2);
    IdealPres mm(ring_a(), {q, A("x^2")});
    auto c = delta_core(d, mm, 4);
    CHECK(contains(mm, c.ideal));
    if (c.status == CoreStatus::exact) CHECK(is_delta_ideal(d, c.ideal).stable);
  }
  // every stable ideal inside M lies in the core
  Derivation ham = delta("2*y", "-2*x");
  IdealPres circle(ring_a(), {A("(x^2+y^2)*(x^2+y^2-1)"), A("x^3 + x*y^2")});
  auto cc = delta_core(ham, circle);
  CHECK(contains(cc.ideal, A("(x^2+y^2)*(x^2+y^2-1)")));
}

TEST_CASE("univariate simplicity fact") {
  Ring t{"x"};
  for (const char* p : {"0", "1", "x", "x^2+1"}) {
    Derivation d(t, {parse_poly(p, t)});
    bool nontrivial = !darboux_search(d, 2).certificates.empty();
    Poly pp = parse_poly(p, t);
    CHECK(nontrivial == (pp.is_zero() || pp.total_degree() >= 1));
  }
}

TEST_CASE("Groebner membership agrees with bounded linear algebra") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> gens{random_poly(rng, ring_a(), 2, 3), random_poly(rng, ring_a(), 2, 3)};
    IdealPres ideal = IdealPres(ring_a(), gens).with_basis();
    Poly member = random_poly(rng, ring_a(), 1, 2) * gens[0] + random_poly(rng, ring_a(), 1, 2) * gens[1];
    CHECK(contains(ideal, member));
    CHECK(bounded_membership(gens, member, 1));
    Poly other = random_poly(rng, ring_a(), 2, 3);
    if (!contains(ideal, other)) CHECK_FALSE(bounded_membership(gens, other, 4));
  }
}

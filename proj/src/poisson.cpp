#include "poisson_ore/poisson.hpp"

#include "poisson_ore/gcd.hpp"

namespace poisson_ore {

namespace {

constexpr std::size_t X = 0, Y = 1, Z = 2;

Poly in_b(const Poly& p) { return p.ring() == ring_b() ? p : p.embed(ring_b()); }

Poly var_b(std::size_t v) { return Poly::variable(ring_b(), ring_b().var(v)); }

}  // namespace

std::array<Poly, 3> curl(const PoissonTriple& F) {
  Poly f = in_b(F.f), g = in_b(F.g), h = in_b(F.h);
  return {h.derivative(Y) - g.derivative(Z), f.derivative(Z) - h.derivative(X), g.derivative(X) - f.derivative(Y)};
}

TripleCheck is_poisson_triple(const PoissonTriple& F) {
  auto c = curl(F);
  TripleCheck out;
  out.residual = in_b(F.f) * c[0] + in_b(F.g) * c[1] + in_b(F.h) * c[2];
  out.ok = out.residual.is_zero();
  return out;
}

Poly bracket(const PoissonTriple& F, const Poly& p0, const Poly& q0) {
  Poly p = in_b(p0), q = in_b(q0);
  Poly px = p.derivative(X), py = p.derivative(Y), pz = p.derivative(Z);
  Poly qx = q.derivative(X), qy = q.derivative(Y), qz = q.derivative(Z);
  Poly out(ring_b());
  if (!F.f.is_zero()) out += in_b(F.f) * (py * qz - pz * qy);
  if (!F.g.is_zero()) out += in_b(F.g) * (pz * qx - px * qz);
  if (!F.h.is_zero()) out += in_b(F.h) * (px * qy - py * qx);
  return out;
}

Poly bracket_delta(const DeltaBracket& db, const Poly& p0, const Poly& q0) {
  Poly p = in_b(p0), q = in_b(q0);
  const Ring& a = db.delta.ring();
  auto pa = p.coefficients_in(Z);
  auto qb = q.coefficients_in(Z);
  std::vector<Poly> da, db_;
  for (const auto& c : pa) da.push_back(db.delta.apply(c.embed(a)).embed(ring_b()));
  for (const auto& c : qb) db_.push_back(db.delta.apply(c.embed(a)).embed(ring_b()));

  std::vector<Poly> out;
  if (!pa.empty() && !qb.empty()) out.assign(pa.size() + qb.size(), Poly(ring_b()));
  for (std::size_t m = 0; m < pa.size(); ++m) {
    if (pa[m].is_zero()) continue;
    for (std::size_t n = 0; n < qb.size(); ++n) {
      if (qb[n].is_zero() || m + n == 0) continue;
      Poly c = GaussRat(long(m)) * (pa[m] * db_[n]) - GaussRat(long(n)) * (qb[n] * da[m]);
      out[m + n - 1] += c;
    }
  }
  return Poly::from_coefficients(ring_b(), Z, out);
}

Poly bracket(const PoissonStructure& s, const Poly& p, const Poly& q) {
  if (auto* t = std::get_if<PoissonTriple>(&s)) return bracket(*t, p, q);
  return bracket_delta(std::get<DeltaBracket>(s), p, q);
}

PoissonTriple to_triple(const DeltaBracket& db) {
  return {in_b(-db.delta.image("y")), in_b(db.delta.image("x")), Poly(ring_b())};
}

Derivation hamiltonian(const PoissonStructure& s, const Poly& a) {
  std::vector<Poly> images;
  for (std::size_t v = 0; v < 3; ++v) images.push_back(bracket(s, a, var_b(v)));
  return Derivation(ring_b(), std::move(images));
}

PoissonTriple exact_triple(const Poly& a0, const Poly& b0) {
  Poly a = in_b(a0), b = in_b(b0);
  return {b * a.derivative(X), b * a.derivative(Y), b * a.derivative(Z)};
}

std::optional<Fg0Decomposition> decompose_fg0(const Poly& f0, const Poly& g0) {
  Poly f = in_b(f0), g = in_b(g0);
  if (!(f * g.derivative(Z) - g * f.derivative(Z)).is_zero()) return std::nullopt;
  Poly one = Poly::constant(ring_b(), 1);
  if (f.is_zero() && g.is_zero()) return Fg0Decomposition{one, f, g};
  if (g.is_zero()) return f.uses(Z) ? Fg0Decomposition{f, one, g} : Fg0Decomposition{one, f, g};
  if (f.is_zero()) return g.uses(Z) ? Fg0Decomposition{g, f, one} : Fg0Decomposition{one, f, g};
  Poly h = gcd(f, g);
  auto f1 = exact_divide(f, h);
  auto g1 = exact_divide(g, h);
  if (!f1 || !g1) throw InternalAssertion("gcd does not divide its inputs");
  if (f1->uses(Z) || g1->uses(Z)) throw InternalAssertion("(f,g,0) cofactor depends on z");
  return Fg0Decomposition{h, *f1, *g1};
}

IdealCheck is_poisson_ideal(const PoissonStructure& s, const IdealPres& ideal0) {
  IdealPres ideal = ideal0.with_basis();
  IdealCheck out;
  for (std::size_t v = 0; v < 3; ++v) {
    for (const auto& g : ideal.generators()) {
      Poly value = bracket(s, var_b(v), g);
      Poly r = normal_form(value, ideal);
      if (!r.is_zero()) {
        out.holds = false;
        out.witness = BracketWitness{var_b(v), g, value, r};
        return out;
      }
    }
  }
  return out;
}

std::string to_string(ResidualNullity r) {
  switch (r) {
    case ResidualNullity::residually_null: return "residually null";
    case ResidualNullity::not_residually_null: return "not residually null";
    case ResidualNullity::not_poisson: return "not a Poisson ideal";
  }
  return "";
}

ResidualNullity is_residually_null(const PoissonStructure& s, const IdealPres& ideal0) {
  IdealPres ideal = ideal0.with_basis();
  if (!is_poisson_ideal(s, ideal)) return ResidualNullity::not_poisson;
  for (std::size_t v = 0; v < 3; ++v)
    for (std::size_t w = v + 1; w < 3; ++w)
      if (!contains(ideal, bracket(s, var_b(v), var_b(w)))) return ResidualNullity::not_residually_null;
  return ResidualNullity::residually_null;
}

IdealPres commutator_ideal(const PoissonStructure& s) {
  return IdealPres(ring_b(), {bracket(s, var_b(Z), var_b(X)), bracket(s, var_b(Z), var_b(Y)),
                              bracket(s, var_b(X), var_b(Y))});
}

}  // namespace poisson_ore

#include "poisson_ore/ore.hpp"

namespace poisson_ore {

SkewPoly::SkewPoly(Derivation twist, std::vector<Poly> coeffs) : twist_(std::move(twist)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    if (!(c.ring() == base())) c = c.embed(base());
  trim();
}

void SkewPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::z(const Derivation& twist) {
  return SkewPoly(twist, {Poly(twist.ring()), Poly::constant(twist.ring(), 1)});
}

Ring commutative_ring(const Ring& base) {
  if (base == ring_a()) return ring_b();
  if (base == ring_d()) return ring_t();
  return base.extended({"z"});
}

SkewPoly SkewPoly::from_commutative(const Derivation& twist, const Poly& p) {
  Ring full = commutative_ring(twist.ring());
  Poly q = p.embed(full);
  std::vector<Poly> coeffs;
  for (const auto& c : q.coefficients_in(full.require("z"))) coeffs.push_back(c.embed(twist.ring()));
  return SkewPoly(twist, std::move(coeffs));
}

Poly SkewPoly::to_commutative() const {
  Ring full = commutative_ring(base());
  std::vector<Poly> coeffs;
  for (const auto& c : coeffs_) coeffs.push_back(c.embed(full));
  return Poly::from_coefficients(full, full.require("z"), coeffs);
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
  if (!(a.twist_ == b.twist_)) throw RingMismatch("skew polynomials over different extensions");
  std::vector<Poly> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Poly(a.base()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return SkewPoly(a.twist_, std::move(c));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

SkewPoly skew_multiply(const SkewPoly& u, const SkewPoly& v) {
  if (!(u.twist() == v.twist())) throw RingMismatch("skew polynomials over different extensions");
  const Derivation& twist = u.twist();
  if (u.is_zero() || v.is_zero()) return SkewPoly(twist, {});
  std::vector<Poly> out(u.coeffs().size() + v.coeffs().size() - 1, Poly(u.base()));
  for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
    if (v.coeffs()[j].is_zero()) continue;
    // cur = z^i b_j as left coefficients, for i = 0, 1, ...
    std::vector<Poly> cur{v.coeffs()[j]};
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
      if (i > 0) {
        std::vector<Poly> next(cur.size() + 1, Poly(u.base()));
        for (std::size_t k = 0; k < cur.size(); ++k) {
          next[k + 1] += cur[k];
          next[k] += twist.apply(cur[k]);
        }
        cur = std::move(next);
      }
      const Poly& a = u.coeffs()[i];
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < cur.size(); ++k)
        if (!cur[k].is_zero()) out[k + j] += a * cur[k];
    }
  }
  return SkewPoly(twist, std::move(out));
}

SkewPoly commutator(const SkewPoly& u, const SkewPoly& v) { return skew_multiply(u, v) - skew_multiply(v, u); }

bool extended_ideal_stable(const IdealPres& q0, const Derivation& twist) {
  IdealPres q = q0.with_basis();
  if (!is_delta_ideal(twist, q)) return false;
  SkewPoly z = SkewPoly::z(twist);
  for (const auto& g : q.generators()) {
    SkewPoly c = commutator(z, SkewPoly::constant(twist, g));
    for (const auto& coef : c.coeffs())
      if (!contains(q, coef)) throw InternalAssertion("commutator with z left the extended ideal");
  }
  return true;
}

Derivation t_twist(const Derivation& delta) {
  Derivation on_d = extend_zero(delta, "h");
  return scale(on_d, Poly::variable(on_d.ring(), "h"));
}

namespace {

Poly coefficient_at_h0(const Poly& c) {
  std::size_t h = c.ring().require("h");
  return c.evaluate(h, GaussRat(0)).embed(ring_a());
}

}  // namespace

Poly reduce_mod_h(const SkewPoly& u) {
  std::vector<Poly> coeffs;
  for (const auto& c : u.coeffs()) coeffs.push_back(coefficient_at_h0(c).embed(ring_b()));
  return Poly::from_coefficients(ring_b(), 2, coeffs);
}

Poly semiclassical_bracket(const SkewPoly& u, const SkewPoly& v) {
  SkewPoly c = commutator(u, v);
  Poly h = Poly::variable(c.base(), "h");
  std::vector<Poly> coeffs;
  for (const auto& k : c.coeffs()) {
    auto q = exact_divide(k, h);
    if (!q) throw InternalAssertion("commutator coefficient not divisible by h: " + k.to_string());
    coeffs.push_back(coefficient_at_h0(*q).embed(ring_b()));
  }
  return Poly::from_coefficients(ring_b(), 2, coeffs);
}

}  // namespace poisson_ore

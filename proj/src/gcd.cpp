#include "poisson_ore/gcd.hpp"

#include <algorithm>

namespace poisson_ore {

namespace {

// Polynomial in a distinguished variable with coefficients free of it.
using UPoly = std::vector<Poly>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

Poly divide_or_throw(const Poly& p, const Poly& d) {
  auto q = exact_divide(p, d);
  if (!q) throw InternalAssertion("subresultant PRS: inexact division");
  return *q;
}

// lc(b)^(deg a - deg b + 1) * a  mod b
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const Poly& lb = b.back();
  int db = deg(b);
  int steps = deg(a) - db + 1;
  while (deg(a) >= db && !a.empty()) {
    Poly la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[std::size_t(k + shift)] -= la * b[std::size_t(k)];
    trim(a);
    --steps;
  }
  if (steps > 0 && !a.empty()) {
    Poly f = lb.pow(unsigned(steps));
    for (auto& c : a) c = c * f;
  }
  return a;
}

// gcd of primitive polynomials in the distinguished variable; result is
// returned up to a unit of the coefficient domain.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  Ring ring = a.front().ring();
  Poly g = Poly::constant(ring, 1);
  Poly h = Poly::constant(ring, 1);
  while (true) {
    int delta = deg(a) - deg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (deg(r) == 0) return UPoly{Poly::constant(ring, 1)};
    a = std::move(b);
    Poly divisor = g * h.pow(unsigned(delta));
    for (auto& c : r) c = divide_or_throw(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 0) continue;
    h = divide_or_throw(g.pow(unsigned(delta)), h.pow(unsigned(delta - 1)));
  }
}

std::optional<std::size_t> pick_variable(const Poly& p, const Poly& q) {
  for (std::size_t v = 0; v < p.ring().size(); ++v)
    if (p.uses(v) || q.uses(v)) return v;
  return std::nullopt;
}

Poly gcd_nonzero(const Poly& p, const Poly& q);

Poly content_nonzero(const Poly& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  Poly c;
  bool have = false;
  for (const auto& k : coeffs) {
    if (k.is_zero()) continue;
    c = have ? gcd_nonzero(c, k) : k.monic();
    have = true;
    if (c.is_constant()) break;
  }
  return c;
}

Poly gcd_nonzero(const Poly& p, const Poly& q) {
  auto var = pick_variable(p, q);
  if (!var) return Poly::constant(p.ring(), 1);
  std::size_t v = *var;
  if (!q.uses(v)) return gcd_nonzero(content_nonzero(p, v), q);
  if (!p.uses(v)) return gcd_nonzero(p, content_nonzero(q, v));

  Poly cp = content_nonzero(p, v);
  Poly cq = content_nonzero(q, v);
  Poly pp = divide_or_throw(p, cp);
  Poly pq = divide_or_throw(q, cq);
  Poly c = gcd_nonzero(cp, cq);

  UPoly g = subresultant_gcd(pp.coefficients_in(v), pq.coefficients_in(v));
  Poly gp = Poly::from_coefficients(p.ring(), v, g);
  if (gp.uses(v)) gp = divide_or_throw(gp, content_nonzero(gp, v));
  else gp = Poly::constant(p.ring(), 1);
  return (c * gp).monic();
}

}  // namespace

Poly content_in(const Poly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return content_nonzero(p, var);
}

Poly gcd(const Poly& p, const Poly& q) {
  if (!(p.ring() == q.ring())) throw RingMismatch("gcd of polynomials from different rings");
  if (p.is_zero() && q.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  return gcd_nonzero(p, q);
}

}  // namespace poisson_ore

#include "oracles.hpp"

#include <algorithm>
#include <map>

#include "poisson_ore/linalg.hpp"
#include "poisson_ore/solve.hpp"

namespace poisson_ore::testing {

namespace {

std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

// Coefficients of p with respect to the variables after those of `head`.
std::vector<Poly> split(const Poly& p, const Ring& head) {
  std::size_t nhead = head.size();
  std::map<std::vector<std::uint16_t>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> key(t.mono.exponents().begin() + nhead, t.mono.exponents().end());
    Monomial m(head.size());
    for (std::size_t v = 0; v < nhead; ++v) m.set(v, t.mono[v]);
    groups[key].push_back({m, t.coef});
  }
  std::vector<Poly> out;
  for (auto& [key, terms] : groups) out.push_back(Poly::from_terms(head, std::move(terms)));
  return out;
}

}  // namespace

OracleResult darboux_oracle(const Derivation& d, int dmax) {
  const Ring& base = d.ring();
  int m = d.max_image_degree();
  auto h_support = monomials_up_to(base, std::max(m - 1, 0));
  OracleResult out;
  for (int deg = 1; deg <= dmax; ++deg) {
    auto all = monomials_up_to(base, deg);
    for (std::size_t li = 0; li < all.size(); ++li) {
      if (static_cast<int>(all[li].degree()) != deg) continue;
      std::vector<Monomial> lower(all.begin() + li + 1, all.end());
      std::vector<std::string> unk = names("c", lower.size());
      auto hs = names("g", h_support.size());
      unk.insert(unk.end(), hs.begin(), hs.end());
      Ring head(unk);
      std::vector<std::string> wide_vars = unk;
      wide_vars.insert(wide_vars.end(), base.vars().begin(), base.vars().end());
      Ring wide(wide_vars);

      auto lift = [&](const Monomial& mono) {
        Monomial w(wide.size());
        for (std::size_t v = 0; v < base.size(); ++v) w.set(unk.size() + v, mono[v]);
        return w;
      };
      auto unknown = [&](std::size_t k, const Monomial& mono) {
        Monomial w = lift(mono);
        w.set(k, 1);
        return Poly::term(wide, w, GaussRat(1));
      };
      Poly q = Poly::term(wide, lift(all[li]), GaussRat(1));
      for (std::size_t k = 0; k < lower.size(); ++k) q += unknown(k, lower[k]);
      Poly h = Poly::constant(wide, 0);
      for (std::size_t k = 0; k < h_support.size(); ++k) h += unknown(lower.size() + k, h_support[k]);

      std::vector<Poly> images(wide.size(), Poly::constant(wide, 0));
      for (std::size_t v = 0; v < base.size(); ++v) images[unk.size() + v] = d.image(v).embed(wide);
      Derivation dw(wide, images);
      auto eqs = split(dw.apply(q) - h * q, head);

      PointSet pts = solve_polynomial_system(head, eqs);
      if (!pts.resolved) {
        out.skipped.push_back(monomial_to_string(base, all[li]));
        continue;
      }
      out.irrational = out.irrational || pts.has_other_roots;
      for (const auto& pt : pts.points) {
        Poly qv = Poly::term(base, all[li], GaussRat(1));
        for (std::size_t k = 0; k < lower.size(); ++k) qv += Poly::term(base, lower[k], pt[k]);
        Poly hv = Poly::constant(base, 0);
        for (std::size_t k = 0; k < h_support.size(); ++k) hv += Poly::term(base, h_support[k], pt[lower.size() + k]);
        out.pairs.emplace_back(qv, hv);
      }
    }
  }
  return out;
}

bool bounded_membership(const std::vector<Poly>& gens, const Poly& p, int max_degree) {
  const Ring& ring = p.ring();
  std::vector<Poly> columns;
  for (const auto& g : gens)
    for (const auto& m : monomials_up_to(ring, max_degree)) columns.push_back(Poly::term(ring, m, GaussRat(1)) * g);
  std::map<std::vector<std::uint16_t>, std::size_t> rows;
  auto row = [&](const Monomial& m) {
    std::vector<std::uint16_t> key(m.exponents().begin(), m.exponents().end());
    return rows.emplace(key, rows.size()).first->second;
  };
  for (const auto& c : columns)
    for (const auto& t : c.terms()) row(t.mono);
  for (const auto& t : p.terms()) row(t.mono);
  Matrix a(rows.size(), Vector(columns.size(), GaussRat(0)));
  Vector b(rows.size(), GaussRat(0));
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& t : columns[k].terms()) a[row(t.mono)][k] = t.coef;
  for (const auto& t : p.terms()) b[row(t.mono)] = t.coef;
  return solve_linear(std::move(a), std::move(b), columns.size()).has_value();
}

// For monomials u, v: {u, v} = sum over variable pairs (s, t) of d_s u * d_t v * {s, t}.
Poly axiom_bracket(const PoissonTriple& F, const Poly& p, const Poly& q) {
  Poly gen[3][3];
  Poly zero(ring_b());
  gen[0][0] = gen[1][1] = gen[2][2] = zero;
  gen[1][2] = F.f;
  gen[2][1] = -F.f;
  gen[2][0] = F.g;
  gen[0][2] = -F.g;
  gen[0][1] = F.h;
  gen[1][0] = -F.h;
  Poly out(ring_b());
  for (const auto& s : p.terms())
    for (const auto& t : q.terms()) {
      Poly u = Poly::term(ring_b(), s.mono, s.coef), v = Poly::term(ring_b(), t.mono, t.coef);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          if (!gen[a][b].is_zero()) out += u.derivative(a) * v.derivative(b) * gen[a][b];
    }
  return out;
}

}  // namespace poisson_ore::testing

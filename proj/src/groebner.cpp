#include "poisson_ore/groebner.hpp"

#include <algorithm>
#include <set>

namespace poisson_ore {

namespace {

// Terms sorted descending under a fixed order.
using Terms = std::vector<Term>;

Terms sorted_terms(const Poly& p, const MonomialOrder& order) {
  Terms t = p.terms();
  if (order.kind() != MonomialOrder::Kind::grevlex)
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

void make_monic(Terms& t) {
  if (t.empty() || t.front().coef.is_one()) return;
  GaussRat inv = t.front().coef.inverse();
  for (auto& x : t) x.coef *= inv;
}

// f - c * m * g, where g is sorted and multiplication by m keeps it sorted.
Terms sub_scaled(const Terms& f, const GaussRat& c, const Monomial& m, const Terms& g,
                 const MonomialOrder& order, std::size_t skip_f = 0, std::size_t skip_g = 0) {
  Terms out;
  out.reserve(f.size() + g.size());
  std::size_t i = skip_f, j = skip_g;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : order.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -(c * g[j].coef)});
      ++j;
    } else {
      GaussRat s = f[i].coef - c * g[j].coef;
      if (!s.is_zero()) out.push_back({std::move(gm), std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

const Terms* find_reducer(const Monomial& m, const std::vector<Terms>& basis) {
  for (const auto& g : basis)
    if (g.front().mono.divides(m)) return &g;
  return nullptr;
}

// Full reduction of f by monic sorted basis elements.
Terms reduce_terms(Terms f, const std::vector<Terms>& basis, const MonomialOrder& order) {
  Terms rest;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Terms* g = find_reducer(f[pos].mono, basis);
    if (!g) {
      rest.push_back(std::move(f[pos++]));
      continue;
    }
    Monomial m = f[pos].mono / g->front().mono;
    GaussRat c = f[pos].coef;
    // leading terms cancel exactly since g is monic
    f = sub_scaled(f, c, m, *g, order, pos + 1, 1);
    pos = 0;
  }
  return rest;
}

Terms s_polynomial(const Terms& a, const Terms& b, const MonomialOrder& order) {
  Monomial l = lcm(a.front().mono, b.front().mono);
  Monomial ma = l / a.front().mono;
  Monomial mb = l / b.front().mono;
  Terms sa;
  sa.reserve(a.size());
  for (std::size_t k = 1; k < a.size(); ++k) sa.push_back({a[k].mono * ma, a[k].coef});
  return sub_scaled(sa, GaussRat(1), mb, b, order, 0, 1);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

std::vector<Terms> buchberger(std::vector<Terms> gens, const MonomialOrder& order) {
  std::vector<Terms> basis;
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](Terms t) {
    make_monic(t);
    std::size_t n = basis.size();
    basis.push_back(std::move(t));
    for (std::size_t k = 0; k < n; ++k) {
      queue.push_back({k, n, lcm(basis[k].front().mono, basis[n].front().mono)});
      pending.insert({k, n});
    }
  };

  for (auto& g : gens) {
    if (g.empty()) continue;
    if (g.front().mono.is_one()) return {Terms{{g.front().mono, GaussRat(1)}}};
    add(std::move(g));
  }

  while (!queue.empty()) {
    // normal selection strategy: smallest lcm first
    auto it = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *it;
    queue.erase(it);
    pending.erase({p.i, p.j});

    const Monomial& mi = basis[p.i].front().mono;
    const Monomial& mj = basis[p.j].front().mono;
    if (coprime(mi, mj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].front().mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    Terms r = reduce_terms(s_polynomial(basis[p.i], basis[p.j], order), basis, order);
    if (r.empty()) continue;
    if (r.front().mono.is_one()) return {Terms{{r.front().mono, GaussRat(1)}}};
    add(std::move(r));
  }

  // minimal basis
  std::vector<Terms> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& ma = basis[a].front().mono;
      const Monomial& mb = basis[b].front().mono;
      if (mb.divides(ma) && (!(ma == mb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // autoreduce tails
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Terms> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    Terms head{minimal[a].front()};
    Terms tail(minimal[a].begin() + 1, minimal[a].end());
    Terms reduced = reduce_terms(std::move(tail), others, order);
    head.insert(head.end(), reduced.begin(), reduced.end());
    minimal[a] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return order.compare(a.front().mono, b.front().mono) > 0; });
  return minimal;
}

bool zero_dimensional(const std::vector<Terms>& gb, std::size_t nvars) {
  std::vector<bool> pure(nvars, false);
  for (const auto& g : gb) {
    const Monomial& m = g.front().mono;
    std::size_t used = 0, var = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (m[v]) {
        ++used;
        var = v;
      }
    if (used == 1) pure[var] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

// FGLM: the reduced basis under `target` of the zero-dimensional ideal with
// reduced basis `gb` under `from`, by linear algebra on normal forms.
std::vector<Terms> fglm(const std::vector<Terms>& gb, const MonomialOrder& from, const MonomialOrder& target,
                        std::size_t nvars) {
  struct Row {
    std::vector<GaussRat> v, comb;
    std::size_t pivot;
  };
  std::vector<std::pair<Monomial, std::size_t>> columns;  // standard monomials under `from`
  auto column = [&](const Monomial& m) {
    for (const auto& [c, k] : columns)
      if (c == m) return k;
    columns.emplace_back(m, columns.size());
    return columns.size() - 1;
  };
  auto at = [](std::vector<GaussRat>& v, std::size_t k) -> GaussRat& {
    if (v.size() <= k) v.resize(k + 1, GaussRat(0));
    return v[k];
  };

  std::vector<Monomial> staircase;
  std::vector<Row> rows;
  std::vector<Terms> out;
  std::vector<Monomial> candidates{Monomial(Monomial::Exponents(nvars, 0))};
  while (!candidates.empty()) {
    auto it = std::min_element(candidates.begin(), candidates.end(),
                               [&](const Monomial& a, const Monomial& b) { return target.compare(a, b) < 0; });
    Monomial m = *it;
    candidates.erase(std::remove(candidates.begin(), candidates.end(), m), candidates.end());
    bool skip = false;
    for (const auto& g : out) skip = skip || g.front().mono.divides(m);
    if (skip) continue;

    std::vector<GaussRat> v, comb;
    for (const auto& t : reduce_terms(Terms{{m, GaussRat(1)}}, gb, from)) at(v, column(t.mono)) = t.coef;
    at(comb, staircase.size()) = GaussRat(1);
    for (const auto& r : rows) {
      if (r.pivot >= v.size() || v[r.pivot].is_zero()) continue;
      GaussRat c = v[r.pivot] / r.v[r.pivot];
      for (std::size_t k = 0; k < r.v.size(); ++k) at(v, k) -= c * r.v[k];
      for (std::size_t k = 0; k < r.comb.size(); ++k) at(comb, k) -= c * r.comb[k];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const GaussRat& c) { return !c.is_zero(); });
    if (nz == v.end()) {
      // m + sum comb_k staircase_k lies in the ideal
      Terms rel{{m, GaussRat(1)}};
      for (std::size_t k = 0; k < staircase.size() && k < comb.size(); ++k)
        if (!comb[k].is_zero()) rel.push_back({staircase[k], comb[k]});
      std::sort(rel.begin(), rel.end(), [&](const Term& a, const Term& b) { return target.compare(a.mono, b.mono) > 0; });
      out.push_back(std::move(rel));
      continue;
    }
    auto pivot = static_cast<std::size_t>(nz - v.begin());
    rows.push_back({std::move(v), std::move(comb), pivot});
    staircase.push_back(m);
    for (std::size_t j = 0; j < nvars; ++j) {
      Monomial e(Monomial::Exponents(nvars, 0));
      e.set(j, 1);
      candidates.push_back(m * e);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Terms& a, const Terms& b) { return target.compare(a.front().mono, b.front().mono) > 0; });
  return out;
}

}  // namespace

IdealPres::IdealPres(Ring ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch("ideal generator from a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

GroebnerBasis IdealPres::basis(const MonomialOrder& order) const {
  if (basis_ && basis_->order == order) return *basis_;
  return compute_basis(ring_, generators_, order);
}

IdealPres IdealPres::with_basis(const MonomialOrder& order) const {
  IdealPres out = *this;
  out.basis_ = basis(order);
  return out;
}

GroebnerBasis compute_basis(const Ring& ring, const std::vector<Poly>& generators, const MonomialOrder& order) {
  for (const auto& g : generators)
    if (!(g.ring() == ring)) throw RingMismatch("ideal generator from a different ring");
  auto sorted_gens = [&](const MonomialOrder& o) {
    std::vector<Terms> gens;
    for (const auto& g : generators)
      if (!g.is_zero()) gens.push_back(sorted_terms(g, o));
    return gens;
  };
  GroebnerBasis out;
  out.order = order;
  std::vector<Terms> basis;
  if (order.kind() == MonomialOrder::Kind::grevlex) {
    basis = buchberger(sorted_gens(order), order);
  } else {
    // elimination orders swell coefficients quickly; go through grevlex when
    // the ideal is zero-dimensional
    MonomialOrder grevlex = MonomialOrder::grevlex();
    std::vector<Terms> g = buchberger(sorted_gens(grevlex), grevlex);
    if (g.size() == 1 && g[0].front().mono.is_one())
      basis = std::move(g);
    else if (zero_dimensional(g, ring.size()))
      basis = fglm(g, grevlex, order, ring.size());
    else
      basis = buchberger(sorted_gens(order), order);
  }
  for (auto& t : basis) out.polys.push_back(Poly::from_terms(ring, std::move(t)));
  return out;
}

IdealPres groebner_basis(const IdealPres& ideal, const MonomialOrder& order) {
  GroebnerBasis gb = ideal.basis(order);
  IdealPres out(ideal.ring(), gb.polys);
  out.basis_ = std::move(gb);
  return out;
}

Poly reduce(const Poly& p, const GroebnerBasis& basis) {
  if (p.is_zero() || basis.polys.empty()) return p;
  std::vector<Terms> b;
  b.reserve(basis.polys.size());
  for (const auto& g : basis.polys) b.push_back(sorted_terms(g, basis.order));
  return Poly::from_terms(p.ring(), reduce_terms(sorted_terms(p, basis.order), b, basis.order));
}

Poly normal_form(const Poly& p, const IdealPres& ideal) {
  if (!(p.ring() == ideal.ring())) throw RingMismatch("normal form across different rings");
  return reduce(p, ideal.basis(ideal.cached_basis() ? ideal.cached_basis()->order : MonomialOrder::grevlex()));
}

bool contains(const IdealPres& ideal, const Poly& p) { return normal_form(p, ideal).is_zero(); }

bool contains(const IdealPres& big, const IdealPres& small) {
  GroebnerBasis gb = big.basis(big.cached_basis() ? big.cached_basis()->order : MonomialOrder::grevlex());
  for (const auto& g : small.generators())
    if (!reduce(g, gb).is_zero()) return false;
  return true;
}

bool same_ideal(const IdealPres& a, const IdealPres& b) {
  if (!(a.ring() == b.ring())) return false;
  auto ga = a.basis();
  auto gb = b.basis();
  if (ga.polys.size() != gb.polys.size()) return false;
  for (std::size_t k = 0; k < ga.polys.size(); ++k)
    if (!(ga.polys[k] == gb.polys[k])) return false;
  return true;
}

}  // namespace poisson_ore

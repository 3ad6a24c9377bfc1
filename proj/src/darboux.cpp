#include <algorithm>
#include <map>

#include "poisson_ore/linalg.hpp"
#include "poisson_ore/parallel.hpp"
#include "poisson_ore/solve.hpp"
#include "poisson_ore/spectra.hpp"

namespace poisson_ore {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

Ring concat(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return Ring(all);
}

// Monomial of a ring with `offset` leading unknowns, carrying m in the tail.
Monomial shifted(const Monomial& m, std::size_t offset, std::size_t size) {
  Monomial out(size);
  for (std::size_t i = 0; i < m.size(); ++i) out.set(offset + i, m[i]);
  return out;
}

Monomial unknown_times(std::size_t unknown, const Monomial& m, std::size_t offset, std::size_t size) {
  Monomial out = shifted(m, offset, size);
  out.set(unknown, 1);
  return out;
}

Poly lift(const Poly& p, std::size_t offset, const Ring& wide) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({shifted(t.mono, offset, wide.size()), t.coef});
  return Poly::from_terms(wide, std::move(terms));
}

struct Grouped {
  std::vector<Monomial> monomials;  // base monomials, descending grevlex
  std::vector<Poly> equations;      // coefficient of each, over the unknowns
};

// Splits p in unknowns ++ base into its coefficients over the base monomials.
Grouped group_by_base(const Poly& p, const Ring& unknowns, std::size_t base_size) {
  std::size_t nu = unknowns.size();
  std::map<std::vector<std::uint16_t>, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    std::vector<std::uint16_t> key(base_size);
    Monomial u(nu);
    for (std::size_t i = 0; i < nu; ++i) u.set(i, t.mono[i]);
    for (std::size_t i = 0; i < base_size; ++i) key[i] = t.mono[nu + i];
    buckets[key].push_back({u, t.coef});
  }
  std::vector<std::pair<Monomial, Poly>> rows;
  for (auto& [key, terms] : buckets) {
    Monomial m(base_size);
    for (std::size_t i = 0; i < base_size; ++i) m.set(i, key[i]);
    rows.emplace_back(m, Poly::from_terms(unknowns, std::move(terms)));
  }
  auto order = MonomialOrder::grevlex();
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  Grouped g;
  for (auto& [m, eq] : rows) {
    if (eq.is_zero()) continue;
    g.monomials.push_back(m);
    g.equations.push_back(std::move(eq));
  }
  return g;
}

std::vector<Monomial> monomials_below(const Ring& ring, const Monomial& lead, int max_degree) {
  std::vector<Monomial> out;
  auto order = MonomialOrder::grevlex();
  for (auto& m : monomials_up_to(ring, max_degree))
    if (order.greater(lead, m)) out.push_back(std::move(m));
  return out;
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int degree) {
  std::vector<Monomial> out;
  for (auto& m : monomials_up_to(ring, degree))
    if (static_cast<int>(m.degree()) == degree) out.push_back(std::move(m));
  return out;
}

Poly combine(const Ring& ring, const std::vector<Monomial>& support, const std::vector<GaussRat>& values) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < support.size(); ++k)
    if (!values[k].is_zero()) terms.push_back({support[k], values[k]});
  return Poly::from_terms(ring, std::move(terms));
}

// Elimination ideal of the last `keep` unknowns, viewed in a ring of just
// those unknowns.
std::pair<Ring, std::vector<Poly>> eliminate_leading(const Ring& unknowns, const std::vector<Poly>& equations,
                                                     std::size_t drop, bool& unit) {
  std::size_t keep = unknowns.size() - drop;
  GroebnerBasis gb = compute_basis(unknowns, equations, MonomialOrder::block({drop, keep}));
  unit = gb.is_unit();
  std::vector<std::string> kept(unknowns.vars().begin() + static_cast<long>(drop), unknowns.vars().end());
  Ring small(kept);
  std::vector<Poly> elim;
  for (const auto& g : gb.polys) {
    bool free = true;
    for (std::size_t v = 0; v < drop && free; ++v) free = !g.uses(v);
    if (free) elim.push_back(g.embed(small));
  }
  return {small, elim};
}

// Coefficients lambda with sum lambda_k columns_k = target.
std::optional<LinearSolution> solve_columns(const std::vector<Poly>& columns, const Poly& target) {
  std::map<std::vector<std::uint16_t>, std::size_t> row_of;
  auto row = [&](const Monomial& m) {
    std::vector<std::uint16_t> key(m.exponents().begin(), m.exponents().end());
    return row_of.emplace(key, row_of.size()).first->second;
  };
  std::vector<std::vector<std::pair<std::size_t, GaussRat>>> cols(columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& t : columns[k].terms()) cols[k].emplace_back(row(t.mono), t.coef);
  std::vector<std::pair<std::size_t, GaussRat>> rhs;
  for (const auto& t : target.terms()) rhs.emplace_back(row(t.mono), t.coef);
  Matrix a(row_of.size(), Vector(columns.size(), GaussRat(0)));
  Vector b(row_of.size(), GaussRat(0));
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (auto& [r, c] : cols[k]) a[r][k] = c;
  for (auto& [r, c] : rhs) b[r] = c;
  return solve_linear(std::move(a), std::move(b), columns.size());
}

struct Stratum {
  int degree;
  Monomial lead;
};

struct StratumResult {
  std::vector<DarbouxCertificate> certificates;
  bool unresolved = false;
  bool irrational = false;
};

StratumResult solve_stratum(const Derivation& d, const Stratum& s, const std::vector<Monomial>& h_support, int dmax) {
  const Ring& base = d.ring();
  StratumResult out;
  auto lower = monomials_below(base, s.lead, s.degree);
  BilinearSystem sys = invariance_equations(d, lower, h_support, Poly::term(base, s.lead, GaussRat(1)));

  bool unit = false;
  auto [hring, elim] = eliminate_leading(sys.unknowns, sys.equations, sys.num_q, unit);
  if (unit) return out;
  PointSet cofactors = solve_polynomial_system(hring, elim);
  out.unresolved = !cofactors.resolved;
  out.irrational = cofactors.has_other_roots;

  for (const auto& pt : cofactors.points) {
    std::vector<Poly> linear;
    for (const auto& eq : sys.equations) {
      Poly e = eq;
      for (std::size_t j = 0; j < sys.num_h; ++j) e = e.evaluate(sys.num_q + j, pt[j]);
      if (!e.is_zero()) linear.push_back(std::move(e));
    }
    auto [a, b] = linear_equations(linear, sys.num_q);
    auto sol = solve_linear(std::move(a), std::move(b), sys.num_q);
    if (!sol) continue;
    DarbouxCertificate cert;
    cert.q = sys.q_of(sol->particular);
    cert.cofactor = sys.h_of(pt);
    cert.degree_bound_searched = dmax;
    for (const auto& n : sol->nullspace) cert.directions.push_back(combine(base, lower, n));
    auto check = verify_cofactor(d, cert.q);
    if (!check || !(*check == cert.cofactor)) throw InternalAssertion("Darboux certificate failed to verify");
    for (const auto& dir : cert.directions)
      if (!(d.apply(dir) == cert.cofactor * dir)) throw InternalAssertion("Darboux family direction failed to verify");
    out.certificates.push_back(std::move(cert));
  }
  std::sort(out.certificates.begin(), out.certificates.end(),
            [](const DarbouxCertificate& x, const DarbouxCertificate& y) { return x.q.to_string() < y.q.to_string(); });
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Poly BilinearSystem::q_of(const std::vector<GaussRat>& q_values) const {
  return q_fixed + combine(base, q_support, q_values);
}

Poly BilinearSystem::h_of(const std::vector<GaussRat>& h_values) const { return combine(base, h_support, h_values); }

BilinearSystem invariance_equations(const Derivation& d, const std::vector<Monomial>& q_support,
                                    const std::vector<Monomial>& h_support, const Poly& q_fixed) {
  BilinearSystem sys;
  sys.base = d.ring();
  sys.num_q = q_support.size();
  sys.num_h = h_support.size();
  sys.q_support = q_support;
  sys.h_support = h_support;
  sys.q_fixed = q_fixed.ring().size() == 0 && q_fixed.is_zero() ? Poly(sys.base) : q_fixed.embed(sys.base);

  auto qnames = numbered("q", sys.num_q);
  auto hnames = numbered("h", sys.num_h);
  sys.unknowns = concat(qnames, hnames);
  std::size_t nu = sys.unknowns.size();
  Ring wide = concat(sys.unknowns.vars(), sys.base.vars());

  Poly q = lift(sys.q_fixed, nu, wide);
  for (std::size_t k = 0; k < sys.num_q; ++k)
    q += Poly::term(wide, unknown_times(k, q_support[k], nu, wide.size()), GaussRat(1));
  Poly h(wide);
  for (std::size_t j = 0; j < sys.num_h; ++j)
    h += Poly::term(wide, unknown_times(sys.num_q + j, h_support[j], nu, wide.size()), GaussRat(1));

  std::vector<Poly> images(wide.size(), Poly(wide));
  for (std::size_t v = 0; v < sys.base.size(); ++v) images[nu + v] = lift(d.image(v), nu, wide);
  Derivation dw(wide, std::move(images));

  Grouped g = group_by_base(dw.apply(q) - h * q, sys.unknowns, sys.base.size());
  sys.equation_monomials = std::move(g.monomials);
  sys.equations = std::move(g.equations);
  return sys;
}

std::optional<Poly> verify_cofactor(const Derivation& d, const Poly& q) {
  if (q.is_zero()) throw PreconditionError("cofactor of the zero polynomial");
  return exact_divide(d.apply(q.embed(d.ring())), q.embed(d.ring()));
}

DarbouxSearch darboux_search(const Derivation& d, int dmax, unsigned threads) {
  if (dmax < 1) throw PreconditionError("darboux search needs dmax >= 1");
  const Ring& base = d.ring();
  int hdeg = std::max(d.max_image_degree() - 1, 0);
  auto h_support = monomials_up_to(base, hdeg);

  std::vector<Stratum> strata;
  for (int deg = 1; deg <= dmax; ++deg)
    for (auto& m : monomials_of_degree(base, deg)) strata.push_back({deg, m});

  std::vector<StratumResult> results(strata.size());
  parallel_for(strata.size(), threads, [&](std::size_t k) { results[k] = solve_stratum(d, strata[k], h_support, dmax); });

  DarbouxSearch out;
  for (std::size_t k = 0; k < strata.size(); ++k) {
    auto& r = results[k];
    if (r.unresolved) out.unresolved.push_back(monomial_to_string(base, strata[k].lead));
    out.irrational_omitted = out.irrational_omitted || r.irrational;
    for (auto& c : r.certificates) out.certificates.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

SingularLocus singular_locus(const Derivation& d) {
  SingularLocus out;
  std::vector<Poly> images;
  for (std::size_t v = 0; v < d.ring().size(); ++v) images.push_back(d.image(v));
  out.ideal = groebner_basis(IdealPres(d.ring(), images));
  if (out.ideal.is_zero_ideal()) {
    out.resolved = false;
    return out;
  }
  PointSet pts = solve_polynomial_system(d.ring(), out.ideal.generators());
  out.points = std::move(pts.points);
  out.resolved = pts.resolved;
  out.has_other_points = pts.has_other_roots;
  return out;
}

IdealPres delta_core_step(const Derivation& d, const IdealPres& ideal) {
  const Ring& ring = d.ring();
  std::vector<Poly> gens = ideal.basis().polys;
  std::size_t r = gens.size();
  if (r == 0) return ideal;

  Ring wide = concat(numbered("e", r + 1), ring.vars());
  std::size_t ne = r + 1;
  auto e = [&](std::size_t k) {
    Monomial m(wide.size());
    m.set(k, 1);
    return Poly::term(wide, m, GaussRat(1));
  };
  std::vector<Poly> module;
  for (std::size_t i = 0; i < r; ++i) {
    module.push_back(e(0) * lift(d.apply(gens[i]), ne, wide) + e(i + 1));
    module.push_back(e(0) * lift(gens[i], ne, wide));
  }
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t b = a; b < ne; ++b) module.push_back(e(a) * e(b));

  GroebnerBasis gb = compute_basis(wide, module, MonomialOrder::block({1, r, ring.size()}));
  std::vector<Poly> next;
  for (const auto& p : gb.polys) {
    if (p.uses(0)) continue;
    std::vector<std::vector<Term>> coeff(r);
    bool linear = true;
    for (const auto& t : p.terms()) {
      std::size_t which = 0, edeg = 0;
      for (std::size_t k = 1; k < ne; ++k)
        if (t.mono[k] > 0) {
          edeg += t.mono[k];
          which = k;
        }
      if (edeg != 1) {
        linear = false;
        break;
      }
      Monomial m(ring.size());
      for (std::size_t v = 0; v < ring.size(); ++v) m.set(v, t.mono[ne + v]);
      coeff[which - 1].push_back({m, t.coef});
    }
    if (!linear) continue;
    Poly combo(ring);
    for (std::size_t i = 0; i < r; ++i) combo += Poly::from_terms(ring, std::move(coeff[i])) * gens[i];
    if (!combo.is_zero()) next.push_back(std::move(combo));
  }
  return groebner_basis(IdealPres(ring, next));
}

DeltaCore delta_core(const Derivation& d, const IdealPres& m, int max_iter) {
  DeltaCore out;
  out.ideal = groebner_basis(m);
  for (int k = 0;; ++k) {
    if (is_delta_ideal(d, out.ideal)) {
      out.status = CoreStatus::exact;
      out.iterations = k;
      return out;
    }
    if (k == max_iter) break;
    out.ideal = delta_core_step(d, out.ideal);
  }
  out.status = CoreStatus::upper_bound;
  out.iterations = max_iter;
  return out;
}

std::optional<Poly> image_solvable(const Derivation& d, const Poly& target, int dmax) {
  if (dmax < 0) throw PreconditionError("image search needs dmax >= 0");
  auto monos = monomials_up_to(d.ring(), dmax);
  std::vector<Poly> columns;
  for (const auto& m : monos) columns.push_back(d.apply(Poly::term(d.ring(), m, GaussRat(1))));
  auto sol = solve_columns(columns, target.embed(d.ring()));
  if (!sol) return std::nullopt;
  return combine(d.ring(), monos, sol->particular);
}

// ---------------------------------------------------------------------------

std::string ShamsuddinVerdict::to_string() const {
  if (simple) return "simple";
  return "hypothesis-fails(r=" + r->to_string() + ")";
}

ShamsuddinVerdict shamsuddin_simple(const GaussRat& c, const Poly& a0, const Poly& b0) {
  if (c.is_zero()) throw PreconditionError("shamsuddin criterion needs d(x) = c with c nonzero");
  const Ring& ring = ring_a();
  Poly a = a0.embed(ring), b = b0.embed(ring);
  std::size_t y = 1;
  if (a.uses(y) || b.uses(y)) throw PreconditionError("a and b must be polynomials in x");
  int bound;
  if (!a.is_zero())
    bound = std::max(b.total_degree() - a.total_degree(), 0);
  else
    bound = b.is_zero() ? 0 : b.total_degree() + 1;
  std::vector<Monomial> monos;
  std::vector<Poly> columns;
  for (int k = 0; k <= bound; ++k) {
    Monomial m(ring.size());
    m.set(0, static_cast<std::uint16_t>(k));
    Poly xk = Poly::term(ring, m, GaussRat(1));
    monos.push_back(m);
    columns.push_back(c * xk.derivative(0) - a * xk);
  }
  auto sol = solve_columns(columns, b);
  ShamsuddinVerdict out;
  if (!sol) {
    out.simple = true;
    return out;
  }
  out.r = combine(ring, monos, sol->particular);
  return out;
}

ShamsuddinVerdict shamsuddin_simple(const Derivation& d) {
  if (!(d.ring() == ring_a())) throw PreconditionError("shamsuddin criterion applies to derivations of Q(i)[x,y]");
  const Poly& dx = d.image(0);
  if (!dx.is_constant() || dx.is_zero())
    throw PreconditionError("d(x) must be a nonzero constant; otherwise Q(i)[x] has a proper stable ideal");
  auto coeffs = d.image(1).coefficients_in(1);
  if (coeffs.size() > 2) throw PreconditionError("d(y) must be affine in y");
  Poly b = coeffs.empty() ? Poly(ring_a()) : coeffs[0];
  Poly a = coeffs.size() > 1 ? coeffs[1] : Poly(ring_a());
  return shamsuddin_simple(dx.constant_term(), a, b);
}

// ---------------------------------------------------------------------------

FactorSearch factor_search(const Poly& q, int dmax) {
  int deg = q.total_degree();
  if (deg < 2) throw PreconditionError("factor search needs deg q >= 2");
  if (dmax < 1 || dmax >= deg) throw PreconditionError("factor search needs 1 <= dmax < deg q");
  const Ring& base = q.ring();
  const Monomial& lead = q.leading_term().mono;
  const GaussRat& lc = q.leading_term().coef;

  FactorSearch out;
  for (int du = 1; du <= dmax; ++du) {
    for (const auto& lu : monomials_of_degree(base, du)) {
      if (!lu.divides(lead)) continue;
      Monomial lv = lead / lu;
      auto ulow = monomials_below(base, lu, du);
      auto vlow = monomials_below(base, lv, deg - du);

      Ring unknowns = concat(numbered("b", vlow.size()), numbered("a", ulow.size()));
      std::size_t nu = unknowns.size();
      Ring wide = concat(unknowns.vars(), base.vars());
      Poly u = Poly::term(wide, shifted(lu, nu, wide.size()), GaussRat(1));
      for (std::size_t k = 0; k < ulow.size(); ++k)
        u += Poly::term(wide, unknown_times(vlow.size() + k, ulow[k], nu, wide.size()), GaussRat(1));
      Poly v = Poly::term(wide, shifted(lv, nu, wide.size()), lc);
      for (std::size_t k = 0; k < vlow.size(); ++k)
        v += Poly::term(wide, unknown_times(k, vlow[k], nu, wide.size()), GaussRat(1));
      Grouped g = group_by_base(u * v - lift(q, nu, wide), unknowns, base.size());

      if (ulow.empty()) {
        auto quotient = exact_divide(q, Poly::term(base, lu, GaussRat(1)));
        if (quotient) {
          out.factor = Factorization{Poly::term(base, lu, GaussRat(1)), *quotient};
          return out;
        }
        continue;
      }
      bool unit = false;
      auto [aring, elim] = eliminate_leading(unknowns, g.equations, vlow.size(), unit);
      if (unit) continue;
      PointSet pts = solve_polynomial_system(aring, elim);
      if (!pts.resolved) out.exhaustive = false;
      for (const auto& pt : pts.points) {
        Poly cand = Poly::term(base, lu, GaussRat(1)) + combine(base, ulow, pt);
        if (auto quotient = exact_divide(q, cand)) {
          out.factor = Factorization{cand, *quotient};
          return out;
        }
      }
    }
  }
  return out;
}

std::vector<IrreducibleFactor> factor_completely(const Poly& p, int dmax) {
  std::vector<IrreducibleFactor> found;
  auto add = [&](const Poly& u, bool certified) {
    Poly m = u.monic();
    for (auto& f : found)
      if (f.u == m) {
        ++f.multiplicity;
        f.certified = f.certified && certified;
        return;
      }
    found.push_back({m, 1, certified});
  };
  std::vector<Poly> work{p};
  while (!work.empty()) {
    Poly f = std::move(work.back());
    work.pop_back();
    int deg = f.total_degree();
    if (deg <= 0) continue;
    if (deg == 1) {
      add(f, true);
      continue;
    }
    // a reducible f has a factor of degree <= deg / 2
    int bound = std::min(dmax, deg / 2);
    if (bound < 1) {
      add(f, false);
      continue;
    }
    FactorSearch fs = factor_search(f, bound);
    if (fs.factor) {
      work.push_back(fs.factor->v);
      work.push_back(fs.factor->u);
    } else {
      add(f, fs.exhaustive && 2 * bound >= deg);
    }
  }
  std::sort(found.begin(), found.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    int da = a.u.total_degree(), db = b.u.total_degree();
    if (da != db) return da < db;
    return a.u.to_string() < b.u.to_string();
  });
  return found;
}

}  // namespace poisson_ore

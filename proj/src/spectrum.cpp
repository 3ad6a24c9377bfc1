#include <algorithm>
#include <functional>

#include "poisson_ore/errors.hpp"
#include "poisson_ore/ore.hpp"
#include "poisson_ore/parallel.hpp"
#include "poisson_ore/spectra.hpp"

namespace poisson_ore {

namespace {

const char* const kAlpha = "alpha";
const char* const kUnverified = "stable, primality unverified";

std::string join(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out + "]";
}

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void require_base(const Derivation& delta) {
  if (delta.ring().vars() != ring_a().vars()) throw PreconditionError("spectra need a derivation of Q(i)[x,y]");
}

// (d(x), d(y)) as an ideal of A with its basis.
IdealPres image_ideal(const Derivation& delta) {
  return groebner_basis(IdealPres(ring_a(), {delta.image(0), delta.image(1)}));
}

IdealPres in_ring(const IdealPres& ideal, const Ring& ring) {
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ring));
  return IdealPres(ring, std::move(gens));
}

// A generator of `j` outside `q`, which shows d(A) is not contained in q.
std::optional<Certificate> outside_witness(const IdealPres& j, const IdealPres& q) {
  for (const auto& g : j.generators()) {
    Poly r = normal_form(g.embed(q.ring()), q);
    if (!r.is_zero()) return Certificate{"outside-commutator", {{"generator", g.to_string()}, {"remainder", r.to_string()}}};
  }
  return std::nullopt;
}

Certificate contains_j(const IdealPres& j) {
  return Certificate{"contains-commutator", {{"basis", join(strings(j.generators()))}}};
}

SpectrumEntry zero_entry(const IdealPres& j) {
  SpectrumEntry e;
  e.kind = EntryKind::type2;
  if (auto w = outside_witness(j, IdealPres::zero(ring_a()))) e.certificates.push_back(*w);
  return e;
}

SpectrumEntry all_primes_entry() {
  SpectrumEntry e;
  e.kind = EntryKind::type1;
  e.parameters = "any prime ideal of B";
  e.certificates.push_back(Certificate{"zero-bracket", {}});
  return e;
}

Certificate primality(const Poly& q, bool certified) {
  if (certified) return Certificate{"irreducible", {{"degree_bound", std::to_string(q.total_degree() / 2)}}};
  return Certificate{"primality", {{"status", kUnverified}}};
}

// Points of Spec B/JB: the maximal ideals of A at rational zeros of J, their
// z-fibers, and a catch-all entry when the zero set is not fully listed.
std::vector<SpectrumEntry> residually_null_entries(const Derivation& delta, std::string& notes) {
  SingularLocus locus = singular_locus(delta);
  const IdealPres& j = locus.ideal;
  std::vector<SpectrumEntry> out;
  if (j.is_unit()) return out;
  const Ring& b = ring_b();
  Ring fiber = b.extended({kAlpha});
  for (const auto& pt : locus.points) {
    Certificate point{"point", {{"x", pt[0].to_string()}, {"y", pt[1].to_string()}}};
    SpectrumEntry m;
    m.kind = EntryKind::type1;
    m.generators = {Poly::variable(b, "x") - Poly::constant(b, pt[0]), Poly::variable(b, "y") - Poly::constant(b, pt[1])};
    m.certificates = {contains_j(j), point};
    out.push_back(m);

    SpectrumEntry f;
    f.kind = EntryKind::type1;
    f.generators = {Poly::variable(fiber, "x") - Poly::constant(fiber, pt[0]),
                    Poly::variable(fiber, "y") - Poly::constant(fiber, pt[1]),
                    Poly::variable(fiber, "z") - Poly::variable(fiber, kAlpha)};
    f.parameter_names = {kAlpha};
    f.parameters = "alpha in Q(i)";
    f.certificates = {contains_j(j), point};
    out.push_back(f);
  }
  if (!locus.resolved || locus.has_other_points) {
    SpectrumEntry rest;
    rest.kind = EntryKind::type1;
    rest.generators = in_ring(j, b).generators();
    rest.parameters = "any prime ideal of B containing the generators";
    rest.certificates = {contains_j(j)};
    out.push_back(rest);
    notes += locus.resolved ? "; singular points outside Q(i) not listed" : "; singular locus not finite";
  }
  return out;
}

std::string completeness(int dmax, const std::string& notes) { return "bounded-degree(" + std::to_string(dmax) + ")" + notes; }

Derivation zero_extended(const Derivation& delta, const std::vector<std::string>& names) {
  Derivation d = delta;
  for (const auto& n : names) d = extend_zero(d, n);
  return d;
}

Ring parameter_ring(const SpectrumEntry& e, const Ring& base) {
  return e.is_family() ? base.extended(e.parameter_names) : base;
}

IdealPres generator_ideal(const SpectrumEntry& e, const Ring& ring) {
  std::vector<Poly> gens;
  for (const auto& g : e.generators) gens.push_back(g.embed(ring));
  return IdealPres(ring, std::move(gens));
}

}  // namespace

std::string to_string(Side s) { return s == Side::poisson ? "poisson" : "ore"; }

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::type1:
      return "type1";
    case EntryKind::type2:
      return "type2";
    case EntryKind::unclassified:
      break;
  }
  return "unclassified";
}

const std::vector<GaussRat>& family_samples() {
  static const std::vector<GaussRat> samples{GaussRat(0), GaussRat(1), GaussRat(-2)};
  return samples;
}

std::vector<std::string> SpectrumEntry::generator_strings() const { return strings(generators); }

std::vector<Poly> SpectrumEntry::instantiate(const std::vector<GaussRat>& values) const {
  if (values.size() != parameter_names.size()) throw PreconditionError("wrong number of parameter values");
  std::vector<Poly> out;
  for (auto g : generators) {
    for (std::size_t k = 0; k < values.size(); ++k) g = g.evaluate(g.ring().require(parameter_names[k]), values[k]);
    out.push_back(g.embed(ring_b()));
  }
  return out;
}

SpectrumDescription classify_exact_spectrum(const Poly& a0, const std::vector<GaussRat>& lambda_samples, int dmax,
                                            unsigned threads) {
  Poly a = a0.embed(ring_a());
  if (a.is_zero()) throw PreconditionError("exact spectrum needs a nonzero a");
  Poly one = Poly::constant(ring_b(), 1);
  Derivation delta = restrict(hamiltonian(exact_triple(a, one), Poly::variable(ring_b(), "z")), ring_a());

  SpectrumDescription out;
  std::string notes;
  if (delta.is_zero()) {
    out.entries.push_back(all_primes_entry());
    out.completeness = completeness(dmax, notes);
    return out;
  }
  IdealPres j = image_ideal(delta);
  out.entries.push_back(zero_entry(j));

  std::vector<std::vector<SpectrumEntry>> per_lambda(lambda_samples.size());
  std::vector<char> unverified(lambda_samples.size(), 0);
  parallel_for(lambda_samples.size(), threads, [&](std::size_t k) {
    const GaussRat& lambda = lambda_samples[k];
    Poly level = a - Poly::constant(ring_a(), lambda);
    if (level.total_degree() <= 0) return;
    for (const auto& f : factor_completely(level, dmax)) {
      IdealPres q(ring_a(), {f.u});
      auto witness = outside_witness(j, q);
      if (!witness) continue;
      auto cofactor = verify_cofactor(delta, f.u);
      if (!cofactor) throw InternalAssertion("factor of a level set is not invariant");
      SpectrumEntry e;
      e.kind = EntryKind::type2;
      e.generators = {f.u.embed(ring_b())};
      e.certificates.push_back(Certificate{
          "darboux", {{"q", f.u.to_string()}, {"cofactor", cofactor->to_string()}, {"lambda", lambda.to_string()}}});
      e.certificates.push_back(primality(f.u, f.certified));
      if (!f.certified) unverified[k] = 1;
      e.certificates.push_back(*witness);
      per_lambda[k].push_back(std::move(e));
    }
  });
  for (auto& es : per_lambda)
    for (auto& e : es) out.entries.push_back(std::move(e));
  if (std::find(unverified.begin(), unverified.end(), 1) != unverified.end()) notes += "; some factors unverified";

  auto type1 = residually_null_entries(delta, notes);
  out.entries.insert(out.entries.end(), type1.begin(), type1.end());
  out.completeness = completeness(dmax, notes);
  return out;
}

SpectrumDescription classify_delta_spectrum(const DeltaBracket& db, int dmax, unsigned threads) {
  const Derivation& delta = db.delta;
  require_base(delta);
  SpectrumDescription out;
  std::string notes;
  if (delta.is_zero()) {
    out.entries.push_back(all_primes_entry());
    out.completeness = completeness(dmax, notes);
    return out;
  }
  IdealPres j = image_ideal(delta);
  out.entries.push_back(zero_entry(j));

  DarbouxSearch search = darboux_search(delta, dmax, threads);
  if (!search.complete()) notes += "; unresolved strata " + join(search.unresolved);
  if (search.irrational_omitted) notes += "; invariant polynomials outside Q(i) omitted";

  for (const auto& c : search.certificates) {
    SpectrumEntry e;
    e.kind = EntryKind::type2;
    Certificate darboux{"darboux", {{"q", c.q.to_string()},
                                    {"cofactor", c.cofactor.to_string()},
                                    {"degree_bound", std::to_string(c.degree_bound_searched)}}};
    if (c.directions.empty()) {
      auto factors = factor_completely(c.q, c.q.total_degree() / 2);
      // reducible invariants are covered by their factors, which are invariant too
      if (factors.size() > 1 || factors[0].multiplicity > 1) continue;
      auto witness = outside_witness(j, IdealPres(ring_a(), {c.q}));
      if (!witness) continue;
      e.generators = {c.q.embed(ring_b())};
      e.certificates.push_back(darboux);
      e.certificates.push_back(primality(c.q, factors[0].certified));
      e.certificates.push_back(*witness);
    } else {
      std::vector<std::string> names;
      std::string params;
      for (std::size_t k = 0; k < c.directions.size(); ++k) {
        names.push_back("t" + std::to_string(k + 1));
        params += (k ? ", " : "") + names.back() + " in Q(i)";
      }
      Ring wide_a = ring_a().extended(names);
      Poly q = c.q.embed(wide_a);
      for (std::size_t k = 0; k < names.size(); ++k) q += Poly::variable(wide_a, names[k]) * c.directions[k].embed(wide_a);
      auto witness = outside_witness(j, IdealPres(wide_a, {q}));
      if (!witness) continue;
      e.generators = {q.embed(ring_b().extended(names))};
      e.parameter_names = names;
      e.parameters = params;
      darboux.details[0].second = q.to_string();
      e.certificates.push_back(darboux);
      e.certificates.push_back(primality(q, q.total_degree() == 1));
      e.certificates.push_back(*witness);
    }
    out.entries.push_back(std::move(e));
  }

  auto type1 = residually_null_entries(delta, notes);
  out.entries.insert(out.entries.end(), type1.begin(), type1.end());
  out.completeness = completeness(dmax, notes);
  return out;
}

SpectrumEntry gamma_map(const SpectrumEntry& e, const Derivation& delta) {
  require_base(delta);
  if (e.kind == EntryKind::unclassified) throw PreconditionError("gamma_map needs a classified entry");
  SpectrumEntry out = e;
  out.side = e.side == Side::poisson ? Side::ore : Side::poisson;
  if (e.kind == EntryKind::type2) {
    Ring ring = parameter_ring(e, ring_a());
    for (const auto& g : e.generators)
      if (g.uses(g.ring().require("z"))) throw PreconditionError("type-2 entries must be free of z");
    IdealPres q = generator_ideal(e, ring);
    Derivation d = zero_extended(delta, e.parameter_names);
    if (out.side == Side::ore) {
      if (!extended_ideal_stable(q, d)) throw PreconditionError("extended ideal is not two-sided");
      out.certificates.push_back(Certificate{"two-sided", {}});
    } else {
      if (!is_delta_ideal(d, q)) throw PreconditionError("ideal is not delta-stable");
      out.certificates.push_back(Certificate{"poisson-ideal", {}});
    }
  } else {
    Ring ring = parameter_ring(e, ring_b());
    IdealPres p = generator_ideal(e, ring);
    IdealPres j = image_ideal(delta);
    for (const auto& g : j.generators())
      if (!contains(p, g.embed(ring))) throw PreconditionError("type-1 entry does not contain the commutator ideal");
    out.certificates.push_back(Certificate{out.side == Side::ore ? "commutative-quotient" : "residually-null", {}});
  }
  return out;
}

SpectrumDescription gamma_map(const SpectrumDescription& s, const Derivation& delta) {
  SpectrumDescription out;
  out.side = s.side == Side::poisson ? Side::ore : Side::poisson;
  out.completeness = s.completeness;
  for (const auto& e : s.entries) out.entries.push_back(gamma_map(e, delta));
  return out;
}

std::vector<SpectrumPoint> instantiate(const SpectrumDescription& s) {
  std::vector<SpectrumPoint> out;
  for (const auto& e : s.entries) {
    std::string base = join(e.generator_strings());
    if (!e.is_family()) {
      out.push_back({s.side, e.kind, e.instantiate({}), base});
      continue;
    }
    std::vector<GaussRat> values(e.parameter_names.size());
    std::function<void(std::size_t, std::string)> fill = [&](std::size_t k, std::string label) {
      if (k == values.size()) {
        out.push_back({s.side, e.kind, e.instantiate(values), base + " at" + label});
        return;
      }
      for (const auto& v : family_samples()) {
        values[k] = v;
        fill(k + 1, label + " " + e.parameter_names[k] + "=" + v.to_string());
      }
    };
    fill(0, "");
  }
  return out;
}

bool included(const SpectrumPoint& small, const SpectrumPoint& big, const Derivation& delta) {
  if (small.side != big.side) throw PreconditionError("inclusion needs points on the same side");
  const Ring& b = ring_b();
  if (small.side == Side::poisson) return contains(IdealPres(b, big.generators), IdealPres(b, small.generators));

  // Ideals of R: QR is the set of elements with all z-coefficients in Q, and
  // an ideal containing JR is determined by its image in R/JR = B/JB.
  require_base(delta);
  std::vector<Poly> j_gens = in_ring(image_ideal(delta), b).generators();
  std::vector<Poly> need = small.generators;
  if (small.kind == EntryKind::type1) need.insert(need.end(), j_gens.begin(), j_gens.end());
  if (big.kind == EntryKind::type2) {
    std::vector<Poly> q;
    for (const auto& g : big.generators) q.push_back(g.embed(ring_a()));
    IdealPres qa(ring_a(), q);
    std::size_t z = b.require("z");
    for (const auto& g : need)
      for (const auto& c : g.coefficients_in(z))
        if (!contains(qa, c.embed(ring_a()))) return false;
    return true;
  }
  std::vector<Poly> p = big.generators;
  p.insert(p.end(), j_gens.begin(), j_gens.end());
  IdealPres pb(b, p);
  for (const auto& g : need)
    if (!contains(pb, g)) return false;
  return true;
}

}  // namespace poisson_ore

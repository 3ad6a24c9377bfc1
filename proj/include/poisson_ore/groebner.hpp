#pragma once

#include <optional>
#include <vector>

#include "poisson_ore/poly.hpp"

namespace poisson_ore {

/// Reduced Gröbner basis: monic elements sorted by descending leading monomial.
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Poly> polys;

  bool is_unit() const { return polys.size() == 1 && polys[0].is_constant(); }
  bool is_zero() const { return polys.empty(); }
};

/// An ideal given by generators, optionally carrying a Gröbner basis of the
/// same ideal. The zero ideal has no generators.
class IdealPres {
 public:
  IdealPres() = default;
  /// Zero generators are dropped.
  IdealPres(Ring ring, std::vector<Poly> generators);

  static IdealPres unit(const Ring& ring) { return IdealPres(ring, {Poly::constant(ring, 1)}); }
  static IdealPres zero(const Ring& ring) { return IdealPres(ring, {}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }
  bool is_zero_ideal() const { return generators_.empty(); }

  const std::optional<GroebnerBasis>& cached_basis() const { return basis_; }
  /// Basis under `order`, using the cache when it matches.
  GroebnerBasis basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  /// Copy with the basis for `order` attached.
  IdealPres with_basis(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  bool is_unit() const { return basis().is_unit(); }

 private:
  friend IdealPres groebner_basis(const IdealPres&, const MonomialOrder&);

  Ring ring_;
  std::vector<Poly> generators_;
  std::optional<GroebnerBasis> basis_;
};

/// Reduced Gröbner basis by Buchberger's algorithm (normal selection,
/// product and chain criteria, full autoreduction). The returned
/// presentation's generators are the basis elements and its cache is set.
IdealPres groebner_basis(const IdealPres& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

/// Plain Buchberger on a list of polynomials.
GroebnerBasis compute_basis(const Ring& ring, const std::vector<Poly>& generators, const MonomialOrder& order);

/// Fully reduced remainder of p modulo a Gröbner basis.
Poly reduce(const Poly& p, const GroebnerBasis& basis);

/// Remainder modulo the ideal; zero iff p lies in it.
Poly normal_form(const Poly& p, const IdealPres& ideal);

bool contains(const IdealPres& ideal, const Poly& p);
/// small ⊆ big
bool contains(const IdealPres& big, const IdealPres& small);
bool same_ideal(const IdealPres& a, const IdealPres& b);

}  // namespace poisson_ore

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "poisson_ore/groebner.hpp"
#include "poisson_ore/poly.hpp"

namespace poisson_ore {

/// Derivation of a polynomial ring, stored by the images of the variables.
/// A variable may be left without an image; applying the derivation to a
/// polynomial that uses such a variable throws UnknownVariable.
class Derivation {
 public:
  Derivation() = default;
  /// One image per ring variable, in ring order.
  Derivation(Ring ring, std::vector<Poly> images);
  /// Images by variable name; names outside the ring throw UnknownVariable.
  static Derivation from_map(const Ring& ring, const std::map<std::string, Poly>& images);
  static Derivation zero(const Ring& ring);

  const Ring& ring() const { return ring_; }
  bool has_image(std::size_t var) const { return images_[var].has_value(); }
  /// Throws UnknownVariable when the variable has no image.
  const Poly& image(std::size_t var) const;
  const Poly& image(std::string_view name) const { return image(ring_.require(name)); }

  Poly apply(const Poly& p) const;
  Poly operator()(const Poly& p) const { return apply(p); }

  bool is_zero() const;
  /// Largest total degree among the images, -1 when all are zero.
  int max_image_degree() const;

  /// `x -> 2*y, y -> y^2 + x`
  std::string to_string() const;

  friend bool operator==(const Derivation& a, const Derivation& b);

 private:
  Ring ring_;
  std::vector<std::optional<Poly>> images_;
};

/// Derivation on ring + {v} agreeing with d and sending v to 0.
Derivation extend_zero(const Derivation& d, const std::string& v);

/// Restriction to `smaller`, whose variables must be a subset of d's ring and
/// whose images must only use variables of `smaller`.
Derivation restrict(const Derivation& d, const Ring& smaller);

/// Images multiplied by c.
Derivation scale(const Derivation& d, const Poly& c);
Derivation scale(const Derivation& d, const GaussRat& c);

struct StabilityWitness {
  Poly generator;
  Poly image;
  Poly remainder;  // normal form of the image, nonzero
};

/// d(I) ⊆ I, decided on generators. On failure the witness names the first
/// generator whose image leaves the ideal.
struct StabilityCheck {
  bool stable = true;
  std::optional<StabilityWitness> witness;
  explicit operator bool() const { return stable; }
};

StabilityCheck is_delta_ideal(const Derivation& d, const IdealPres& ideal);

/// The derivation induced on A/I, acting on normal-form representatives.
class QuotientDerivation {
 public:
  QuotientDerivation(Derivation d, IdealPres ideal) : d_(std::move(d)), ideal_(std::move(ideal)) {}

  const Derivation& derivation() const { return d_; }
  const IdealPres& ideal() const { return ideal_; }

  Poly reduce(const Poly& p) const { return normal_form(p, ideal_); }
  /// normal_form(d(p))
  Poly apply(const Poly& p) const { return normal_form(d_.apply(p), ideal_); }
  Poly operator()(const Poly& p) const { return apply(p); }

 private:
  Derivation d_;
  IdealPres ideal_;
};

/// Throws PreconditionError when I is not d-stable.
QuotientDerivation induced_on_quotient(const Derivation& d, const IdealPres& ideal);

}  // namespace poisson_ore

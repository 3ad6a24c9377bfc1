#include "poisson_ore/derivation.hpp"

namespace poisson_ore {

Derivation::Derivation(Ring ring, std::vector<Poly> images) : ring_(std::move(ring)) {
  if (images.size() != ring_.size()) throw std::invalid_argument("derivation needs one image per variable");
  for (auto& img : images) {
    if (!(img.ring() == ring_)) img = img.embed(ring_);
    images_.emplace_back(std::move(img));
  }
}

Derivation Derivation::from_map(const Ring& ring, const std::map<std::string, Poly>& images) {
  Derivation d;
  d.ring_ = ring;
  d.images_.resize(ring.size());
  for (const auto& [name, img] : images) d.images_[ring.require(name)] = img.embed(ring);
  return d;
}

Derivation Derivation::zero(const Ring& ring) {
  return Derivation(ring, std::vector<Poly>(ring.size(), Poly(ring)));
}

const Poly& Derivation::image(std::size_t var) const {
  if (!images_[var]) throw UnknownVariable("derivation has no image for " + ring_.var(var));
  return *images_[var];
}

Poly Derivation::apply(const Poly& p) const {
  if (!(p.ring() == ring_)) throw RingMismatch("derivation applied outside its ring");
  Poly out(ring_);
  for (std::size_t v = 0; v < ring_.size(); ++v) {
    if (!p.uses(v)) continue;
    const Poly& img = image(v);
    if (img.is_zero()) continue;
    out += p.derivative(v) * img;
  }
  return out;
}

bool Derivation::is_zero() const {
  for (const auto& img : images_)
    if (img && !img->is_zero()) return false;
  return true;
}

int Derivation::max_image_degree() const {
  int deg = -1;
  for (const auto& img : images_)
    if (img) deg = std::max(deg, img->total_degree());
  return deg;
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t v = 0; v < ring_.size(); ++v) {
    if (!images_[v]) continue;
    if (!out.empty()) out += ", ";
    out += ring_.var(v) + " -> " + images_[v]->to_string();
  }
  return out;
}

bool operator==(const Derivation& a, const Derivation& b) {
  return a.ring_ == b.ring_ && a.images_ == b.images_;
}

Derivation extend_zero(const Derivation& d, const std::string& v) {
  if (d.ring().contains(v)) throw PreconditionError("variable " + v + " already in the ring");
  Ring bigger = d.ring().extended({v});
  std::map<std::string, Poly> images;
  for (std::size_t k = 0; k < d.ring().size(); ++k)
    if (d.has_image(k)) images.emplace(d.ring().var(k), d.image(k).embed(bigger));
  images.emplace(v, Poly(bigger));
  return Derivation::from_map(bigger, images);
}

Derivation restrict(const Derivation& d, const Ring& smaller) {
  std::map<std::string, Poly> images;
  for (const auto& name : smaller.vars()) {
    std::size_t k = d.ring().require(name);
    if (d.has_image(k)) images.emplace(name, d.image(k).embed(smaller));
  }
  return Derivation::from_map(smaller, images);
}

Derivation scale(const Derivation& d, const Poly& c) {
  Poly cc = c.embed(d.ring());
  std::map<std::string, Poly> images;
  for (std::size_t k = 0; k < d.ring().size(); ++k)
    if (d.has_image(k)) images.emplace(d.ring().var(k), cc * d.image(k));
  return Derivation::from_map(d.ring(), images);
}

Derivation scale(const Derivation& d, const GaussRat& c) {
  return scale(d, Poly::constant(d.ring(), c));
}

StabilityCheck is_delta_ideal(const Derivation& d, const IdealPres& ideal) {
  StabilityCheck out;
  IdealPres withgb = ideal.with_basis();
  for (const auto& g : withgb.generators()) {
    Poly img = d.apply(g.embed(d.ring()));
    Poly r = normal_form(img, withgb);
    if (!r.is_zero()) {
      out.stable = false;
      out.witness = StabilityWitness{g, img, r};
      return out;
    }
  }
  return out;
}

QuotientDerivation induced_on_quotient(const Derivation& d, const IdealPres& ideal) {
  auto check = is_delta_ideal(d, ideal);
  if (!check) {
    throw PreconditionError("ideal is not stable: image of " + check.witness->generator.to_string() +
                            " reduces to " + check.witness->remainder.to_string());
  }
  return QuotientDerivation(d, ideal.with_basis());
}

}  // namespace poisson_ore

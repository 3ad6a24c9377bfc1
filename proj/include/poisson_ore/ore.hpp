#pragma once

#include <string>
#include <vector>

#include "poisson_ore/derivation.hpp"
#include "poisson_ore/groebner.hpp"

namespace poisson_ore {

/// Element sum_i d_i z^i of base[z; twist], left coefficients indexed by
/// z-degree. Multiplication uses z d = d z + twist(d).
class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(Derivation twist, std::vector<Poly> coeffs);

  static SkewPoly constant(const Derivation& twist, const Poly& d) { return SkewPoly(twist, {d}); }
  static SkewPoly z(const Derivation& twist);
  /// Reads a commutative polynomial in base + {z} with z-coefficients on the
  /// left.
  static SkewPoly from_commutative(const Derivation& twist, const Poly& p);

  const Derivation& twist() const { return twist_; }
  const Ring& base() const { return twist_.ring(); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for zero
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// The same coefficient list as a commutative polynomial in base + {z}.
  Poly to_commutative() const;
  std::string to_string() const { return to_commutative().to_string(); }

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  Derivation twist_;
  std::vector<Poly> coeffs_;
};

/// Commutative ring matching base[z]: A -> B, D -> Q(i)[x,y,z,h], otherwise
/// base with z appended.
Ring commutative_ring(const Ring& base);

/// Throws RingMismatch when base or twist differ.
SkewPoly skew_multiply(const SkewPoly& u, const SkewPoly& v);
inline SkewPoly operator*(const SkewPoly& u, const SkewPoly& v) { return skew_multiply(u, v); }

/// uv - vu
SkewPoly commutator(const SkewPoly& u, const SkewPoly& v);

/// QR is a two-sided ideal iff twist(Q) ⊆ Q. Also confirms z g - g z lies in
/// QR for each generator g.
bool extended_ideal_stable(const IdealPres& q, const Derivation& twist);

/// T = D[z; h delta] for a derivation delta of A.
Derivation t_twist(const Derivation& delta);

/// h^{-1}[u, v] with h set to 0, read as an element of B. Throws
/// InternalAssertion if some coefficient of [u, v] is not divisible by h.
Poly semiclassical_bracket(const SkewPoly& u, const SkewPoly& v);

/// u with h set to 0, as an element of B.
Poly reduce_mod_h(const SkewPoly& u);

}  // namespace poisson_ore

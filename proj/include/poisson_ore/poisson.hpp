#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "poisson_ore/derivation.hpp"
#include "poisson_ore/groebner.hpp"

namespace poisson_ore {

/// Bracket on B = Q(i)[x,y,z] with {y,z} = f, {z,x} = g, {x,y} = h.
struct PoissonTriple {
  Poly f, g, h;
};

/// The bracket on A[z] with {a,b} = 0 and {z,a} = delta(a) for a, b in A.
/// `delta` is a derivation of A.
struct DeltaBracket {
  Derivation delta;
};

using PoissonStructure = std::variant<PoissonTriple, DeltaBracket>;

/// (h_y - g_z, f_z - h_x, g_x - f_y)
std::array<Poly, 3> curl(const PoissonTriple& F);

struct TripleCheck {
  bool ok = true;
  Poly residual;  // F . curl F
  explicit operator bool() const { return ok; }
};

/// Jacobi holds iff F . curl F = 0. The residual equals minus the Jacobi
/// sum {x,{y,z}} + {y,{z,x}} + {z,{x,y}}.
TripleCheck is_poisson_triple(const PoissonTriple& F);

/// f (p_y q_z - p_z q_y) + g (p_z q_x - p_x q_z) + h (p_x q_y - p_y q_x)
Poly bracket(const PoissonTriple& F, const Poly& p, const Poly& q);

/// sum over z-degrees of (m a delta(b) - n b delta(a)) z^(m+n-1) for
/// p = sum a z^m, q = sum b z^n. Inputs in B; elements of A are accepted and
/// embedded.
Poly bracket_delta(const DeltaBracket& db, const Poly& p, const Poly& q);

Poly bracket(const PoissonStructure& s, const Poly& p, const Poly& q);

/// (-delta(y), delta(x), 0)
PoissonTriple to_triple(const DeltaBracket& db);

/// ham(a) = {a, -} as a derivation of B.
Derivation hamiltonian(const PoissonStructure& s, const Poly& a);

/// (b a_x, b a_y, b a_z)
PoissonTriple exact_triple(const Poly& a, const Poly& b);

struct Fg0Decomposition {
  Poly h, f1, g1;  // f = h f1, g = h g1, f1 and g1 z-free
};

/// Factorization of a Poisson triple (f, g, 0). Nullopt when
/// f g_z != g f_z. Throws InternalAssertion if a cofactor depends on z.
std::optional<Fg0Decomposition> decompose_fg0(const Poly& f, const Poly& g);

struct BracketWitness {
  Poly left;       // a ring variable
  Poly right;      // an ideal generator, or a second variable
  Poly value;      // their bracket
  Poly remainder;  // normal form, nonzero
};

struct IdealCheck {
  bool holds = true;
  std::optional<BracketWitness> witness;
  explicit operator bool() const { return holds; }
};

/// {v, g} ∈ I for every ring variable v and ideal generator g. I lives in B.
IdealCheck is_poisson_ideal(const PoissonStructure& s, const IdealPres& ideal);

enum class ResidualNullity { residually_null, not_residually_null, not_poisson };

std::string to_string(ResidualNullity r);

/// {v, w} ∈ I for every pair of ring variables, once I is known Poisson.
ResidualNullity is_residually_null(const PoissonStructure& s, const IdealPres& ideal);

/// Ideal of B generated by {z,x}, {z,y}, {x,y} (zeros dropped).
IdealPres commutator_ideal(const PoissonStructure& s);

}  // namespace poisson_ore

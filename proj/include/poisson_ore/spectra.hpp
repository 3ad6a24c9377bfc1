#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poisson_ore/derivation.hpp"
#include "poisson_ore/groebner.hpp"
#include "poisson_ore/poisson.hpp"

namespace poisson_ore {

// ---------------------------------------------------------------------------
// Invariant polynomials

/// Coefficient matching for d(q) = h q with q = q_fixed + sum q_k m_k and
/// h = sum h_j n_j. The unknown ring holds q0.., then h0...
struct BilinearSystem {
  Ring unknowns;
  std::size_t num_q = 0;
  std::size_t num_h = 0;
  Ring base;
  std::vector<Monomial> q_support;
  std::vector<Monomial> h_support;
  Poly q_fixed;
  /// equations[k] is the coefficient of equation_monomials[k] (a monomial of
  /// `base`) in d(q) - h q.
  std::vector<Monomial> equation_monomials;
  std::vector<Poly> equations;

  Poly q_of(const std::vector<GaussRat>& q_values) const;
  Poly h_of(const std::vector<GaussRat>& h_values) const;
};

BilinearSystem invariance_equations(const Derivation& d, const std::vector<Monomial>& q_support,
                                    const std::vector<Monomial>& h_support, const Poly& q_fixed = Poly());

/// d(q) = cofactor * q. A nonempty `directions` list describes the family
/// q + sum t_k directions_k, every member of which has the same cofactor.
struct DarbouxCertificate {
  Poly q;
  Poly cofactor;
  int degree_bound_searched = 0;
  std::vector<Poly> directions;
};

struct DarbouxSearch {
  std::vector<DarbouxCertificate> certificates;
  /// Leading monomials whose cofactor set could not be enumerated.
  std::vector<std::string> unresolved;
  /// Some solutions need constants outside Q(i); they are not listed.
  bool irrational_omitted = false;
  bool complete() const { return unresolved.empty(); }
};

/// All monic q with 1 <= deg q <= dmax and d(q) ∈ qA, sorted by degree then
/// leading monomial (descending). Each (degree, leading monomial) stratum is
/// solved by eliminating the q-coefficients from the bilinear system and
/// solving the remaining cofactor system. Strata are independent and run on
/// up to `threads` workers.
DarbouxSearch darboux_search(const Derivation& d, int dmax, unsigned threads = 1);

/// d(q) / q when exact.
std::optional<Poly> verify_cofactor(const Derivation& d, const Poly& q);

// ---------------------------------------------------------------------------
// Singular locus, cores, images

struct SingularLocus {
  IdealPres ideal;  // (d(x), d(y)) with its reduced basis
  std::vector<std::vector<GaussRat>> points;
  /// False when the common zero set is not finite (or root finding gave up).
  bool resolved = true;
  /// Some common zeros have coordinates outside Q(i).
  bool has_other_points = false;
};

SingularLocus singular_locus(const Derivation& d);

enum class CoreStatus { exact, upper_bound };

struct DeltaCore {
  IdealPres ideal;
  CoreStatus status = CoreStatus::exact;
  int iterations = 0;
};

/// I_0 = M, I_{k+1} = {a ∈ I_k : d(a) ∈ I_k}. Stops when the chain
/// stabilizes or after max_iter steps (then the result contains the core).
DeltaCore delta_core(const Derivation& d, const IdealPres& m, int max_iter = 8);

/// One step of the chain above.
IdealPres delta_core_step(const Derivation& d, const IdealPres& ideal);

/// p with d(p) = target and deg p <= dmax, if one exists.
std::optional<Poly> image_solvable(const Derivation& d, const Poly& target, int dmax);

// ---------------------------------------------------------------------------
// Simplicity criterion for d(x) = c, d(y) = a(x) y + b(x)

struct ShamsuddinVerdict {
  bool simple = false;
  /// When not simple: r ∈ Q(i)[x] with c r' = a r + b.
  std::optional<Poly> r;
  std::string to_string() const;
};

/// a and b are polynomials in x (elements of A free of y). Throws
/// PreconditionError when c is zero or a, b involve y.
ShamsuddinVerdict shamsuddin_simple(const GaussRat& c, const Poly& a, const Poly& b);

/// Reads c, a, b off a derivation of A; throws PreconditionError unless
/// d(x) is a nonzero constant and d(y) is affine in y with x-only
/// coefficients.
ShamsuddinVerdict shamsuddin_simple(const Derivation& d);

// ---------------------------------------------------------------------------
// Bounded factor search

struct Factorization {
  Poly u, v;
};

struct FactorSearch {
  std::optional<Factorization> factor;
  /// False when some stratum could not be enumerated.
  bool exhaustive = true;
};

/// A factorization q = u v with u monic and 1 <= deg u <= dmax, smallest
/// degree first. Requires deg q >= 2 and 1 <= dmax < deg q.
FactorSearch factor_search(const Poly& q, int dmax);

struct IrreducibleFactor {
  Poly u;  // monic
  int multiplicity = 1;
  /// Irreducibility proven by an exhaustive search up to deg(u)/2.
  bool certified = false;
};

/// Factorization of p into monic factors by repeated factor_search with
/// degree bound dmax, sorted by degree then text.
std::vector<IrreducibleFactor> factor_completely(const Poly& p, int dmax);

// ---------------------------------------------------------------------------
// Spectra

enum class Side { poisson, ore };
enum class EntryKind { type1, type2, unclassified };

std::string to_string(Side s);
std::string to_string(EntryKind k);

/// Evidence attached to an entry: a tag plus ordered key/value details.
struct Certificate {
  std::string check;
  std::vector<std::pair<std::string, std::string>> details;
};

/// A point or a parametrized family of points of Pspec B (side poisson) or
/// spec R (side ore). Generators live in B, or in B extended by the
/// parameter variables for a family.
struct SpectrumEntry {
  Side side = Side::poisson;
  EntryKind kind = EntryKind::unclassified;
  std::vector<Poly> generators;
  std::vector<std::string> parameter_names;
  std::optional<std::string> parameters;
  std::vector<Certificate> certificates;

  bool is_family() const { return !parameter_names.empty(); }
  std::vector<std::string> generator_strings() const;
  /// Generators in B with the parameters set to `values`.
  std::vector<Poly> instantiate(const std::vector<GaussRat>& values) const;
};

struct SpectrumDescription {
  Side side = Side::poisson;
  std::string completeness;
  std::vector<SpectrumEntry> entries;
};

/// Values every family parameter is sampled at in tests and inclusion checks.
const std::vector<GaussRat>& family_samples();

/// Spectrum of B under the exact bracket of a ∈ A: 0, the residually null
/// primes, and the irreducible factors of a - lambda for each sample.
SpectrumDescription classify_exact_spectrum(const Poly& a, const std::vector<GaussRat>& lambda_samples, int dmax,
                                            unsigned threads = 1);

/// Poisson spectrum of A[z] under {-,-}_delta up to Darboux degree dmax.
SpectrumDescription classify_delta_spectrum(const DeltaBracket& db, int dmax, unsigned threads = 1);

/// Moves an entry across the correspondence between Pspec B and spec R.
/// Generators are kept; type-2 images are checked to be two-sided extended
/// ideals, type-1 images to contain J. Throws PreconditionError for
/// unclassified entries or failed checks.
SpectrumEntry gamma_map(const SpectrumEntry& e, const Derivation& delta);
SpectrumDescription gamma_map(const SpectrumDescription& s, const Derivation& delta);

/// A concrete ideal taken from an entry (families instantiated).
struct SpectrumPoint {
  Side side = Side::poisson;
  EntryKind kind = EntryKind::unclassified;
  std::vector<Poly> generators;  // in B
  std::string label;
};

std::vector<SpectrumPoint> instantiate(const SpectrumDescription& s);

/// small ⊆ big. Poisson side: commutative ideals of B. Ore side: ideals of
/// R = A[z; delta], decided coefficientwise for extended ideals QR and
/// modulo JR for ideals containing JR.
bool included(const SpectrumPoint& small, const SpectrumPoint& big, const Derivation& delta);

}  // namespace poisson_ore

#pragma once

#include <vector>

#include "poisson_ore/gauss_rat.hpp"
#include "poisson_ore/poly.hpp"

namespace poisson_ore {

/// Roots in Q(i) of a univariate polynomial.
struct RootSet {
  std::vector<GaussRat> roots;  // distinct, sorted by compare()
  /// Some root lies outside Q(i) (the squarefree part has higher degree
  /// than the number of roots found).
  bool has_other_roots = false;
  /// Candidate enumeration gave up (an integer too large to factor by trial
  /// division); `roots` may be incomplete.
  bool gave_up = false;
};

/// Q(i)-rational roots of p, which must use at most the variable `var`.
/// Uses the rational root theorem over the Gaussian integers.
RootSet gaussian_rational_roots(const Poly& p, std::size_t var);

/// Solutions in Q(i)^n of a polynomial system in all variables of `ring`.
struct PointSet {
  std::vector<std::vector<GaussRat>> points;  // deterministic order
  /// The system has a positive-dimensional solution set (or root finding
  /// gave up) so `points` does not describe it completely.
  bool resolved = true;
  /// Some solutions have coordinates outside Q(i) and are not listed.
  bool has_other_roots = false;
};

/// Lex Gröbner basis followed by back-substitution, branching on the
/// Q(i)-roots of the univariate element in the last variable.
PointSet solve_polynomial_system(const Ring& ring, const std::vector<Poly>& equations);

}  // namespace poisson_ore

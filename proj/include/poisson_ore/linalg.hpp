#pragma once

#include <optional>
#include <vector>

#include "poisson_ore/gauss_rat.hpp"
#include "poisson_ore/poly.hpp"

namespace poisson_ore {

using Vector = std::vector<GaussRat>;
using Matrix = std::vector<Vector>;

/// General solution x = particular + span(nullspace) of A x = b.
struct LinearSolution {
  Vector particular;
  std::vector<Vector> nullspace;
};

/// Exact Gauss-Jordan elimination. Free variables are zero in the
/// particular solution. Returns nullopt for an inconsistent system. `ncols`
/// is only consulted when A has no rows.
std::optional<LinearSolution> solve_linear(Matrix a, Vector b, std::size_t ncols = 0);

std::size_t rank(Matrix a);

/// Reads affine-linear polynomials sum_j a_ij u_j + c_i = 0 in the first
/// `nunknowns` variables of their ring into (A, -c). Throws
/// PreconditionError when an equation is not affine-linear in them or uses
/// other variables.
std::pair<Matrix, Vector> linear_equations(const std::vector<Poly>& equations, std::size_t nunknowns);

}  // namespace poisson_ore

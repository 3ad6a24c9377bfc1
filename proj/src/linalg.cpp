#include "poisson_ore/linalg.hpp"

namespace poisson_ore {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    GaussRat inv = m[row][col].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      GaussRat f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<LinearSolution> solve_linear(Matrix a, Vector b, std::size_t ncols) {
  std::size_t n = a.empty() ? ncols : a[0].size();
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = rref(a, n);
  for (std::size_t r = pivots.size(); r < a.size(); ++r)
    if (!a[r][n].is_zero()) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(n, GaussRat(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    sol.particular[pivots[r]] = a[r][n];
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, GaussRat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank(Matrix a) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  return rref(a, n).size();
}

std::pair<Matrix, Vector> linear_equations(const std::vector<Poly>& equations, std::size_t nunknowns) {
  Matrix a;
  Vector b;
  for (const auto& eq : equations) {
    Vector row(nunknowns, GaussRat(0));
    GaussRat rhs(0);
    for (const auto& t : eq.terms()) {
      if (t.mono.is_one()) {
        rhs = -t.coef;
        continue;
      }
      if (t.mono.degree() != 1) throw PreconditionError("equation is not affine-linear");
      std::size_t v = 0;
      while (t.mono[v] == 0) ++v;
      if (v >= nunknowns) throw PreconditionError("equation uses a non-unknown variable");
      row[v] = t.coef;
    }
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
  return {std::move(a), std::move(b)};
}

}  // namespace poisson_ore

#include "poisson_ore/solve.hpp"

#include <algorithm>

#include "poisson_ore/gcd.hpp"
#include "poisson_ore/groebner.hpp"

namespace poisson_ore {

namespace {

struct GaussInt {
  mpz_class re, im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpz_class norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

// b / a when exact
std::optional<GaussInt> divide(const GaussInt& b, const GaussInt& a) {
  mpz_class n = norm(a);
  mpz_class re = b.re * a.re + b.im * a.im;
  mpz_class im = b.im * a.re - b.re * a.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GaussInt{re / n, im / n};
}

constexpr unsigned long kTrialLimit = 1000000;

// Rational prime factors of n > 0; false when a composite cofactor is left.
bool prime_factors(mpz_class n, std::vector<mpz_class>& out) {
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
    if (mpz_class(p) * p > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return false;
    out.push_back(n);
  }
  return true;
}

// a + b i with a^2 + b^2 = p for a prime p = 1 mod 4 (Cornacchia).
GaussInt two_squares(const mpz_class& p) {
  mpz_class e = (p - 1) / 4;
  mpz_class x;
  for (unsigned long base = 2;; ++base) {
    mpz_class b(base);
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((x * x) % p == p - 1) break;
  }
  mpz_class r0 = p, r1 = x;
  while (r1 * r1 > p) {
    mpz_class r = r0 % r1;
    r0 = r1;
    r1 = r;
  }
  mpz_class rest = p - r1 * r1;
  mpz_class s = sqrt(rest);
  if (s * s != rest) throw InternalAssertion("two-squares decomposition failed");
  return {r1, s};
}

// Divisors of w in Z[i] up to units; false when factoring gave up.
bool gaussian_divisors(const GaussInt& w, std::vector<GaussInt>& out) {
  std::vector<mpz_class> primes;
  if (!prime_factors(norm(w), primes)) return false;
  std::vector<GaussInt> gprimes;
  for (const auto& p : primes) {
    if (p == 2) {
      gprimes.push_back({1, 1});
    } else if (p % 4 == 3) {
      gprimes.push_back({p, 0});
    } else {
      GaussInt g = two_squares(p);
      gprimes.push_back(g);
      gprimes.push_back({g.re, -g.im});
    }
  }
  out = {GaussInt{1, 0}};
  GaussInt rest = w;
  for (const auto& pi : gprimes) {
    int e = 0;
    while (auto q = divide(rest, pi)) {
      rest = *q;
      ++e;
    }
    std::vector<GaussInt> next;
    for (const auto& d : out) {
      GaussInt cur = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(cur);
        cur = mul(cur, pi);
      }
    }
    out = std::move(next);
  }
  return true;
}

GaussRat to_rat(const GaussInt& g) { return GaussRat(mpq_class(g.re), mpq_class(g.im)); }

// Horner evaluation of a univariate coefficient list.
GaussRat eval(const std::vector<GaussRat>& coeffs, const GaussRat& t) {
  GaussRat acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
  return acc;
}

void insert_root(std::vector<GaussRat>& roots, const GaussRat& r) {
  for (const auto& x : roots)
    if (x == r) return;
  roots.push_back(r);
}

}  // namespace

RootSet gaussian_rational_roots(const Poly& p, std::size_t var) {
  for (std::size_t v = 0; v < p.ring().size(); ++v)
    if (v != var && p.uses(v)) throw PreconditionError("root finding needs a univariate polynomial");
  RootSet out;
  if (p.total_degree() <= 0) return out;

  Poly sqfree = *exact_divide(p, gcd(p, p.derivative(var)));
  int degree = sqfree.degree_in(var);
  std::vector<GaussRat> coeffs;
  for (const auto& c : sqfree.coefficients_in(var)) coeffs.push_back(c.constant_term());

  if (coeffs.front().is_zero()) {
    out.roots.push_back(GaussRat(0));
    coeffs.erase(coeffs.begin());  // squarefree: 0 is a simple root
  }

  if (coeffs.size() > 1) {
    mpz_class den = 1;
    for (const auto& c : coeffs) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
    }
    auto integral = [&](const GaussRat& c) {
      mpq_class re = c.re() * den, im = c.im() * den;
      return GaussInt{re.get_num(), im.get_num()};
    };
    std::vector<GaussInt> num_divs, den_divs;
    if (!gaussian_divisors(integral(coeffs.front()), num_divs) ||
        !gaussian_divisors(integral(coeffs.back()), den_divs)) {
      out.gave_up = true;
    } else {
      const GaussInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      for (const auto& b : den_divs) {
        GaussRat binv = to_rat(b).inverse();
        for (const auto& a : num_divs)
          for (const auto& u : units) {
            GaussRat cand = to_rat(mul(a, u)) * binv;
            if (eval(coeffs, cand).is_zero()) insert_root(out.roots, cand);
          }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const GaussRat& a, const GaussRat& b) { return compare(a, b) < 0; });
  out.has_other_roots = !out.gave_up && static_cast<int>(out.roots.size()) < degree;
  return out;
}

PointSet solve_polynomial_system(const Ring& ring, const std::vector<Poly>& equations) {
  PointSet out;
  if (ring.size() == 0) {
    for (const auto& e : equations)
      if (!e.is_zero()) return out;
    out.points.push_back({});
    return out;
  }
  GroebnerBasis gb = compute_basis(ring, equations, MonomialOrder::lex());
  if (gb.is_unit()) return out;

  std::size_t last = ring.size() - 1;
  const Poly* univariate = nullptr;
  for (const auto& g : gb.polys) {
    bool only_last = g.uses(last);
    for (std::size_t v = 0; v < last && only_last; ++v)
      if (g.uses(v)) only_last = false;
    if (only_last) {
      univariate = &g;
      break;
    }
  }
  if (!univariate) {
    out.resolved = false;
    return out;
  }
  RootSet roots = gaussian_rational_roots(*univariate, last);
  if (roots.gave_up) out.resolved = false;
  out.has_other_roots = roots.has_other_roots;

  std::vector<std::string> sub_vars(ring.vars().begin(), ring.vars().end() - 1);
  Ring sub_ring(sub_vars);
  for (const auto& r : roots.roots) {
    std::vector<Poly> reduced;
    for (const auto& g : gb.polys) {
      Poly s = g.evaluate(last, r);
      if (!s.is_zero()) reduced.push_back(s.embed(sub_ring));
    }
    PointSet sub = solve_polynomial_system(sub_ring, reduced);
    out.resolved = out.resolved && sub.resolved;
    out.has_other_roots = out.has_other_roots || sub.has_other_roots;
    for (auto& pt : sub.points) {
      pt.push_back(r);
      out.points.push_back(std::move(pt));
    }
  }
  return out;
}

}  // namespace poisson_ore

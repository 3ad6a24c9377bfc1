#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poisson_ore/errors.hpp"
#include "poisson_ore/gauss_rat.hpp"

namespace poisson_ore {

/// Ordered list of variable names. Earlier variables are larger in every
/// monomial order (x > y > z > h for the standard rings).
class Ring {
 public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> vars);
  Ring(std::initializer_list<std::string> vars) : Ring(std::vector<std::string>(vars)) {}

  std::size_t size() const { return vars_->size(); }
  const std::string& var(std::size_t index) const { return (*vars_)[index]; }
  const std::vector<std::string>& vars() const { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  /// Ring with `extra` appended (as the smallest variables).
  Ring extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// A = Q(i)[x,y]
const Ring& ring_a();
/// B = Q(i)[x,y,z]
const Ring& ring_b();
/// D = Q(i)[x,y,h]
const Ring& ring_d();
/// Q(i)[x,y,z,h], the ring T is built on.
const Ring& ring_t();

class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint16_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exponents exps);

  std::size_t size() const { return exps_.size(); }
  std::uint16_t operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, std::uint16_t e);

  bool divides(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  Exponents exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic, lexicographic, or a block (elimination)
/// order. A block order compares blocks left to right, grevlex inside each.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  /// Block sizes must sum to the ring size at comparison time.
  static MonomialOrder block(std::vector<std::size_t> sizes) {
    return MonomialOrder(Kind::block, std::move(sizes));
  }
  /// "grevlex" or "lex"; throws std::invalid_argument otherwise.
  static MonomialOrder from_name(std::string_view name);

  Kind kind() const { return kind_; }
  std::string name() const;

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> blocks)
      : kind_(kind), blocks_(std::move(blocks)) {}

  Kind kind_;
  std::vector<std::size_t> blocks_;
};

struct Term {
  Monomial mono;
  GaussRat coef;
};

/// Sparse polynomial over Q(i). Terms are stored in descending grevlex order
/// with no zero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  static Poly constant(const Ring& ring, const GaussRat& c);
  static Poly variable(const Ring& ring, std::string_view name);
  static Poly term(const Ring& ring, Monomial mono, GaussRat coef);
  /// Sorts, merges like terms and drops zeros.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Constant term value.
  GaussRat constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }
  GaussRat coefficient(const Monomial& m) const;

  /// Leading term under `order`. Requires a nonzero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;
  const Term& leading_term() const { return terms_.front(); }
  /// Scaled so the leading coefficient under `order` is 1 (zero stays zero).
  Poly monic(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussRat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned n) const;

  Poly derivative(std::size_t var) const;
  /// Replace variable `var` by `value` (same ring).
  Poly substitute(std::size_t var, const Poly& value) const;
  Poly evaluate(std::size_t var, const GaussRat& value) const;
  /// Same polynomial viewed in `target`; throws UnknownVariable if a used
  /// variable is missing there.
  Poly embed(const Ring& target) const;

  /// Coefficients c_k (free of `var`) with p = sum c_k var^k.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients(const Ring& ring, std::size_t var, const std::vector<Poly>& coeffs);

  /// Canonical text form, terms in descending grevlex order.
  std::string to_string() const;

 private:
  Poly(Ring ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}
  void check_ring(const Poly& o) const;

  Ring ring_;
  std::vector<Term> terms_;
};

/// Exact product; throws RingMismatch.
Poly multiply(const Poly& p, const Poly& q);

/// q with p = d*q, or nullopt when d does not divide p. Throws
/// std::domain_error when d is zero.
std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

/// Formal partial derivative; throws UnknownVariable.
Poly partial_derivative(const Poly& p, std::string_view var);

/// All monomials of total degree <= max_degree in the first `nvars` ring
/// variables (remaining exponents zero), descending grevlex.
std::vector<Monomial> monomials_up_to(const Ring& ring, int max_degree, std::size_t nvars);
inline std::vector<Monomial> monomials_up_to(const Ring& ring, int max_degree) {
  return monomials_up_to(ring, max_degree, ring.size());
}

std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace poisson_ore

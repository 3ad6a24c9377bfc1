#include "poisson_ore/poly.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace poisson_ore {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::require(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = *vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return Ring(std::move(vars));
}

const Ring& ring_a() {
  static const Ring r{"x", "y"};
  return r;
}
const Ring& ring_b() {
  static const Ring r{"x", "y", "z"};
  return r;
}
const Ring& ring_d() {
  static const Ring r{"x", "y", "h"};
  return r;
}
const Ring& ring_t() {
  static const Ring r{"x", "y", "z", "h"};
  return r;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, std::uint16_t e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    unsigned e = unsigned(a.exps_[i]) + b.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max())
      throw std::overflow_error("monomial exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------- orders

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) {
  unsigned da = 0, db = 0;
  for (std::size_t i = begin; i < end; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = end; i-- > begin;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder MonomialOrder::from_name(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "lex") return lex();
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block";
  }
  return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::grevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return grevlex_range(a, b, 0, a.size());
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::block: {
      std::size_t begin = 0;
      for (std::size_t len : blocks_) {
        std::size_t end = std::min(begin + len, a.size());
        if (int c = grevlex_range(a, b, begin, end)) return c;
        begin = end;
      }
      if (begin < a.size()) return grevlex_range(a, b, begin, a.size());
      return 0;
    }
  }
  return 0;
}

// ---------------------------------------------------------------- Poly

namespace {

bool grevlex_greater(const Term& a, const Term& b) {
  return MonomialOrder::grevlex().compare(a.mono, b.mono) > 0;
}

std::vector<Term> merge_sorted(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto order = MonomialOrder::grevlex();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      GaussRat s = subtract ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Poly::check_ring(const Poly& o) const {
  if (!(ring_ == o.ring_)) throw RingMismatch("polynomials belong to different rings");
}

Poly Poly::constant(const Ring& ring, const GaussRat& c) {
  Poly p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring.size()), c});
  return p;
}

Poly Poly::variable(const Ring& ring, std::string_view name) {
  Monomial m(ring.size());
  m.set(ring.require(name), 1);
  return term(ring, std::move(m), GaussRat(1));
}

Poly Poly::term(const Ring& ring, Monomial mono, GaussRat coef) {
  Poly p(ring);
  if (!coef.is_zero()) p.terms_.push_back({std::move(mono), std::move(coef)});
  return p;
}

Poly Poly::from_terms(const Ring& ring, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grevlex_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return Poly(ring, std::move(out));
}

GaussRat Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return GaussRat(0);
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

int Poly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono[var]);
  return d;
}

GaussRat Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coef;
  return GaussRat(0);
}

const Term& Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  if (order.kind() == MonomialOrder::Kind::grevlex) return terms_.front();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Poly Poly::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  const GaussRat& lc = leading_term(order).coef;
  if (lc.is_one()) return *this;
  return *this * lc.inverse();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  terms_ = merge_sorted(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  terms_ = merge_sorted(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coef;
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coef;
  std::vector<Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prods.push_back({s.mono * t.mono, s.coef * t.coef});
  return Poly::from_terms(a.ring_, std::move(prods));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef))
      return false;
  return true;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(ring_, GaussRat(1));
  Poly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    auto e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({std::move(m), t.coef * GaussRat(long(e))});
  }
  return from_terms(ring_, std::move(out));
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  check_ring(value);
  std::vector<Poly> coeffs = coefficients_in(var);
  // Horner in `var`
  Poly result(ring_);
  for (std::size_t k = coeffs.size(); k-- > 0;) result = result * value + coeffs[k];
  return result;
}

Poly Poly::evaluate(std::size_t var, const GaussRat& value) const {
  return substitute(var, constant(ring_, value));
}

Poly Poly::embed(const Ring& target) const {
  if (ring_ == target) return *this;
  std::vector<std::size_t> map(ring_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < ring_.size(); ++i)
    if (auto j = target.index_of(ring_.var(i))) map[i] = *j;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < ring_.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] == SIZE_MAX)
        throw UnknownVariable("variable '" + ring_.var(i) + "' is not in the target ring");
      m.set(map[i], t.mono[i]);
    }
    out.push_back({std::move(m), t.coef});
  }
  return from_terms(target, std::move(out));
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  int deg = degree_in(var);
  std::vector<std::vector<Term>> buckets(deg < 0 ? 0 : std::size_t(deg) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    auto e = m[var];
    m.set(var, 0);
    buckets[e].push_back({std::move(m), t.coef});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  // terms within a bucket keep relative grevlex order only up to the removed
  // variable, so re-sort
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

Poly Poly::from_coefficients(const Ring& ring, std::size_t var, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Monomial m = t.mono;
      m.set(var, static_cast<std::uint16_t>(m[var] + k));
      out.push_back({std::move(m), t.coef});
    }
  }
  return from_terms(ring, std::move(out));
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.var(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    GaussRat c = t.coef;
    bool negative = false;
    // a purely real or purely imaginary coefficient carries its sign outside
    if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += monomial_to_string(ring_, t.mono);
    } else {
      out += c.to_string() + "*" + monomial_to_string(ring_, t.mono);
    }
  }
  return out;
}

// ---------------------------------------------------------------- free functions

Poly multiply(const Poly& p, const Poly& q) { return p * q; }

std::optional<Poly> exact_divide(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (!(p.ring() == d.ring())) throw RingMismatch("polynomials belong to different rings");
  const Term& lead = d.leading_term();
  GaussRat inv = lead.coef.inverse();
  Poly rem = p;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lead.mono.divides(lt.mono)) return std::nullopt;
    Poly t = Poly::term(p.ring(), lt.mono / lead.mono, lt.coef * inv);
    quotient.push_back(t.terms().front());
    rem -= t * d;
  }
  return Poly::from_terms(p.ring(), std::move(quotient));
}

Poly partial_derivative(const Poly& p, std::string_view var) {
  return p.derivative(p.ring().require(var));
}

std::vector<Monomial> monomials_up_to(const Ring& ring, int max_degree, std::size_t nvars) {
  std::vector<Monomial> out;
  if (max_degree < 0) return out;
  // odometer over exponents with total degree bound
  std::vector<int> e(nvars, 0);
  while (true) {
    Monomial cur(ring.size());
    for (std::size_t i = 0; i < nvars; ++i) cur.set(i, static_cast<std::uint16_t>(e[i]));
    out.push_back(std::move(cur));
    std::size_t i = 0;
    for (; i < nvars; ++i) {
      int sum = 0;
      for (auto v : e) sum += v;
      if (sum < max_degree) {
        ++e[i];
        break;
      }
      e[i] = 0;
    }
    if (i == nvars) break;
  }
  auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

}  // namespace poisson_ore

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace poisson_ore {

/// Exact element re + im*i of the Gaussian rationals Q(i).
///
/// Both parts are GMP rationals kept in canonical form, so equality is
/// structural and no rounding ever happens.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(0, 1); }
  static GaussRat rational(long num, long den) { return GaussRat(mpq_class(num, den)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order used only for deterministic sorting (re first, then im).
  friend std::strong_ordering compare(const GaussRat& a, const GaussRat& b);

  /// Canonical text: `3`, `-1/2`, `i`, `2*i`, `(1+1/3*i)`. Parseable by parse_poly.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace poisson_ore

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace mixedpf {

using Rational = mpq_class;

/// Exact element re + i*im of Q(i).
///
/// Both parts are GMP rationals and are kept canonical (positive denominator,
/// lowest terms) after every operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  /// Multiply by +1 or -1 without allocating temporaries.
  void negate_if(bool flip) {
    if (flip) {
      mpq_neg(re_.get_mpq_t(), re_.get_mpq_t());
      mpq_neg(im_.get_mpq_t(), im_.get_mpq_t());
    }
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q" for real values ("p" when q == 1), otherwise "a+bi" / "a-bi" / "bi".
  std::string to_string() const;

  /// Inverse of to_string(); also accepts "i", "-i" and "a+i" shorthands.
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

/// Canonical string of a rational: "p/q", or "p" when q == 1.
std::string rational_to_string(const Rational& q);
/// Parses "p" or "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// i^n for any integer n.
GaussianRational i_power(long n);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace mixedpf

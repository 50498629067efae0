#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hkt {

/// Exact rational number, arbitrary precision.
using Rational = mpq_class;

/// Gaussian rational a + b*i. The coefficient field of the whole engine;
/// every operation is exact and equality is decidable.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() : re(0), im(0) {}
  Scalar(int v) : re(v), im(0) {}
  Scalar(long v) : re(v), im(0) {}
  Scalar(const Rational& r) : re(r), im(0) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  /// re^2 + im^2, as a rational.
  Rational norm() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: "p/q" for reals, "p/q+r/si" otherwise.
  std::string str() const;
};

/// Parses "p", "-p/q" etc. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form of a rational, "p" or "p/q".
std::string rational_str(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hkt

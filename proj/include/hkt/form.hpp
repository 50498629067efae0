#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hkt/scalar.hpp"

namespace hkt {

/// Monomial index set as a bitmask: bit k set means the 1-form e^{k+1} is a
/// factor. Factors are always taken in increasing index order.
using Mask = std::uint64_t;

int popcount(Mask m);

/// Sign of e^A ^ e^B relative to the sorted monomial e^{A|B}; 0 when the
/// index sets overlap.
int wedge_sign(Mask a, Mask b);

/// Element of the exterior algebra over the Gaussian rationals. Sparse map
/// from strictly-increasing monomials to nonzero coefficients; may mix
/// degrees.
class Form {
 public:
  Form() = default;

  static Form one() { return monomial(0, Scalar(1)); }
  /// e^idx, 1-based.
  static Form basis1(int idx);
  static Form monomial(Mask m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  /// All stored monomials have degree k (true for the zero form).
  bool is_homogeneous(int k) const;
  int max_degree() const;

  Scalar coefficient(Mask m) const;
  void add_term(Mask m, const Scalar& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& c) { return a *= c; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }
  Form operator-() const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

  /// Complex conjugation of coefficients (the real basis e^k is fixed).
  Form conj() const;

  /// Degree-k homogeneous component.
  Form degree_part(int k) const;

  const std::map<Mask, Scalar>& terms() const { return terms_; }

  std::string str() const;

 private:
  std::map<Mask, Scalar> terms_;
};

/// Exterior product; bilinear, associative, graded-commutative.
Form wedge(const Form& a, const Form& b);

}  // namespace hkt

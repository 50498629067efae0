#pragma once

#include <Eigen/Core>

#include <vector>

#include "hkt/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<hkt::Scalar> {
  typedef hkt::Scalar Real;
  typedef hkt::Scalar NonInteger;
  typedef hkt::Scalar Nested;
  typedef hkt::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hkt {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice is
/// the first nonzero entry of the column, so the output is canonical for a
/// given input. If `pivots` is non-null it receives the pivot column indices.
Mat rref(Mat m, std::vector<int>* pivots = nullptr);

int rank(const Mat& m);

/// Columns form a canonical (rref-derived) basis of ker(m).
Mat kernel_basis(const Mat& m);

/// Columns form a canonical basis of the column space of m.
Mat image_basis(const Mat& m);

/// Inverse of a square invertible matrix; throws std::domain_error otherwise.
Mat inverse(const Mat& m);

/// Solves A x = b exactly. Returns false when inconsistent.
bool solve(const Mat& a, const Vec& b, Vec& x);

/// span(sub) subset of span(space)?
bool subspace_contained(const Mat& sub, const Mat& space);

bool subspace_equal(const Mat& a, const Mat& b);

/// Canonical basis of span(a) + span(b).
Mat subspace_sum(const Mat& a, const Mat& b);

/// Canonical basis of span(a) intersect span(b).
Mat subspace_intersection(const Mat& a, const Mat& b);

/// Given cocycles (columns of `ker`) and coboundaries (columns of `im`,
/// contained in span(ker)), returns columns of ker extending a basis of
/// span(im) to one of span(ker); these represent a basis of the quotient.
Mat quotient_representatives(const Mat& ker, const Mat& im);

}  // namespace hkt

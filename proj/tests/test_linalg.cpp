#include <doctest.h>

#include <random>

#include "hkt/linalg.hpp"

using namespace hkt;

namespace {

Mat random_mat(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Scalar(Rational(num(rng)), Rational(num(rng)));
  return m;
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rref is idempotent and preserves rank") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_mat(rng, 5, 7);
    Mat r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(m) == rank(r));
  }
}

TEST_CASE("rank-nullity across random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_mat(rng, 4, 6);
    Mat k = kernel_basis(m);
    CHECK(rank(m) + static_cast<int>(k.cols()) == 6);
    CHECK(is_zero(m * k));
    CHECK(rank(k) == static_cast<int>(k.cols()));
  }
}

TEST_CASE("image basis spans the column space") {
  std::mt19937 rng(13);
  Mat m = random_mat(rng, 5, 3);
  Mat im = image_basis(m);
  CHECK(static_cast<int>(im.cols()) == rank(m));
  CHECK(subspace_equal(im, m));
}

TEST_CASE("inverse of an invertible matrix") {
  std::mt19937 rng(17);
  Mat m;
  do {
    m = random_mat(rng, 4, 4);
  } while (rank(m) < 4);
  Mat inv = inverse(m);
  CHECK(mat_eq(m * inv, Mat::Identity(4, 4)));
  CHECK(mat_eq(inv * m, Mat::Identity(4, 4)));
}

TEST_CASE("solve handles consistent and inconsistent systems") {
  Mat m(2, 2);
  m << Scalar(1), Scalar(2), Scalar(2), Scalar(4);  // rank 1
  Vec b(2);
  b << Scalar(3), Scalar(6);
  Vec x;
  REQUIRE(solve(m, b, x));
  CHECK(m * x == b);
  b << Scalar(3), Scalar(5);
  CHECK_FALSE(solve(m, b, x));
}

TEST_CASE("subspace operations satisfy dimension formulas") {
  std::mt19937 rng(23);
  Mat a = random_mat(rng, 6, 3);
  Mat b = random_mat(rng, 6, 3);
  Mat s = subspace_sum(a, b);
  Mat i = subspace_intersection(a, b);
  CHECK(rank(s) + static_cast<int>(i.cols()) == rank(a) + rank(b));
  CHECK(subspace_contained(i, a));
  CHECK(subspace_contained(i, b));
  CHECK(subspace_contained(a, s));
  CHECK(subspace_contained(b, s));
}

TEST_CASE("quotient representatives complement the image inside the kernel") {
  // d: ker/im with ker = span(v1,v2,v3), im = span(v1).
  Mat ker(4, 3);
  ker << Scalar(1), Scalar(0), Scalar(0),  //
      Scalar(0), Scalar(1), Scalar(0),     //
      Scalar(0), Scalar(0), Scalar(1),     //
      Scalar(0), Scalar(0), Scalar(0);
  Mat im(4, 1);
  im << Scalar(1), Scalar(0), Scalar(0), Scalar(0);
  Mat reps = quotient_representatives(ker, im);
  CHECK(reps.cols() == 2);
  CHECK(subspace_contained(reps, ker));
  CHECK(rank(subspace_sum(reps, im)) == 3);
}

TEST_CASE("deterministic canonical output") {
  std::mt19937 rng(29);
  Mat m = random_mat(rng, 5, 5);
  CHECK(mat_eq(rref(m), rref(m)));
  CHECK(mat_eq(kernel_basis(m), kernel_basis(m)));
}

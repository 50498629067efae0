#include "hkt/linalg.hpp"

#include <stdexcept>

namespace hkt {

Mat rref(Mat m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(static_cast<int>(c));
    ++r;
  }
  return m;
}

int rank(const Mat& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

Mat kernel_basis(const Mat& m) {
  std::vector<int> pivots;
  Mat r = rref(m, &pivots);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  const Eigen::Index k = cols - static_cast<Eigen::Index>(pivots.size());
  Mat basis = Mat::Zero(cols, k);
  Eigen::Index out = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    basis(c, out) = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] < c) basis(pivots[i], out) = -r(i, c);
    }
    ++out;
  }
  return basis;
}

Mat image_basis(const Mat& m) {
  // Reduced column echelon form = transpose of rref of the transpose.
  Mat t = rref(m.transpose());
  int rk = 0;
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    bool nonzero = false;
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
      if (!t(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++rk;
  }
  return t.topRows(rk).transpose();
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
  const Eigen::Index n = m.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat::Identity(n, n);
  std::vector<int> pivots;
  Mat r = rref(aug, &pivots);
  if (static_cast<Eigen::Index>(pivots.size()) != n ||
      pivots[n - 1] != static_cast<int>(n - 1))
    throw std::domain_error("inverse: singular matrix");
  return r.rightCols(n);
}

bool solve(const Mat& a, const Vec& b, Vec& x) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots;
  Mat r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols))
    return false;  // inconsistent
  x = Vec::Zero(cols);
  for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = r(i, cols);
  return true;
}

bool subspace_contained(const Mat& sub, const Mat& space) {
  if (sub.cols() == 0) return true;
  int base = rank(space);
  Mat joined(space.rows(), space.cols() + sub.cols());
  joined.leftCols(space.cols()) = space;
  joined.rightCols(sub.cols()) = sub;
  return rank(joined) == base;
}

bool subspace_equal(const Mat& a, const Mat& b) {
  return subspace_contained(a, b) && subspace_contained(b, a);
}

Mat subspace_sum(const Mat& a, const Mat& b) {
  Mat joined(a.rows(), a.cols() + b.cols());
  joined.leftCols(a.cols()) = a;
  joined.rightCols(b.cols()) = b;
  return image_basis(joined);
}

Mat subspace_intersection(const Mat& a, const Mat& b) {
  // Zassenhaus-style: null space of [A | -B] gives matched coefficients.
  if (a.cols() == 0 || b.cols() == 0) return Mat::Zero(a.rows(), 0);
  Mat joined(a.rows(), a.cols() + b.cols());
  joined.leftCols(a.cols()) = a;
  joined.rightCols(b.cols()) = -b;
  Mat null = kernel_basis(joined);
  Mat inter(a.rows(), null.cols());
  for (Eigen::Index j = 0; j < null.cols(); ++j)
    inter.col(j) = a * null.block(0, j, a.cols(), 1);
  return image_basis(inter);
}

Mat quotient_representatives(const Mat& ker, const Mat& im) {
  Mat base = image_basis(im);
  int base_rank = static_cast<int>(base.cols());
  std::vector<Eigen::Index> chosen;
  Mat current = base;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    Mat trial(ker.rows(), current.cols() + 1);
    trial.leftCols(current.cols()) = current;
    trial.col(current.cols()) = ker.col(j);
    if (rank(trial) > static_cast<int>(current.cols())) {
      chosen.push_back(j);
      current = trial;
    }
  }
  (void)base_rank;
  Mat reps(ker.rows(), static_cast<Eigen::Index>(chosen.size()));
  for (size_t i = 0; i < chosen.size(); ++i) reps.col(i) = ker.col(chosen[i]);
  return reps;
}

}  // namespace hkt

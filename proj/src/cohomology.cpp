#include "hkt/cohomology.hpp"

#include <stdexcept>

namespace hkt {

namespace {

std::vector<Form> columns_to_forms(const Mat& cols, int p, int q,
                                   const Instance& inst) {
  std::vector<Form> out;
  for (Eigen::Index j = 0; j < cols.cols(); ++j)
    out.push_back(inst.from_coords_pq(cols.col(j), p, q));
  return out;
}

// Matrix of del o del_J : Lambda^{p,0} -> Lambda^{p+2,0}.
Mat op_ddj(const Instance& inst, int p) {
  if (inst.dim_pq(p, 0) == 0 || inst.dim_pq(p + 2, 0) == 0)
    return Mat::Zero(inst.dim_pq(p + 2, 0), inst.dim_pq(p, 0));
  return inst.op_del(p + 1, 0) * inst.op_del_J(p, 0);
}

std::string pq_label(const std::string& base, int p, int q) {
  return "H^{" + std::to_string(p) + "," + std::to_string(q) + "}_" + base;
}

std::string p_label(const std::string& base, int p) {
  return "H^{" + std::to_string(p) + ",0}_" + base;
}

}  // namespace

Form wedge_pow(const Form& x, int k) {
  Form r = Form::one();
  for (int i = 0; i < k; ++i) r = wedge(r, x);
  return r;
}

CohomologyGroup dolbeault_h(int p, int q, const Instance& inst) {
  Mat ker = kernel_basis(inst.op_delbar(p, q));
  Mat im = image_basis(inst.op_delbar(p, q - 1));
  Mat reps = quotient_representatives(ker, im);
  CohomologyGroup g;
  g.label = pq_label("dolbeault", p, q);
  g.dimension = static_cast<int>(reps.cols());
  g.representatives = columns_to_forms(reps, p, q, inst);
  return g;
}

CohomologyGroup qbc_h(int p, const Instance& inst) {
  const Mat& del = inst.op_del(p, 0);
  const Mat& delJ = inst.op_del_J(p, 0);
  Mat stacked(del.rows() + delJ.rows(), del.cols());
  stacked.topRows(del.rows()) = del;
  stacked.bottomRows(delJ.rows()) = delJ;
  Mat ker = kernel_basis(stacked);
  Mat im = image_basis(op_ddj(inst, p - 2));
  Mat reps = quotient_representatives(ker, im);
  CohomologyGroup g;
  g.label = p_label("BC", p);
  g.dimension = static_cast<int>(reps.cols());
  g.representatives = columns_to_forms(reps, p, 0, inst);
  return g;
}

CohomologyGroup qae_h(int p, const Instance& inst) {
  Mat ker = kernel_basis(op_ddj(inst, p));
  Mat im = subspace_sum(image_basis(inst.op_del(p - 1, 0)),
                        image_basis(inst.op_del_J(p - 1, 0)));
  Mat reps = quotient_representatives(ker, im);
  CohomologyGroup g;
  g.label = p_label("AE", p);
  g.dimension = static_cast<int>(reps.cols());
  g.representatives = columns_to_forms(reps, p, 0, inst);
  return g;
}

Scalar duality_pairing(const Form& a, const Form& b, const Form& phi,
                       const Instance& inst) {
  const int half = 2 * inst.n();
  int p = a.max_degree();
  if (a != inst.bidegree_part(a, p, 0))
    throw std::invalid_argument("duality_pairing: a is not a (p,0)-form");
  if (b != inst.bidegree_part(b, half - p, 0))
    throw std::invalid_argument("duality_pairing: b is not a (2n-p,0)-form");
  return inst.integrate(wedge(wedge(a, b), phi.conj()));
}

bool gauduchon_condition(const Form& omega, const Instance& inst) {
  Form pw = wedge_pow(omega, inst.n() - 1);
  return inst.del(inst.del_J(pw)).is_zero();
}

Scalar degree(const Form& a, const Form& omega, const Form& phi,
              const Instance& inst) {
  if (!gauduchon_condition(omega, inst))
    throw std::invalid_argument("degree: Omega^{n-1} is not del del_J-closed");
  Form top = wedge(wedge(inst.del(a), wedge_pow(omega, inst.n() - 1)),
                   phi.conj());
  return inst.integrate(top);
}

DdjLemmaResult ddj_lemma_check(const Instance& inst) {
  Mat im_del = image_basis(inst.op_del(1, 0));
  Mat ker_delJ = kernel_basis(inst.op_del_J(2, 0));
  Mat both = subspace_intersection(im_del, ker_delJ);
  Mat im_ddj = image_basis(op_ddj(inst, 0));
  DdjLemmaResult res;
  res.holds = subspace_contained(both, im_ddj);
  if (!res.holds) {
    for (Eigen::Index j = 0; j < both.cols(); ++j) {
      if (!subspace_contained(both.col(j), im_ddj)) {
        res.witness = inst.from_coords_pq(both.col(j), 2, 0);
        break;
      }
    }
  }
  return res;
}

ExactSequenceReport degree_exact_sequence_check(const Instance& inst,
                                                const Form& omega,
                                                const Form& phi) {
  ExactSequenceReport rep;
  // Coboundary space of H^{1,0}_AE inside Lambda^{1,0} coordinates.
  Mat b = subspace_sum(image_basis(inst.op_del(0, 0)),
                       image_basis(inst.op_del_J(0, 0)));
  // (a) H^{1,0}_del -> H^{1,0}_AE is injective:
  // any del-closed form that is an AE coboundary is a del coboundary.
  Mat ker_del = kernel_basis(inst.op_del(1, 0));
  rep.injective = subspace_contained(subspace_intersection(ker_del, b),
                                     image_basis(inst.op_del(0, 0)));

  // AE cocycles in Lambda^{1,0}.
  Mat k = kernel_basis(op_ddj(inst, 1));

  // Kernel of deg within span(k), then add the coboundaries.
  Mat deg_row(1, k.cols());
  for (Eigen::Index j = 0; j < k.cols(); ++j)
    deg_row(0, j) = degree(inst.from_coords_pq(k.col(j), 1, 0), omega, phi,
                           inst);
  Mat ker_deg = subspace_sum(k * kernel_basis(deg_row), b);

  // Kernel of del: H^{1,0}_AE -> H^{2,0}_BC: combinations y with
  // del(k y) inside im(del del_J from Lambda^{0,0}), plus the coboundaries.
  Mat im_ddj0 = image_basis(op_ddj(inst, 0));
  Mat del_k = inst.op_del(1, 0) * k;
  Mat joined(del_k.rows(), del_k.cols() + im_ddj0.cols());
  joined.leftCols(del_k.cols()) = del_k;
  joined.rightCols(im_ddj0.cols()) = -im_ddj0;
  Mat y = kernel_basis(joined).topRows(del_k.cols());
  Mat ker_bc = subspace_sum(k * y, b);

  rep.kernel_match = subspace_equal(ker_deg, ker_bc);
  return rep;
}

}  // namespace hkt

#include "hkt/hkt.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hkt/cohomology.hpp"

namespace hkt {

namespace {

// Tangent-space action matching the coaction on 1-forms: a vector is of type
// (1,0) exactly when every (0,1)-form annihilates it.
Mat tangent(const Mat& op1) { return op1.transpose(); }

// Columns are the (1,0)-vectors z_1..z_{2n} in e-coordinates: (1+i) times the
// dual basis of the (1,0)-forms. The factor makes the flat torus metric the
// identity on this basis.
Mat vectors_10(const Instance& inst) {
  const int d = inst.dim();
  const int m = d / 2;
  Mat q(d, d);
  for (int s = 0; s < m; ++s) {
    Vec v = inst.coords_e(inst.one_form_10(s), 1);
    Vec w = inst.coords_e(inst.one_form_01(s), 1);
    q.row(s) = v.transpose();
    q.row(m + s) = w.transpose();
  }
  Mat dual = inverse(q);
  return dual.leftCols(m) * (Scalar(1) + Scalar::i());
}

// Frame action of J entering the quaternionic pairing: the inverse transpose
// of the coframe action; the sign is pinned by positivity of the flat form.
Mat j_frame(const Instance& inst) {
  return -tangent(inst.structure().J);
}

Scalar eval_2form(const Form& eta, const Vec& x, const Vec& y) {
  Scalar r(0);
  for (const auto& [mask, c] : eta.terms()) {
    Mask m = mask;
    int a = std::countr_zero(m);
    m &= m - 1;
    int b = std::countr_zero(m);
    r += c * (x(a) * y(b) - x(b) * y(a));
  }
  return r;
}

Vec conj_vec(const Vec& v) {
  Vec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i).conj();
  return r;
}

// Exact determinant by fraction-producing Gaussian elimination.
Scalar det(Mat m) {
  Scalar result(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      result = -result;
    }
    result *= m(c, c);
    Scalar inv = Scalar(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return result;
}

Mat principal_submatrix(const Mat& m, const std::vector<int>& idx) {
  Mat s(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

// Realification plumbing: a complex column vector v over the Gaussian
// rationals becomes [re(v); im(v)] over the rationals.
Vec realify_vec(const Vec& v) {
  Vec r(2 * v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    r(i) = Scalar(v(i).re);
    r(v.size() + i) = Scalar(v(i).im);
  }
  return r;
}

Mat realify_linear(const Mat& m) {
  Mat r = Mat::Zero(2 * m.rows(), 2 * m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      r(i, j) = Scalar(m(i, j).re);
      r(i, m.cols() + j) = Scalar(-m(i, j).im);
      r(m.rows() + i, j) = Scalar(m(i, j).im);
      r(m.rows() + i, m.cols() + j) = Scalar(m(i, j).re);
    }
  return r;
}

Form form_from_real_coords(const Vec& y, const Instance& inst) {
  const Eigen::Index m = y.size() / 2;
  Vec v(m);
  for (Eigen::Index i = 0; i < m; ++i)
    v(i) = Scalar(y(i).re, y(m + i).re);
  return inst.from_coords_pq(v, 2, 0);
}

// Matrix (over the rationals, on realified (2,0) coordinates) of the map
// eta -> J(conj eta) - eta; its kernel is the space of real forms.
Mat reality_condition(const Instance& inst) {
  const int m = inst.dim_pq(2, 0);
  const auto& basis = inst.basis_pq(2, 0);
  Mat cols = Mat::Zero(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    Form jk = inst.extend_J(basis[static_cast<size_t>(k)].conj());
    Vec c = inst.coords_pq(jk, 2, 0);
    // Image of the real basis vector b_k, and of i*b_k: conjugate-linearity
    // gives J(conj(i b_k)) = -i J(conj b_k).
    Vec ci(m);
    for (int i = 0; i < m; ++i) ci(i) = Scalar(Rational(0), Rational(-1)) * c(i);
    cols.col(k) = realify_vec(c);
    cols.col(m + k) = realify_vec(ci);
  }
  return cols - Mat::Identity(2 * m, 2 * m);
}

std::vector<Form> forms_from_real_kernel(const Mat& condition,
                                         const Instance& inst) {
  Mat ker = kernel_basis(condition);
  std::vector<Form> out;
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    out.push_back(form_from_real_coords(ker.col(j), inst));
  return out;
}

Mat stack(const Mat& a, const Mat& b) {
  Mat s(a.rows() + b.rows(), a.cols());
  s.topRows(a.rows()) = a;
  s.bottomRows(b.rows()) = b;
  return s;
}

}  // namespace

bool is_real_20(const Form& eta, const Instance& inst) {
  if (!eta.is_zero() && eta != inst.bidegree_part(eta, 2, 0))
    throw std::invalid_argument("is_real_20: not a (2,0)-form");
  return inst.extend_J(eta.conj()) == eta;
}

Mat hermitian_matrix(const Form& eta, const Instance& inst) {
  Mat z = vectors_10(inst);
  Mat jt = j_frame(inst);
  const Eigen::Index m = z.cols();
  Mat h(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index s = 0; s < m; ++s)
      h(r, s) = eval_2form(eta, z.col(r), jt * conj_vec(z.col(s)));
  return h;
}

Positivity positivity(const Form& eta, const Instance& inst) {
  if (!is_real_20(eta, inst))
    throw std::invalid_argument("positivity: form is not real");
  if (eta.is_zero()) return Positivity::none;
  Mat h = hermitian_matrix(eta, inst);
  const int m = static_cast<int>(h.rows());
  bool strict = true;
  for (int k = 1; k <= m && strict; ++k) {
    Scalar dk = det(h.topLeftCorner(k, k));
    if (!dk.is_real() || dk.re <= 0) strict = false;
  }
  if (strict) return Positivity::strict;
  // Semidefinite: every principal minor nonnegative.
  for (unsigned sel = 1; sel < (1u << m); ++sel) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (sel & (1u << i)) idx.push_back(i);
    Scalar dk = det(principal_submatrix(h, idx));
    if (!dk.is_real() || dk.re < 0) return Positivity::none;
  }
  return Positivity::semi;
}

std::optional<Form> find_phi(const Instance& inst) {
  const int half = 2 * inst.n();
  Form phi0 = inst.basis_pq(half, 0)[0];
  if (!inst.delbar(phi0).is_zero()) return std::nullopt;
  Form jphi = inst.extend_J(phi0);
  Form cphi = phi0.conj();
  // jphi must be a scalar multiple of conj(phi0) of unit modulus.
  Scalar c;
  bool first = true;
  for (const auto& [mask, coeff] : cphi.terms()) {
    Scalar ratio = jphi.coefficient(mask) / coeff;
    if (first) {
      c = ratio;
      first = false;
    } else if (ratio != c) {
      return std::nullopt;
    }
  }
  if (jphi != cphi * c) return std::nullopt;
  if (c.norm() != 1) return std::nullopt;
  Scalar mu = (c == Scalar(-1)) ? Scalar::i() : Scalar(1) + c.conj();
  Form phi = phi0 * mu;
  Scalar vol = inst.integrate(wedge(phi, phi.conj()));
  if (!vol.is_real() || vol.re <= 0) return std::nullopt;
  // Deterministic real rescaling: leading coefficient gets unit magnitude in
  // its first nonzero component, with positive sign.
  const Scalar& lead = phi.terms().begin()->second;
  Rational mag = lead.re != 0 ? abs(lead.re) : abs(lead.im);
  Rational sgn = (lead.re != 0 ? lead.re : lead.im) > 0 ? 1 : -1;
  phi *= Scalar(sgn / mag);
  return phi;
}

Verdict hkt_parity_verdict(const Instance& inst) {
  Verdict v;
  v.basis = "parity";
  v.h01 = dolbeault_h(0, 1, inst).dimension;
  if (!inst.nilpotent()) {
    v.notes = "algebra is not nilpotent; invariant forms need not compute "
              "Dolbeault cohomology";
    return v;
  }
  if (!find_phi(inst)) {
    v.notes = "no holomorphic volume form with J(Phi) = conj(Phi); the "
              "parity criterion does not apply";
    return v;
  }
  bool even = v.h01 % 2 == 0;
  if (inst.n() == 2) {
    v.answer = even ? Verdict::Answer::yes : Verdict::Answer::no;
  } else if (!even) {
    v.answer = Verdict::Answer::no;
    v.notes = "odd h^{0,1} excludes HKT in every quaternionic dimension";
  } else {
    v.notes = "parity is only decisive for n = 2";
  }
  return v;
}

std::vector<Form> real_closed_20_basis(const Instance& inst) {
  Mat cond = stack(reality_condition(inst), realify_linear(inst.op_del(2, 0)));
  return forms_from_real_kernel(cond, inst);
}

std::vector<Form> real_exact_20_basis(const Instance& inst) {
  const int m = inst.dim_pq(2, 0);
  Mat s = image_basis(inst.op_del(1, 0));
  // Real span of the complex column space: columns s_j and i*s_j.
  Mat span(2 * m, 2 * s.cols());
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    Vec col = s.col(j);
    Vec icol(col.size());
    for (Eigen::Index i = 0; i < col.size(); ++i) icol(i) = Scalar::i() * col(i);
    span.col(j) = realify_vec(col);
    span.col(s.cols() + j) = realify_vec(icol);
  }
  Mat cond = reality_condition(inst) * span;
  Mat y = kernel_basis(cond);
  Mat vecs = span * y;
  std::vector<Form> out;
  for (Eigen::Index j = 0; j < vecs.cols(); ++j)
    out.push_back(form_from_real_coords(vecs.col(j), inst));
  return out;
}

namespace {

Form combine(const std::vector<Form>& basis, const std::vector<Rational>& c) {
  Form f;
  for (size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) f += basis[i] * Scalar(c[i]);
  return f;
}

// Hill-climb score: how close the Hermitian matrix is to the target cone.
int cone_score(const Mat& h, bool strict) {
  const int m = static_cast<int>(h.rows());
  int score = 0;
  if (strict) {
    for (int k = 1; k <= m; ++k) {
      Scalar dk = det(h.topLeftCorner(k, k));
      if (dk.is_real() && dk.re > 0) ++score;
    }
  } else {
    for (unsigned sel = 1; sel < (1u << m); ++sel) {
      std::vector<int> idx;
      for (int i = 0; i < m; ++i)
        if (sel & (1u << i)) idx.push_back(i);
      Scalar dk = det(principal_submatrix(h, idx));
      if (dk.is_real() && dk.re >= 0) ++score;
    }
  }
  return score;
}

bool matrix_in_cone(const Mat& h, bool strict) {
  const int m = static_cast<int>(h.rows());
  if (strict) {
    for (int k = 1; k <= m; ++k) {
      Scalar dk = det(h.topLeftCorner(k, k));
      if (!dk.is_real() || dk.re <= 0) return false;
    }
    return true;
  }
  bool nonzero = false;
  for (Eigen::Index i = 0; i < h.rows() && !nonzero; ++i)
    for (Eigen::Index j = 0; j < h.cols(); ++j)
      if (!h(i, j).is_zero()) {
        nonzero = true;
        break;
      }
  if (!nonzero) return false;
  for (unsigned sel = 1; sel < (1u << m); ++sel) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (sel & (1u << i)) idx.push_back(i);
    Scalar dk = det(principal_submatrix(h, idx));
    if (!dk.is_real() || dk.re < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<Form> search_positive(const std::vector<Form>& basis,
                                    const Instance& inst, bool strict) {
  const size_t nb = basis.size();
  if (nb == 0) return std::nullopt;
  // The Hermitian matrix is linear in the form, so candidates are scored on
  // cheap matrix combinations instead of rebuilt forms.
  std::vector<Mat> hb;
  hb.reserve(nb);
  for (const Form& b : basis) hb.push_back(hermitian_matrix(b, inst));
  auto combine_h = [&](const std::vector<Rational>& c) {
    Mat h = Mat::Zero(hb[0].rows(), hb[0].cols());
    for (size_t i = 0; i < nb; ++i)
      if (c[i] != 0) h += hb[i] * Scalar(c[i]);
    return h;
  };
  std::vector<std::vector<Rational>> seeds;
  for (size_t i = 0; i < nb; ++i) {
    for (int sign : {1, -1}) {
      std::vector<Rational> c(nb, Rational(0));
      c[i] = sign;
      seeds.push_back(c);
    }
  }
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = i + 1; j < nb; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<Rational> c(nb, Rational(0));
          c[i] = si;
          c[j] = sj;
          seeds.push_back(c);
        }
  for (int sign : {1, -1}) {
    std::vector<Rational> c(nb, Rational(sign));
    seeds.push_back(c);
  }

  const std::vector<Rational> steps = {
      Rational(1),  Rational(-1),  Rational(1, 2), Rational(-1, 2),
      Rational(1, 4), Rational(-1, 4), Rational(1, 8), Rational(-1, 8)};
  for (auto c : seeds) {
    Mat h = combine_h(c);
    if (matrix_in_cone(h, strict)) {
      Form f = combine(basis, c);
      if (!f.is_zero()) return f;
    }
    int best = cone_score(h, strict);
    for (int iter = 0; iter < 12; ++iter) {
      bool improved = false;
      for (size_t i = 0; i < nb; ++i) {
        for (const Rational& s : steps) {
          auto trial = c;
          trial[i] += s;
          Mat ht = combine_h(trial);
          int sc = cone_score(ht, strict);
          if (sc > best) {
            best = sc;
            c = trial;
            improved = true;
            if (matrix_in_cone(ht, strict)) {
              Form f = combine(basis, c);
              if (!f.is_zero()) return f;
            }
          }
        }
      }
      if (!improved) break;
    }
  }
  return std::nullopt;
}

std::optional<Form> find_hkt_form(const Instance& inst) {
  auto found = search_positive(real_closed_20_basis(inst), inst, true);
  if (found && (!inst.del(*found).is_zero() ||
                positivity(*found, inst) != Positivity::strict))
    throw std::logic_error("find_hkt_form: certification failed on recheck");
  return found;
}

std::optional<Form> find_obstruction_witness(const Instance& inst) {
  auto found = search_positive(real_exact_20_basis(inst), inst, false);
  if (found) {
    // Revalidate: del-exact, real, positive nonzero.
    Vec rhs = inst.coords_pq(*found, 2, 0);
    Vec sol;
    if (!solve(inst.op_del(1, 0), rhs, sol))
      throw std::logic_error("obstruction witness is not del-exact");
    if (!is_real_20(*found, inst) ||
        positivity(*found, inst) == Positivity::none)
      throw std::logic_error("obstruction witness failed revalidation");
  }
  return found;
}

bool is_quaternionic_gauduchon(const Form& omega, const Instance& inst) {
  if (positivity(omega, inst) != Positivity::strict)
    throw std::invalid_argument(
        "is_quaternionic_gauduchon: Omega is not strictly positive");
  return gauduchon_condition(omega, inst);
}

std::optional<Form> find_gauduchon_form(const Instance& inst) {
  Mat cond = reality_condition(inst);
  if (inst.n() == 2) {
    // For n = 2 the Gauduchon condition del del_J Omega = 0 is linear.
    Mat ddj = inst.op_del(3, 0) * inst.op_del_J(2, 0);
    cond = stack(cond, realify_linear(ddj));
    return search_positive(forms_from_real_kernel(cond, inst), inst, true);
  }
  auto found = search_positive(real_closed_20_basis(inst), inst, true);
  if (found && !gauduchon_condition(*found, inst)) return std::nullopt;
  return found;
}

Mat metric_from_omega(const Form& omega, const Instance& inst) {
  return hermitian_matrix(omega, inst);
}

Mat real_metric(const Form& omega, const Instance& inst) {
  Mat z = vectors_10(inst);
  const Eigen::Index m = z.cols();
  const int d = inst.dim();
  Mat h = hermitian_matrix(omega, inst);
  // Complex frame P = [z | conj z]; g vanishes on pairs of like type and is
  // h/2 on mixed pairs.
  Mat p(d, 2 * m);
  p.leftCols(m) = z;
  for (Eigen::Index j = 0; j < m; ++j) p.col(m + j) = conj_vec(z.col(j));
  Mat gc = Mat::Zero(2 * m, 2 * m);
  Scalar half = Scalar(1) / Scalar(2);
  gc.topRightCorner(m, m) = h * half;
  gc.bottomLeftCorner(m, m) = h.transpose() * half;
  Mat pinv = inverse(p);
  return pinv.transpose() * gc * pinv;
}

Form omega_I_from(const Form& omega, const Instance& inst) {
  Mat g = real_metric(omega, inst);
  // Frame action of I, inverse transpose of the coframe action as in j_frame.
  Mat it = -tangent(inst.structure().I);
  Mat w = it.transpose() * g;
  Form f;
  for (int a = 0; a < inst.dim(); ++a)
    for (int b = a + 1; b < inst.dim(); ++b)
      f.add_term((Mask(1) << a) | (Mask(1) << b), w(a, b));
  return f;
}

}  // namespace hkt

#include "hkt/hypercomplex.hpp"

#include <bit>
#include <stdexcept>

namespace hkt {

namespace {

bool is_real_matrix(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_real()) return false;
  return true;
}

void subsets_of_size(int bits, int size, std::vector<Mask>& out) {
  out.clear();
  for (Mask m = 0; m < (Mask(1) << bits); ++m)
    if (popcount(m) == size) out.push_back(m);
}

}  // namespace

ValidationResult validate_structure(const HypercomplexStructure& h) {
  ValidationResult r;
  const int d = 4 * h.n;
  auto fail = [&](const std::string& what) {
    r.ok = false;
    r.violations.push_back(what);
  };
  if (h.I.rows() != d || h.I.cols() != d || h.J.rows() != d || h.J.cols() != d) {
    fail("matrix shape is not 4n x 4n");
    return r;
  }
  if (!is_real_matrix(h.I)) fail("I has non-real entries");
  if (!is_real_matrix(h.J)) fail("J has non-real entries");
  Mat id = Mat::Identity(d, d);
  if (h.I * h.I != -id) fail("I squared is not -Id");
  if (h.J * h.J != -id) fail("J squared is not -Id");
  if (h.I * h.J != -(h.J * h.I)) fail("I and J do not anticommute");
  return r;
}

Instance::Instance(LieAlgebraSpec spec, HypercomplexStructure h, std::string id)
    : spec_(std::move(spec)), h_(std::move(h)), id_(std::move(id)) {
  if (spec_.dim != 4 * h_.n)
    throw std::invalid_argument("algebra dimension does not match 4n");
  jacobi_ok_ = check_jacobi(spec_).ok;
  nilpotent_ = jacobi_ok_ && is_nilpotent(spec_);
  degrees_.resize(spec_.dim + 1);
}

void Instance::build_eigenbasis() const {
  if (eigen_built_) return;
  const int d = spec_.dim;
  Mat shifted = h_.I - Scalar::i() * Mat::Identity(d, d);
  p10_ = kernel_basis(shifted);
  if (p10_.cols() != d / 2)
    throw std::domain_error("I is not diagonalizable with eigenvalues +-i");
  phi_.clear();
  phibar_.clear();
  for (Eigen::Index s = 0; s < p10_.cols(); ++s) {
    Form f;
    for (int r = 0; r < d; ++r) f.add_term(Mask(1) << r, p10_(r, s));
    phi_.push_back(f);
    phibar_.push_back(f.conj());
  }
  eigen_built_ = true;
}

const Mat& Instance::p10() const {
  build_eigenbasis();
  return p10_;
}

Form Instance::one_form_10(int s) const {
  build_eigenbasis();
  return phi_[s];
}

Form Instance::one_form_01(int s) const {
  build_eigenbasis();
  return phibar_[s];
}

Form Instance::f_monomial_form(Mask s, Mask t) const {
  build_eigenbasis();
  Form r = Form::one();
  for (Mask m = s; m; m &= m - 1) r = wedge(r, phi_[std::countr_zero(m)]);
  for (Mask m = t; m; m &= m - 1) r = wedge(r, phibar_[std::countr_zero(m)]);
  return r;
}

Instance::DegreeData& Instance::degree(int k) const {
  DegreeData& dd = degrees_[k];
  if (dd.built) return dd;
  subsets_of_size(spec_.dim, k, dd.masks);
  for (size_t i = 0; i < dd.masks.size(); ++i)
    dd.mask_index[dd.masks[i]] = static_cast<int>(i);
  const int half = spec_.dim / 2;
  for (int p = k; p >= 0; --p) {
    int q = k - p;
    if (p > half || q > half) continue;
    std::vector<Mask> ss, ts;
    subsets_of_size(half, p, ss);
    subsets_of_size(half, q, ts);
    for (Mask s : ss)
      for (Mask t : ts) dd.f_monomials.emplace_back(s, t);
  }
  for (size_t i = 0; i < dd.f_monomials.size(); ++i)
    dd.f_index[dd.f_monomials[i]] = static_cast<int>(i);
  const Eigen::Index nmask = static_cast<Eigen::Index>(dd.masks.size());
  dd.f_to_e = Mat::Zero(nmask, static_cast<Eigen::Index>(dd.f_monomials.size()));
  for (size_t c = 0; c < dd.f_monomials.size(); ++c) {
    Form f = f_monomial_form(dd.f_monomials[c].first, dd.f_monomials[c].second);
    for (const auto& [m, coeff] : f.terms())
      dd.f_to_e(dd.mask_index.at(m), static_cast<Eigen::Index>(c)) = coeff;
  }
  dd.e_to_f = inverse(dd.f_to_e);
  dd.built = true;
  return dd;
}

const std::vector<Mask>& Instance::masks(int k) const {
  return degree(k).masks;
}

const std::vector<Form>& Instance::basis_pq(int p, int q) const {
  auto key = std::make_pair(p, q);
  auto it = pq_bases_.find(key);
  if (it != pq_bases_.end()) return it->second;
  std::vector<Form> basis;
  const int half = spec_.dim / 2;
  if (p >= 0 && q >= 0 && p <= half && q <= half) {
    std::vector<Mask> ss, ts;
    subsets_of_size(half, p, ss);
    subsets_of_size(half, q, ts);
    for (Mask s : ss)
      for (Mask t : ts) basis.push_back(f_monomial_form(s, t));
  }
  return pq_bases_.emplace(key, std::move(basis)).first->second;
}

int Instance::dim_pq(int p, int q) const {
  const int half = spec_.dim / 2;
  if (p < 0 || q < 0 || p > half || q > half) return 0;
  auto binom = [](int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<int>(r);
  };
  return binom(half, p) * binom(half, q);
}

Vec Instance::coords_e(const Form& x, int k) const {
  const DegreeData& dd = degree(k);
  Vec v = Vec::Zero(static_cast<Eigen::Index>(dd.masks.size()));
  for (const auto& [m, c] : x.terms()) {
    if (popcount(m) != k)
      throw std::invalid_argument("coords_e: form is not homogeneous");
    v(dd.mask_index.at(m)) = c;
  }
  return v;
}

Form Instance::from_coords_e(const Vec& v, int k) const {
  const DegreeData& dd = degree(k);
  Form f;
  for (Eigen::Index i = 0; i < v.size(); ++i) f.add_term(dd.masks[i], v(i));
  return f;
}

BigradedForm Instance::bidegree_split(const Form& x) const {
  BigradedForm out;
  for (int k = 0; k <= spec_.dim; ++k) {
    Form xk = x.degree_part(k);
    if (xk.is_zero()) continue;
    const DegreeData& dd = degree(k);
    Vec fc = dd.e_to_f * coords_e(xk, k);
    std::map<std::pair<int, int>, Form> parts;
    for (Eigen::Index i = 0; i < fc.size(); ++i) {
      if (fc(i).is_zero()) continue;
      const auto& [s, t] = dd.f_monomials[i];
      auto key = std::make_pair(popcount(s), popcount(t));
      Form mono = f_monomial_form(s, t);
      parts[key] += mono * fc(i);
    }
    for (auto& [key, part] : parts)
      if (!part.is_zero()) out[key] += part;
  }
  return out;
}

Form Instance::bidegree_part(const Form& x, int p, int q) const {
  Form xk = x.degree_part(p + q);
  if (xk.is_zero()) return Form();
  const int k = p + q;
  const DegreeData& dd = degree(k);
  Vec fc = dd.e_to_f * coords_e(xk, k);
  Form out;
  for (Eigen::Index i = 0; i < fc.size(); ++i) {
    if (fc(i).is_zero()) continue;
    const auto& [s, t] = dd.f_monomials[i];
    if (popcount(s) != p || popcount(t) != q) continue;
    out += f_monomial_form(s, t) * fc(i);
  }
  return out;
}

Vec Instance::coords_pq(const Form& x, int p, int q) const {
  const int k = p + q;
  Vec v = Vec::Zero(dim_pq(p, q));
  Form xk = x.degree_part(k);
  if (x != xk)
    throw std::invalid_argument("coords_pq: form has components outside degree");
  if (xk.is_zero()) return v;
  const DegreeData& dd = degree(k);
  Vec fc = dd.e_to_f * coords_e(xk, k);
  // Locate the contiguous (p,q) block; check purity outside it.
  int offset = -1;
  int idx = 0;
  for (Eigen::Index i = 0; i < fc.size(); ++i) {
    const auto& [s, t] = dd.f_monomials[i];
    if (popcount(s) == p && popcount(t) == q) {
      if (offset < 0) offset = static_cast<int>(i);
      v(idx++) = fc(i);
    } else if (!fc(i).is_zero()) {
      throw std::invalid_argument("coords_pq: form is not pure of bidegree (" +
                                  std::to_string(p) + "," + std::to_string(q) +
                                  ")");
    }
  }
  return v;
}

Form Instance::from_coords_pq(const Vec& v, int p, int q) const {
  const auto& basis = basis_pq(p, q);
  Form f;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    f += basis[static_cast<size_t>(i)] * v(i);
  return f;
}

Form Instance::extend_J(const Form& x) const {
  Form out;
  const int d = spec_.dim;
  for (const auto& [mask, coeff] : x.terms()) {
    Form term = Form::monomial(0, coeff);
    for (Mask m = mask; m; m &= m - 1) {
      int idx = std::countr_zero(m);
      Form jcol;
      for (int r = 0; r < d; ++r) jcol.add_term(Mask(1) << r, h_.J(r, idx));
      term = wedge(term, jcol);
    }
    out += term;
  }
  return out;
}

Form Instance::extend_J_inv(const Form& x) const {
  Form out;
  for (int k = 0; k <= spec_.dim; ++k) {
    Form xk = x.degree_part(k);
    if (xk.is_zero()) continue;
    DegreeData& dd = degree(k);
    if (!dd.j_built) {
      const Eigen::Index nm = static_cast<Eigen::Index>(dd.masks.size());
      dd.j_ext = Mat::Zero(nm, nm);
      for (Eigen::Index c = 0; c < nm; ++c) {
        Form jm = extend_J(Form::monomial(dd.masks[c], Scalar(1)));
        for (const auto& [m, coeff] : jm.terms())
          dd.j_ext(dd.mask_index.at(m), c) = coeff;
      }
      dd.j_ext_inv = inverse(dd.j_ext);
      dd.j_built = true;
    }
    out += from_coords_e(dd.j_ext_inv * coords_e(xk, k), k);
  }
  return out;
}

Form Instance::d(const Form& x) const { return hkt::d(x, spec_); }

Form Instance::del(const Form& x) const {
  Form out;
  for (const auto& [key, part] : bidegree_split(x))
    out += bidegree_part(d(part), key.first + 1, key.second);
  return out;
}

Form Instance::delbar(const Form& x) const {
  Form out;
  for (const auto& [key, part] : bidegree_split(x))
    out += bidegree_part(d(part), key.first, key.second + 1);
  return out;
}

Form Instance::del_J(const Form& x) const {
  return extend_J_inv(delbar(extend_J(x)));
}

const Mat& Instance::op_del(int p, int q) const {
  auto key = std::make_pair(p, q);
  auto it = del_cache_.find(key);
  if (it != del_cache_.end()) return it->second;
  const auto& basis = basis_pq(p, q);
  Mat m = Mat::Zero(dim_pq(p + 1, q), static_cast<Eigen::Index>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    Form image = bidegree_part(d(basis[c]), p + 1, q);
    if (m.rows() > 0)
      m.col(static_cast<Eigen::Index>(c)) = coords_pq(image, p + 1, q);
  }
  return del_cache_.emplace(key, std::move(m)).first->second;
}

const Mat& Instance::op_delbar(int p, int q) const {
  auto key = std::make_pair(p, q);
  auto it = delbar_cache_.find(key);
  if (it != delbar_cache_.end()) return it->second;
  const auto& basis = basis_pq(p, q);
  Mat m = Mat::Zero(dim_pq(p, q + 1), static_cast<Eigen::Index>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    Form image = bidegree_part(d(basis[c]), p, q + 1);
    if (m.rows() > 0)
      m.col(static_cast<Eigen::Index>(c)) = coords_pq(image, p, q + 1);
  }
  return delbar_cache_.emplace(key, std::move(m)).first->second;
}

const Mat& Instance::op_del_J(int p, int q) const {
  auto key = std::make_pair(p, q);
  auto it = delJ_cache_.find(key);
  if (it != delJ_cache_.end()) return it->second;
  const auto& basis = basis_pq(p, q);
  Mat m = Mat::Zero(dim_pq(p + 1, q), static_cast<Eigen::Index>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    Form image = bidegree_part(del_J(basis[c]), p + 1, q);
    if (m.rows() > 0)
      m.col(static_cast<Eigen::Index>(c)) = coords_pq(image, p + 1, q);
  }
  return delJ_cache_.emplace(key, std::move(m)).first->second;
}

Mat Instance::derivation_matrix(const Mat& op1, int k) const {
  const DegreeData& dd = degree(k);
  const Eigen::Index nm = static_cast<Eigen::Index>(dd.masks.size());
  const int d = spec_.dim;
  Mat out = Mat::Zero(nm, nm);
  for (Eigen::Index c = 0; c < nm; ++c) {
    Mask mask = dd.masks[c];
    Form acc;
    for (Mask m = mask; m; m &= m - 1) {
      int idx = std::countr_zero(m);
      Mask below = mask & ((Mask(1) << idx) - 1);
      Mask above = mask & ~((Mask(1) << (idx + 1)) - 1);
      Form col;
      for (int r = 0; r < d; ++r) col.add_term(Mask(1) << r, op1(r, idx));
      Form term = wedge(wedge(Form::monomial(below, Scalar(1)), col),
                        Form::monomial(above, Scalar(1)));
      acc += term;
    }
    for (const auto& [m, coeff] : acc.terms())
      out(dd.mask_index.at(m), c) = coeff;
  }
  return out;
}

int Instance::orientation() const {
  if (orientation_ == 0) {
    Form gen = basis_pq(2 * h_.n, 0)[0];
    Scalar v = integrate_top(wedge(gen, gen.conj()), spec_);
    if (!v.is_real() || v.re == 0)
      throw std::logic_error("degenerate top (2n,0)-form");
    orientation_ = v.re > 0 ? 1 : -1;
  }
  return orientation_;
}

Scalar Instance::integrate(const Form& x) const {
  Scalar v = integrate_top(x, spec_);
  return orientation() > 0 ? v : -v;
}

IntegrabilityResult Instance::check_integrability() const {
  IntegrabilityResult res;
  const int d = spec_.dim;
  Mat ops[3] = {h_.I, h_.J, h_.K()};
  bool* flags[3] = {&res.I, &res.J, &res.K};
  for (int t = 0; t < 3; ++t) {
    const Mat& L = ops[t];
    Mat forms10 = kernel_basis(L - Scalar::i() * Mat::Identity(d, d));
    // (0,2)-part w.r.t. L vanishes iff (A_L - 2i)(A_L) kills d(alpha), where
    // A_L is the derivation extension with eigenvalue i(p-q) on (p,q).
    Mat a2 = derivation_matrix(L, 2);
    Mat proj = (a2 - Scalar(Rational(0), Rational(2)) *
                         Mat::Identity(a2.rows(), a2.cols())) *
               a2;
    bool ok = true;
    for (Eigen::Index s = 0; s < forms10.cols() && ok; ++s) {
      Form alpha;
      for (int r = 0; r < d; ++r) alpha.add_term(Mask(1) << r, forms10(r, s));
      Form da = this->d(alpha);
      Vec v = coords_e(da.degree_part(2), 2);
      Vec w = proj * v;
      for (Eigen::Index i = 0; i < w.size(); ++i)
        if (!w(i).is_zero()) {
          ok = false;
          break;
        }
    }
    *flags[t] = ok;
  }
  return res;
}

}  // namespace hkt

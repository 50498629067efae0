#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hkt/lie_algebra.hpp"
#include "hkt/linalg.hpp"

namespace hkt {

/// The operators I, J acting on the dual space span(e^1..e^{4n}); K = I*J.
/// Entries are real rationals; complexification happens downstream.
struct HypercomplexStructure {
  int n = 0;  // quaternionic dimension, dim = 4n
  Mat I;
  Mat J;

  Mat K() const { return I * J; }
};

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
};

/// I^2 = J^2 = -Id and IJ = -JI, checked exactly.
ValidationResult validate_structure(const HypercomplexStructure& h);

/// Complexified form split by Hodge bidegree with respect to I.
using BigradedForm = std::map<std::pair<int, int>, Form>;

struct IntegrabilityResult {
  bool I = false, J = false, K = false;
  bool all() const { return I && J && K; }
};

/// One validated (algebra, structure) pair with every derived basis and
/// operator matrix cached. All accessors are const; the caches are lazily
/// built behind a mutex-free single-threaded facade (instances are cheap to
/// copy per thread if needed).
class Instance {
 public:
  Instance(LieAlgebraSpec spec, HypercomplexStructure h, std::string id);

  const LieAlgebraSpec& spec() const { return spec_; }
  const HypercomplexStructure& structure() const { return h_; }
  const std::string& id() const { return id_; }
  int dim() const { return spec_.dim; }
  int n() const { return h_.n; }

  /// (1,0)-forms: the (+i)-eigenvectors of I on the complexified dual space.
  /// Column s of the returned 4n x 2n matrix holds phi^{s+1} in e-coordinates.
  const Mat& p10() const;
  Form one_form_10(int s) const;  // phi^{s+1}
  Form one_form_01(int s) const;  // conj(phi^{s+1})

  /// All degree-k monomial masks, ascending.
  const std::vector<Mask>& masks(int k) const;

  /// Basis of Lambda^{p,q} as forms in e-coordinates: phi_S ^ conj(phi)_T
  /// over ascending subset masks S (size p) then T (size q).
  const std::vector<Form>& basis_pq(int p, int q) const;
  int dim_pq(int p, int q) const;

  BigradedForm bidegree_split(const Form& x) const;
  Form bidegree_part(const Form& x, int p, int q) const;

  /// Coordinates of a pure-(p,q) form in basis_pq(p,q).
  Vec coords_pq(const Form& x, int p, int q) const;
  Form from_coords_pq(const Vec& v, int p, int q) const;

  /// Multiplicative extension of J to the exterior algebra, and the genuine
  /// matrix inverse of that extension (computed per degree).
  Form extend_J(const Form& x) const;
  Form extend_J_inv(const Form& x) const;

  Form d(const Form& x) const;
  Form del(const Form& x) const;      // (p+1,q)-components of d
  Form delbar(const Form& x) const;   // (p,q+1)-components of d
  Form del_J(const Form& x) const;    // J^{-1} . delbar . J

  /// Matrices of the three operators Lambda^{p,q} -> codomain basis.
  const Mat& op_del(int p, int q) const;
  const Mat& op_delbar(int p, int q) const;
  const Mat& op_del_J(int p, int q) const;

  /// d of every (1,0)-form w.r.t. L in {I,J,K} has vanishing (0,2)-part.
  IntegrabilityResult check_integrability() const;

  /// Derivation extension of a dual-space operator to degree k, as a matrix
  /// on the monomial basis masks(k).
  Mat derivation_matrix(const Mat& op1, int k) const;

  /// e-coordinates of a degree-k form over masks(k).
  Vec coords_e(const Form& x, int k) const;
  Form from_coords_e(const Vec& v, int k) const;

  bool nilpotent() const { return nilpotent_; }
  bool jacobi_ok() const { return jacobi_ok_; }

  /// +1 or -1: sign relating the coframe volume e^1^...^e^{4n} to the
  /// orientation induced by I (in which phi^1^conj(phi^1)^... is positive).
  int orientation() const;

  /// Integral against the I-oriented volume: orientation() times the
  /// coefficient of e^1^...^e^{4n}.
  Scalar integrate(const Form& x) const;

 private:
  struct DegreeData {
    std::vector<Mask> masks;
    std::map<Mask, int> mask_index;
    // Degree-k f-monomial basis: ordered by (p descending, S, T).
    std::vector<std::pair<Mask, Mask>> f_monomials;  // (S, T) over 2n bits
    std::map<std::pair<Mask, Mask>, int> f_index;
    Mat f_to_e;  // columns: f-monomials in e-coordinates
    Mat e_to_f;  // inverse
    Mat j_ext;       // extend_J on the e-monomial basis
    Mat j_ext_inv;   // genuine matrix inverse
    bool built = false;
    bool j_built = false;
  };

  DegreeData& degree(int k) const;
  void build_eigenbasis() const;
  Form f_monomial_form(Mask s, Mask t) const;

  LieAlgebraSpec spec_;
  HypercomplexStructure h_;
  std::string id_;
  bool jacobi_ok_ = false;
  bool nilpotent_ = false;

  mutable Mat p10_;
  mutable std::vector<Form> phi_, phibar_;
  mutable bool eigen_built_ = false;
  mutable int orientation_ = 0;  // 0 = not yet computed
  mutable std::vector<DegreeData> degrees_;
  mutable std::map<std::pair<int, int>, std::vector<Form>> pq_bases_;
  mutable std::map<std::pair<int, int>, Mat> del_cache_, delbar_cache_,
      delJ_cache_;
};

}  // namespace hkt

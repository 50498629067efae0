#pragma once

#include <map>

#include "hkt/hypercomplex.hpp"

namespace hkt {

/// sl(2) generator matrices on the degree-k monomial basis. H has eigenvalue
/// p - q on Lambda^{p,q}; E raises (p,q) -> (p+1,q-1), F lowers.
struct Su2Action {
  Mat H, E, F;
};

Su2Action su2_action(const Instance& inst, int k);

/// weight w -> multiplicity of the irreducible V_w inside Lambda^k.
std::map<int, int> weight_decompose(int k, const Instance& inst);

/// Projection onto the weight-k isotypic component of a homogeneous degree-k
/// form (the representative of its quaternionic Dolbeault class).
Form plus_project(const Form& x, const Instance& inst);

/// The strand isomorphism Lambda^{p,q}_+ -> Lambda^{p+q,0}: plus-projection
/// followed by the normalized raising chain E^q. Identity on Lambda^{p,0};
/// kills exactly the weight-deficient part. Input must be pure (p,q).
Form R_pq(const Form& x, int p, int q, const Instance& inst);

/// R intertwines the Hodge components of the quotient differential with del
/// and del_J on Lambda^{*,0}, as exact identities on every monomial basis.
bool bicomplex_isomorphism_check(const Instance& inst);

/// The unique form V in Lambda^{n+p,n+q} with
///   V ^ a = (2n-p-q)!/(n-p)! * eta ^ R(a) ^ conj(Phi)
/// for every test form a in Lambda^{n-p,n-q}. The strand constant makes V
/// intertwine the operators exactly: V_{p,q}(del eta) = del V_{p-1,q}(eta)
/// and V_{p,q}(del_J eta) = -delbar V_{p,q-1}(eta) (the sign belongs to this
/// library's del_J convention), and i^{(n-p)^2} V_{p,p}(eta) is real for real
/// eta. Throws std::logic_error if the defining system is not uniquely
/// solvable.
Form V_pq(const Form& eta, int p, int q, const Form& phi,
          const Instance& inst);

/// The constant lambda with R_{n,n}(V_{0,0}(1)) = lambda * Phi, recovered by
/// exact division; throws std::logic_error when the forms are not
/// proportional. Depends only on n (1/2 for n = 2).
Rational v_map_lambda(const Form& phi, const Instance& inst);

/// i^{(n-p)^2} V_{n-1,n-1}(Omega^{n-1}), taken against the aligned volume
/// form Phi_can = Omega^n/n!, is a positive rational multiple f of
/// omega_I^{2n-1} with f^2 * |Phi_can|^2 = 1, and the two Gauduchon
/// conditions (del del_J Omega^{n-1} = 0, del delbar omega_I^{2n-1} = 0)
/// agree. The supplied Phi must be a nonzero real multiple of Phi_can.
/// Throws std::invalid_argument when Omega is not strictly positive.
bool gauduchon_equivalence_check(const Form& omega, const Form& phi,
                                 const Instance& inst);

}  // namespace hkt

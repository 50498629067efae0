#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkt/hypercomplex.hpp"

namespace hkt {

/// J(conj eta) = eta, the reality condition for (2,0)-forms.
bool is_real_20(const Form& eta, const Instance& inst);

/// Matrix with entries eta(z_r, J(conj z_s)) on the canonical basis of
/// (1,0)-vectors; Hermitian exactly when eta is real.
Mat hermitian_matrix(const Form& eta, const Instance& inst);

enum class Positivity { strict, semi, none };

/// Positivity of a real (2,0)-form via exact principal minors of
/// hermitian_matrix. semi means positive-semidefinite and nonzero.
/// Throws std::invalid_argument when eta is not real.
Positivity positivity(const Form& eta, const Instance& inst);

/// The holomorphic volume (2n,0)-form with J(Phi) = conj(Phi) and positive
/// total volume, deterministically normalized; nullopt when the generator of
/// Lambda^{2n,0} is not delbar-closed or the reality/positivity constraints
/// cannot be met.
std::optional<Form> find_phi(const Instance& inst);

struct Verdict {
  enum class Answer { yes, no, unknown };
  Answer answer = Answer::unknown;
  std::string basis;  // "parity" | "explicit-form" | "obstruction-witness"
  std::optional<Form> witness;
  std::string notes;
  int h01 = -1;
};

/// HKT existence by the parity of h^{0,1}; decisive only for n = 2 on a
/// nilpotent instance carrying Phi, otherwise unknown (except that odd h^{0,1}
/// rules HKT out for every n).
Verdict hkt_parity_verdict(const Instance& inst);

/// Basis (over the rationals) of the real del-closed (2,0)-forms.
std::vector<Form> real_closed_20_basis(const Instance& inst);

/// Basis of the real del-exact (2,0)-forms.
std::vector<Form> real_exact_20_basis(const Instance& inst);

/// Deterministic sweep over a rational coefficient lattice, certified by
/// positivity(). strict selects the target cone (strict vs semi nonzero).
std::optional<Form> search_positive(const std::vector<Form>& basis,
                                    const Instance& inst, bool strict);

/// Strictly positive del-closed real (2,0)-form, or nullopt when the sweep
/// finds none. A nullopt is not a non-existence proof.
std::optional<Form> find_hkt_form(const Instance& inst);

/// Nonzero positive-semidefinite real form in the del-image (the
/// Harvey-Lawson style obstruction for n = 2), or nullopt.
std::optional<Form> find_obstruction_witness(const Instance& inst);

/// del del_J (Omega^{n-1}) = 0 for a strictly positive real Omega.
/// Throws std::invalid_argument when Omega is not strictly positive.
bool is_quaternionic_gauduchon(const Form& omega, const Instance& inst);

/// Strictly positive real (2,0)-form satisfying the Gauduchon condition
/// (n = 2: a linear constraint), or nullopt when the sweep finds none.
std::optional<Form> find_gauduchon_form(const Instance& inst);

/// H_Omega with H/2 the metric on (1,0)-vectors (same matrix as
/// hermitian_matrix; kept as the documented metric accessor).
Mat metric_from_omega(const Form& omega, const Instance& inst);

/// Metric on the real tangent space reconstructed from Omega, as a symmetric
/// matrix over the basis e_1..e_{4n}.
Mat real_metric(const Form& omega, const Instance& inst);

/// Kaehler form of the metric of Omega with respect to I; a real (1,1)-form.
Form omega_I_from(const Form& omega, const Instance& inst);

}  // namespace hkt

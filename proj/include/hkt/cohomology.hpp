#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hkt/hypercomplex.hpp"

namespace hkt {

struct CohomologyGroup {
  std::string label;
  int dimension = 0;
  std::vector<Form> representatives;
};

/// x ^ x ^ ... (k factors); k = 0 gives the constant 1.
Form wedge_pow(const Form& x, int k);

/// ker(delbar on Lambda^{p,q}) / im(delbar from Lambda^{p,q-1}).
CohomologyGroup dolbeault_h(int p, int q, const Instance& inst);

/// Quaternionic Bott-Chern group on Lambda^{p,0}:
/// (ker del intersect ker del_J) / im(del del_J from Lambda^{p-2,0}).
CohomologyGroup qbc_h(int p, const Instance& inst);

/// Quaternionic Aeppli group on Lambda^{p,0}:
/// ker(del del_J) / (im del + im del_J from Lambda^{p-1,0}).
CohomologyGroup qae_h(int p, const Instance& inst);

/// integral of a ^ b ^ conj(Phi) with a in Lambda^{p,0}, b in
/// Lambda^{2n-p,0}. Throws std::invalid_argument on bidegree mismatch.
Scalar duality_pairing(const Form& a, const Form& b, const Form& phi,
                       const Instance& inst);

/// del del_J (Omega^{n-1}) = 0, the raw Gauduchon-type condition used as the
/// precondition of the degree map. Positivity is checked elsewhere.
bool gauduchon_condition(const Form& omega, const Instance& inst);

/// deg(a) = integral of del(a) ^ Omega^{n-1} ^ conj(Phi) for a in
/// Lambda^{1,0}. Throws if Omega fails the Gauduchon condition.
Scalar degree(const Form& a, const Form& omega, const Form& phi,
              const Instance& inst);

struct DdjLemmaResult {
  bool holds = false;
  std::optional<Form> witness;  // in (im del intersect ker del_J) \ im del del_J
};

/// (im del intersect ker del_J) inside im(del del_J) on Lambda^{2,0}?
DdjLemmaResult ddj_lemma_check(const Instance& inst);

struct ExactSequenceReport {
  bool injective = false;     // H^{1,0}_del -> H^{1,0}_AE
  bool kernel_match = false;  // ker deg = ker(del: H^{1,0}_AE -> H^{2,0}_BC)
  bool ok() const { return injective && kernel_match; }
};

ExactSequenceReport degree_exact_sequence_check(const Instance& inst,
                                                const Form& omega,
                                                const Form& phi);

}  // namespace hkt

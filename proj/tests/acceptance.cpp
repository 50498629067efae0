// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each check is computed from scratch against the library API.

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hkt/catalog.hpp"
#include "hkt/cohomology.hpp"
#include "hkt/hkt.hpp"
#include "hkt/qdolbeault.hpp"
#include "hkt/report.hpp"

using namespace hkt;

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

bool mat_zero(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

std::map<int, int> clebsch_gordan_table(int n, int k) {
  auto eigdim = [&](int w) {
    if ((k + w) % 2 != 0) return 0;
    return binom(2 * n, (k + w) / 2) * binom(2 * n, (k - w) / 2);
  };
  std::map<int, int> mult;
  for (int w = k; w >= 0; w -= 2) {
    int m = eigdim(w) - eigdim(w + 2);
    if (m > 0) mult[w] = m;
  }
  return mult;
}

// ---- criteria ----

bool criterion1() {  // h^{0,1} regression, under 10 s per instance
  struct Case {
    Rational t;
    int h01;
  };
  std::vector<Case> cases = {{Rational(1) / 4, 3},
                             {Rational(1) / 3, 3},
                             {Rational(1) / 2, 4},
                             {Rational(2) / 3, 3},
                             {Rational(3) / 4, 3}};
  for (const Case& c : cases) {
    auto start = std::chrono::steady_clock::now();
    Instance inst = make_rxh7(c.t);
    int h01 = dolbeault_h(0, 1, inst).dimension;
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (h01 != c.h01 || secs >= 10.0) return false;
  }
  return true;
}

bool criterion2() {  // verdicts, certified form at 1/2, witness at 1/3
  for (const Rational& t : std::vector<Rational>{Rational(1) / 4, Rational(1) / 3, Rational(1) / 2,
                            Rational(2) / 3, Rational(3) / 4}) {
    Instance inst = make_rxh7(t);
    Verdict v = hkt_parity_verdict(inst);
    bool is_half = t == Rational(1) / 2;
    if (v.answer !=
        (is_half ? Verdict::Answer::yes : Verdict::Answer::no))
      return false;
  }
  Instance half = make_rxh7(Rational(1) / 2);
  auto omega = find_hkt_form(half);
  if (!omega || !half.del(*omega).is_zero() ||
      positivity(*omega, half) != Positivity::strict)
    return false;
  Instance third = make_rxh7(Rational(1) / 3);
  auto w = find_obstruction_witness(third);
  if (!w || positivity(*w, third) == Positivity::none) return false;
  Vec x;
  if (!solve(third.op_del(1, 0), third.coords_pq(*w, 2, 0), x)) return false;
  Form target = third.bidegree_part(
      third.d(Form::basis1(7) - Form::basis1(8) * Scalar::i()), 2, 0);
  Scalar ratio = w->terms().begin()->second /
                 target.coefficient(w->terms().begin()->first);
  return *w == target * ratio;
}

bool criterion3() {  // exact differential identities in every bidegree
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    const int half = 2 * inst.n();
    for (int p = 0; p <= half; ++p) {
      for (int q = 0; q <= half; ++q) {
        if (p + 2 <= half && !mat_zero(inst.op_del(p + 1, q) * inst.op_del(p, q)))
          return false;
        if (q + 2 <= half &&
            !mat_zero(inst.op_delbar(p, q + 1) * inst.op_delbar(p, q)))
          return false;
        if (p + 1 <= half && q + 1 <= half &&
            !mat_zero(inst.op_delbar(p + 1, q) * inst.op_del(p, q) +
                      inst.op_del(p, q + 1) * inst.op_delbar(p, q)))
          return false;
      }
      if (p + 2 <= half) {
        if (!mat_zero(inst.op_del_J(p + 1, 0) * inst.op_del_J(p, 0)))
          return false;
        if (!mat_zero(inst.op_del(p + 1, 0) * inst.op_del_J(p, 0) +
                      inst.op_del_J(p + 1, 0) * inst.op_del(p, 0)))
          return false;
      }
    }
  }
  return true;
}

bool criterion4() {  // bicomplex isomorphism + R_{1,1}(omega_I) vs Omega
  for (const std::string& id : catalog_ids())
    if (!bicomplex_isomorphism_check(instance_by_id(id))) return false;
  Instance half = make_rxh7(Rational(1) / 2);
  Form omega = *find_hkt_form(half);
  Form wi = omega_I_from(omega, half);
  return omega == R_pq(wi, 1, 1, half) * (Scalar(2) * Scalar::i());
}

bool criterion5() {  // weight tables vs Clebsch-Gordan oracle
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    for (int k = 0; k <= 4; ++k)
      if (weight_decompose(k, inst) != clebsch_gordan_table(inst.n(), k))
        return false;
  }
  return true;
}

bool criterion6() {  // BC/AE duality dims + nondegenerate pairing
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    Form phi = *find_phi(inst);
    const int half = 2 * inst.n();
    for (int p = 0; p <= half; ++p) {
      CohomologyGroup bc = qbc_h(p, inst);
      CohomologyGroup ae = qae_h(half - p, inst);
      if (bc.dimension != ae.dimension) return false;
      if (bc.dimension == 0) continue;
      Mat gram(bc.dimension, ae.dimension);
      for (int r = 0; r < bc.dimension; ++r)
        for (int c = 0; c < ae.dimension; ++c)
          gram(r, c) = duality_pairing(bc.representatives[r],
                                       ae.representatives[c], phi, inst);
      if (rank(gram) != bc.dimension) return false;
    }
  }
  return true;
}

bool criterion7() {  // ddj lemma iff even h^{0,1}; failing witness revalidates
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    int h01 = dolbeault_h(0, 1, inst).dimension;
    DdjLemmaResult r = ddj_lemma_check(inst);
    if (r.holds != (h01 % 2 == 0)) return false;
    if (!r.holds) {
      if (!r.witness || r.witness->is_zero()) return false;
      const Form& w = *r.witness;
      Vec x;
      if (!solve(inst.op_del(1, 0), inst.coords_pq(w, 2, 0), x)) return false;
      if (!inst.del_J(w).is_zero()) return false;
      Mat im_ddj = image_basis(inst.op_del(1, 0) * inst.op_del_J(0, 0));
      if (subspace_contained(inst.coords_pq(w, 2, 0), im_ddj)) return false;
    }
  }
  return true;
}

bool criterion8() {  // degree exact sequence; deg identically zero at 1/2
  for (const Rational& t : std::vector<Rational>{Rational(1) / 2, Rational(1) / 3}) {
    Instance inst = make_rxh7(t);
    Form phi = *find_phi(inst);
    auto omega = find_gauduchon_form(inst);
    if (!omega || !is_quaternionic_gauduchon(*omega, inst)) return false;
    ExactSequenceReport rep = degree_exact_sequence_check(inst, *omega, phi);
    if (!rep.ok()) return false;
    if (t == Rational(1) / 2) {
      Mat k = kernel_basis(inst.op_del(2, 0) * inst.op_del_J(1, 0));
      for (Eigen::Index c = 0; c < k.cols(); ++c)
        if (degree(inst.from_coords_pq(k.col(c), 1, 0), *omega, phi, inst) !=
            Scalar(0))
          return false;
    }
  }
  return true;
}

bool criterion9() {  // V-map: injectivity, reality, intertwining, lambda
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    Form phi = *find_phi(inst);
    const int n = inst.n();
    Rational lambda = v_map_lambda(phi, inst);
    if (!(lambda > 0)) return false;
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        // Injectivity on the full strand.
        const auto& dom = inst.basis_pq(p + q, 0);
        Mat images(inst.dim_pq(n + p, n + q),
                   static_cast<Eigen::Index>(dom.size()));
        for (size_t c = 0; c < dom.size(); ++c)
          images.col(static_cast<Eigen::Index>(c)) =
              inst.coords_pq(V_pq(dom[c], p, q, phi, inst), n + p, n + q);
        if (rank(images) != static_cast<int>(dom.size())) return false;
        // Intertwining on a spanning set of the previous strand.
        if (p + q >= 1) {
          for (const Form& eta : inst.basis_pq(p + q - 1, 0)) {
            if (p >= 1 && V_pq(inst.del(eta), p, q, phi, inst) !=
                              inst.del(V_pq(eta, p - 1, q, phi, inst)))
              return false;
            if (q >= 1 && V_pq(inst.del_J(eta), p, q, phi, inst) !=
                              -inst.delbar(V_pq(eta, p, q - 1, phi, inst)))
              return false;
          }
        }
      }
      // Reality transport on the diagonal strand.
      Scalar tw(1);
      for (int j = 0; j < (n - p) * (n - p); ++j) tw *= Scalar::i();
      for (const Form& b : inst.basis_pq(2 * p, 0)) {
        Form eta = b + inst.extend_J(b.conj());
        if (eta.is_zero()) continue;
        Form v = V_pq(eta, p, p, phi, inst) * tw;
        if (v != v.conj()) return false;
      }
    }
  }
  return true;
}

bool criterion10() {  // byte-identical JSON between two full runs
  for (const std::string& id : {std::string("torus8"),
                                std::string("rxh7(t=1/3)")}) {
    Instance a = instance_by_id(id);
    Instance b = instance_by_id(id);
    std::string ra = build_report(a, Command::full).dump(2);
    std::string rb = build_report(b, Command::full).dump(2);
    if (ra.empty() || ra != rb) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"1 published h^{0,1} values across the family, under 10 s each",
       criterion1},
      {"2 HKT verdicts with certified form and obstruction witness",
       criterion2},
      {"3 exact differential identities in every bidegree", criterion3},
      {"4 bicomplex strand isomorphism and Kaehler-form correspondence",
       criterion4},
      {"5 su(2) weight tables match the Clebsch-Gordan oracle", criterion5},
      {"6 Bott-Chern/Aeppli duality with nondegenerate pairing", criterion6},
      {"7 ddbar_J lemma iff even h^{0,1}, witnesses revalidate", criterion7},
      {"8 degree map exact sequence and vanishing at t = 1/2", criterion8},
      {"9 V-map injectivity, reality, intertwining, positive lambda",
       criterion9},
      {"10 byte-identical JSON reports across repeated runs", criterion10},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::cout << "criterion " << c.name << ": exception " << e.what()
                << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.name << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

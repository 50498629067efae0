#include <doctest.h>

#include "hkt/catalog.hpp"
#include "hkt/cohomology.hpp"
#include "hkt/hkt.hpp"
#include "hkt/qdolbeault.hpp"

using namespace hkt;

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

// Independent oracle: the coframe carries 2n weight-(+1) and 2n weight-(-1)
// vectors, so the H-eigenspace of weight w inside degree k has dimension
// C(2n,(k+w)/2) * C(2n,(k-w)/2); irreducible multiplicities follow by
// differencing adjacent weights.
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

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("sl(2) commutation relations hold exactly in every degree") {
  Instance inst = make_rxh7(Rational(2) / 3);
  for (int k = 1; k <= 4; ++k) {
    Su2Action a = su2_action(inst, k);
    CHECK(mat_eq(commutator(a.H, a.E), a.E * Scalar(2)));
    CHECK(mat_eq(commutator(a.H, a.F), a.F * Scalar(-2)));
    CHECK(mat_eq(commutator(a.E, a.F), a.H));
  }
}

TEST_CASE("weight tables match the Clebsch-Gordan oracle") {
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    CAPTURE(id);
    for (int k = 0; k <= 4; ++k)
      CHECK(weight_decompose(k, inst) == clebsch_gordan_table(inst.n(), k));
  }
}

TEST_CASE("degree-2 table is 6 V_2 + 10 V_0 with matching dimensions") {
  std::map<int, int> t = weight_decompose(2, make_torus8());
  CHECK(t == std::map<int, int>{{2, 6}, {0, 10}});
  // dim V_2 = 3, dim V_0 = 1: 6*3 + 10*1 = 28 = dim Lambda^2.
  CHECK(6 * 3 + 10 * 1 == binom(8, 2));
}

TEST_CASE("plus projection is an sl(2)-equivariant idempotent") {
  Instance inst = make_rxh7(Rational(1) / 3);
  const int k = 2;
  Su2Action a = su2_action(inst, k);
  for (const Form& b : inst.basis_pq(1, 1)) {
    Form p = plus_project(b, inst);
    CHECK(plus_project(p, inst) == p);
    // Commutes with the action (the projector is polynomial in the Casimir).
    Form hb = inst.from_coords_e(a.H * inst.coords_e(b, k), k);
    Form hp = inst.from_coords_e(a.H * inst.coords_e(p, k), k);
    CHECK(plus_project(hb, inst) == hp);
    Form eb = inst.from_coords_e(a.E * inst.coords_e(b, k), k);
    Form ep = inst.from_coords_e(a.E * inst.coords_e(p, k), k);
    CHECK(plus_project(eb, inst) == ep);
  }
}

TEST_CASE("R is the identity on (p,0)-forms and inverts the lowering chain") {
  Instance inst = make_rxh7(Rational(1) / 2);
  for (int p = 1; p <= 3; ++p)
    for (const Form& x : inst.basis_pq(p, 0))
      CHECK(R_pq(x, p, 0, inst) == x);
  // R(F^q eta) = eta for eta in Lambda^{k,0}.
  for (int q = 1; q <= 2; ++q) {
    const int k = 2;
    Su2Action a = su2_action(inst, k);
    for (const Form& eta : inst.basis_pq(k, 0)) {
      Vec v = inst.coords_e(eta, k);
      for (int j = 0; j < q; ++j) v = a.F * v;
      Form low = inst.from_coords_e(v, k);
      CHECK(R_pq(inst.bidegree_part(low, k - q, q), k - q, q, inst) == eta);
    }
  }
}

TEST_CASE("bicomplex isomorphism identities at a generic parameter") {
  CHECK(bicomplex_isomorphism_check(make_rxh7(Rational(3) / 4)));
}

TEST_CASE("R recovers the HKT form from its Kaehler form at t = 1/2") {
  Instance inst = make_rxh7(Rational(1) / 2);
  Form omega = *find_hkt_form(inst);
  Form wi = omega_I_from(omega, inst);
  CHECK(omega == R_pq(wi, 1, 1, inst) * (Scalar(2) * Scalar::i()));
}

TEST_CASE("V is injective on whole strands") {
  Instance inst = make_rxh7(Rational(1) / 3);
  Form phi = *find_phi(inst);
  for (auto [p, q] : {std::pair{0, 0}, {1, 0}, {1, 1}, {2, 1}}) {
    const auto& dom = inst.basis_pq(p + q, 0);
    Mat images(inst.dim_pq(2 + p, 2 + q), static_cast<Eigen::Index>(dom.size()));
    for (size_t c = 0; c < dom.size(); ++c)
      images.col(static_cast<Eigen::Index>(c)) =
          inst.coords_pq(V_pq(dom[c], p, q, phi, inst), 2 + p, 2 + q);
    CHECK(rank(images) == static_cast<int>(dom.size()));
  }
}

TEST_CASE("V intertwines del exactly and del_J up to the recorded sign") {
  Instance inst = make_rxh7(Rational(1) / 3);
  Form phi = *find_phi(inst);
  for (auto [p, q] : {std::pair{1, 1}, {2, 0}, {2, 1}}) {
    for (const Form& eta : inst.basis_pq(p + q - 1, 0)) {
      CHECK(V_pq(inst.del(eta), p, q, phi, inst) ==
            inst.del(V_pq(eta, p - 1, q, phi, inst)));
    }
  }
  for (auto [p, q] : {std::pair{0, 2}, {1, 1}, {1, 2}}) {
    for (const Form& eta : inst.basis_pq(p + q - 1, 0)) {
      CHECK(V_pq(inst.del_J(eta), p, q, phi, inst) ==
            -inst.delbar(V_pq(eta, p, q - 1, phi, inst)));
    }
  }
}

TEST_CASE("reality transport: i^{(n-p)^2} V_{p,p} maps real to real") {
  Instance inst = make_rxh7(Rational(1) / 2);
  Form phi = *find_phi(inst);
  const int n = inst.n();
  for (int p = 0; p <= 1; ++p) {
    Scalar tw(1);
    for (int j = 0; j < (n - p) * (n - p); ++j) tw *= Scalar::i();
    for (const Form& b : inst.basis_pq(2 * p, 0)) {
      Form eta = b + inst.extend_J(b.conj());
      if (eta.is_zero()) continue;
      Form v = V_pq(eta, p, p, phi, inst) * tw;
      CHECK(v == v.conj());
    }
  }
}

TEST_CASE("lambda is the positive rational 1/2 on every catalog instance") {
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    CAPTURE(id);
    Form phi = *find_phi(inst);
    CHECK(v_map_lambda(phi, inst) == Rational(1) / 2);
  }
}

TEST_CASE("Gauduchon equivalence through the V-map") {
  for (const std::string& id : {"torus8", "rxh7(t=1/2)", "rxh7(t=1/3)"}) {
    Instance inst = instance_by_id(std::string(id));
    CAPTURE(id);
    Form phi = *find_phi(inst);
    std::optional<Form> omega =
        inst.id() == "rxh7(t=1/3)" ? find_gauduchon_form(inst)
                                   : find_hkt_form(inst);
    REQUIRE(omega);
    CHECK(gauduchon_equivalence_check(*omega, phi, inst));
  }
}

TEST_CASE("Gauduchon equivalence rejects non-positive input") {
  Instance inst = make_torus8();
  Form phi = *find_phi(inst);
  CHECK_THROWS_AS(gauduchon_equivalence_check(inst.basis_pq(2, 0)[0], phi,
                                              inst),
                  std::invalid_argument);
}

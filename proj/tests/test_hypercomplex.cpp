#include <doctest.h>

#include "hkt/catalog.hpp"
#include "hkt/hypercomplex.hpp"

using namespace hkt;

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

}  // namespace

TEST_CASE("structure validation accepts the catalog and rejects breakage") {
  Instance torus = make_torus8();
  CHECK(validate_structure(torus.structure()).ok);
  CHECK(validate_structure(make_rxh7(Rational(1) / 3).structure()).ok);

  HypercomplexStructure broken = torus.structure();
  broken.I(0, 1) = Scalar(0);  // I^2 != -Id now
  ValidationResult r = validate_structure(broken);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violations.empty());
}

TEST_CASE("rxh7 rejects the singular parameters") {
  CHECK_THROWS_AS(make_rxh7(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_rxh7(Rational(1)), std::invalid_argument);
  CHECK_NOTHROW(make_rxh7(Rational(7) / 5));
}

TEST_CASE("catalog resolution by id") {
  CHECK(instance_by_id("torus8").id() == "torus8");
  CHECK(instance_by_id("rxh7(t=1/3)").id() == "rxh7(t=1/3)");
  CHECK_THROWS_AS(instance_by_id("nope"), std::invalid_argument);
}

TEST_CASE("bidegree dimensions are binomial products") {
  Instance inst = make_rxh7(Rational(1) / 2);
  const int half = 2 * inst.n();
  for (int p = 0; p <= half; ++p)
    for (int q = 0; q <= half; ++q)
      CHECK(inst.dim_pq(p, q) == binom(half, p) * binom(half, q));
}

TEST_CASE("bidegree split reassembles and is a direct sum") {
  Instance inst = make_rxh7(Rational(2) / 3);
  for (int k = 1; k <= 8; ++k) {
    Form x = Form::basis1(k);
    Form dx = inst.d(x);
    Form sum;
    for (const auto& [pq, part] : inst.bidegree_split(dx)) sum += part;
    CHECK(sum == dx);
    CHECK(inst.del(x) + inst.delbar(x) == dx);
  }
}

TEST_CASE("pq coordinates round-trip") {
  Instance inst = make_rxh7(Rational(1) / 2);
  for (auto [p, q] : {std::pair{1, 1}, {2, 0}, {2, 1}}) {
    const auto& basis = inst.basis_pq(p, q);
    for (size_t s = 0; s < basis.size(); s += 3) {
      Vec v = inst.coords_pq(basis[s], p, q);
      CHECK(inst.from_coords_pq(v, p, q) == basis[s]);
    }
  }
  CHECK_THROWS_AS(inst.coords_pq(Form::basis1(1), 1, 0),
                  std::invalid_argument);  // e1 is not pure (1,0)
}

TEST_CASE("extension of J inverts exactly") {
  Instance inst = make_rxh7(Rational(1) / 3);
  Form x = wedge(Form::basis1(1), Form::basis1(6)) +
           wedge(Form::basis1(2), Form::basis1(7)) * Scalar::i();
  CHECK(inst.extend_J_inv(inst.extend_J(x)) == x);
  CHECK(inst.extend_J(inst.extend_J_inv(x)) == x);
  // J is multiplicative on products.
  Form a = Form::basis1(3), b = Form::basis1(8);
  CHECK(inst.extend_J(wedge(a, b)) ==
        wedge(inst.extend_J(a), inst.extend_J(b)));
}

TEST_CASE("integrability holds on the catalog") {
  for (const std::string& id : catalog_ids()) {
    Instance inst = instance_by_id(id);
    CAPTURE(id);
    CHECK(inst.check_integrability().all());
  }
}

TEST_CASE("integrability fails for an incompatible structure") {
  // h3 x R with the standard quaternionic matrices: I integrates, J does not.
  LieAlgebraSpec spec = parse_salamon("0,0,0,12");
  HypercomplexStructure h;
  h.n = 1;
  h.I = Mat::Zero(4, 4);
  h.J = Mat::Zero(4, 4);
  // I: e1 -> e2, e2 -> -e1, e3 -> e4, e4 -> -e3 (coframe action columns).
  h.I(1, 0) = Scalar(1);
  h.I(0, 1) = Scalar(-1);
  h.I(3, 2) = Scalar(1);
  h.I(2, 3) = Scalar(-1);
  // J: e1 -> e3, e3 -> -e1, e2 -> -e4, e4 -> e2.
  h.J(2, 0) = Scalar(1);
  h.J(0, 2) = Scalar(-1);
  h.J(3, 1) = Scalar(-1);
  h.J(1, 3) = Scalar(1);
  REQUIRE(validate_structure(h).ok);
  Instance inst(spec, h, "h3xR-test");
  IntegrabilityResult r = inst.check_integrability();
  CHECK(r.I);
  CHECK_FALSE(r.J);
}

TEST_CASE("orientation matches the complex structure") {
  CHECK(make_torus8().orientation() == 1);
  CHECK(make_rxh7(Rational(1) / 2).orientation() == -1);
  Instance inst = make_rxh7(Rational(1) / 4);
  // integrate is the orientation-corrected top coefficient.
  Form vol = Form::one();
  for (int k = 1; k <= 8; ++k) vol = wedge(vol, Form::basis1(k));
  CHECK(inst.integrate(vol) == Scalar(inst.orientation()));
}

TEST_CASE("derivation matrix implements the Leibniz extension") {
  Instance inst = make_rxh7(Rational(1) / 2);
  const Mat& i1 = inst.structure().I;
  Mat i2 = inst.derivation_matrix(i1, 2);
  // A(x ^ y) = A(x) ^ y + x ^ A(y) for 1-forms x, y.
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      Form x = Form::basis1(a), y = Form::basis1(b);
      Form ax = inst.from_coords_e(i1 * inst.coords_e(x, 1), 1);
      Form ay = inst.from_coords_e(i1 * inst.coords_e(y, 1), 1);
      Form lhs =
          inst.from_coords_e(i2 * inst.coords_e(wedge(x, y), 2), 2);
      CHECK(lhs == wedge(ax, y) + wedge(x, ay));
    }
  }
}

TEST_CASE("del, delbar and del_J obey the differential identities") {
  for (const std::string& id : {"torus8", "rxh7(t=1/2)", "rxh7(t=1/3)"}) {
    Instance inst = instance_by_id(std::string(id));
    CAPTURE(id);
    for (int p = 0; p <= 3; ++p) {
      for (const Form& x : inst.basis_pq(p, 0)) {
        CHECK(inst.del(inst.del(x)).is_zero());
        CHECK(inst.del_J(inst.del_J(x)).is_zero());
        CHECK(inst.del(inst.del_J(x)) + inst.del_J(inst.del(x)) == Form());
      }
    }
    for (const Form& x : inst.basis_pq(1, 1))
      CHECK(inst.delbar(inst.delbar(x)).is_zero());
  }
}
